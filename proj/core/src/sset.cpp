#include "dblcat/sset.hpp"

#include <algorithm>
#include <functional>

namespace dblcat {

namespace {

std::string where(int k, SimplexId x) {
  return "level " + std::to_string(k) + " simplex " + std::to_string(x);
}

std::vector<std::string> shape_errors(const SSetTables& t) {
  std::vector<std::string> out;
  const int d = t.trunc;
  if (d < 0) return {"negative truncation"};
  if (static_cast<int>(t.labels.size()) != d + 1 || static_cast<int>(t.faces.size()) != d + 1 ||
      static_cast<int>(t.degens.size()) != d + 1) {
    return {"tables must have trunc+1 levels"};
  }
  for (int k = 0; k <= d; ++k) {
    const std::size_t n = t.labels[k].size();
    if (t.faces[k].size() != n || t.degens[k].size() != n) {
      out.push_back("level " + std::to_string(k) + ": table sizes disagree with label count");
      continue;
    }
    for (SimplexId x = 0; x < n; ++x) {
      const std::size_t nf = k > 0 ? static_cast<std::size_t>(k + 1) : 0;
      const std::size_t nd = k < d ? static_cast<std::size_t>(k + 1) : 0;
      if (t.faces[k][x].size() != nf) out.push_back(where(k, x) + ": wrong number of faces");
      if (t.degens[k][x].size() != nd) out.push_back(where(k, x) + ": wrong number of degeneracies");
      for (SimplexId y : t.faces[k][x])
        if (k > 0 && y >= t.labels[k - 1].size()) out.push_back(where(k, x) + ": face out of range");
      for (SimplexId y : t.degens[k][x])
        if (k < d && y >= t.labels[k + 1].size()) out.push_back(where(k, x) + ": degeneracy out of range");
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> simplicial_identity_violations(const SSetTables& t) {
  auto out = shape_errors(t);
  if (!out.empty()) return out;
  const int d = t.trunc;
  auto F = [&](int k, SimplexId x, int i) { return t.faces[k][x][i]; };
  auto S = [&](int k, SimplexId x, int i) { return t.degens[k][x][i]; };
  auto report = [&](int k, SimplexId x, const std::string& rule) {
    out.push_back(where(k, x) + ": " + rule);
  };
  for (int k = 0; k <= d; ++k) {
    for (SimplexId x = 0; x < t.labels[k].size(); ++x) {
      for (int j = 1; k >= 2 && j <= k; ++j)
        for (int i = 0; i < j; ++i)
          if (F(k - 1, F(k, x, j), i) != F(k - 1, F(k, x, i), j - 1))
            report(k, x, "d" + std::to_string(i) + "d" + std::to_string(j) + " != d" +
                             std::to_string(j - 1) + "d" + std::to_string(i));
      if (k + 1 > d) continue;
      for (int j = 0; j <= k; ++j) {
        const SimplexId y = S(k, x, j);
        for (int i = 0; i <= k + 1; ++i) {
          const SimplexId lhs = F(k + 1, y, i);
          SimplexId rhs;
          if (i == j || i == j + 1) {
            rhs = x;
          } else if (i < j) {
            rhs = S(k - 1, F(k, x, i), j - 1);
          } else {
            rhs = S(k - 1, F(k, x, i - 1), j);
          }
          if (lhs != rhs) report(k, x, "d" + std::to_string(i) + "s" + std::to_string(j) + " identity fails");
        }
      }
      if (k + 2 > d) continue;
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i)
          if (S(k + 1, S(k, x, j), i) != S(k + 1, S(k, x, i), j + 1))
            report(k, x, "s" + std::to_string(i) + "s" + std::to_string(j) + " != s" +
                             std::to_string(j + 1) + "s" + std::to_string(i));
    }
  }
  return out;
}

TruncSSet TruncSSet::from_tables(SSetTables tables) {
  auto violations = simplicial_identity_violations(tables);
  if (!violations.empty()) throw DomainError("not a simplicial set: " + violations.front());
  TruncSSet s;
  s.t_ = std::move(tables);
  const int d = s.t_.trunc;
  s.ez_.resize(d + 1);
  s.index_.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    const std::size_t n = s.count(k);
    check_cell_budget(n, "simplices per level");
    s.ez_[k].resize(n);
    for (SimplexId x = 0; x < n; ++x) {
      s.index_[k].emplace(s.t_.labels[k][x], x);
      EZ& e = s.ez_[k][x];
      e = EZ{k, x, {}};
      for (int i = 0; i < k; ++i) {
        const SimplexId y = s.face(k, x, i);
        if (s.degen(k - 1, y, i) != x) continue;
        const EZ& ey = s.ez_[k - 1][y];
        e.base_level = ey.base_level;
        e.base = ey.base;
        e.surjection = compose_operators(ey.surjection, codegeneracy(k - 1, i));
        break;
      }
      if (e.base_level == k) {
        e.surjection.resize(k + 1);
        for (int i = 0; i <= k; ++i) e.surjection[i] = i;
      }
    }
  }
  return s;
}

std::size_t TruncSSet::total_count() const {
  std::size_t n = 0;
  for (const auto& l : t_.labels) n += l.size();
  return n;
}

std::optional<SimplexId> TruncSSet::find(int k, const std::string& label) const {
  if (k < 0 || k > trunc()) return std::nullopt;
  auto it = index_[k].find(label);
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

std::vector<SimplexId> TruncSSet::nondegenerate(int k) const {
  std::vector<SimplexId> out;
  for (SimplexId x = 0; x < count(k); ++x)
    if (!is_degenerate(k, x)) out.push_back(x);
  return out;
}

std::vector<std::size_t> TruncSSet::nondegenerate_counts() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= trunc(); ++k) out.push_back(nondegenerate(k).size());
  return out;
}

SimplexId TruncSSet::act(int k, SimplexId x, const Operator& theta) const {
  const int m = static_cast<int>(theta.size()) - 1;
  if (m < 0 || m > trunc()) throw DomainError("simplicial operator leaves the truncation range");
  for (int i = 0; i <= m; ++i) {
    if (theta[i] < 0 || theta[i] > k || (i > 0 && theta[i] < theta[i - 1]))
      throw DomainError("operator is not a monotone map into [" + std::to_string(k) + "]");
  }
  std::vector<int> image(theta.begin(), theta.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  SimplexId y = x;
  int level = k;
  for (int j = k; j >= 0; --j) {
    if (std::binary_search(image.begin(), image.end(), j)) continue;
    y = face(level, y, j);
    --level;
  }
  Operator eta(m + 1);
  for (int i = 0; i <= m; ++i)
    eta[i] = static_cast<int>(std::lower_bound(image.begin(), image.end(), theta[i]) - image.begin());
  std::function<SimplexId(const Operator&)> pull = [&](const Operator& e) -> SimplexId {
    const int len = static_cast<int>(e.size());
    for (int j = len - 2; j >= 0; --j) {
      if (e[j] != e[j + 1]) continue;
      Operator shorter(e);
      shorter.erase(shorter.begin() + j + 1);
      return degen(len - 2, pull(shorter), j);
    }
    return y;
  };
  return pull(eta);
}

std::vector<SimplexId> TruncSSet::vertices(int k, SimplexId x) const {
  std::vector<SimplexId> out;
  for (int j = 0; j <= k; ++j) out.push_back(act(k, x, {j}));
  return out;
}

bool operator==(const TruncSSet& a, const TruncSSet& b) {
  const auto& s = a.tables();
  const auto& t = b.tables();
  return s.trunc == t.trunc && s.labels == t.labels && s.faces == t.faces && s.degens == t.degens;
}

TruncSSet disjoint_union(const std::vector<TruncSSet>& parts) {
  if (parts.empty()) throw DomainError("disjoint_union: no parts");
  const int d = parts[0].trunc();
  SSetTables t;
  t.trunc = d;
  t.labels.resize(d + 1);
  t.faces.resize(d + 1);
  t.degens.resize(d + 1);
  std::vector<std::size_t> offset(d + 1, 0);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& p = parts[j].tables();
    if (p.trunc != d) throw DomainError("disjoint_union: truncations differ");
    for (int k = 0; k <= d; ++k)
      for (std::size_t x = 0; x < p.labels[k].size(); ++x) {
        t.labels[k].push_back(std::to_string(j) + ":" + p.labels[k][x]);
        auto f = p.faces[k][x];
        for (auto& v : f) v += static_cast<SimplexId>(offset[k - 1]);
        auto s = p.degens[k][x];
        for (auto& v : s) v += static_cast<SimplexId>(offset[k + 1 <= d ? k + 1 : k]);
        t.faces[k].push_back(std::move(f));
        t.degens[k].push_back(std::move(s));
      }
    for (int k = 0; k <= d; ++k) offset[k] += p.labels[k].size();
  }
  return TruncSSet::from_tables(std::move(t));
}

TruncSSet truncate(const TruncSSet& x, int d) {
  if (d < 0 || d > x.trunc()) throw DomainError("truncate: dimension out of range");
  SSetTables t = x.tables();
  t.trunc = d;
  t.labels.resize(d + 1);
  t.faces.resize(d + 1);
  t.degens.resize(d + 1);
  for (auto& row : t.degens[d]) row.clear();
  return TruncSSet::from_tables(std::move(t));
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate(const SimplicialMap& f) {
  std::vector<std::string> out;
  const TruncSSet& a = *f.source;
  const TruncSSet& b = *f.target;
  if (a.trunc() != b.trunc()) return {"source and target truncations differ"};
  if (static_cast<int>(f.levels.size()) != a.trunc() + 1) return {"map has the wrong number of levels"};
  for (int k = 0; k <= a.trunc(); ++k) {
    if (f.levels[k].size() != a.count(k)) return {"level " + std::to_string(k) + " has the wrong size"};
    for (SimplexId y : f.levels[k])
      if (y >= b.count(k)) return {"level " + std::to_string(k) + " maps out of range"};
  }
  for (int k = 0; k <= a.trunc(); ++k)
    for (SimplexId x = 0; x < a.count(k); ++x) {
      for (int i = 0; k > 0 && i <= k; ++i)
        if (f(k - 1, a.face(k, x, i)) != b.face(k, f(k, x), i))
          out.push_back(where(k, x) + ": does not commute with d" + std::to_string(i));
      for (int i = 0; k < a.trunc() && i <= k; ++i)
        if (f(k + 1, a.degen(k, x, i)) != b.degen(k, f(k, x), i))
          out.push_back(where(k, x) + ": does not commute with s" + std::to_string(i));
    }
  return out;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target.get() != g.source.get() && !(*f.target == *g.source))
    throw DomainError("compose: maps are not composable");
  SimplicialMap h{f.source, g.target, f.levels};
  for (std::size_t k = 0; k < h.levels.size(); ++k)
    for (auto& y : h.levels[k]) y = g.levels[k][y];
  return h;
}

SimplicialMap identity_map(const SSetRef& x) {
  SimplicialMap f{x, x, {}};
  for (int k = 0; k <= x->trunc(); ++k) {
    f.levels.emplace_back(x->count(k));
    for (SimplexId i = 0; i < x->count(k); ++i) f.levels[k][i] = i;
  }
  return f;
}

SimplicialMap map_from_nondegenerate(const SSetRef& source, const SSetRef& target,
                                     const std::vector<std::vector<SimplexId>>& on_nondegenerate) {
  const TruncSSet& a = *source;
  if (a.trunc() != target->trunc()) throw DomainError("map_from_nondegenerate: truncations differ");
  SimplicialMap f{source, target, {}};
  for (int k = 0; k <= a.trunc(); ++k) {
    f.levels.emplace_back(a.count(k));
    for (SimplexId x = 0; x < a.count(k); ++x) {
      const auto& e = a.decomposition(k, x);
      f.levels[k][x] = target->act(e.base_level, on_nondegenerate[e.base_level][e.base], e.surjection);
    }
  }
  auto errors = validate(f);
  if (!errors.empty()) throw DomainError("not a simplicial map: " + errors.front());
  return f;
}

std::optional<SimplicialMap> find_isomorphism(const SSetRef& a, const SSetRef& b) {
  if (a->trunc() != b->trunc()) return std::nullopt;
  const int d = a->trunc();
  for (int k = 0; k <= d; ++k)
    if (a->count(k) != b->count(k) || a->nondegenerate(k).size() != b->nondegenerate(k).size())
      return std::nullopt;
  std::vector<std::pair<int, SimplexId>> cells;
  for (int k = 0; k <= d; ++k)
    for (SimplexId x : a->nondegenerate(k)) cells.emplace_back(k, x);
  std::vector<std::vector<SimplexId>> assign(d + 1);
  std::vector<std::vector<bool>> used(d + 1);
  for (int k = 0; k <= d; ++k) {
    assign[k].assign(a->count(k), kInvalidId);
    used[k].assign(b->count(k), false);
  }
  auto image = [&](int k, SimplexId x) {
    const auto& e = a->decomposition(k, x);
    return b->act(e.base_level, assign[e.base_level][e.base], e.surjection);
  };
  std::size_t nodes = 0;
  std::function<bool(std::size_t)> search = [&](std::size_t idx) -> bool {
    if (++nodes > 5'000'000) throw DomainError("find_isomorphism: search limit exceeded");
    if (idx == cells.size()) return true;
    const auto [k, x] = cells[idx];
    for (SimplexId z : b->nondegenerate(k)) {
      if (used[k][z]) continue;
      bool ok = true;
      for (int i = 0; k > 0 && i <= k && ok; ++i) ok = image(k - 1, a->face(k, x, i)) == b->face(k, z, i);
      if (!ok) continue;
      assign[k][x] = z;
      used[k][z] = true;
      if (search(idx + 1)) return true;
      used[k][z] = false;
      assign[k][x] = kInvalidId;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  SimplicialMap f;
  try {
    f = map_from_nondegenerate(a, b, assign);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  for (int k = 0; k <= d; ++k) {
    std::vector<SimplexId> img = f.levels[k];
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return std::nullopt;
  }
  return f;
}

// ---------------------------------------------------------------------------

Operator compose_operators(const Operator& theta, const Operator& eta) {
  Operator out(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) out[i] = theta[eta[i]];
  return out;
}

Operator coface(int k, int i) {
  Operator out;
  for (int j = 0; j <= k; ++j)
    if (j != i) out.push_back(j);
  return out;
}

Operator codegeneracy(int k, int i) {
  Operator out;
  for (int j = 0; j <= k + 1; ++j) out.push_back(j <= i ? j : j - 1);
  return out;
}

std::vector<Operator> monotone_maps(int m, int k) {
  std::vector<Operator> out;
  Operator cur(m + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos > m) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= k; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace dblcat
