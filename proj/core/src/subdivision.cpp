#include "dblcat/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace dblcat {

namespace {

std::string vertex_word(const std::vector<int>& v, int k) {
  if (k < 10) {
    std::string s;
    for (int x : v) s += static_cast<char>('0' + x);
    return s;
  }
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return tuple_label(parts);
}

std::string subset_word(std::uint32_t mask) {
  std::string s;
  for (int i = 0; i < 32; ++i)
    if (mask & (1U << i)) s += i < 10 ? std::string(1, static_cast<char>('0' + i)) : "[" + std::to_string(i) + "]";
  return s;
}

}  // namespace

std::string to_string(const Shape& s) {
  switch (s.kind) {
    case ShapeKind::simplex: return "simplex[" + std::to_string(s.k) + "]";
    case ShapeKind::boundary: return "boundary[" + std::to_string(s.k) + "]";
    case ShapeKind::horn: return "horn(" + std::to_string(s.t) + ")[" + std::to_string(s.k) + "]";
  }
  return {};
}

void check_shape(const Shape& s) {
  if (s.k < 0) throw DomainError("shape dimension must be non-negative");
  if (s.kind == ShapeKind::horn && (s.k < 1 || s.t < 0 || s.t > s.k))
    throw DomainError("horn(" + std::to_string(s.t) + ") of Δ[" + std::to_string(s.k) + "] is undefined");
}

bool shape_contains(const Shape& s, std::uint32_t vertex_mask) {
  const std::uint32_t full = (1U << (s.k + 1)) - 1;
  switch (s.kind) {
    case ShapeKind::simplex: return true;
    case ShapeKind::boundary: return vertex_mask != full;
    case ShapeKind::horn: return vertex_mask != full && vertex_mask != (full & ~(1U << s.t));
  }
  return false;
}

TruncSSet standard(const Shape& s, int d) {
  check_shape(s);
  if (d < 0) throw DomainError("standard: negative truncation");
  if (s.k > 30) throw DomainError("standard: dimension too large");
  std::vector<std::vector<Operator>> levels(d + 1);
  for (int m = 0; m <= d; ++m) {
    for (auto& v : monotone_maps(m, s.k)) {
      std::uint32_t mask = 0;
      for (int x : v) mask |= 1U << x;
      if (shape_contains(s, mask)) levels[m].push_back(std::move(v));
    }
    check_cell_budget(levels[m].size(), "simplices per level");
  }
  auto tables = tables_from_keys<Operator, VectorHash>(
      d, levels,
      [](int, const Operator& v, int i) {
        Operator w(v);
        w.erase(w.begin() + i);
        return w;
      },
      [](int, const Operator& v, int i) {
        Operator w(v);
        w.insert(w.begin() + i, v[i]);
        return w;
      },
      [&](int, const Operator& v) { return vertex_word(v, s.k); });
  return TruncSSet::from_tables(std::move(tables));
}

FinPoset face_poset(const TruncSSet& x) {
  struct Cell {
    int level;
    SimplexId id;
    std::vector<SimplexId> verts;
  };
  std::vector<Cell> cells;
  std::map<std::vector<SimplexId>, std::size_t> by_vertices;
  for (int k = 0; k <= x.trunc(); ++k) {
    for (SimplexId s : x.nondegenerate(k)) {
      auto v = x.vertices(k, s);
      std::vector<SimplexId> sorted(v);
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("face_poset: simplex '" + x.label(k, s) + "' has a repeated vertex");
      if (!by_vertices.emplace(sorted, cells.size()).second)
        throw DomainError("face_poset: simplex '" + x.label(k, s) + "' is not determined by its vertices");
      cells.push_back({k, s, std::move(sorted)});
    }
  }
  std::map<std::string, int> label_uses;
  for (const auto& c : cells) ++label_uses[x.label(c.level, c.id)];
  std::vector<std::string> labels;
  for (const auto& c : cells) {
    const std::string& l = x.label(c.level, c.id);
    labels.push_back(label_uses[l] > 1 ? l + "@" + std::to_string(c.level) : l);
  }
  return FinPoset::from_predicate(std::move(labels), [&](std::size_t a, std::size_t b) {
    return std::includes(cells[b].verts.begin(), cells[b].verts.end(), cells[a].verts.begin(),
                         cells[a].verts.end());
  });
}

TruncSSet sd(const TruncSSet& x) {
  return *nerve(share(face_poset(x).as_category()), x.trunc()).sset;
}

FinPoset csd2_poset(const Shape& s) {
  check_shape(s);
  if (s.k > 4) throw DomainError("csd2_poset: k > 4 exceeds the supported range");
  const std::uint32_t full = (1U << (s.k + 1)) - 1;
  // a chain is stored as a bitmask over subset masks 1..full
  std::vector<std::uint64_t> chains;
  std::function<void(std::uint32_t, std::uint64_t)> extend = [&](std::uint32_t top, std::uint64_t chain) {
    if (shape_contains(s, top)) chains.push_back(chain);
    for (std::uint32_t next = top + 1; next <= full; ++next)
      if ((next & top) == top) extend(next, chain | (std::uint64_t{1} << next));
  };
  for (std::uint32_t first = 1; first <= full; ++first) extend(first, std::uint64_t{1} << first);
  auto entries = [&](std::uint64_t c) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 1; m <= full; ++m)
      if (c & (std::uint64_t{1} << m)) out.push_back(m);
    std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
      return std::make_pair(std::popcount(a), a) < std::make_pair(std::popcount(b), b);
    });
    return out;
  };
  std::sort(chains.begin(), chains.end(), [&](std::uint64_t a, std::uint64_t b) {
    auto ea = entries(a), eb = entries(b);
    if (ea.size() != eb.size()) return ea.size() < eb.size();
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (ea[i] != eb[i])
        return std::make_pair(std::popcount(ea[i]), ea[i]) < std::make_pair(std::popcount(eb[i]), eb[i]);
    return false;
  });
  std::vector<std::string> labels;
  for (auto c : chains) {
    std::string l;
    for (auto m : entries(c)) l += (l.empty() ? "" : "<") + subset_word(m);
    labels.push_back(l);
  }
  return FinPoset::from_predicate(std::move(labels), [&](std::size_t a, std::size_t b) {
    return (chains[a] & ~chains[b]) == 0;
  });
}

PosetInclusion csd2_inclusion(const Shape& s) {
  return PosetInclusion::by_labels(csd2_poset(s), csd2_poset(Shape::simplex(s.k)));
}

TruncSSet wedge(const TruncSSet& x, SimplexId x0, const TruncSSet& y, SimplexId y0) {
  const int d = x.trunc();
  if (y.trunc() != d) throw DomainError("wedge: truncations differ");
  if (x0 >= x.count(0) || y0 >= y.count(0)) throw DomainError("wedge: base vertex out of range");
  SSetTables t;
  t.trunc = d;
  t.labels.resize(d + 1);
  t.faces.resize(d + 1);
  t.degens.resize(d + 1);
  std::vector<std::vector<SimplexId>> ymap(d + 1);
  for (int k = 0; k <= d; ++k) {
    const SimplexId px = x.act(0, x0, Operator(k + 1, 0));
    const SimplexId py = y.act(0, y0, Operator(k + 1, 0));
    SimplexId next = static_cast<SimplexId>(x.count(k));
    ymap[k].resize(y.count(k));
    for (SimplexId s = 0; s < y.count(k); ++s) ymap[k][s] = s == py ? px : next++;
  }
  for (int k = 0; k <= d; ++k) {
    const SimplexId py = y.act(0, y0, Operator(k + 1, 0));
    auto copy_row = [&](const std::vector<SimplexId>& row, const std::vector<SimplexId>* remap) {
      std::vector<SimplexId> out(row);
      if (remap)
        for (auto& v : out) v = (*remap)[v];
      return out;
    };
    for (SimplexId s = 0; s < x.count(k); ++s) {
      t.labels[k].push_back(x.label(k, s));
      t.faces[k].push_back(x.tables().faces[k][s]);
      t.degens[k].push_back(x.tables().degens[k][s]);
    }
    for (SimplexId s = 0; s < y.count(k); ++s) {
      if (s == py) continue;
      t.labels[k].push_back(y.label(k, s) + "'");
      t.faces[k].push_back(k > 0 ? copy_row(y.tables().faces[k][s], &ymap[k - 1]) : std::vector<SimplexId>{});
      t.degens[k].push_back(k < d ? copy_row(y.tables().degens[k][s], &ymap[k + 1]) : std::vector<SimplexId>{});
    }
  }
  return TruncSSet::from_tables(std::move(t));
}

TruncSSet interval_pushout_fixture(int d) {
  const TruncSSet interval = standard(Shape::simplex(1), d);
  return wedge(interval, 1, interval, 1);
}

TruncSSet sd2_interval(int d) { return sd(sd(standard(Shape::simplex(1), d))); }

}  // namespace dblcat
