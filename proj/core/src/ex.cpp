#include "dblcat/ex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <unordered_map>

namespace dblcat {

namespace {

using Chain = std::vector<std::uint32_t>;
using ExKey = std::vector<SimplexId>;

struct SdData {
  std::vector<Chain> chains;
  std::map<Chain, std::size_t> index;
  std::vector<std::vector<std::size_t>> faces;
};

SdData sd_data(int n) {
  SdData s;
  s.chains = sd_chains(n);
  for (std::size_t c = 0; c < s.chains.size(); ++c) s.index.emplace(s.chains[c], c);
  for (const Chain& ch : s.chains) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; ch.size() > 1 && i < ch.size(); ++i) {
      Chain g(ch);
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      f.push_back(s.index.at(g));
    }
    s.faces.push_back(std::move(f));
  }
  return s;
}

std::uint32_t map_subset(std::uint32_t mask, const Operator& theta) {
  std::uint32_t out = 0;
  for (std::size_t v = 0; v < theta.size(); ++v)
    if (mask & (1U << v)) out |= 1U << theta[v];
  return out;
}

/// Value of g on Sd(θ)(chain) where θ: [m] → [n]; the image chain may be degenerate.
SimplexId pull_back(const TruncSSet& x, const SdData& target_sd, const ExKey& g, const Chain& chain,
                    const Operator& theta) {
  Chain image;
  Operator eta;
  for (std::uint32_t s : chain) {
    const std::uint32_t t = map_subset(s, theta);
    if (image.empty() || image.back() != t) image.push_back(t);
    eta.push_back(static_cast<int>(image.size()) - 1);
  }
  const std::size_t pos = target_sd.index.at(image);
  return x.act(static_cast<int>(image.size()) - 1, g[pos], eta);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> sd_chains(int n) {
  const std::uint32_t full = (1U << (n + 1)) - 1;
  std::vector<Chain> out;
  std::function<void(Chain&)> extend = [&](Chain& ch) {
    out.push_back(ch);
    for (std::uint32_t next = ch.back() + 1; next <= full; ++next)
      if ((next & ch.back()) == ch.back() && next != ch.back()) {
        ch.push_back(next);
        extend(ch);
        ch.pop_back();
      }
  };
  for (std::uint32_t first = 1; first <= full; ++first) {
    Chain ch{first};
    extend(ch);
  }
  std::stable_sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
    return std::make_pair(a.back(), a.size()) < std::make_pair(b.back(), b.size());
  });
  return out;
}

ExResult ex(const SSetRef& xref, int n_max) {
  const TruncSSet& x = *xref;
  if (n_max < 0 || n_max > 3) throw DomainError("ex: n_max must lie in [0, 3]");
  if (n_max > x.trunc()) throw DomainError("ex: n_max exceeds the truncation of the input");
  std::vector<SdData> sds;
  for (int n = 0; n <= n_max + 1 && n <= 3; ++n) sds.push_back(sd_data(n));

  std::vector<std::unordered_map<std::vector<SimplexId>, std::vector<SimplexId>, VectorHash>> by_faces(
      n_max + 1);
  for (int j = 1; j <= n_max; ++j)
    for (SimplexId z = 0; z < x.count(j); ++z) {
      std::vector<SimplexId> key;
      for (int i = 0; i <= j; ++i) key.push_back(x.face(j, z, i));
      by_faces[j][key].push_back(z);
    }
  std::vector<SimplexId> all_vertices(x.count(0));
  for (SimplexId v = 0; v < x.count(0); ++v) all_vertices[v] = v;

  ExResult r{xref, nullptr, {}};
  r.maps.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const SdData& sdn = sds[n];
    ExKey g(sdn.chains.size(), kInvalidId);
    std::function<void(std::size_t)> assign = [&](std::size_t pos) {
      if (pos == g.size()) {
        r.maps[n].push_back(g);
        check_cell_budget(r.maps[n].size(), "Ex simplices");
        return;
      }
      const int dim = static_cast<int>(sdn.chains[pos].size()) - 1;
      const std::vector<SimplexId>* cands = &all_vertices;
      if (dim > 0) {
        std::vector<SimplexId> key;
        for (std::size_t f : sdn.faces[pos]) key.push_back(g[f]);
        auto it = by_faces[dim].find(key);
        if (it == by_faces[dim].end()) return;
        cands = &it->second;
      }
      for (SimplexId z : *cands) {
        g[pos] = z;
        assign(pos + 1);
      }
      g[pos] = kInvalidId;
    };
    assign(0);
  }

  auto face = [&](int n, const ExKey& g, int i) {
    const Operator delta = coface(n, i);
    ExKey out;
    for (const Chain& ch : sds[n - 1].chains) {
      Chain image;
      for (std::uint32_t s : ch) image.push_back(map_subset(s, delta));
      out.push_back(g[sds[n].index.at(image)]);
    }
    return out;
  };
  auto degen = [&](int n, const ExKey& g, int i) {
    const Operator sigma = codegeneracy(n, i);
    ExKey out;
    for (const Chain& ch : sds[n + 1].chains) out.push_back(pull_back(x, sds[n], g, ch, sigma));
    return out;
  };
  auto label = [&](int n, const ExKey& g) {
    std::vector<std::string> parts;
    for (std::size_t c = 0; c < g.size(); ++c) {
      const int dim = static_cast<int>(sds[n].chains[c].size()) - 1;
      parts.push_back(x.label(dim, g[c]));
    }
    return tuple_label(parts);
  };
  r.sset = share(TruncSSet::from_tables(tables_from_keys<ExKey, VectorHash>(n_max, r.maps, face, degen, label)));
  return r;
}

SimplicialMap beta(const ExResult& e) {
  const TruncSSet& x = *e.base;
  const int n_max = e.sset->trunc();
  auto source = x.trunc() == n_max ? e.base : share(truncate(x, n_max));
  SimplicialMap b{source, e.sset, {}};
  for (int n = 0; n <= n_max; ++n) {
    const auto chains = sd_chains(n);
    std::unordered_map<ExKey, SimplexId, VectorHash> index;
    for (SimplexId g = 0; g < e.maps[n].size(); ++g) index.emplace(e.maps[n][g], g);
    b.levels.emplace_back();
    for (SimplexId s = 0; s < x.count(n); ++s) {
      ExKey g;
      for (const Chain& ch : chains) {
        Operator theta;
        for (std::uint32_t m : ch) theta.push_back(31 - std::countl_zero(m));
        g.push_back(x.act(n, s, theta));
      }
      b.levels[n].push_back(index.at(g));
    }
  }
  return b;
}

SimplicialMap ex_map(const SimplicialMap& f, const ExResult& ex_x, const ExResult& ex_y) {
  const int n_max = ex_x.sset->trunc();
  if (ex_y.sset->trunc() != n_max) throw DomainError("ex_map: truncations differ");
  SimplicialMap out{ex_x.sset, ex_y.sset, {}};
  for (int n = 0; n <= n_max; ++n) {
    const auto chains = sd_chains(n);
    std::unordered_map<ExKey, SimplexId, VectorHash> index;
    for (SimplexId g = 0; g < ex_y.maps[n].size(); ++g) index.emplace(ex_y.maps[n][g], g);
    out.levels.emplace_back();
    for (const ExKey& g : ex_x.maps[n]) {
      ExKey h;
      for (std::size_t c = 0; c < g.size(); ++c) h.push_back(f(static_cast<int>(chains[c].size()) - 1, g[c]));
      auto it = index.find(h);
      if (it == index.end()) throw DomainError("ex_map: image is not a simplex of Ex(Y)");
      out.levels[n].push_back(it->second);
    }
  }
  return out;
}

}  // namespace dblcat
