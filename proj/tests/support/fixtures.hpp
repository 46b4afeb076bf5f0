#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dblcat/dblcat.hpp"
#include "dblcat/groth.hpp"
#include "dblcat/pushout.hpp"
#include "dblcat/subdivision.hpp"
#include "oracles.hpp"

namespace fixtures {

using namespace dblcat;

/// C = [1], P = {0} ⊆ [1], A = H[0]: both objects of C collapse to the point.
inline DblSievePushoutSpec collapse_spec() {
  auto c = share(chain_category(1));
  auto inc = PosetInclusion::full_subposet(chain_poset(1), {0});
  auto pcat = share(inc.sub().as_category());
  auto a = share(h_embed(chain_category(0)));
  auto src = share(box(*c, *pcat));
  auto point = share(chain_category(0));
  auto bang = monotone_functor(c, point, {0, 0});
  auto hbox = share(box(chain_category(0), *pcat));
  DblFunctor f = box_functor(bang, identity_functor(pcat), src, hbox);
  // box([0], {0}) and H[0] have identical tables, so retarget
  f.target = a;
  f.f0.target = a->a0;
  f.f1.target = a->a1;
  return {c, inc, a, f};
}

struct NamedSpec {
  std::string name;
  DblSievePushoutSpec spec;
};

inline std::vector<NamedSpec> pushout_specs() {
  return {
      {"counterexample", counterexample_spec()},
      {"identity [1] along cSd2(boundary 1)", identity_spec(chain_category(1), csd2_inclusion(Shape::boundary(1)))},
      {"identity [0] along cSd2(boundary 2)", identity_spec(chain_category(0), csd2_inclusion(Shape::boundary(2)))},
      {"identity [1] along [1] in [2]",
       identity_spec(chain_category(1), PosetInclusion::full_subposet(chain_poset(2), {0, 1}))},
      {"collapse [1] to a point", collapse_spec()},
  };
}

struct RandomShape {
  CatRef cat;
  std::vector<std::pair<ObjId, ObjId>> edges;
};

inline RandomShape random_shape(std::mt19937& rng, int max_objects, int max_edges) {
  const int n = std::uniform_int_distribution<int>(1, max_objects)(rng);
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("j" + std::to_string(i));
  std::vector<std::pair<ObjId, ObjId>> edges;
  const int m = n > 1 ? std::uniform_int_distribution<int>(0, max_edges)(rng) : 0;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int e = 0; e < m; ++e) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    edges.emplace_back(static_cast<ObjId>(a), static_cast<ObjId>(b));
  }
  return {share(free_category(v, edges)), edges};
}

using Monotone = std::vector<int>;

inline Monotone random_monotone(std::mt19937& rng, int from, int to) {
  Monotone m(from + 1);
  std::uniform_int_distribution<int> d(0, to);
  for (int& x : m) x = d(rng);
  std::sort(m.begin(), m.end());
  return m;
}

inline Monotone after(const Monotone& g, const Monotone& f) {
  Monotone out;
  for (int x : f) out.push_back(g[x]);
  return out;
}

/// A diagram of chains [size_j] with a monotone map per edge, kept in raw
/// form so naturality can be checked independently of the library.
struct ChainDiagram {
  RandomShape shape;
  std::vector<int> sizes;
  std::vector<Monotone> edge_maps;

  /// Composite along a morphism of the free category.
  Monotone along(MorId s, const std::vector<std::size_t>& path) const {
    Monotone m;
    for (int x = 0; x <= sizes[shape.cat->src(s)]; ++x) m.push_back(x);
    for (std::size_t e : path) m = after(edge_maps[e], m);
    return m;
  }
};

inline ChainDiagram random_chain_diagram(std::mt19937& rng, const RandomShape& shape, int max_size) {
  ChainDiagram d{shape, {}, {}};
  for (ObjId j = 0; j < shape.cat->num_objects(); ++j)
    d.sizes.push_back(std::uniform_int_distribution<int>(0, max_size)(rng));
  for (auto [a, b] : shape.edges) d.edge_maps.push_back(random_monotone(rng, d.sizes[a], d.sizes[b]));
  return d;
}

inline bool natural(const ChainDiagram& from, const ChainDiagram& to, const std::vector<Monotone>& alpha) {
  for (std::size_t e = 0; e < from.shape.edges.size(); ++e) {
    auto [a, b] = from.shape.edges[e];
    if (after(to.edge_maps[e], alpha[a]) != after(alpha[b], from.edge_maps[e])) return false;
  }
  return true;
}

struct Cospan {
  ChainDiagram d1, d2, d3;
  std::vector<Monotone> alpha, beta;
  int rejected = 0;
};

/// Samples D1 → D3 ← D2 by rejection: draw D1 and components at random and
/// keep the first natural draw; after `attempts` failures D1 becomes D3 with
/// the identity.
inline std::pair<ChainDiagram, std::vector<Monotone>> natural_into(std::mt19937& rng, const ChainDiagram& target,
                                                                  int max_size, int attempts, int& rejected) {
  for (int t = 0; t < attempts; ++t) {
    ChainDiagram d = random_chain_diagram(rng, target.shape, max_size);
    std::vector<Monotone> alpha;
    for (std::size_t j = 0; j < d.sizes.size(); ++j) alpha.push_back(random_monotone(rng, d.sizes[j], target.sizes[j]));
    if (natural(d, target, alpha)) return {d, alpha};
    ++rejected;
  }
  std::vector<Monotone> id;
  for (int s : target.sizes) {
    Monotone m;
    for (int x = 0; x <= s; ++x) m.push_back(x);
    id.push_back(m);
  }
  return {target, id};
}

inline Cospan random_cospan(std::mt19937& rng, int max_objects, int max_edges, int max_size) {
  Cospan c;
  const RandomShape shape = random_shape(rng, max_objects, max_edges);
  c.d3 = random_chain_diagram(rng, shape, max_size);
  std::tie(c.d1, c.alpha) = natural_into(rng, c.d3, max_size, 2000, c.rejected);
  std::tie(c.d2, c.beta) = natural_into(rng, c.d3, max_size, 2000, c.rejected);
  return c;
}

inline CatDiagram to_diagram(const ChainDiagram& d) {
  CatDiagram out;
  out.shape = d.shape.cat;
  for (int s : d.sizes) out.values.push_back(share(chain_category(s)));
  for (MorId s = 0; s < d.shape.cat->num_morphisms(); ++s) {
    const std::vector<std::size_t> path = oracle::path_of(*d.shape.cat, s);
    const ObjId a = d.shape.cat->src(s), b = d.shape.cat->tgt(s);
    out.action.push_back(monotone_functor(out.values[a], out.values[b], d.along(s, path)));
  }
  return out;
}

inline NatTrans to_nat(const CatDiagram& from, const CatDiagram& to, const std::vector<Monotone>& alpha) {
  NatTrans n;
  for (std::size_t j = 0; j < alpha.size(); ++j) n.push_back(monotone_functor(from.values[j], to.values[j], alpha[j]));
  return n;
}

}  // namespace fixtures
