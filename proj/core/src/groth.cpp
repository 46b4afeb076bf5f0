#include "dblcat/groth.hpp"

namespace dblcat {

namespace {

bool same_maps(const FinFunctor& a, const FinFunctor& b) {
  return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
}

template <typename Value, typename Action, typename Sizes, typename Compose, typename Identity>
std::vector<std::string> check_diagram(const CatRef& shape, const std::vector<Value>& values,
                                       const std::vector<Action>& action, Sizes sizes, Compose comp,
                                       Identity ident) {
  std::vector<std::string> out;
  const FinCat& J = *shape;
  if (values.size() != J.num_objects()) return {"diagram has " + std::to_string(values.size()) + " values for " +
                                                std::to_string(J.num_objects()) + " objects"};
  if (action.size() != J.num_morphisms()) return {"diagram has the wrong number of actions"};
  for (MorId s = 0; s < J.num_morphisms(); ++s)
    if (!sizes(action[s], values[J.src(s)], values[J.tgt(s)]))
      out.push_back("action of '" + J.morphism_label(s) + "' has the wrong source or target");
  if (!out.empty()) return out;
  for (ObjId j = 0; j < J.num_objects(); ++j)
    if (!ident(action[J.identity(j)])) out.push_back("action of '" + J.morphism_label(J.identity(j)) + "' is not the identity");
  for (MorId s = 0; s < J.num_morphisms(); ++s)
    for (MorId s2 : J.out_morphisms(J.tgt(s)))
      if (!comp(action[J.compose_unchecked(s2, s)], action[s2], action[s]))
        out.push_back("action does not preserve the composite of '" + J.morphism_label(s2) + "' and '" +
                      J.morphism_label(s) + "'");
  return out;
}

bool is_identity_map(const FinFunctor& f) {
  for (ObjId x = 0; x < f.on_objects.size(); ++x)
    if (f.on_objects[x] != x) return false;
  for (MorId m = 0; m < f.on_morphisms.size(); ++m)
    if (f.on_morphisms[m] != m) return false;
  return true;
}

bool matches(const FinFunctor& f, const FinCat& src, const FinCat& tgt) {
  return f.on_objects.size() == src.num_objects() && f.on_morphisms.size() == src.num_morphisms() &&
         f.target->num_objects() == tgt.num_objects() && f.target->num_morphisms() == tgt.num_morphisms();
}

}  // namespace

std::vector<std::string> validate(const CatDiagram& d) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < d.action.size(); ++j)
    for (const auto& e : validate(d.action[j])) out.push_back("action " + std::to_string(j) + ": " + e);
  if (!out.empty()) return out;
  return check_diagram(
      d.shape, d.values, d.action,
      [](const FinFunctor& f, const CatRef& a, const CatRef& b) { return matches(f, *a, *b); },
      [](const FinFunctor& gs, const FinFunctor& g, const FinFunctor& f) { return same_maps(gs, compose(g, f)); },
      is_identity_map);
}

std::vector<std::string> validate(const DblDiagram& d) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < d.action.size(); ++j)
    for (const auto& e : validate(d.action[j])) out.push_back("action " + std::to_string(j) + ": " + e);
  if (!out.empty()) return out;
  return check_diagram(
      d.shape, d.values, d.action,
      [](const DblFunctor& f, const DblRef& a, const DblRef& b) {
        return matches(f.f0, *a->a0, *b->a0) && matches(f.f1, *a->a1, *b->a1);
      },
      [](const DblFunctor& gs, const DblFunctor& g, const DblFunctor& f) {
        return same_maps(gs.f0, compose(g.f0, f.f0)) && same_maps(gs.f1, compose(g.f1, f.f1));
      },
      [](const DblFunctor& f) { return is_identity_map(f.f0) && is_identity_map(f.f1); });
}

CatDiagram constant_diagram(const CatRef& shape, const CatRef& value) {
  CatDiagram d{shape, std::vector<CatRef>(shape->num_objects(), value), {}};
  d.action.assign(shape->num_morphisms(), identity_functor(value));
  return d;
}

ObjId Grothendieck::object_of(ObjId j, ObjId x) const { return object_index.at({j, x}); }

MorId Grothendieck::morphism_of(MorId s, ObjId x, MorId u) const { return morphism_index.at({s, x, u}); }

Grothendieck grothendieck_cat(const CatDiagram& d) {
  auto errors = validate(d);
  if (!errors.empty()) throw DomainError("grothendieck_cat: " + errors.front());
  const FinCat& J = *d.shape;
  Grothendieck g;
  FinCatBuilder b;
  for (ObjId j = 0; j < J.num_objects(); ++j)
    for (ObjId x = 0; x < d.values[j]->num_objects(); ++x) {
      g.object_index.emplace(std::array<std::uint32_t, 2>{j, x}, b.add_object(tuple_label(
                                                                     {J.object_label(j), d.values[j]->object_label(x)})));
      g.objects.push_back({j, x});
    }
  check_cell_budget(g.objects.size(), "Grothendieck objects");
  for (MorId s = 0; s < J.num_morphisms(); ++s) {
    const FinCat& src = *d.values[J.src(s)];
    const FinCat& tgt = *d.values[J.tgt(s)];
    for (ObjId x = 0; x < src.num_objects(); ++x)
      for (MorId u : tgt.out_morphisms(d.action[s].obj(x))) {
        const MorId m = b.add_morphism(
            tuple_label({J.morphism_label(s), src.object_label(x), tgt.morphism_label(u)}),
            g.object_of(J.src(s), x), g.object_of(J.tgt(s), tgt.tgt(u)));
        g.morphism_index.emplace(std::array<std::uint32_t, 3>{s, x, u}, m);
        g.morphisms.push_back({s, x, u});
      }
    check_cell_budget(g.morphisms.size(), "Grothendieck morphisms");
  }
  for (const auto& [j, x] : g.objects)
    b.set_identity(g.object_of(j, x), g.morphism_of(J.identity(j), x, d.values[j]->identity(x)));
  g.category = share(std::move(b).build([&](MorId h, MorId f) {
    const auto [s2, x2, u2] = g.morphisms[h];
    const auto [s, x, u] = g.morphisms[f];
    (void)x2;
    const FinCat& last = *d.values[J.tgt(s2)];
    return g.morphism_of(J.compose_unchecked(s2, s), x, last.compose_unchecked(u2, d.action[s2].mor(u)));
  }));
  g.projection = FinFunctor{g.category, d.shape, {}, {}};
  for (const auto& o : g.objects) g.projection.on_objects.push_back(o[0]);
  for (const auto& m : g.morphisms) g.projection.on_morphisms.push_back(m[0]);
  return g;
}

GrothendieckDbl grothendieck_dbl(const DblDiagram& d) {
  auto errors = validate(d);
  if (!errors.empty()) throw DomainError("grothendieck_dbl: " + errors.front());
  CatDiagram d0{d.shape, {}, {}}, d1{d.shape, {}, {}};
  for (const auto& v : d.values) {
    d0.values.push_back(v->a0);
    d1.values.push_back(v->a1);
  }
  for (const auto& a : d.action) {
    d0.action.push_back(a.f0);
    d1.action.push_back(a.f1);
  }
  GrothendieckDbl out{nullptr, grothendieck_cat(d0), grothendieck_cat(d1)};
  const Grothendieck& V = out.vertical;
  const Grothendieck& H = out.horizontal;

  auto side = [&](bool at_target) {
    FinFunctor f{H.category, V.category, {}, {}};
    for (const auto& [j, h] : H.objects) {
      const FinDblCat& a = *d.values[j];
      f.on_objects.push_back(V.object_of(j, at_target ? a.t.obj(h) : a.s.obj(h)));
    }
    for (const auto& [s, h, x] : H.morphisms) {
      const FinDblCat& a = *d.values[d.shape->src(s)];
      const FinDblCat& b = *d.values[d.shape->tgt(s)];
      const FinFunctor& bs = at_target ? b.t : b.s;
      f.on_morphisms.push_back(V.morphism_of(s, at_target ? a.t.obj(h) : a.s.obj(h), bs.mor(x)));
    }
    return f;
  };
  FinFunctor i{V.category, H.category, {}, {}};
  for (const auto& [j, x] : V.objects) i.on_objects.push_back(H.object_of(j, d.values[j]->i.obj(x)));
  for (const auto& [s, x, u] : V.morphisms) {
    const FinDblCat& a = *d.values[d.shape->src(s)];
    const FinDblCat& b = *d.values[d.shape->tgt(s)];
    i.on_morphisms.push_back(H.morphism_of(s, a.i.obj(x), b.i.mor(u)));
  }
  auto compose_sq = [&](MorId x, MorId y) -> MorId {
    const auto [s, h, alpha] = H.morphisms[x];
    const auto [s2, k, beta] = H.morphisms[y];
    if (s != s2) return kInvalidId;
    const FinDblCat& a = *d.values[d.shape->src(s)];
    const FinDblCat& b = *d.values[d.shape->tgt(s)];
    auto hk = a.compose_horizontal(h, k);
    auto ab = b.compose_squares(alpha, beta);
    if (!hk || !ab) return kInvalidId;
    return H.morphism_of(s, *hk, *ab);
  };
  out.dbl = share(make_double_category(V.category, H.category, side(false), side(true), i, compose_sq));
  return out;
}

DblFunctor grothendieck_cocone(const DblDiagram& d, const GrothendieckDbl& g, const DblRef& target,
                               const std::vector<DblFunctor>& legs) {
  const FinCat& J = *d.shape;
  if (legs.size() != J.num_objects()) throw DomainError("grothendieck_cocone: one leg per object of J required");
  for (MorId s = 0; s < J.num_morphisms(); ++s) {
    const DblFunctor via = compose(legs[J.tgt(s)], d.action[s]);
    if (!same_maps(via.f0, legs[J.src(s)].f0) || !same_maps(via.f1, legs[J.src(s)].f1))
      throw DomainError("grothendieck_cocone: legs do not commute with '" + J.morphism_label(s) + "'");
  }
  DblFunctor f{g.dbl, target, {g.dbl->a0, target->a0, {}, {}}, {g.dbl->a1, target->a1, {}, {}}};
  for (const auto& [j, x] : g.vertical.objects) f.f0.on_objects.push_back(legs[j].f0.obj(x));
  for (const auto& [s, x, u] : g.vertical.morphisms) f.f0.on_morphisms.push_back(legs[J.tgt(s)].f0.mor(u));
  for (const auto& [j, h] : g.horizontal.objects) f.f1.on_objects.push_back(legs[j].f1.obj(h));
  for (const auto& [s, h, x] : g.horizontal.morphisms) f.f1.on_morphisms.push_back(legs[J.tgt(s)].f1.mor(x));
  return f;
}

namespace {

/// Zigzag shape 0 ← 1 → 2 ← 3 → … on `count` objects; odd objects are sources.
CatRef zigzag(std::size_t count) {
  FinCatBuilder b;
  for (std::size_t k = 0; k < count; ++k) b.add_object_with_identity(std::to_string(k));
  for (std::size_t k = 1; k < count; k += 2) {
    b.add_morphism(std::to_string(k) + "->" + std::to_string(k - 1), static_cast<ObjId>(k), static_cast<ObjId>(k - 1));
    if (k + 1 < count)
      b.add_morphism(std::to_string(k) + "->" + std::to_string(k + 1), static_cast<ObjId>(k), static_cast<ObjId>(k + 1));
  }
  return share(std::move(b).build());
}

DblRef h_chain(int n) { return share(h_embed(chain_category(n))); }

DblFunctor h_monotone(const DblRef& src, const DblRef& tgt, int n_src, int n_tgt, const std::vector<int>& values) {
  auto f = monotone_functor(share(chain_category(n_src)), share(chain_category(n_tgt)), values);
  return h_functor(f, src, tgt);
}

DblDiagram zigzag_diagram(const CatRef& shape, std::vector<DblRef> values,
                          const std::vector<std::vector<int>>& edge_values, const std::vector<int>& dims) {
  DblDiagram d{shape, std::move(values), {}};
  const FinCat& J = *shape;
  std::size_t edge = 0;
  for (MorId s = 0; s < J.num_morphisms(); ++s) {
    if (J.is_identity(s)) {
      d.action.push_back(identity_dbl_functor(d.values[J.src(s)]));
    } else {
      d.action.push_back(h_monotone(d.values[J.src(s)], d.values[J.tgt(s)], dims[J.src(s)], dims[J.tgt(s)],
                                    edge_values[edge++]));
    }
  }
  return d;
}

}  // namespace

LocalizationSource spine_source(int n) {
  if (n < 1) throw DomainError("spine_source: n must be at least 1");
  const std::size_t count = 2 * static_cast<std::size_t>(n) - 1;
  auto shape = zigzag(count);
  auto h0 = h_chain(0), h1 = h_chain(1);
  std::vector<DblRef> values;
  std::vector<int> dims;
  for (std::size_t k = 0; k < count; ++k) {
    values.push_back(k % 2 == 0 ? h1 : h0);
    dims.push_back(k % 2 == 0 ? 1 : 0);
  }
  // edges in the order created by zigzag(): k → k−1 is d⁰, k → k+1 is d¹
  std::vector<std::vector<int>> edges;
  for (std::size_t k = 1; k < count; k += 2) {
    edges.push_back({1});
    edges.push_back({0});
  }
  LocalizationSource out{zigzag_diagram(shape, values, edges, dims), {}, h_chain(n), {}};
  out.source = grothendieck_dbl(out.diagram);
  std::vector<DblFunctor> legs;
  for (std::size_t k = 0; k < count; ++k) {
    const int i = static_cast<int>(k / 2);
    if (k % 2 == 0) {
      legs.push_back(h_monotone(h1, out.target, 1, n, {i, i + 1}));
    } else {
      legs.push_back(h_monotone(h0, out.target, 0, n, {i + 1}));
    }
  }
  out.comparison = grothendieck_cocone(out.diagram, out.source, out.target, legs);
  return out;
}

LocalizationSource completeness_source() {
  auto shape = zigzag(5);
  auto h0 = h_chain(0), h1 = h_chain(1), h3 = h_chain(3);
  const std::vector<DblRef> values{h0, h1, h3, h1, h0};
  const std::vector<int> dims{0, 1, 3, 1, 0};
  // 1 → 0: !, 1 → 2: d³d¹, 3 → 2: d⁰d¹, 3 → 4: !
  const std::vector<std::vector<int>> edges{{0, 0}, {0, 2}, {1, 3}, {0, 0}};
  LocalizationSource out{zigzag_diagram(shape, values, edges, dims), {}, h0, {}};
  out.source = grothendieck_dbl(out.diagram);
  std::vector<DblFunctor> legs;
  for (std::size_t k = 0; k < values.size(); ++k)
    legs.push_back(h_monotone(values[k], h0, dims[k], 0, std::vector<int>(dims[k] + 1, 0)));
  out.comparison = grothendieck_cocone(out.diagram, out.source, out.target, legs);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate_natural(const CatDiagram& from, const CatDiagram& to, const NatTrans& alpha) {
  std::vector<std::string> out;
  const FinCat& J = *from.shape;
  if (alpha.size() != J.num_objects()) return {"transformation needs one component per object of J"};
  for (ObjId j = 0; j < J.num_objects(); ++j) {
    if (!matches(alpha[j], *from.values[j], *to.values[j])) {
      out.push_back("component at '" + J.object_label(j) + "' has the wrong source or target");
      continue;
    }
    for (const auto& e : validate(alpha[j])) out.push_back("component at '" + J.object_label(j) + "': " + e);
  }
  if (!out.empty()) return out;
  for (MorId s = 0; s < J.num_morphisms(); ++s) {
    const ObjId j = J.src(s), k = J.tgt(s);
    if (!same_maps(compose(alpha[k], from.action[s]), compose(to.action[s], alpha[j])))
      out.push_back("naturality fails at '" + J.morphism_label(s) + "'");
  }
  return out;
}

FinFunctor grothendieck_map(const CatDiagram& from, const CatDiagram& to, const NatTrans& alpha,
                            const Grothendieck& gfrom, const Grothendieck& gto) {
  (void)to;
  const FinCat& J = *from.shape;
  FinFunctor f{gfrom.category, gto.category, {}, {}};
  for (const auto& [j, x] : gfrom.objects) f.on_objects.push_back(gto.object_of(j, alpha[j].obj(x)));
  for (const auto& [s, x, u] : gfrom.morphisms)
    f.on_morphisms.push_back(gto.morphism_of(s, alpha[J.src(s)].obj(x), alpha[J.tgt(s)].mor(u)));
  return f;
}

PullbackVerdict check_pullback_preservation(const CatDiagram& d1, const CatDiagram& d2, const CatDiagram& d3,
                                            const NatTrans& alpha, const NatTrans& beta) {
  for (const auto& e : validate_natural(d1, d3, alpha)) throw DomainError("check_pullback_preservation: alpha: " + e);
  for (const auto& e : validate_natural(d2, d3, beta)) throw DomainError("check_pullback_preservation: beta: " + e);
  const FinCat& J = *d1.shape;

  std::vector<Pullback> fibers;
  CatDiagram dp{d1.shape, {}, {}};
  for (ObjId j = 0; j < J.num_objects(); ++j) {
    fibers.push_back(pullback(alpha[j], beta[j]));
    dp.values.push_back(fibers.back().category);
  }
  for (MorId s = 0; s < J.num_morphisms(); ++s) {
    const Pullback& a = fibers[J.src(s)];
    const Pullback& b = fibers[J.tgt(s)];
    FinFunctor f{a.category, b.category, {}, {}};
    for (const auto& [x, y] : a.objects) f.on_objects.push_back(*b.object_of(d1.action[s].obj(x), d2.action[s].obj(y)));
    for (const auto& [u, v] : a.morphisms) f.on_morphisms.push_back(*b.morphism_of(d1.action[s].mor(u), d2.action[s].mor(v)));
    dp.action.push_back(std::move(f));
  }

  const Grothendieck lhs = grothendieck_cat(dp);
  const Grothendieck g1 = grothendieck_cat(d1), g2 = grothendieck_cat(d2), g3 = grothendieck_cat(d3);
  const Pullback rhs = pullback(grothendieck_map(d1, d3, alpha, g1, g3), grothendieck_map(d2, d3, beta, g2, g3));

  PullbackVerdict v;
  v.lhs_objects = lhs.category->num_objects();
  v.lhs_morphisms = lhs.category->num_morphisms();
  v.rhs_objects = rhs.category->num_objects();
  v.rhs_morphisms = rhs.category->num_morphisms();

  FinFunctor k{lhs.category, rhs.category, {}, {}};
  for (const auto& [j, p] : lhs.objects) {
    const auto [x, y] = fibers[j].objects[p];
    auto o = rhs.object_of(g1.object_of(j, x), g2.object_of(j, y));
    if (!o) {
      v.detail = "object " + lhs.category->object_label(lhs.object_of(j, p)) + " has no image";
      return v;
    }
    k.on_objects.push_back(*o);
  }
  for (const auto& [s, p, w] : lhs.morphisms) {
    const auto [x, y] = fibers[J.src(s)].objects[p];
    const auto [u, uu] = fibers[J.tgt(s)].morphisms[w];
    auto m = rhs.morphism_of(g1.morphism_of(s, x, u), g2.morphism_of(s, y, uu));
    if (!m) {
      v.detail = "morphism " + lhs.category->morphism_label(lhs.morphism_of(s, p, w)) + " has no image";
      return v;
    }
    k.on_morphisms.push_back(*m);
  }
  auto errors = validate(k);
  if (!errors.empty()) {
    v.detail = "comparison is not a functor: " + errors.front();
  } else if (!is_isomorphism(k)) {
    v.detail = "comparison is not bijective";
  } else {
    v.preserved = true;
    v.detail = "canonical comparison is an isomorphism";
  }
  return v;
}

}  // namespace dblcat
