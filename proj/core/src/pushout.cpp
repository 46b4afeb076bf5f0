#include "dblcat/pushout.hpp"

#include <boost/pending/disjoint_sets.hpp>
#include <unordered_map>

namespace dblcat {

namespace {

using Tuple = std::vector<std::uint32_t>;

void check_source_shape(const FinFunctor& f, std::size_t objects, std::size_t morphisms, const char* what) {
  if (!f.source || f.source->num_objects() != objects || f.source->num_morphisms() != morphisms)
    throw DomainError(std::string(what) + ": functor source does not have the shape C x P");
  auto errors = validate(f);
  if (!errors.empty()) throw DomainError(std::string(what) + ": not a functor: " + errors.front());
}

}  // namespace

ObjId SievePushout::adjoined_object(std::size_t c, std::size_t q) const {
  auto it = adjoined_objects.find({c, q});
  if (it == adjoined_objects.end()) throw DomainError("no adjoined object at this position");
  return it->second;
}

MorId SievePushout::adjoined_morphism(std::size_t c, std::size_t q, std::size_t q_to) const {
  auto it = adjoined_morphisms.find({c, q, q_to});
  if (it == adjoined_morphisms.end()) throw DomainError("no adjoined morphism at this position");
  return it->second;
}

MorId SievePushout::formal_morphism(const FormalCell& cell) const {
  auto it = formal_morphisms.find(cell);
  if (it == formal_morphisms.end()) throw DomainError("not a formal presentation of this pushout");
  return it->second;
}

SievePushout pushout_cat_sieve(const SievePushoutSpec& spec) {
  const PosetInclusion& inc = spec.inc;
  if (!is_sieve(inc)) throw DomainError("pushout_cat_sieve: inclusion is not a sieve");
  const FinPoset& P = inc.sub();
  const FinPoset& Q = inc.ambient();
  const FinCat pcat = P.as_category();
  auto qcat = share(Q.as_category());
  const FinCat& A = *spec.a;
  const FinFunctor& F = spec.f;
  const std::size_t nc = spec.c.size();
  check_source_shape(F, nc * P.size(), nc * pcat.num_morphisms(), "pushout_cat_sieve");
  if (F.target->num_objects() != A.num_objects() || F.target->num_morphisms() != A.num_morphisms())
    throw DomainError("pushout_cat_sieve: functor target is not A");

  auto f_obj = [&](std::size_t c, std::size_t p) { return F.obj(static_cast<ObjId>(c * P.size() + p)); };
  auto f_rel = [&](std::size_t c, std::size_t p, std::size_t p2) {
    return F.mor(static_cast<MorId>(c * pcat.num_morphisms() + P.relation_morphism(p, p2)));
  };
  const std::vector<std::size_t> outside = inc.complement();

  SievePushout po;
  FinCatBuilder b;
  for (ObjId x = 0; x < A.num_objects(); ++x) b.add_object(A.object_label(x));
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t q : outside) {
      po.adjoined_objects.emplace(std::pair{c, q}, b.add_object(tuple_label({spec.c[c], Q.label(q)})));
      po.adjoined_pairs.emplace_back(c, q);
    }
  for (MorId u = 0; u < A.num_morphisms(); ++u) {
    b.add_morphism(A.morphism_label(u), A.src(u), A.tgt(u));
    PushoutCell cell;
    cell.a_morphism = u;
    po.cells.push_back(cell);
  }
  for (ObjId x = 0; x < A.num_objects(); ++x) b.set_identity(x, A.identity(x));

  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t q : outside)
      for (std::size_t q2 : outside) {
        if (!Q.leq(q, q2)) continue;
        const MorId m = b.add_morphism(tuple_label({spec.c[c], Q.label(q) + "<=" + Q.label(q2)}),
                                       po.adjoined_object(c, q), po.adjoined_object(c, q2));
        po.adjoined_morphisms.emplace(std::tuple{c, q, q2}, m);
        PushoutCell cell;
        cell.kind = CellKind::adjoined;
        cell.c = c;
        cell.q = q;
        cell.q_to = q2;
        po.cells.push_back(cell);
        if (q == q2) b.set_identity(po.adjoined_object(c, q), m);
      }

  // raw formal cells, identified along the sliding relation
  // (u, p, q) ~ (F(c, p ≤ p′) ∘ u, p′, q)
  std::vector<FormalCell> raw;
  std::map<FormalCell, std::size_t> raw_index;
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t q : outside)
      for (std::size_t p = 0; p < P.size(); ++p) {
        if (!Q.leq(inc.image(p), q)) continue;
        for (MorId u : A.in_morphisms(f_obj(c, p))) {
          raw_index.emplace(FormalCell{u, c, p, q}, raw.size());
          raw.push_back({u, c, p, q});
        }
        check_cell_budget(raw.size(), "formal pushout cells");
      }
  std::vector<std::size_t> rank(raw.size()), parent(raw.size());
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (std::size_t r = 0; r < raw.size(); ++r) sets.make_set(r);
  for (std::size_t r = 0; r < raw.size(); ++r) {
    const FormalCell& x = raw[r];
    for (std::size_t p2 = 0; p2 < P.size(); ++p2) {
      if (p2 == x.p || !P.leq(x.p, p2) || !Q.leq(inc.image(p2), x.q)) continue;
      const FormalCell y{A.compose_unchecked(f_rel(x.c, x.p, p2), x.u), x.c, p2, x.q};
      sets.union_set(r, raw_index.at(y));
    }
  }
  std::unordered_map<std::size_t, std::size_t> class_of_root;
  std::vector<std::size_t> class_cell;
  for (std::size_t r = 0; r < raw.size(); ++r) {
    const std::size_t root = sets.find_set(r);
    auto [it, fresh] = class_of_root.emplace(root, po.cells.size());
    if (fresh) {
      const FormalCell& x = raw[r];
      const std::string label = "[" + A.morphism_label(x.u) + "|" +
                                tuple_label({spec.c[x.c], P.label(x.p) + "<=" + Q.label(x.q)}) + "]";
      b.add_morphism(label, A.src(x.u), po.adjoined_object(x.c, x.q));
      PushoutCell cell;
      cell.kind = CellKind::formal;
      cell.c = x.c;
      cell.q = x.q;
      cell.formal = x;
      po.cells.push_back(cell);
    }
    po.cells[it->second].members.push_back(raw[r]);
    po.formal_morphisms.emplace(raw[r], static_cast<MorId>(it->second));
  }

  po.category = share(std::move(b).build([&](MorId g, MorId f) -> MorId {
    const PushoutCell& cg = po.cells[g];
    const PushoutCell& cf = po.cells[f];
    if (cg.kind == CellKind::from_a && cf.kind == CellKind::from_a)
      return A.compose_unchecked(cg.a_morphism, cf.a_morphism);
    if (cg.kind == CellKind::formal && cf.kind == CellKind::from_a) {
      FormalCell x = cg.formal;
      x.u = A.compose_unchecked(x.u, cf.a_morphism);
      return po.formal_morphism(x);
    }
    if (cg.kind == CellKind::adjoined && cf.kind == CellKind::formal) {
      FormalCell x = cf.formal;
      x.q = cg.q_to;
      return po.formal_morphism(x);
    }
    if (cg.kind == CellKind::adjoined && cf.kind == CellKind::adjoined)
      return po.adjoined_morphism(cf.c, cf.q, cg.q_to);
    throw DomainError("pushout_cat_sieve: unexpected composable pair");
  }));

  po.from_a = FinFunctor{spec.a, po.category, {}, {}};
  for (ObjId x = 0; x < A.num_objects(); ++x) po.from_a.on_objects.push_back(x);
  for (MorId u = 0; u < A.num_morphisms(); ++u) po.from_a.on_morphisms.push_back(u);

  po.cq = share(product(discrete_category(spec.c), *qcat));
  po.from_cq = FinFunctor{po.cq, po.category, {}, {}};
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t q = 0; q < Q.size(); ++q) {
      auto p = inc.preimage(q);
      po.from_cq.on_objects.push_back(p ? f_obj(c, *p) : po.adjoined_object(c, q));
    }
  for (std::size_t c = 0; c < nc; ++c)
    for (MorId r = 0; r < qcat->num_morphisms(); ++r) {
      const std::size_t q = qcat->src(r), q2 = qcat->tgt(r);
      auto p = inc.preimage(q);
      auto p2 = inc.preimage(q2);
      MorId m;
      if (p && p2) {
        m = f_rel(c, *p, *p2);
      } else if (p) {
        m = po.formal_morphism({A.identity(f_obj(c, *p)), c, *p, q2});
      } else {
        m = po.adjoined_morphism(c, q, q2);
      }
      po.from_cq.on_morphisms.push_back(m);
    }
  return po;
}

bool type3_equal(const SievePushoutSpec& spec, const FormalCell& m1, const FormalCell& m2) {
  const FinCat& A = *spec.a;
  const FinPoset& P = spec.inc.sub();
  const FinPoset& Q = spec.inc.ambient();
  if (m1.c != m2.c || m1.q != m2.q || A.src(m1.u) != A.src(m2.u)) return false;
  const std::size_t c = m1.c;
  const std::size_t nrel = P.as_category().num_morphisms();
  auto f_obj = [&](std::size_t p) { return spec.f.obj(static_cast<ObjId>(c * P.size() + p)); };
  auto f_rel = [&](std::size_t p, std::size_t p2) {
    return spec.f.mor(static_cast<MorId>(c * nrel + P.relation_morphism(p, p2)));
  };
  for (std::size_t p = 0; p < P.size(); ++p) {
    // (i): a joint refinement between p₁, p₂ and q
    if (P.leq(m1.p, p) && P.leq(m2.p, p) && Q.leq(spec.inc.image(p), m1.q) &&
        A.compose_unchecked(f_rel(m1.p, p), m1.u) == A.compose_unchecked(f_rel(m2.p, p), m2.u))
      return true;
    // (ii): a common factorization below p₁ and p₂
    if (P.leq(p, m1.p) && P.leq(p, m2.p)) {
      for (MorId w : A.hom(A.src(m1.u), f_obj(p)))
        if (A.compose_unchecked(f_rel(p, m1.p), w) == m1.u && A.compose_unchecked(f_rel(p, m2.p), w) == m2.u)
          return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

DblSievePushout pushout_dbl_box_sieve(const DblSievePushoutSpec& spec) {
  if (!is_sieve(spec.inc)) throw DomainError("pushout_dbl_box_sieve: inclusion is not a sieve");
  if (!is_weakly_solid(spec.inc)) throw DomainError("pushout_dbl_box_sieve: sieve is not weakly solid");
  const FinCat& C = *spec.c;
  const FinDblCat& A = *spec.a;
  auto errors = validate(spec.f);
  if (!errors.empty()) throw DomainError("pushout_dbl_box_sieve: not a double functor: " + errors.front());

  std::vector<std::string> obj_labels, mor_labels;
  for (ObjId x = 0; x < C.num_objects(); ++x) obj_labels.push_back(C.object_label(x));
  for (MorId f = 0; f < C.num_morphisms(); ++f) mor_labels.push_back(C.morphism_label(f));

  DblSievePushout out{nullptr,
                      nullptr,
                      {},
                      {},
                      pushout_cat_sieve({obj_labels, spec.inc, A.a0, spec.f.f0}),
                      pushout_cat_sieve({mor_labels, spec.inc, A.a1, spec.f.f1})};
  const SievePushout& V = out.vertical;
  const SievePushout& H = out.horizontal;
  const std::size_t na0 = A.a0->num_objects();
  const std::size_t na1 = A.a1->num_objects();

  auto boundary = [&](const FinFunctor& side, bool at_target) {
    FinFunctor g{H.category, V.category, {}, {}};
    for (ObjId h = 0; h < H.category->num_objects(); ++h) {
      if (h < na1) {
        g.on_objects.push_back(side.obj(h));
      } else {
        const auto [f, q] = H.adjoined_pairs[h - na1];
        const ObjId end = at_target ? C.tgt(static_cast<MorId>(f)) : C.src(static_cast<MorId>(f));
        g.on_objects.push_back(V.adjoined_object(end, q));
      }
    }
    for (const PushoutCell& cell : H.cells) {
      const ObjId end = at_target ? C.tgt(static_cast<MorId>(cell.c)) : C.src(static_cast<MorId>(cell.c));
      switch (cell.kind) {
        case CellKind::from_a: g.on_morphisms.push_back(side.mor(cell.a_morphism)); break;
        case CellKind::adjoined: g.on_morphisms.push_back(V.adjoined_morphism(end, cell.q, cell.q_to)); break;
        case CellKind::formal:
          g.on_morphisms.push_back(V.formal_morphism({side.mor(cell.formal.u), end, cell.formal.p, cell.formal.q}));
          break;
      }
    }
    return g;
  };
  FinFunctor s = boundary(A.s, false);
  FinFunctor t = boundary(A.t, true);

  FinFunctor i{V.category, H.category, {}, {}};
  for (ObjId x = 0; x < V.category->num_objects(); ++x) {
    if (x < na0) {
      i.on_objects.push_back(A.i.obj(x));
    } else {
      const auto [c, q] = V.adjoined_pairs[x - na0];
      i.on_objects.push_back(H.adjoined_object(C.identity(static_cast<ObjId>(c)), q));
    }
  }
  for (const PushoutCell& cell : V.cells) {
    const std::size_t idc = cell.kind == CellKind::from_a ? 0 : C.identity(static_cast<ObjId>(cell.c));
    switch (cell.kind) {
      case CellKind::from_a: i.on_morphisms.push_back(A.i.mor(cell.a_morphism)); break;
      case CellKind::adjoined: i.on_morphisms.push_back(H.adjoined_morphism(idc, cell.q, cell.q_to)); break;
      case CellKind::formal:
        i.on_morphisms.push_back(H.formal_morphism({A.i.mor(cell.formal.u), idc, cell.formal.p, cell.formal.q}));
        break;
    }
  }

  auto compose = [&](MorId x, MorId y) -> MorId {
    const PushoutCell& cx = H.cells[x];
    const PushoutCell& cy = H.cells[y];
    if (cx.kind == CellKind::from_a && cy.kind == CellKind::from_a) {
      auto xy = A.compose_squares(cx.a_morphism, cy.a_morphism);
      return xy ? *xy : kInvalidId;
    }
    if (cx.kind == CellKind::adjoined && cy.kind == CellKind::adjoined) {
      const MorId gf = C.compose_unchecked(static_cast<MorId>(cy.c), static_cast<MorId>(cx.c));
      return H.adjoined_morphism(gf, cx.q, cx.q_to);
    }
    if (cx.kind == CellKind::formal && cy.kind == CellKind::formal) {
      // compose representatives over a common p; every match must agree
      MorId result = kInvalidId;
      for (const FormalCell& mx : cx.members)
        for (const FormalCell& my : cy.members) {
          if (mx.p != my.p || A.t.mor(mx.u) != A.s.mor(my.u)) continue;
          const MorId gf = C.compose_unchecked(static_cast<MorId>(my.c), static_cast<MorId>(mx.c));
          const MorId m = H.formal_morphism({*A.compose_squares(mx.u, my.u), gf, mx.p, mx.q});
          if (result != kInvalidId && result != m)
            throw DomainError("pushout_dbl_box_sieve: horizontal composite of formal squares is ambiguous");
          result = m;
        }
      if (result == kInvalidId)
        throw DomainError("pushout_dbl_box_sieve: formal squares have no composable representatives");
      return result;
    }
    return kInvalidId;
  };
  out.dbl = share(make_double_category(V.category, H.category, s, t, i, compose));

  auto qcat = share(spec.inc.ambient().as_category());
  out.cq = share(box(C, *qcat));
  out.from_a = DblFunctor{spec.a, out.dbl, V.from_a, H.from_a};
  out.from_cq = DblFunctor{out.cq, out.dbl, V.from_cq, H.from_cq};
  out.from_cq.f0.source = out.cq->a0;
  out.from_cq.f1.source = out.cq->a1;
  return out;
}

// ---------------------------------------------------------------------------

std::vector<LevelVerdict> verify_nerve_preserves_pushout(const DblSievePushoutSpec& spec, int m_max) {
  const DblSievePushout po = pushout_dbl_box_sieve(spec);
  const FinDblCat& cp = *spec.f.source;
  const FinDblCat hc = h_embed(*spec.c);
  const FinCat pcat = spec.inc.sub().as_category();
  const std::size_t np = pcat.num_objects();
  const std::size_t nrel = pcat.num_morphisms();
  std::vector<LevelVerdict> out;

  for (int m = 0; m <= m_max; ++m) {
    LevelVerdict v;
    v.m = m;
    const HNerveLevel L = horizontal_nerve_level(*po.dbl, m);
    const HNerveLevel Am = horizontal_nerve_level(*spec.a, m);
    const HNerveLevel CPm = horizontal_nerve_level(cp, m);
    const HNerveLevel paths = horizontal_nerve_level(hc, m);
    const SievePushout& part = m == 0 ? po.vertical : po.horizontal;

    std::vector<std::string> path_labels;
    for (ObjId x = 0; x < paths.category->num_objects(); ++x) path_labels.push_back(paths.category->object_label(x));
    const auto& path_tuples = paths.object_tuples;

    std::unordered_map<Tuple, ObjId, VectorHash> cp_obj;
    std::unordered_map<Tuple, MorId, VectorHash> cp_mor;
    for (std::size_t j = 0; j < CPm.object_tuples.size(); ++j) cp_obj.emplace(CPm.object_tuples[j], static_cast<ObjId>(j));
    for (std::size_t j = 0; j < CPm.morphism_tuples.size(); ++j)
      cp_mor.emplace(CPm.morphism_tuples[j], static_cast<MorId>(j));
    const FinFunctor fm_level = horizontal_nerve_functor(spec.f, CPm, Am);

    auto source = share(product(discrete_category(path_labels), pcat));
    FinFunctor fm{source, Am.category, {}, {}};
    for (const Tuple& path : path_tuples)
      for (std::size_t p = 0; p < np; ++p) {
        Tuple tp;
        for (auto e : path) tp.push_back(static_cast<std::uint32_t>(e * np + p));
        fm.on_objects.push_back(fm_level.obj(cp_obj.at(tp)));
      }
    for (const Tuple& path : path_tuples)
      for (std::size_t r = 0; r < nrel; ++r) {
        Tuple tp;
        for (auto e : path) tp.push_back(static_cast<std::uint32_t>(e * nrel + r));
        fm.on_morphisms.push_back(fm_level.mor(cp_mor.at(tp)));
      }

    const SievePushout R = pushout_cat_sieve({path_labels, spec.inc, Am.category, fm});
    v.objects = L.category->num_objects();
    v.morphisms = L.category->num_morphisms();
    v.expected_objects = R.category->num_objects();
    v.expected_morphisms = R.category->num_morphisms();

    std::unordered_map<Tuple, ObjId, VectorHash> l_obj;
    std::unordered_map<Tuple, MorId, VectorHash> l_mor;
    for (std::size_t j = 0; j < L.object_tuples.size(); ++j) l_obj.emplace(L.object_tuples[j], static_cast<ObjId>(j));
    for (std::size_t j = 0; j < L.morphism_tuples.size(); ++j) l_mor.emplace(L.morphism_tuples[j], static_cast<MorId>(j));

    auto formal_image = [&](const FormalCell& x) {
      Tuple tp;
      const Tuple& u = Am.morphism_tuples[x.u];
      const Tuple& path = path_tuples[x.c];
      for (std::size_t j = 0; j < u.size(); ++j) tp.push_back(part.formal_morphism({u[j], path[j], x.p, x.q}));
      return tp;
    };

    FinFunctor k{R.category, L.category, {}, {}};
    try {
      const std::size_t na = Am.category->num_objects();
      for (ObjId x = 0; x < R.category->num_objects(); ++x) {
        Tuple tp;
        if (x < na) {
          tp = Am.object_tuples[x];
        } else {
          const auto [c, q] = R.adjoined_pairs[x - na];
          for (auto e : path_tuples[c]) tp.push_back(part.adjoined_object(e, q));
        }
        k.on_objects.push_back(l_obj.at(tp));
      }
      for (const PushoutCell& cell : R.cells) {
        Tuple tp;
        if (cell.kind == CellKind::from_a) {
          tp = Am.morphism_tuples[cell.a_morphism];
        } else if (cell.kind == CellKind::adjoined) {
          for (auto e : path_tuples[cell.c]) tp.push_back(part.adjoined_morphism(e, cell.q, cell.q_to));
        } else {
          tp = formal_image(cell.formal);
          for (const FormalCell& member : cell.members)
            if (formal_image(member) != tp) throw DomainError("comparison is not well defined on a formal class");
        }
        k.on_morphisms.push_back(l_mor.at(tp));
      }
      auto errors = validate(k);
      if (!errors.empty()) {
        v.detail = "comparison is not a functor: " + errors.front();
      } else if (!is_isomorphism(k)) {
        v.detail = "comparison functor is not bijective";
      } else {
        v.isomorphic = true;
        v.detail = "canonical comparison is an isomorphism";
      }
    } catch (const std::out_of_range&) {
      v.detail = "comparison leaves the horizontal nerve level";
    } catch (const DomainError& e) {
      v.detail = e.what();
    }
    out.push_back(std::move(v));
  }
  return out;
}

DblSievePushoutSpec counterexample_spec() {
  auto c = share(chain_category(0));
  auto inc = PosetInclusion::full_subposet(chain_poset(1), {0});
  auto pcat = share(inc.sub().as_category());
  auto a = share(box(chain_category(1), chain_category(0)));
  auto src = share(box(*c, *pcat));
  auto d1 = monotone_functor(c, share(chain_category(1)), {0});
  auto f = box_functor(d1, identity_functor(pcat), src, a);
  return {c, inc, a, f};
}

DblSievePushoutSpec identity_spec(const FinCat& c, const PosetInclusion& inc) {
  auto a = share(box(c, inc.sub().as_category()));
  return {share(c), inc, a, identity_dbl_functor(a)};
}

}  // namespace dblcat
