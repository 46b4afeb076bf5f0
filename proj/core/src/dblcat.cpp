#include "dblcat/dblcat.hpp"

#include <unordered_map>

namespace dblcat {

namespace {

using Tuple = std::vector<std::uint32_t>;

std::string sq(const FinDblCat& a, MorId x) { return "'" + a.a1->morphism_label(x) + "'"; }
std::string hz(const FinDblCat& a, ObjId h) { return "'" + a.a1->object_label(h) + "'"; }

FinFunctor functor_from_maps(const CatRef& src, const CatRef& tgt, std::vector<ObjId> objs,
                             std::vector<MorId> mors) {
  return FinFunctor{src, tgt, std::move(objs), std::move(mors)};
}

}  // namespace

std::size_t FinDblCat::num_nonidentity_horizontals() const {
  std::size_t n = 0;
  for (ObjId h = 0; h < a1->num_objects(); ++h) n += is_identity_horizontal(h) ? 0 : 1;
  return n;
}

bool FinDblCat::is_identity_horizontal(ObjId h) const {
  return i.obj(s.obj(h)) == h && t.obj(h) == s.obj(h);
}

bool FinDblCat::is_degenerate_square(MorId x) const {
  return a1->is_identity(x) || i.mor(s.mor(x)) == x;
}

std::size_t FinDblCat::num_nondegenerate_squares() const {
  std::size_t n = 0;
  for (MorId x = 0; x < a1->num_morphisms(); ++x) n += is_degenerate_square(x) ? 0 : 1;
  return n;
}

std::optional<ObjId> FinDblCat::compose_horizontal(ObjId h, ObjId k) const {
  auto p = pairs.object_of(h, k);
  if (!p) return std::nullopt;
  return c.obj(*p);
}

std::optional<MorId> FinDblCat::compose_squares(MorId x, MorId y) const {
  auto p = pairs.morphism_of(x, y);
  if (!p) return std::nullopt;
  return c.mor(*p);
}

FinDblCat make_double_category(CatRef a0, CatRef a1, FinFunctor s, FinFunctor t, FinFunctor i,
                               const std::function<MorId(MorId x, MorId y)>& compose) {
  FinDblCat a{std::move(a0), std::move(a1), std::move(s), std::move(t), std::move(i), {}, {}};
  a.pairs = pullback(a.t, a.s);
  a.c = FinFunctor{a.pairs.category, a.a1, {}, {}};
  for (const auto& [h, k] : a.pairs.objects) {
    const MorId idc = compose(a.a1->identity(h), a.a1->identity(k));
    a.c.on_objects.push_back(idc == kInvalidId ? kInvalidId : a.a1->src(idc));
  }
  for (const auto& [x, y] : a.pairs.morphisms) a.c.on_morphisms.push_back(compose(x, y));
  return a;
}

std::vector<std::string> validate_double_category(const FinDblCat& a) {
  std::vector<std::string> out;
  auto tag = [&](const std::string& t, const std::string& msg) { out.push_back("[" + t + "] " + msg); };
  const FinCat& A0 = *a.a0;
  const FinCat& A1 = *a.a1;

  for (const auto& e : validate(A0)) tag("category", "A0: " + e);
  for (const auto& e : validate(A1)) tag("category", "A1: " + e);
  if (!out.empty()) return out;
  for (const auto& [name, f] : {std::pair<const char*, const FinFunctor*>{"s", &a.s}, {"t", &a.t}, {"i", &a.i}})
    for (const auto& e : validate(*f)) tag("functor", std::string(name) + ": " + e);

  for (ObjId x = 0; x < A0.num_objects(); ++x) {
    if (a.s.obj(a.i.obj(x)) != x) tag("source/target", "s(i(x)) != x at object '" + A0.object_label(x) + "'");
    if (a.t.obj(a.i.obj(x)) != x) tag("source/target", "t(i(x)) != x at object '" + A0.object_label(x) + "'");
  }
  for (MorId f = 0; f < A0.num_morphisms(); ++f) {
    if (a.s.mor(a.i.mor(f)) != f) tag("source/target", "s(i(v)) != v at vertical '" + A0.morphism_label(f) + "'");
    if (a.t.mor(a.i.mor(f)) != f) tag("source/target", "t(i(v)) != v at vertical '" + A0.morphism_label(f) + "'");
  }

  // composition domain: stored pairs must be exactly the composable ones
  bool complete = true;
  for (std::size_t p = 0; p < a.pairs.objects.size(); ++p) {
    const auto [h, k] = a.pairs.objects[p];
    if (a.t.obj(h) != a.s.obj(k))
      tag("source/target", "pair (" + hz(a, h) + ", " + hz(a, k) + ") is not composable: t(h) != s(k)");
    if (a.c.obj(static_cast<ObjId>(p)) == kInvalidId) {
      tag("missing composite", "c(" + hz(a, h) + ", " + hz(a, k) + ") undefined");
      complete = false;
    }
  }
  for (std::size_t p = 0; p < a.pairs.morphisms.size(); ++p) {
    const auto [x, y] = a.pairs.morphisms[p];
    if (a.t.mor(x) != a.s.mor(y))
      tag("source/target", "pair (" + sq(a, x) + ", " + sq(a, y) + ") is not composable: t(x) != s(y)");
    if (a.c.mor(static_cast<MorId>(p)) == kInvalidId) {
      tag("missing composite", "c(" + sq(a, x) + ", " + sq(a, y) + ") undefined");
      complete = false;
    }
  }
  std::unordered_map<MorId, std::vector<MorId>> by_source;
  for (MorId y = 0; y < A1.num_morphisms(); ++y) by_source[a.s.mor(y)].push_back(y);
  for (MorId x = 0; x < A1.num_morphisms(); ++x) {
    auto it = by_source.find(a.t.mor(x));
    if (it == by_source.end()) continue;
    for (MorId y : it->second)
      if (!a.pairs.morphism_of(x, y)) {
        tag("missing composite", "c(" + sq(a, x) + ", " + sq(a, y) + ") undefined");
        complete = false;
      }
  }
  if (!complete) return out;

  for (std::size_t p = 0; p < a.pairs.objects.size(); ++p) {
    const auto [h, k] = a.pairs.objects[p];
    const ObjId hk = a.c.obj(static_cast<ObjId>(p));
    if (a.s.obj(hk) != a.s.obj(h)) tag("source/target", "s(c(" + hz(a, h) + ", " + hz(a, k) + ")) != s(h)");
    if (a.t.obj(hk) != a.t.obj(k)) tag("source/target", "t(c(" + hz(a, h) + ", " + hz(a, k) + ")) != t(k)");
  }
  for (std::size_t p = 0; p < a.pairs.morphisms.size(); ++p) {
    const auto [x, y] = a.pairs.morphisms[p];
    const MorId xy = a.c.mor(static_cast<MorId>(p));
    if (a.s.mor(xy) != a.s.mor(x)) tag("source/target", "s(c(" + sq(a, x) + ", " + sq(a, y) + ")) != s(x)");
    if (a.t.mor(xy) != a.t.mor(y)) tag("source/target", "t(c(" + sq(a, x) + ", " + sq(a, y) + ")) != t(y)");
  }

  for (ObjId h = 0; h < A1.num_objects(); ++h) {
    auto l = a.compose_horizontal(a.i.obj(a.s.obj(h)), h);
    auto r = a.compose_horizontal(h, a.i.obj(a.t.obj(h)));
    if (l && *l != h) tag("unit", "c(i(s h), h) != h at horizontal " + hz(a, h));
    if (r && *r != h) tag("unit", "c(h, i(t h)) != h at horizontal " + hz(a, h));
  }
  for (MorId x = 0; x < A1.num_morphisms(); ++x) {
    auto l = a.compose_squares(a.i.mor(a.s.mor(x)), x);
    auto r = a.compose_squares(x, a.i.mor(a.t.mor(x)));
    if (l && *l != x) tag("unit", "c(i(s x), x) != x at square " + sq(a, x));
    if (r && *r != x) tag("unit", "c(x, i(t x)) != x at square " + sq(a, x));
  }

  for (std::size_t p = 0; p < a.pairs.morphisms.size(); ++p) {
    const auto [x, y] = a.pairs.morphisms[p];
    const MorId xy = a.c.mor(static_cast<MorId>(p));
    auto it = by_source.find(a.t.mor(y));
    if (it == by_source.end()) continue;
    for (MorId z : it->second) {
      auto left = a.compose_squares(xy, z);
      auto yz = a.compose_squares(y, z);
      auto right = yz ? a.compose_squares(x, *yz) : std::nullopt;
      if (left && right && *left != *right)
        tag("associativity", "c(c(x, y), z) != c(x, c(y, z)) at (" + sq(a, x) + ", " + sq(a, y) + ", " +
                                 sq(a, z) + ")");
    }
  }

  for (const auto& e : validate(a.c)) tag("interchange", "c " + e);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate(const DblFunctor& g) {
  std::vector<std::string> out;
  for (const auto& e : validate(g.f0)) out.push_back("G0: " + e);
  for (const auto& e : validate(g.f1)) out.push_back("G1: " + e);
  if (!out.empty()) return out;
  const FinDblCat& a = *g.source;
  const FinDblCat& b = *g.target;
  for (ObjId h = 0; h < a.a1->num_objects(); ++h) {
    if (g.f0.obj(a.s.obj(h)) != b.s.obj(g.f1.obj(h))) out.push_back("does not commute with s at " + hz(a, h));
    if (g.f0.obj(a.t.obj(h)) != b.t.obj(g.f1.obj(h))) out.push_back("does not commute with t at " + hz(a, h));
  }
  for (MorId x = 0; x < a.a1->num_morphisms(); ++x) {
    if (g.f0.mor(a.s.mor(x)) != b.s.mor(g.f1.mor(x))) out.push_back("does not commute with s at " + sq(a, x));
    if (g.f0.mor(a.t.mor(x)) != b.t.mor(g.f1.mor(x))) out.push_back("does not commute with t at " + sq(a, x));
  }
  for (MorId f = 0; f < a.a0->num_morphisms(); ++f)
    if (g.f1.mor(a.i.mor(f)) != b.i.mor(g.f0.mor(f)))
      out.push_back("does not commute with i at '" + a.a0->morphism_label(f) + "'");
  for (ObjId x = 0; x < a.a0->num_objects(); ++x)
    if (g.f1.obj(a.i.obj(x)) != b.i.obj(g.f0.obj(x)))
      out.push_back("does not commute with i at '" + a.a0->object_label(x) + "'");
  for (const auto& [x, y] : a.pairs.morphisms) {
    auto lhs = b.compose_squares(g.f1.mor(x), g.f1.mor(y));
    if (!lhs || *lhs != g.f1.mor(*a.compose_squares(x, y)))
      out.push_back("does not commute with c at (" + sq(a, x) + ", " + sq(a, y) + ")");
  }
  return out;
}

DblFunctor identity_dbl_functor(const DblRef& a) {
  return {a, a, identity_functor(a->a0), identity_functor(a->a1)};
}

DblFunctor compose(const DblFunctor& g, const DblFunctor& f) {
  return {f.source, g.target, compose(g.f0, f.f0), compose(g.f1, f.f1)};
}

// ---------------------------------------------------------------------------

FinDblCat h_embed(const FinCat& c) {
  std::vector<std::string> obj_labels, mor_labels;
  for (ObjId x = 0; x < c.num_objects(); ++x) obj_labels.push_back(c.object_label(x));
  for (MorId f = 0; f < c.num_morphisms(); ++f) mor_labels.push_back(c.morphism_label(f));
  auto a0 = share(discrete_category(obj_labels));
  auto a1 = share(discrete_category(mor_labels));
  FinFunctor s{a1, a0, {}, {}}, t{a1, a0, {}, {}}, i{a0, a1, {}, {}};
  s.on_morphisms.resize(a1->num_morphisms());
  t.on_morphisms.resize(a1->num_morphisms());
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    s.on_objects.push_back(c.src(f));
    t.on_objects.push_back(c.tgt(f));
    s.on_morphisms[a1->identity(f)] = a0->identity(c.src(f));
    t.on_morphisms[a1->identity(f)] = a0->identity(c.tgt(f));
  }
  i.on_morphisms.resize(a0->num_morphisms());
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    i.on_objects.push_back(c.identity(x));
    i.on_morphisms[a0->identity(x)] = a1->identity(c.identity(x));
  }
  return make_double_category(a0, a1, s, t, i, [&](MorId x, MorId y) {
    return a1->identity(c.compose_unchecked(a1->src(y), a1->src(x)));
  });
}

FinDblCat v_embed(const FinCat& c) {
  auto cat = share(c);
  auto id = identity_functor(cat);
  return make_double_category(cat, cat, id, id, id, [](MorId x, MorId) { return x; });
}

FinDblCat product(const FinDblCat& a, const FinDblCat& b) {
  auto a0 = share(product(*a.a0, *b.a0));
  auto a1 = share(product(*a.a1, *b.a1));
  auto s = product_functor(a.s, b.s, a1, a0);
  auto t = product_functor(a.t, b.t, a1, a0);
  auto i = product_functor(a.i, b.i, a0, a1);
  const std::size_t nb = b.a1->num_morphisms();
  return make_double_category(a0, a1, s, t, i, [&](MorId x, MorId y) {
    auto l = a.compose_squares(x / nb, y / nb);
    auto r = b.compose_squares(x % nb, y % nb);
    if (!l || !r) return kInvalidId;
    return product_morphism(*b.a1, *l, *r);
  });
}

FinDblCat box(const FinCat& c, const FinCat& d) { return product(h_embed(c), v_embed(d)); }

FinCat underlying_h(const FinDblCat& a) {
  FinCatBuilder b;
  for (ObjId x = 0; x < a.a0->num_objects(); ++x) b.add_object(a.a0->object_label(x));
  for (ObjId h = 0; h < a.a1->num_objects(); ++h) b.add_morphism(a.a1->object_label(h), a.s.obj(h), a.t.obj(h));
  for (ObjId x = 0; x < a.a0->num_objects(); ++x) b.set_identity(x, a.i.obj(x));
  return std::move(b).build([&](MorId g, MorId f) {
    auto gf = a.compose_horizontal(f, g);
    if (!gf) throw DomainError("underlying_h: horizontal composite missing");
    return *gf;
  });
}

FinCat underlying_v(const FinDblCat& a) { return *a.a0; }

DblFunctor h_functor(const FinFunctor& f, const DblRef& hs, const DblRef& ht) {
  DblFunctor g{hs, ht, {hs->a0, ht->a0, {}, {}}, {hs->a1, ht->a1, {}, {}}};
  g.f0.on_objects = f.on_objects;
  g.f0.on_morphisms.resize(hs->a0->num_morphisms());
  for (ObjId x = 0; x < hs->a0->num_objects(); ++x)
    g.f0.on_morphisms[hs->a0->identity(x)] = ht->a0->identity(f.obj(x));
  g.f1.on_objects = f.on_morphisms;
  g.f1.on_morphisms.resize(hs->a1->num_morphisms());
  for (ObjId h = 0; h < hs->a1->num_objects(); ++h)
    g.f1.on_morphisms[hs->a1->identity(h)] = ht->a1->identity(f.mor(h));
  return g;
}

DblFunctor v_functor(const FinFunctor& f, const DblRef& vs, const DblRef& vt) {
  FinFunctor f0{vs->a0, vt->a0, f.on_objects, f.on_morphisms};
  FinFunctor f1{vs->a1, vt->a1, f.on_objects, f.on_morphisms};
  return {vs, vt, f0, f1};
}

DblFunctor box_functor(const FinFunctor& f, const FinFunctor& g, const DblRef& src, const DblRef& tgt) {
  const FinCat& d = *g.target;
  DblFunctor h{src, tgt, {src->a0, tgt->a0, {}, {}}, {src->a1, tgt->a1, {}, {}}};
  const FinCat& c = *f.source;
  const FinCat& e = *g.source;
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < e.num_objects(); ++y) h.f0.on_objects.push_back(product_object(d, f.obj(x), g.obj(y)));
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (MorId r = 0; r < e.num_morphisms(); ++r)
      h.f0.on_morphisms.push_back(product_morphism(d, f.obj(x), g.mor(r)));
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    for (ObjId y = 0; y < e.num_objects(); ++y) h.f1.on_objects.push_back(product_object(d, f.mor(m), g.obj(y)));
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    for (MorId r = 0; r < e.num_morphisms(); ++r)
      h.f1.on_morphisms.push_back(product_morphism(d, f.mor(m), g.mor(r)));
  return h;
}

FinFunctor underlying_h_functor(const DblFunctor& g, const CatRef& src, const CatRef& tgt) {
  return functor_from_maps(src, tgt, g.f0.on_objects, g.f1.on_objects);
}

FinFunctor unit_h(const CatRef& c, const CatRef& uhc) {
  if (c->num_objects() != uhc->num_objects() || c->num_morphisms() != uhc->num_morphisms())
    throw DomainError("unit_h: size mismatch");
  auto id = identity_functor(c);
  return functor_from_maps(c, uhc, id.on_objects, id.on_morphisms);
}

DblFunctor counit_h(const DblRef& hu, const DblRef& a) {
  DblFunctor g{hu, a, {hu->a0, a->a0, {}, {}}, {hu->a1, a->a1, {}, {}}};
  for (ObjId x = 0; x < hu->a0->num_objects(); ++x) g.f0.on_objects.push_back(x);
  g.f0.on_morphisms.resize(hu->a0->num_morphisms());
  for (ObjId x = 0; x < hu->a0->num_objects(); ++x) g.f0.on_morphisms[hu->a0->identity(x)] = a->a0->identity(x);
  for (ObjId h = 0; h < hu->a1->num_objects(); ++h) g.f1.on_objects.push_back(h);
  g.f1.on_morphisms.resize(hu->a1->num_morphisms());
  for (ObjId h = 0; h < hu->a1->num_objects(); ++h) g.f1.on_morphisms[hu->a1->identity(h)] = a->a1->identity(h);
  return g;
}

FinFunctor unit_v(const CatRef& c, const CatRef& uvc) {
  auto id = identity_functor(c);
  return functor_from_maps(c, uvc, id.on_objects, id.on_morphisms);
}

DblFunctor counit_v(const DblRef& va0, const DblRef& a) {
  FinFunctor f0{va0->a0, a->a0, identity_functor(a->a0).on_objects, identity_functor(a->a0).on_morphisms};
  FinFunctor f1{va0->a1, a->a1, a->i.on_objects, a->i.on_morphisms};
  return {va0, a, f0, f1};
}

// ---------------------------------------------------------------------------

HNerveLevel horizontal_nerve_level(const FinDblCat& a, int m) {
  if (m < 0) throw DomainError("horizontal_nerve_level: negative level");
  HNerveLevel level;
  level.m = m;
  if (m <= 1) {
    const CatRef& cat = m == 0 ? a.a0 : a.a1;
    level.category = cat;
    for (ObjId x = 0; x < cat->num_objects(); ++x) level.object_tuples.push_back({x});
    for (MorId f = 0; f < cat->num_morphisms(); ++f) level.morphism_tuples.push_back({f});
    return level;
  }
  const FinCat& A1 = *a.a1;
  std::unordered_map<ObjId, std::vector<ObjId>> h_by_source;
  for (ObjId h = 0; h < A1.num_objects(); ++h) h_by_source[a.s.obj(h)].push_back(h);
  std::unordered_map<MorId, std::vector<MorId>> sq_by_source;
  for (MorId x = 0; x < A1.num_morphisms(); ++x) sq_by_source[a.s.mor(x)].push_back(x);

  auto extend = [&](auto& tuples, const auto& by_source, auto target_of, std::size_t count) {
    for (std::uint32_t x = 0; x < count; ++x) tuples.push_back({x});
    for (int len = 2; len <= m; ++len) {
      std::vector<Tuple> next;
      for (const Tuple& tp : tuples) {
        auto it = by_source.find(target_of(tp.back()));
        if (it == by_source.end()) continue;
        for (auto y : it->second) {
          Tuple n(tp);
          n.push_back(y);
          next.push_back(std::move(n));
        }
        check_cell_budget(next.size(), "horizontal nerve cells");
      }
      tuples = std::move(next);
    }
  };
  extend(level.object_tuples, h_by_source, [&](ObjId h) { return a.t.obj(h); }, A1.num_objects());
  extend(level.morphism_tuples, sq_by_source, [&](MorId x) { return a.t.mor(x); }, A1.num_morphisms());

  std::unordered_map<Tuple, ObjId, VectorHash> obj_index;
  std::unordered_map<Tuple, MorId, VectorHash> mor_index;
  FinCatBuilder b;
  for (const Tuple& tp : level.object_tuples) {
    std::vector<std::string> parts;
    for (auto h : tp) parts.push_back(A1.object_label(h));
    obj_index.emplace(tp, b.add_object(tuple_label(parts)));
  }
  for (const Tuple& tp : level.morphism_tuples) {
    std::vector<std::string> parts;
    Tuple src, tgt;
    for (auto x : tp) {
      parts.push_back(A1.morphism_label(x));
      src.push_back(A1.src(x));
      tgt.push_back(A1.tgt(x));
    }
    mor_index.emplace(tp, b.add_morphism(tuple_label(parts), obj_index.at(src), obj_index.at(tgt)));
  }
  for (const Tuple& tp : level.object_tuples) {
    Tuple ids;
    for (auto h : tp) ids.push_back(A1.identity(h));
    b.set_identity(obj_index.at(tp), mor_index.at(ids));
  }
  level.category = share(std::move(b).build([&](MorId g, MorId f) {
    const Tuple& tg = level.morphism_tuples[g];
    const Tuple& tf = level.morphism_tuples[f];
    Tuple out;
    for (std::size_t j = 0; j < tg.size(); ++j) out.push_back(A1.compose_unchecked(tg[j], tf[j]));
    return mor_index.at(out);
  }));
  return level;
}

namespace {

template <typename Id>
std::unordered_map<Tuple, Id, VectorHash> tuple_index(const std::vector<Tuple>& tuples) {
  std::unordered_map<Tuple, Id, VectorHash> idx;
  for (std::size_t j = 0; j < tuples.size(); ++j) idx.emplace(tuples[j], static_cast<Id>(j));
  return idx;
}

/// Applies a tuple operation to every object and morphism tuple of `src`.
template <typename ObjOp, typename MorOp>
FinFunctor level_functor(const HNerveLevel& src, const HNerveLevel& tgt, ObjOp on_obj, MorOp on_mor) {
  auto oi = tuple_index<ObjId>(tgt.object_tuples);
  auto mi = tuple_index<MorId>(tgt.morphism_tuples);
  FinFunctor f{src.category, tgt.category, {}, {}};
  for (const Tuple& tp : src.object_tuples) f.on_objects.push_back(oi.at(on_obj(tp)));
  for (const Tuple& tp : src.morphism_tuples) f.on_morphisms.push_back(mi.at(on_mor(tp)));
  return f;
}

}  // namespace

HorizontalNerve horizontal_nerve(const FinDblCat& a, int m_max) {
  HorizontalNerve hn;
  for (int m = 0; m <= m_max; ++m) hn.levels.push_back(horizontal_nerve_level(a, m));
  hn.faces.resize(m_max + 1);
  hn.degens.resize(m_max + 1);
  for (int m = 1; m <= m_max; ++m) {
    for (int i = 0; i <= m; ++i) {
      auto obj_face = [&](const Tuple& tp) -> Tuple {
        if (m == 1) return {i == 0 ? a.t.obj(tp[0]) : a.s.obj(tp[0])};
        Tuple out;
        for (int j = 0; j < m; ++j) {
          if ((i == 0 && j == 0) || (i == m && j == m - 1) || (i > 0 && i < m && j == i - 1)) continue;
          out.push_back(i > 0 && i < m && j == i ? *a.compose_horizontal(tp[i - 1], tp[i]) : tp[j]);
        }
        return out;
      };
      auto mor_face = [&](const Tuple& tp) -> Tuple {
        if (m == 1) return {i == 0 ? a.t.mor(tp[0]) : a.s.mor(tp[0])};
        Tuple out;
        for (int j = 0; j < m; ++j) {
          if ((i == 0 && j == 0) || (i == m && j == m - 1) || (i > 0 && i < m && j == i - 1)) continue;
          out.push_back(i > 0 && i < m && j == i ? *a.compose_squares(tp[i - 1], tp[i]) : tp[j]);
        }
        return out;
      };
      hn.faces[m].push_back(level_functor(hn.levels[m], hn.levels[m - 1], obj_face, mor_face));
    }
  }
  for (int m = 0; m < m_max; ++m) {
    for (int i = 0; i <= m; ++i) {
      auto obj_degen = [&](const Tuple& tp) -> Tuple {
        if (m == 0) return {a.i.obj(tp[0])};
        const ObjId v = i < m ? a.s.obj(tp[i]) : a.t.obj(tp[m - 1]);
        Tuple out(tp);
        out.insert(out.begin() + i, a.i.obj(v));
        return out;
      };
      auto mor_degen = [&](const Tuple& tp) -> Tuple {
        if (m == 0) return {a.i.mor(tp[0])};
        const MorId v = i < m ? a.s.mor(tp[i]) : a.t.mor(tp[m - 1]);
        Tuple out(tp);
        out.insert(out.begin() + i, a.i.mor(v));
        return out;
      };
      hn.degens[m].push_back(level_functor(hn.levels[m], hn.levels[m + 1], obj_degen, mor_degen));
    }
  }
  return hn;
}

FinFunctor horizontal_nerve_functor(const DblFunctor& g, const HNerveLevel& src, const HNerveLevel& tgt) {
  const bool zero = src.m == 0;
  auto on_obj = [&](const Tuple& tp) {
    Tuple out;
    for (auto x : tp) out.push_back(zero ? g.f0.obj(x) : g.f1.obj(x));
    return out;
  };
  auto on_mor = [&](const Tuple& tp) {
    Tuple out;
    for (auto x : tp) out.push_back(zero ? g.f0.mor(x) : g.f1.mor(x));
    return out;
  };
  return level_functor(src, tgt, on_obj, on_mor);
}

DoubleNerve double_nerve(const FinDblCat& a, int n_max, int k_max) {
  DoubleNerve dn;
  dn.horizontal = horizontal_nerve(a, n_max);
  std::vector<SSetRef> cols;
  for (int n = 0; n <= n_max; ++n) {
    dn.columns.push_back(nerve(dn.horizontal.levels[n].category, k_max));
    cols.push_back(dn.columns.back().sset);
  }
  std::vector<std::vector<std::vector<std::vector<SimplexId>>>> fm(n_max + 1), dm(n_max + 1);
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i)
      fm[n].push_back(nerve_of_functor(dn.horizontal.faces[n][i], dn.columns[n], dn.columns[n - 1]).levels);
  for (int n = 0; n < n_max; ++n)
    for (int i = 0; i <= n; ++i)
      dm[n].push_back(nerve_of_functor(dn.horizontal.degens[n][i], dn.columns[n], dn.columns[n + 1]).levels);
  dn.bisset = bisset_from_columns(cols, fm, dm);
  return dn;
}

SimplicialMap diag_map(const DblFunctor& g, const DoubleNerve& src, const DoubleNerve& tgt,
                       const SSetRef& diag_src, const SSetRef& diag_tgt) {
  SimplicialMap f{diag_src, diag_tgt, {}};
  for (int n = 0; n <= diag_src->trunc(); ++n) {
    auto gn = horizontal_nerve_functor(g, src.horizontal.levels[n], tgt.horizontal.levels[n]);
    f.levels.push_back(nerve_of_functor(gn, src.columns[n], tgt.columns[n]).levels[n]);
  }
  return f;
}

// ---------------------------------------------------------------------------

FinDblCat idempotent_double_category() {
  auto a0 = share(terminal_category());
  FinCatBuilder b;
  const ObjId h = b.add_object("h");
  const MorId id = b.add_morphism("id_h", h, h);
  const MorId e = b.add_morphism("e", h, h);
  b.set_identity(h, id);
  b.set_composite(e, e, e);
  auto a1 = share(std::move(b).build());
  FinFunctor s{a1, a0, {0}, {0, 0}};
  FinFunctor i{a0, a1, {h}, {id}};
  return make_double_category(a0, a1, s, s, i, [=](MorId x, MorId y) { return x == e || y == e ? e : id; });
}

std::string to_string(Corruption k) {
  switch (k) {
    case Corruption::interchange: return "interchange";
    case Corruption::left_unit: return "left-unit";
    case Corruption::right_unit: return "right-unit";
    case Corruption::source: return "source";
    case Corruption::target: return "target";
  }
  return {};
}

FinDblCat corrupted_fixture(Corruption kind) {
  if (kind == Corruption::source || kind == Corruption::target) {
    FinDblCat a = box(chain_category(1), chain_category(1));
    const ObjId h = *a.a1->find_object("(0<=1,0)");
    if (kind == Corruption::source) {
      a.s.on_objects[h] = a.t.obj(h);
    } else {
      a.t.on_objects[h] = a.s.obj(h);
    }
    return a;
  }
  FinDblCat a = idempotent_double_category();
  const MorId id = 0, e = 1;
  MorId x = e, y = e;
  if (kind == Corruption::left_unit) x = id;
  if (kind == Corruption::right_unit) y = id;
  a.c.on_morphisms[*a.pairs.morphism_of(x, y)] = id;
  return a;
}

}  // namespace dblcat
