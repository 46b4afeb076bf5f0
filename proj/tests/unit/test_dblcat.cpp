#include <doctest.h>

#include <algorithm>

#include "dblcat/dblcat.hpp"
#include "dblcat/groth.hpp"
#include "dblcat/pushout.hpp"
#include "dblcat/sset.hpp"

using namespace dblcat;

namespace {

bool has_tag(const std::vector<std::string>& lines, const std::string& tag) {
  return std::any_of(lines.begin(), lines.end(), [&](const std::string& l) { return l.rfind(tag, 0) == 0; });
}

}  // namespace

TEST_CASE("constructors produce valid double categories") {
  const FinCat c1 = chain_category(1);
  const FinCat c2 = chain_category(2);
  const FinCat par = free_category({"0", "1"}, {{0, 1}, {0, 1}});
  CHECK(validate_double_category(h_embed(c2)).empty());
  CHECK(validate_double_category(v_embed(c2)).empty());
  CHECK(validate_double_category(h_embed(par)).empty());
  CHECK(validate_double_category(box(c1, c2)).empty());
  CHECK(validate_double_category(box(par, c1)).empty());
  CHECK(validate_double_category(product(box(c1, c1), h_embed(c1))).empty());
  CHECK(validate_double_category(idempotent_double_category()).empty());
}

TEST_CASE("cell counts of box products") {
  const FinDblCat b = box(chain_category(1), chain_category(1));
  CHECK(b.num_objects() == 4);
  CHECK(b.num_nonidentity_horizontals() == 2);
  CHECK(b.num_nonidentity_verticals() == 2);
  CHECK(b.num_nondegenerate_squares() == 1);
  const FinDblCat h = h_embed(chain_category(2));
  CHECK(h.num_nonidentity_verticals() == 0);
  CHECK(h.num_nondegenerate_squares() == 0);
  CHECK(h.compose_horizontal(*h.a1->find_object("0<=1"), *h.a1->find_object("1<=2")) == h.a1->find_object("0<=2"));
}

TEST_CASE("each single corruption is rejected with a located witness") {
  const std::vector<std::pair<Corruption, std::string>> cases = {
      {Corruption::interchange, "[interchange]"},
      {Corruption::left_unit, "[unit]"},
      {Corruption::right_unit, "[unit]"},
      {Corruption::source, "[source/target]"},
      {Corruption::target, "[source/target]"},
  };
  for (const auto& [kind, tag] : cases) {
    CAPTURE(to_string(kind));
    const auto errors = validate_double_category(corrupted_fixture(kind));
    REQUIRE_FALSE(errors.empty());
    CHECK(has_tag(errors, tag));
  }
}

TEST_CASE("double functors") {
  auto c1 = share(chain_category(1));
  auto c2 = share(chain_category(2));
  auto h1 = share(h_embed(*c1));
  auto h2 = share(h_embed(*c2));
  const FinFunctor d1 = monotone_functor(c1, c2, {0, 2});
  const DblFunctor hd1 = h_functor(d1, h1, h2);
  CHECK(validate(hd1).empty());
  CHECK(validate(compose(identity_dbl_functor(h2), hd1)).empty());
  auto v1 = share(v_embed(*c1));
  auto v2 = share(v_embed(*c2));
  CHECK(validate(v_functor(d1, v1, v2)).empty());
  auto b11 = share(box(*c1, *c1));
  auto b21 = share(box(*c2, *c1));
  CHECK(validate(box_functor(d1, identity_functor(c1), b11, b21)).empty());
  DblFunctor bad = hd1;
  bad.f0.on_objects[0] = 1;
  CHECK_FALSE(validate(bad).empty());
}

TEST_CASE("adjunction units and counits are well formed") {
  auto c = share(chain_category(2));
  auto hc = share(h_embed(*c));
  auto uhc = share(underlying_h(*hc));
  CHECK(is_isomorphism(unit_h(c, uhc)));
  auto a = share(box(chain_category(1), chain_category(1)));
  auto ha = share(h_embed(underlying_h(*a)));
  CHECK(validate(counit_h(ha, a)).empty());
  auto va = share(v_embed(underlying_v(*a)));
  CHECK(validate(counit_v(va, a)).empty());
  auto vc = share(v_embed(*c));
  CHECK(is_isomorphism(unit_v(c, share(underlying_v(*vc)))));
}

TEST_CASE("horizontal nerve levels") {
  const FinDblCat a = box(chain_category(2), chain_category(1));
  const HorizontalNerve hn = horizontal_nerve(a, 3);
  REQUIRE(hn.levels.size() == 4);
  // level m of H[2] ⊠ [1] is (m-simplices of N[2]) × [1]
  const std::size_t expected[] = {3, 6, 10, 15};
  for (int m = 0; m <= 3; ++m) {
    CHECK(validate(*hn.levels[m].category).empty());
    CHECK(hn.levels[m].category->num_objects() == 2 * expected[m]);
  }
  for (int m = 1; m <= 3; ++m)
    for (const auto& f : hn.faces[m]) CHECK(validate(f).empty());
  for (int m = 0; m < 3; ++m)
    for (const auto& f : hn.degens[m]) CHECK(validate(f).empty());
}

TEST_CASE("double nerve is a bisimplicial set") {
  const FinDblCat a = box(chain_category(1), chain_category(1));
  const DoubleNerve dn = double_nerve(a, 2, 2);
  CHECK(validate(dn.bisset).empty());
  // cells at ([n],[k]) are pairs of an n-simplex and a k-simplex of N[1]
  for (int n = 0; n <= 2; ++n)
    for (int k = 0; k <= 2; ++k) CHECK(dn.bisset.count(n, k) == std::size_t(n + 2) * std::size_t(k + 2));
  const TruncSSet d = diag(dn.bisset);
  CHECK(simplicial_identity_violations(d.tables()).empty());
}

TEST_CASE("diagonal maps of double functors are simplicial") {
  auto c1 = share(chain_category(1));
  auto c0 = share(chain_category(0));
  auto b = share(box(*c1, *c1));
  auto p = share(box(*c0, *c1));
  const DblFunctor proj = box_functor(constant_functor(c1, c0, 0), identity_functor(c1), b, p);
  REQUIRE(validate(proj).empty());
  const DoubleNerve src = double_nerve(*b, 2, 2), tgt = double_nerve(*p, 2, 2);
  auto ds = share(diag(src.bisset)), dt = share(diag(tgt.bisset));
  CHECK(validate(diag_map(proj, src, tgt, ds, dt)).empty());
}

namespace {

std::vector<DblRef> small_double_categories() {
  const FinCat c1 = chain_category(1);
  const FinCat c2 = chain_category(2);
  const FinCat par = free_category({"0", "1"}, {{0, 1}, {0, 1}});
  return {share(box(c1, c1)), share(box(c2, c1)),  share(box(par, c1)), share(h_embed(c2)),
          share(v_embed(par)), share(idempotent_double_category()), share(product(h_embed(c1), box(c1, c1)))};
}

/// Level m against the iterated pullback A1 ×_{A0} … ×_{A0} A1, compared
/// through the spine of each tuple.
void check_segal(const FinDblCat& a, int m) {
  const HNerveLevel level = horizontal_nerve_level(a, m);
  std::vector<Pullback> steps;
  FinFunctor last_target = a.t;
  for (int i = 2; i <= m; ++i) {
    steps.push_back(pullback(last_target, a.s));
    last_target = compose(a.t, steps.back().second);
  }
  const CatRef iterated = steps.empty() ? a.a1 : steps.back().category;
  FinFunctor cmp{level.category, iterated, {}, {}};
  for (const auto& tuple : level.object_tuples) {
    ObjId x = tuple[0];
    for (std::size_t i = 1; i < tuple.size(); ++i) x = *steps[i - 1].object_of(x, tuple[i]);
    cmp.on_objects.push_back(x);
  }
  for (const auto& tuple : level.morphism_tuples) {
    MorId f = tuple[0];
    for (std::size_t i = 1; i < tuple.size(); ++i) f = *steps[i - 1].morphism_of(f, tuple[i]);
    cmp.on_morphisms.push_back(f);
  }
  CHECK(validate(cmp).empty());
  CHECK(is_isomorphism(cmp));
}

/// Projection A × B → A (or → B) under the product index contract.
DblFunctor projection(const DblRef& ab, const DblRef& a, const DblRef& b, bool first) {
  auto project = [&](const CatRef& src, const CatRef& ca, const CatRef& cb) {
    FinFunctor f{src, first ? ca : cb, {}, {}};
    for (ObjId x = 0; x < src->num_objects(); ++x)
      f.on_objects.push_back(static_cast<ObjId>(first ? x / cb->num_objects() : x % cb->num_objects()));
    for (MorId m = 0; m < src->num_morphisms(); ++m)
      f.on_morphisms.push_back(static_cast<MorId>(first ? m / cb->num_morphisms() : m % cb->num_morphisms()));
    return f;
  };
  return {ab, first ? a : b, project(ab->a0, a->a0, b->a0), project(ab->a1, a->a1, b->a1)};
}

}  // namespace

TEST_CASE("horizontal nerve levels satisfy the strict Segal condition") {
  for (const DblRef& a : small_double_categories()) {
    REQUIRE(a->num_squares() <= 30);
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(m);
      check_segal(*a, m);
    }
  }
}

TEST_CASE("H and V adjunctions satisfy the triangle identities") {
  const std::vector<CatRef> cats = {share(chain_category(2)), share(free_category({"0", "1"}, {{0, 1}, {0, 1}})),
                                    share(free_category({"0", "1", "2"}, {{0, 1}, {0, 2}}))};
  for (const CatRef& c : cats) {
    auto hc = share(h_embed(*c));
    auto uhc = share(underlying_h(*hc));
    auto huhc = share(h_embed(*uhc));
    const DblFunctor h_unit = h_functor(unit_h(c, uhc), hc, huhc);
    const DblFunctor t1 = compose(counit_h(huhc, hc), h_unit);
    CHECK(t1.f0 == identity_functor(hc->a0));
    CHECK(t1.f1 == identity_functor(hc->a1));

    auto vc = share(v_embed(*c));
    auto uvc = share(underlying_v(*vc));
    auto vuvc = share(v_embed(*uvc));
    const DblFunctor v_unit = v_functor(unit_v(c, uvc), vc, vuvc);
    const DblFunctor t2 = compose(counit_v(vuvc, vc), v_unit);
    CHECK(t2.f0 == identity_functor(vc->a0));
    CHECK(t2.f1 == identity_functor(vc->a1));
  }
  for (const DblRef& a : small_double_categories()) {
    if (a->num_objects() > 4) continue;
    auto ua = share(underlying_h(*a));
    auto hua = share(h_embed(*ua));
    auto uhua = share(underlying_h(*hua));
    const FinFunctor t1 = compose(underlying_h_functor(counit_h(hua, a), uhua, ua), unit_h(ua, uhua));
    CHECK(t1 == identity_functor(ua));

    auto a0 = a->a0;
    auto va0 = share(v_embed(*a0));
    auto uva0 = share(underlying_v(*va0));
    const FinFunctor t2 = compose(counit_v(va0, a).f0, unit_v(a0, uva0));
    CHECK(t2 == identity_functor(a0));
  }
}

TEST_CASE("double nerve of a product is the product of double nerves") {
  const auto cats = small_double_categories();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < cats.size(); ++j) {
      if (cats[i]->num_squares() * cats[j]->num_squares() > 400) continue;
      const DoubleNerve na = double_nerve(*cats[i], 2, 2);
      const DoubleNerve nb = double_nerve(*cats[j], 2, 2);
      const DoubleNerve np = double_nerve(product(*cats[i], *cats[j]), 2, 2);
      for (int n = 0; n <= 2; ++n)
        for (int k = 0; k <= 2; ++k) CHECK(np.bisset.count(n, k) == na.bisset.count(n, k) * nb.bisset.count(n, k));
      auto pab = share(product(*cats[i], *cats[j]));
      const DblFunctor to_a = projection(pab, cats[i], cats[j], true);
      const DblFunctor to_b = projection(pab, cats[i], cats[j], false);
      REQUIRE(validate(to_a).empty());
      REQUIRE(validate(to_b).empty());
      for (int n = 0; n <= 2; ++n) {
        const HNerveLevel& la = na.horizontal.levels[n];
        const HNerveLevel& lb = nb.horizontal.levels[n];
        const HNerveLevel& lp = np.horizontal.levels[n];
        const FinFunctor fa = horizontal_nerve_functor(to_a, lp, la);
        const FinFunctor fb = horizontal_nerve_functor(to_b, lp, lb);
        auto prod = share(product(*la.category, *lb.category));
        FinFunctor cmp{lp.category, prod, {}, {}};
        for (ObjId x = 0; x < lp.category->num_objects(); ++x)
          cmp.on_objects.push_back(static_cast<ObjId>(fa.obj(x) * lb.category->num_objects() + fb.obj(x)));
        for (MorId f = 0; f < lp.category->num_morphisms(); ++f)
          cmp.on_morphisms.push_back(static_cast<MorId>(fa.mor(f) * lb.category->num_morphisms() + fb.mor(f)));
        CHECK(is_isomorphism(cmp));
      }
    }
}
