#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dblcat/groth.hpp"
#include "dblcat/iso.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dblcat;

namespace {

void check_counts(const FinDblCat& a, const oracle::Counts& c) {
  CHECK(a.num_objects() == c.objects);
  CHECK(a.num_nonidentity_verticals() == c.nonidentity_verticals);
  CHECK(a.num_nonidentity_horizontals() == c.nonidentity_horizontals);
  CHECK(a.num_nondegenerate_squares() == c.nondegenerate_squares);
}

bool collapses_verticals(const DblFunctor& f) {
  const FinCat& a0 = *f.source->a0;
  for (MorId v = 0; v < a0.num_morphisms(); ++v)
    if (!f.target->a0->is_identity(f.f0.mor(v))) return false;
  return true;
}

}  // namespace

TEST_CASE("Grothendieck construction of a small diagram") {
  auto j = share(chain_category(1));
  auto c0 = share(chain_category(0));
  auto c1 = share(chain_category(1));
  CatDiagram d{j, {c0, c1}, {}};
  d.action = {identity_functor(c0), monotone_functor(c0, c1, {0}), identity_functor(c1)};
  REQUIRE(validate(d).empty());
  const Grothendieck g = grothendieck_cat(d);
  CHECK(validate(*g.category).empty());
  CHECK(validate(g.projection).empty());
  // the chain [2]
  CHECK(g.category->num_objects() == 3);
  CHECK(g.category->num_morphisms() == 6);
  CHECK(g.object_of(1, 1) == 2);
}

TEST_CASE("invalid diagrams are rejected") {
  auto j = share(chain_category(1));
  auto c1 = share(chain_category(1));
  CatDiagram d{j, {c1, c1}, {}};
  d.action = {identity_functor(c1), monotone_functor(c1, c1, {1, 1}), monotone_functor(c1, c1, {0, 0})};
  CHECK_FALSE(validate(d).empty());
}

TEST_CASE("constant diagrams over random shapes") {
  std::mt19937 rng(20261016);
  auto point = share(chain_category(0));
  auto c1 = share(chain_category(1));
  for (int trial = 0; trial < 8; ++trial) {
    const auto shape = fixtures::random_shape(rng, 4, 4);
    const Grothendieck g0 = grothendieck_cat(constant_diagram(shape.cat, point));
    CHECK(iso_check(g0.category, shape.cat).status == IsoStatus::found);
    const Grothendieck g1 = grothendieck_cat(constant_diagram(shape.cat, c1));
    CHECK(iso_check(g1.category, share(product(*shape.cat, *c1))).status == IsoStatus::found);
  }
}

TEST_CASE("random cospans of diagrams preserve pullbacks") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const fixtures::Cospan c = fixtures::random_cospan(rng, 3, 3, 2);
    const CatDiagram d1 = fixtures::to_diagram(c.d1);
    const CatDiagram d2 = fixtures::to_diagram(c.d2);
    const CatDiagram d3 = fixtures::to_diagram(c.d3);
    REQUIRE(validate(d1).empty());
    REQUIRE(validate(d3).empty());
    const NatTrans alpha = fixtures::to_nat(d1, d3, c.alpha);
    const NatTrans beta = fixtures::to_nat(d2, d3, c.beta);
    REQUIRE(validate_natural(d1, d3, alpha).empty());
    REQUIRE(validate_natural(d2, d3, beta).empty());
    const PullbackVerdict v = check_pullback_preservation(d1, d2, d3, alpha, beta);
    CAPTURE(v.detail);
    CHECK(v.preserved);
    CHECK(v.lhs_objects == v.rhs_objects);
    CHECK(v.lhs_morphisms == v.rhs_morphisms);
  }
}

TEST_CASE("unnatural transformations are rejected") {
  auto j = share(chain_category(1));
  auto c1 = share(chain_category(1));
  CatDiagram d{j, {c1, c1}, {identity_functor(c1), identity_functor(c1), identity_functor(c1)}};
  const NatTrans bad = {monotone_functor(c1, c1, {0, 0}), monotone_functor(c1, c1, {1, 1})};
  CHECK_FALSE(validate_natural(d, d, bad).empty());
  CHECK_THROWS_AS(check_pullback_preservation(d, d, d, bad, bad), DomainError);
}

TEST_CASE("Grothendieck maps are functors") {
  auto j = share(chain_category(1));
  auto c1 = share(chain_category(1));
  auto c2 = share(chain_category(2));
  CatDiagram d{j, {c1, c1}, {identity_functor(c1), identity_functor(c1), identity_functor(c1)}};
  CatDiagram e{j, {c2, c2}, {identity_functor(c2), identity_functor(c2), identity_functor(c2)}};
  const NatTrans alpha = {monotone_functor(c1, c2, {0, 2}), monotone_functor(c1, c2, {0, 2})};
  REQUIRE(validate_natural(d, e, alpha).empty());
  const Grothendieck gd = grothendieck_cat(d), ge = grothendieck_cat(e);
  CHECK(validate(grothendieck_map(d, e, alpha, gd, ge)).empty());
}

TEST_CASE("spine fixtures") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const LocalizationSource s = spine_source(n);
    REQUIRE(validate(s.diagram).empty());
    CHECK(validate_double_category(*s.source.dbl).empty());
    check_counts(*s.source.dbl, oracle::grothendieck_counts(s.diagram));
    CHECK(s.source.dbl->num_objects() == std::size_t(3 * n - 1));
    CHECK(validate(s.comparison).empty());
    CHECK(collapses_verticals(s.comparison));
  }
  const LocalizationSource s2 = spine_source(2);
  CHECK(s2.source.dbl->num_nonidentity_verticals() == 2);
  CHECK(s2.source.dbl->num_nonidentity_horizontals() == 2);
  CHECK(s2.source.dbl->num_nondegenerate_squares() == 0);
  CHECK_THROWS_AS(spine_source(0), DomainError);
}

TEST_CASE("completeness fixture") {
  const LocalizationSource s = completeness_source();
  REQUIRE(validate(s.diagram).empty());
  CHECK(validate_double_category(*s.source.dbl).empty());
  const oracle::Counts c = oracle::grothendieck_counts(s.diagram);
  check_counts(*s.source.dbl, c);
  CHECK(c.objects == 10);
  CHECK(c.nonidentity_verticals == 8);
  CHECK(c.nonidentity_horizontals == 8);
  CHECK(c.nondegenerate_squares == 4);
  CHECK(validate(s.comparison).empty());
  CHECK(collapses_verticals(s.comparison));
}

TEST_CASE("constant H[1] over [1] has one nondegenerate square") {
  auto j = share(chain_category(1));
  auto h1 = share(h_embed(chain_category(1)));
  const DblDiagram d{j, {h1, h1}, {identity_dbl_functor(h1), identity_dbl_functor(h1), identity_dbl_functor(h1)}};
  const GrothendieckDbl g = grothendieck_dbl(d);
  CHECK(validate_double_category(*g.dbl).empty());
  check_counts(*g.dbl, oracle::grothendieck_counts(d));
  // ∫ is H[1] ⊠ [1], the single free square
  CHECK(g.dbl->num_nondegenerate_squares() == 1);
}

TEST_CASE("cocone legs induce a double functor") {
  auto j = share(chain_category(1));
  auto h1 = share(h_embed(chain_category(1)));
  const DblDiagram d{j, {h1, h1}, {identity_dbl_functor(h1), identity_dbl_functor(h1), identity_dbl_functor(h1)}};
  const GrothendieckDbl g = grothendieck_dbl(d);
  const DblFunctor u = grothendieck_cocone(d, g, h1, {identity_dbl_functor(h1), identity_dbl_functor(h1)});
  CHECK(validate(u).empty());
  auto c1 = share(chain_category(1));
  auto c2 = share(chain_category(2));
  auto h2 = share(h_embed(*c2));
  const DblFunctor shift = h_functor(monotone_functor(c1, c2, {1, 2}), h1, h2);
  const DblFunctor stay = h_functor(monotone_functor(c1, c2, {0, 1}), h1, h2);
  CHECK_THROWS_AS(grothendieck_cocone(d, g, h2, {stay, shift}), DomainError);
}

namespace {

bool injective(const FinFunctor& f) {
  std::set<ObjId> objects(f.on_objects.begin(), f.on_objects.end());
  std::set<MorId> morphisms(f.on_morphisms.begin(), f.on_morphisms.end());
  return objects.size() == f.on_objects.size() && morphisms.size() == f.on_morphisms.size();
}

}  // namespace

TEST_CASE("Grothendieck sizes match the definitional sums") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto shape = fixtures::random_shape(rng, 4, 5);
    const CatDiagram d = fixtures::to_diagram(fixtures::random_chain_diagram(rng, shape, 3));
    REQUIRE(validate(d).empty());
    const Grothendieck g = grothendieck_cat(d);
    REQUIRE(validate(*g.category).empty());
    CHECK(validate(g.projection).empty());
    std::size_t objects = 0, morphisms = 0;
    for (ObjId j = 0; j < shape.cat->num_objects(); ++j) objects += d.values[j]->num_objects();
    for (MorId s = 0; s < shape.cat->num_morphisms(); ++s) {
      const FinCat& fj = *d.values[shape.cat->src(s)];
      const FinCat& fk = *d.values[shape.cat->tgt(s)];
      for (ObjId x = 0; x < fj.num_objects(); ++x)
        for (MorId u = 0; u < fk.num_morphisms(); ++u)
          if (fk.src(u) == d.action[s].obj(x)) ++morphisms;
    }
    CHECK(g.category->num_objects() == objects);
    CHECK(g.category->num_morphisms() == morphisms);
  }
}

TEST_CASE("levelwise injective transformations induce injective functors") {
  std::mt19937 rng(23);
  std::size_t injective_cases = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const fixtures::Cospan c = fixtures::random_cospan(rng, 3, 3, 2);
    const CatDiagram d1 = fixtures::to_diagram(c.d1);
    const CatDiagram d3 = fixtures::to_diagram(c.d3);
    const NatTrans alpha = fixtures::to_nat(d1, d3, c.alpha);
    if (!std::all_of(alpha.begin(), alpha.end(), injective)) continue;
    ++injective_cases;
    const Grothendieck g1 = grothendieck_cat(d1), g3 = grothendieck_cat(d3);
    const FinFunctor f = grothendieck_map(d1, d3, alpha, g1, g3);
    CHECK(validate(f).empty());
    CHECK(injective(f));
  }
  auto j = share(chain_category(1));
  auto c1 = share(chain_category(1));
  auto c2 = share(chain_category(2));
  CatDiagram d{j, {c1, c1}, {identity_functor(c1), identity_functor(c1), identity_functor(c1)}};
  CatDiagram e{j, {c2, c2}, {identity_functor(c2), identity_functor(c2), identity_functor(c2)}};
  const NatTrans alpha = {monotone_functor(c1, c2, {0, 2}), monotone_functor(c1, c2, {0, 2})};
  CHECK(injective(grothendieck_map(d, e, alpha, grothendieck_cat(d), grothendieck_cat(e))));
  MESSAGE(injective_cases << " random injective transformations");
  CHECK(injective_cases > 0);
}

TEST_CASE("Grothendieck construction commutes with the horizontal nerve") {
  auto j = share(chain_category(1));
  auto h1 = share(h_embed(chain_category(1)));
  const DblDiagram constant{j, {h1, h1}, {identity_dbl_functor(h1), identity_dbl_functor(h1), identity_dbl_functor(h1)}};
  const std::vector<DblDiagram> diagrams = {spine_source(2).diagram, spine_source(3).diagram,
                                            completeness_source().diagram, constant};
  for (const DblDiagram& d : diagrams) {
    const GrothendieckDbl g = grothendieck_dbl(d);
    for (int m = 0; m <= 2; ++m) {
      CAPTURE(m);
      const HNerveLevel total = horizontal_nerve_level(*g.dbl, m);
      std::vector<HNerveLevel> levels;
      CatDiagram levelwise{d.shape, {}, {}};
      for (const DblRef& v : d.values) {
        levels.push_back(horizontal_nerve_level(*v, m));
        levelwise.values.push_back(levels.back().category);
      }
      for (MorId s = 0; s < d.shape->num_morphisms(); ++s)
        levelwise.action.push_back(
            horizontal_nerve_functor(d.action[s], levels[d.shape->src(s)], levels[d.shape->tgt(s)]));
      REQUIRE(validate(levelwise).empty());
      const Grothendieck expected = grothendieck_cat(levelwise);
      CHECK(total.category->num_objects() == expected.category->num_objects());
      CHECK(total.category->num_morphisms() == expected.category->num_morphisms());
      CHECK(iso_check(total.category, expected.category).status == IsoStatus::found);
    }
  }
}

TEST_CASE("small Grothendieck examples") {
  auto j = share(chain_category(1));
  auto point = share(chain_category(0));
  auto c2 = share(chain_category(2));
  CHECK(iso_check(grothendieck_cat(constant_diagram(j, point)).category, j).status == IsoStatus::found);
  CatDiagram single{point, {c2}, {identity_functor(c2)}};
  CHECK(iso_check(grothendieck_cat(single).category, c2).status == IsoStatus::found);
  const DblDiagram one{point, {share(box(chain_category(1), chain_category(1)))}, {}};
  DblDiagram with_id = one;
  with_id.action.push_back(identity_dbl_functor(one.values[0]));
  const GrothendieckDbl g = grothendieck_dbl(with_id);
  CHECK(g.dbl->num_objects() == 4);
  CHECK(g.dbl->num_nondegenerate_squares() == 1);
}
