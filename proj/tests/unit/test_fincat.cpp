#include <doctest.h>

#include <random>

#include "dblcat/fincat.hpp"
#include "dblcat/iso.hpp"
#include "dblcat/poset.hpp"
#include "oracles.hpp"

using namespace dblcat;

namespace {

std::vector<CatRef> small_categories() {
  return {share(chain_category(0)),
          share(chain_category(1)),
          share(chain_category(2)),
          share(discrete_category({"a", "b"})),
          share(free_category({"0", "1", "2"}, {{0, 1}, {0, 2}})),
          share(free_category({"0", "1"}, {{0, 1}, {0, 1}})),
          share(free_category({"0", "1", "2"}, {{1, 0}, {2, 0}}))};
}

}  // namespace

TEST_CASE("constructors produce valid categories") {
  for (const auto& c : small_categories()) CHECK(validate(*c).empty());
  CHECK(validate(terminal_category()).empty());
  CHECK(validate(product(chain_category(1), chain_category(2))).empty());
  CHECK(validate(coproduct(chain_category(1), discrete_category({"x"}))).empty());
  CHECK(validate(chain_poset(3).as_category()).empty());
}

TEST_CASE("chain and product sizes") {
  const FinCat c2 = chain_category(2);
  CHECK(c2.num_objects() == 3);
  CHECK(c2.num_morphisms() == 6);
  const FinCat p = product(chain_category(1), chain_category(2));
  CHECK(p.num_objects() == 6);
  CHECK(p.num_morphisms() == 18);
  const FinCat s = coproduct(chain_category(1), chain_category(0));
  CHECK(s.num_objects() == 3);
  CHECK(s.num_morphisms() == 4);
}

TEST_CASE("a single corrupted composite of [2] is detected") {
  const FinCat c = chain_category(2);
  const MorId f = *c.find_morphism("0<=1");
  const MorId g = *c.find_morphism("1<=2");
  CHECK(validate(c).empty());
  const FinCat bad = c.with_composite(g, f, c.identity(0));
  const auto errors = validate(bad);
  REQUIRE_FALSE(errors.empty());
  const FinCat bad_unit = c.with_composite(c.identity(1), f, c.identity(0));
  CHECK_FALSE(validate(bad_unit).empty());
}

TEST_CASE("builder rejects undefined composites and duplicate labels") {
  FinCatBuilder b;
  const ObjId x = b.add_object_with_identity("x");
  const ObjId y = b.add_object_with_identity("y");
  const ObjId z = b.add_object_with_identity("z");
  b.add_morphism("f", x, y);
  b.add_morphism("g", y, z);
  CHECK_THROWS_AS(std::move(b).build(), DomainError);

  FinCatBuilder dup;
  dup.add_object_with_identity("x");
  CHECK_THROWS_AS(dup.add_object_with_identity("x"), DomainError);
}

TEST_CASE("poset categories are thin and skeletal") {
  for (int n = 1; n <= 4; ++n)
    for (const FinPoset& p : oracle::natural_posets(n)) {
      const FinCat c = p.as_category();
      REQUIRE(validate(c).empty());
      for (ObjId a = 0; a < c.num_objects(); ++a)
        for (ObjId b = 0; b < c.num_objects(); ++b) {
          const auto ab = c.hom(a, b);
          CHECK(ab.size() <= 1);
          if (a != b) CHECK_FALSE((!ab.empty() && !c.hom(b, a).empty()));
          if (p.leq(a, b)) CHECK(p.relation_morphism(a, b) == ab.at(0));
        }
    }
}

TEST_CASE("functor enumeration matches the backtracking oracle") {
  const auto cats = small_categories();
  for (const auto& a : cats)
    for (const auto& b : cats) {
      std::size_t count = 0;
      for_each_functor(a, b, [&](const FinFunctor& f) {
        CHECK(validate(f).empty());
        ++count;
        return true;
      });
      CHECK(count == oracle::all_functors(a, b).size());
    }
}

TEST_CASE("functor composition, identity and inverse") {
  auto c = share(chain_category(2));
  auto p = share(chain_poset(2).as_category());
  const FinFunctor id = identity_functor(c);
  CHECK(is_isomorphism(id));
  CHECK(compose(id, id) == id);
  const auto iso = label_isomorphism(c, c);
  REQUIRE(iso.has_value());
  CHECK(compose(inverse(*iso), *iso) == id);
  auto one = share(chain_category(1));
  const FinFunctor d1 = monotone_functor(one, c, {0, 2});
  CHECK(validate(d1).empty());
  CHECK_FALSE(is_isomorphism(d1));
  CHECK_THROWS_AS(inverse(d1), DomainError);
  CHECK_THROWS_AS(monotone_functor(one, c, {2, 0}), DomainError);
}

TEST_CASE("iso_check on small pairs") {
  auto one = share(chain_category(1));
  CHECK(iso_check(one, one).status == IsoStatus::found);
  auto two_points = share(coproduct(chain_category(0), chain_category(0)));
  CHECK(iso_check(one, two_points).status == IsoStatus::none);
  auto square = share(product(chain_category(1), chain_category(1)));
  auto poset = share(FinPoset::from_relations({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}).as_category());
  const IsoResult r = iso_check(square, poset);
  REQUIRE(r.status == IsoStatus::found);
  CHECK(is_isomorphism(*r.iso));
  auto tiny = IsoSearchLimits{2, 10};
  CHECK(iso_check(square, poset, tiny).status == IsoStatus::inconclusive);
}

TEST_CASE("pullback satisfies its universal property against enumerated cones") {
  auto c1 = share(chain_category(1));
  auto c2 = share(chain_category(2));
  auto c0 = share(chain_category(0));
  auto span = share(free_category({"0", "1", "2"}, {{0, 1}, {0, 2}}));
  std::vector<std::pair<FinFunctor, FinFunctor>> cospans = {
      {monotone_functor(c1, c2, {0, 1}), monotone_functor(c1, c2, {1, 2})},
      {monotone_functor(c2, c1, {0, 0, 1}), monotone_functor(c1, c1, {0, 1})},
      {monotone_functor(c1, c1, {0, 1}), constant_functor(c0, c1, 1)},
      {constant_functor(span, c0, 0), constant_functor(c1, c0, 0)},
  };
  std::vector<CatRef> cones;
  for (const auto& x : small_categories())
    if (x->num_objects() <= 3) cones.push_back(x);
  for (const auto& [f, g] : cospans) {
    const Pullback pb = pullback(f, g);
    REQUIRE(validate(*pb.category).empty());
    CHECK(compose(f, pb.first) == compose(g, pb.second));
    for (const auto& x : cones) {
      const auto into_p = oracle::all_functors(x, pb.category);
      for (const FinFunctor& p : oracle::all_functors(x, f.source))
        for (const FinFunctor& q : oracle::all_functors(x, g.source)) {
          if (!(compose(f, p) == compose(g, q))) continue;
          std::size_t factorizations = 0;
          for (const FinFunctor& u : into_p)
            if (compose(pb.first, u) == p && compose(pb.second, u) == q) ++factorizations;
          CHECK(factorizations == 1);
        }
    }
  }
}

TEST_CASE("pullback_of_pairs rejects pairs that are not closed") {
  auto c1 = share(chain_category(1));
  const MorId arrow = *c1->find_morphism("0<=1");
  CHECK_THROWS_AS(pullback_of_pairs(c1, c1, {{0, 0}}, {{arrow, arrow}}), DomainError);
}

TEST_CASE("free category counts paths") {
  const FinCat diamond = free_category({"0", "1", "2", "3"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(diamond.num_morphisms() == 4 + 4 + 2);
  CHECK(validate(diamond).empty());
  CHECK_THROWS_AS(free_category({"0", "1"}, {{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("cell budget is enforced") {
  const std::size_t old = cell_limit();
  set_cell_limit(10);
  CHECK_THROWS_AS(product(chain_category(3), chain_category(3)), CellLimitExceeded);
  set_cell_limit(old);
}
