#include <doctest.h>

#include <algorithm>

#include "dblcat/ex.hpp"
#include "dblcat/groth.hpp"
#include "dblcat/homology.hpp"
#include "dblcat/nerve.hpp"
#include "dblcat/pushout.hpp"
#include "dblcat/subdivision.hpp"

using namespace dblcat;

namespace {

std::vector<std::size_t> known_betti(const HomologyReport& r) {
  std::vector<std::size_t> out;
  for (const auto& b : r.betti)
    if (b) out.push_back(*b);
  return out;
}

SparseMatrix dense(std::size_t rows, const std::vector<std::vector<std::int64_t>>& cols) {
  SparseMatrix m{rows, cols.size(), {}};
  for (const auto& c : cols) {
    m.columns.emplace_back();
    for (std::uint32_t r = 0; r < c.size(); ++r)
      if (c[r] != 0) m.columns.back().emplace_back(r, c[r]);
  }
  return m;
}

SimplicialMap inclusion_by_label(const SSetRef& a, const SSetRef& b) {
  SimplicialMap f{a, b, {}};
  f.levels.resize(a->trunc() + 1);
  for (int k = 0; k <= a->trunc(); ++k)
    for (SimplexId x = 0; x < a->count(k); ++x) f.levels[k].push_back(*b->find(k, a->label(k, x)));
  return f;
}

}  // namespace

TEST_CASE("boundary squares to zero") {
  for (const Shape& s : {Shape::simplex(3), Shape::boundary(3), Shape::horn(3, 2)})
    CHECK(boundary_squared_violations(chain_complex(standard(s, 3))).empty());
  CHECK(boundary_squared_violations(chain_complex(sd(standard(Shape::simplex(2), 2)))).empty());
}

TEST_CASE("Betti numbers of standard shapes") {
  CHECK(known_betti(betti(standard(Shape::simplex(2), 3))) == std::vector<std::size_t>{1, 0, 0});
  CHECK(known_betti(betti(standard(Shape::boundary(2), 2))) == std::vector<std::size_t>{1, 1});
  CHECK(known_betti(betti(standard(Shape::boundary(3), 3))) == std::vector<std::size_t>{1, 0, 1});
  CHECK(known_betti(betti(standard(Shape::horn(2, 1), 2))) == std::vector<std::size_t>{1, 0});
  const HomologyReport r = betti(standard(Shape::simplex(1), 1));
  CHECK(r.valid_through == 0);
  REQUIRE(r.betti.size() == 2);
  CHECK_FALSE(r.betti[1].has_value());
}

TEST_CASE("Euler characteristic of the chains matches the homology") {
  // through degree d − 1: Σ (−1)^k β_k = Σ (−1)^k c_k − (−1)^{d−1} rank ∂_d
  for (const Shape& s : {Shape::simplex(3), Shape::boundary(3), Shape::horn(3, 0), Shape::boundary(2)}) {
    const int d = 3;
    const HomologyReport r = betti(standard(s, d));
    long lhs = 0, rhs = 0;
    for (int k = 0; k < d; ++k) {
      const long sign = k % 2 == 0 ? 1 : -1;
      lhs += sign * static_cast<long>(*r.betti[k]);
      rhs += sign * static_cast<long>(r.chain_ranks[k]);
    }
    rhs -= (d % 2 == 0 ? -1 : 1) * static_cast<long>(r.boundary_ranks[d]);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("rings agree on torsion-free examples") {
  const TruncSSet x = sd(standard(Shape::boundary(3), 3));
  const HomologyReport q = betti(x, Ring::rationals);
  const HomologyReport z2 = betti(x, Ring::mod2);
  const HomologyReport z = betti(x, Ring::integers);
  CHECK(q.betti == z2.betti);
  CHECK(q.betti == z.betti);
  for (const auto& t : z.torsion) CHECK(t.empty());
}

TEST_CASE("Smith normal form over the integers") {
  const SmithSummary s = smith(dense(2, {{2, 4}, {6, 8}}), Ring::integers);
  CHECK(s.rank == 2);
  CHECK(s.torsion == std::vector<std::string>{"2", "4"});
  const SmithSummary t = smith(dense(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 0}}), Ring::integers);
  CHECK(t.rank == 2);
  CHECK(t.torsion == std::vector<std::string>{"2", "2"});
  CHECK(smith(dense(2, {{2, 4}, {6, 8}}), Ring::mod2).rank == 0);
  CHECK(smith(dense(2, {{2, 4}, {6, 8}}), Ring::rationals).rank == 2);
  // entries whose products overflow 64 bits
  const std::int64_t big = std::int64_t{1} << 40;
  const SmithSummary o = smith(dense(2, {{big, big + 1}, {big + 1, big + 2}}), Ring::integers);
  CHECK(o.rank == 2);
  CHECK(o.torsion.empty());
}

TEST_CASE("ring names") {
  CHECK(parse_ring("q") == Ring::rationals);
  CHECK(parse_ring("z2") == Ring::mod2);
  CHECK(to_string(Ring::integers) == "z");
  CHECK_THROWS_AS(parse_ring("r"), DomainError);
}

TEST_CASE("cSd2 nerves are points") {
  for (int k = 0; k <= 2; ++k) {
    const CategoryNerve n = nerve(share(csd2_poset(Shape::simplex(k)).as_category()), 3);
    CHECK(known_betti(betti(*n.sset)) == std::vector<std::size_t>{1, 0, 0});
  }
  const CategoryNerve b = nerve(share(csd2_poset(Shape::boundary(2)).as_category()), 3);
  CHECK(known_betti(betti(*b.sset)) == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("witness along simplicial maps") {
  auto b2 = share(standard(Shape::boundary(2), 2));
  auto d2 = share(standard(Shape::simplex(2), 2));
  const WitnessReport inc = we_witness(inclusion_by_label(b2, d2), 2);
  CHECK_FALSE(inc.passes);
  CHECK(inc.first_failure == std::optional<int>{1});
  const WitnessReport id = we_witness(identity_map(b2), 2);
  CHECK(id.passes);
  for (const Shape& s : {Shape::simplex(2), Shape::boundary(2), Shape::horn(2, 1)}) {
    const ExResult e = ex(share(standard(s, 2)), 2);
    CHECK(we_witness(beta(e), 2).passes);
  }
}

TEST_CASE("witness along functors and double functors") {
  auto c1 = share(chain_category(1));
  auto c0 = share(chain_category(0));
  CHECK(we_witness(constant_functor(c1, c0, 0), 2).passes);
  auto two = share(discrete_category({"a", "b"}));
  CHECK_FALSE(we_witness(constant_functor(two, c0, 0), 2).passes);
  const DblSievePushout po = pushout_dbl_box_sieve(counterexample_spec());
  const WitnessReport w = we_witness(po.from_a, 2);
  // each column of the pushout's double nerve is a disjoint union of
  // points and one interval, so the diagonal is still contractible
  CHECK(w.valid_through == 1);
  CHECK(w.passes);
}

namespace {

struct NamedSSet {
  std::string name;
  TruncSSet x;
};

std::vector<NamedSSet> homology_fixtures() {
  std::vector<NamedSSet> out;
  for (const Shape& s : {Shape::simplex(2), Shape::boundary(2), Shape::boundary(3), Shape::horn(3, 1)})
    out.push_back({"shape", standard(s, 3)});
  out.push_back({"sd boundary", sd(standard(Shape::boundary(2), 2))});
  out.push_back({"sd2 interval", sd2_interval(2)});
  out.push_back({"nerve csd2 boundary", *nerve(share(csd2_poset(Shape::boundary(2)).as_category()), 3).sset});
  out.push_back({"nerve parallel pair", *nerve(share(free_category({"0", "1"}, {{0, 1}, {0, 1}})), 3).sset});
  out.push_back({"ex boundary", *ex(share(standard(Shape::boundary(2), 2)), 2).sset});
  out.push_back({"diag box", diag(double_nerve(box(chain_category(1), chain_category(1)), 3, 3).bisset)});
  out.push_back({"diag completeness", diag(double_nerve(*completeness_source().source.dbl, 2, 2).bisset)});
  out.push_back({"diag counterexample", diag(double_nerve(*pushout_dbl_box_sieve(counterexample_spec()).dbl, 3, 3).bisset)});
  return out;
}

}  // namespace

TEST_CASE("chain complex examples") {
  const ChainComplex point = chain_complex(standard(Shape::simplex(0), 0));
  CHECK(point.rank(0) == 1);
  CHECK(point.boundaries[0].columns.size() == 1);
  CHECK(point.boundaries[0].columns[0].empty());
  const ChainComplex circle = chain_complex(standard(Shape::boundary(2), 1));
  CHECK(circle.rank(0) == 3);
  CHECK(circle.rank(1) == 3);
  CHECK(smith(circle.boundaries[1], Ring::integers).rank == 2);
  for (const auto& column : circle.boundaries[1].columns) {
    REQUIRE(column.size() == 2);
    CHECK(column[0].second + column[1].second == 0);
  }
  CHECK(boundary_squared_violations(chain_complex(*nerve(share(chain_category(2)), 3).sset)).empty());
}

TEST_CASE("homology invariants hold on every fixture") {
  for (const auto& [name, x] : homology_fixtures()) {
    CAPTURE(name);
    const ChainComplex c = chain_complex(x);
    CHECK(boundary_squared_violations(c).empty());
    const HomologyReport q = betti(x, Ring::rationals);
    const HomologyReport z = betti(x, Ring::integers);
    const HomologyReport z2 = betti(x, Ring::mod2);
    const int d = q.max_degree;
    long lhs = 0, rhs = 0;
    for (int k = 0; k < d; ++k) {
      const long sign = k % 2 == 0 ? 1 : -1;
      lhs += sign * static_cast<long>(*q.betti[k]);
      rhs += sign * static_cast<long>(q.chain_ranks[k]);
    }
    rhs -= (d % 2 == 0 ? -1 : 1) * static_cast<long>(q.boundary_ranks[d]);
    CHECK(lhs == rhs);
    const bool torsion_free = std::all_of(z.torsion.begin(), z.torsion.end(), [](const auto& t) { return t.empty(); });
    if (torsion_free) CHECK(q.betti == z2.betti);
    CHECK(q.betti == z.betti);
  }
}

TEST_CASE("diagonal of the completeness double nerve is connected") {
  const DoubleNerve dn = double_nerve(*completeness_source().source.dbl, 2, 2);
  const HomologyReport r = betti(diag(dn.bisset));
  REQUIRE(r.valid_through >= 1);
  CHECK(r.betti[0] == std::optional<std::size_t>{1});
}

TEST_CASE("witnesses compose") {
  auto c0 = share(chain_category(0));
  auto c1 = share(chain_category(1));
  auto c2 = share(chain_category(2));
  const std::vector<std::pair<FinFunctor, FinFunctor>> pairs = {
      {monotone_functor(c1, c2, {0, 2}), monotone_functor(c2, c1, {0, 1, 1})},
      {constant_functor(c1, c0, 0), constant_functor(c0, c2, 1)},
      {monotone_functor(c0, c1, {1}), monotone_functor(c1, c2, {1, 2})},
  };
  for (const auto& [f, g] : pairs) {
    REQUIRE(we_witness(f, 3).passes);
    REQUIRE(we_witness(g, 3).passes);
    CHECK(we_witness(compose(g, f), 3).passes);
  }
  auto horn = share(standard(Shape::horn(2, 1), 2));
  auto d2 = share(standard(Shape::simplex(2), 2));
  const SimplicialMap inc = inclusion_by_label(horn, d2);
  const ExResult e = ex(d2, 2);
  const SimplicialMap b = beta(e);
  REQUIRE(we_witness(inc, 2).passes);
  REQUIRE(we_witness(b, 2).passes);
  CHECK(validate(compose(b, inc)).empty());
  CHECK(we_witness(compose(b, inc), 2).passes);
}
