#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblcat/dblcat.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/sset.hpp"

namespace dblcat {

/// Integer matrix stored by columns; entries are (row, value) with rows
/// strictly increasing and values nonzero.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;
};

/// Normalized chains: C_k is free on the nondegenerate k-simplices and
/// boundaries[k] is ∂_k: C_k → C_{k−1} (boundaries[0] is the zero map to 0).
struct ChainComplex {
  int max_degree = 0;
  std::vector<std::vector<SimplexId>> bases;
  std::vector<SparseMatrix> boundaries;

  std::size_t rank(int k) const { return bases[k].size(); }
};

ChainComplex chain_complex(const TruncSSet& x);

/// Degrees k with ∂_{k−1} ∘ ∂_k ≠ 0, one line each.
std::vector<std::string> boundary_squared_violations(const ChainComplex& c);

enum class Ring { rationals, integers, mod2 };
std::string to_string(Ring r);
/// "q", "z" or "z2".
Ring parse_ring(const std::string& s);

/// Rank over Q (or GF(2) for mod2) and, over the integers, the invariant
/// factors greater than one, as decimal strings in divisibility order.
struct SmithSummary {
  std::size_t rank = 0;
  std::vector<std::string> torsion;
};

SmithSummary smith(const SparseMatrix& m, Ring ring);

/// Homology of a d-truncated simplicial set. Degrees above d − 1 would need
/// simplices above the truncation and are reported as unknown.
struct HomologyReport {
  Ring ring = Ring::rationals;
  int max_degree = 0;
  int valid_through = -1;
  std::vector<std::optional<std::size_t>> betti;
  std::vector<std::vector<std::string>> torsion;
  /// boundary_ranks[k] = rank ∂_k for 1 ≤ k ≤ d (index 0 is 0).
  std::vector<std::size_t> boundary_ranks;
  std::vector<std::size_t> chain_ranks;
};

HomologyReport betti(const TruncSSet& x, Ring ring = Ring::rationals);

struct DegreeWitness {
  int degree = 0;
  std::size_t source_betti = 0;
  std::size_t target_betti = 0;
  std::size_t induced_rank = 0;
  bool iso = false;
};

/// Rational homology comparison for a map. Passing is a necessary condition
/// for a weak homotopy equivalence, not a sufficient one.
struct WitnessReport {
  int valid_through = -1;
  std::vector<DegreeWitness> degrees;
  bool passes = false;
  /// Lowest degree where the induced map is not an isomorphism.
  std::optional<int> first_failure;
};

/// Compares H_k(source) → H_k(target) over Q for k ≤ d − 1.
WitnessReport we_witness(const SimplicialMap& f, int d);
/// Uses the nerve of the functor, truncated at d.
WitnessReport we_witness(const FinFunctor& f, int d);
/// Uses the diagonal of the double nerve, truncated at d.
WitnessReport we_witness(const DblFunctor& f, int d);

}  // namespace dblcat
