#pragma once

#include <vector>

#include "dblcat/sset.hpp"

namespace dblcat {

/// Ex(X) truncated at n_max, with each simplex kept as a map Sd Δ[n] → X.
///
/// maps[n][g][c] is the image of the c-th nondegenerate simplex of Sd Δ[n]
/// (strict chains of nonempty subsets of [n], ordered by top subset then
/// length, see sd_chains()).
struct ExResult {
  SSetRef base;
  SSetRef sset;
  std::vector<std::vector<std::vector<SimplexId>>> maps;
};

/// Nondegenerate simplices of Sd Δ[n] as chains of vertex bitmasks, in the
/// order used by ExResult.
std::vector<std::vector<std::uint32_t>> sd_chains(int n);

/// Requires n_max ≤ 3 and n_max ≤ x.trunc().
ExResult ex(const SSetRef& x, int n_max);

/// β: X → Ex(X), sending x ∈ X_n to x ∘ (last-vertex map Sd Δ[n] → Δ[n]).
/// The source is X truncated at the level of Ex(X).
SimplicialMap beta(const ExResult& ex_x);

/// Ex(f): Ex(X) → Ex(Y) by postcomposition.
SimplicialMap ex_map(const SimplicialMap& f, const ExResult& ex_x, const ExResult& ex_y);

}  // namespace dblcat
