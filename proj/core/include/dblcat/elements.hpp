#pragma once

#include "dblcat/fincat.hpp"
#include "dblcat/sset.hpp"

namespace dblcat {

/// The d-truncated category of simplices Δ/X.
///
/// Objects are all simplices of dimension ≤ d, labelled "k:label".
/// Morphisms x → x′ are monotone θ: [k] → [m] with θ^* x′ = x, labelled
/// "θ:x->x′" where θ is written as its value word.
FinCat category_of_elements(const TruncSSet& x);

}  // namespace dblcat
