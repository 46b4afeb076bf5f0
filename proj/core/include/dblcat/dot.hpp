#pragma once

#include <string>

#include "dblcat/dblcat.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/poset.hpp"
#include "dblcat/sset.hpp"

namespace dblcat {

/// Graphviz renderings for inspection. Identities are omitted.
std::string to_dot(const FinCat& c);
/// Hasse diagram.
std::string to_dot(const FinPoset& p);
/// Vertices and nondegenerate edges.
std::string to_dot(const TruncSSet& x);
/// Objects, horizontal arrows (solid), vertical arrows (dashed) and one
/// label node per nondegenerate square.
std::string to_dot(const FinDblCat& a);

}  // namespace dblcat
