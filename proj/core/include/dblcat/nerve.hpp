#pragma once

#include <vector>

#include "dblcat/fincat.hpp"
#include "dblcat/sset.hpp"

namespace dblcat {

/// Nerve of a finite category together with the chain behind each simplex.
///
/// A k-simplex is a string of k composable morphisms x0 → x1 → … → xk; a
/// 0-simplex is stored as the one-element chain {id_x}.
struct CategoryNerve {
  CatRef category;
  SSetRef sset;
  std::vector<std::vector<std::vector<MorId>>> chains;

  ObjId vertex(int k, SimplexId x, int j) const;
};

/// At most one morphism between any ordered pair of objects.
bool is_thin(const FinCat& c);

/// N(C) truncated at d. Simplices of thin categories are labelled by their
/// object sequence "(x0,...,xk)", otherwise by their morphism sequence.
CategoryNerve nerve(const CatRef& c, int d);

/// N(F) between nerves computed with nerve().
SimplicialMap nerve_of_functor(const FinFunctor& f, const CategoryNerve& source,
                               const CategoryNerve& target);

}  // namespace dblcat
