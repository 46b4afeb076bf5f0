#pragma once

#include <optional>

#include "dblcat/fincat.hpp"

namespace dblcat {

enum class IsoStatus { found, none, inconclusive };

struct IsoResult {
  IsoStatus status = IsoStatus::none;
  std::optional<FinFunctor> iso;

  explicit operator bool() const noexcept { return status == IsoStatus::found; }
};

struct IsoSearchLimits {
  std::size_t max_morphisms = 200;
  std::size_t max_nodes = 2'000'000;
};

/// Searches for an isomorphism of categories c → d.
///
/// Backtracking over object bijections pruned by hom-set size signatures,
/// then over hom-set bijections checked against composition. Exceeding a
/// limit yields `inconclusive`; `none` is only returned after an exhaustive
/// search or a failed invariant.
IsoResult iso_check(const CatRef& c, const CatRef& d, IsoSearchLimits limits = {});

/// Functor that matches objects and morphisms by label, when the two label
/// sets coincide and the result is an isomorphism.
std::optional<FinFunctor> label_isomorphism(const CatRef& c, const CatRef& d);

}  // namespace dblcat
