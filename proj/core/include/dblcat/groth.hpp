#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dblcat/dblcat.hpp"
#include "dblcat/fincat.hpp"

namespace dblcat {

/// Functor J → Cat: a category per object of J and a functor per morphism.
struct CatDiagram {
  CatRef shape;
  std::vector<CatRef> values;
  std::vector<FinFunctor> action;
};

/// Functor J → DblCat.
struct DblDiagram {
  CatRef shape;
  std::vector<DblRef> values;
  std::vector<DblFunctor> action;
};

/// Type errors and failures of functoriality over J, one line each.
std::vector<std::string> validate(const CatDiagram& d);
std::vector<std::string> validate(const DblDiagram& d);

/// Constant diagram at `value`.
CatDiagram constant_diagram(const CatRef& shape, const CatRef& value);

/// ∫_J F with its projection to J.
///
/// Objects (j, x), listed by j then x. A morphism (j, x) → (j′, x′) is a
/// triple (s, x, u) with s: j → j′ and u: F(s)(x) → x′; composition is
/// (s′, x′, u′) ∘ (s, x, u) = (s′ ∘ s, x, u′ ∘ F(s′)(u)).
struct Grothendieck {
  CatRef category;
  FinFunctor projection;
  std::vector<std::array<std::uint32_t, 2>> objects;
  std::vector<std::array<std::uint32_t, 3>> morphisms;

  ObjId object_of(ObjId j, ObjId x) const;
  MorId morphism_of(MorId s, ObjId x, MorId u) const;

  std::map<std::array<std::uint32_t, 2>, ObjId> object_index;
  std::map<std::array<std::uint32_t, 3>, MorId> morphism_index;
};

Grothendieck grothendieck_cat(const CatDiagram& d);

/// Levelwise Grothendieck construction of a diagram of double categories:
/// the vertical part is ∫ of j ↦ F(j)₀ and the horizontal part (horizontal
/// morphisms and squares) is ∫ of j ↦ F(j)₁.
struct GrothendieckDbl {
  DblRef dbl;
  Grothendieck vertical;
  Grothendieck horizontal;
};

GrothendieckDbl grothendieck_dbl(const DblDiagram& d);

/// Double functor ∫F → target induced by a cocone of double functors
/// legs[j]: F(j) → target. Throws DomainError if the legs are not compatible.
DblFunctor grothendieck_cocone(const DblDiagram& d, const GrothendieckDbl& g, const DblRef& target,
                               const std::vector<DblFunctor>& legs);

/// Source of a localization map together with the comparison to its target.
struct LocalizationSource {
  DblDiagram diagram;
  GrothendieckDbl source;
  DblRef target;
  DblFunctor comparison;
};

/// ∫ of H[1] ← H[0] → H[1] ← … → H[1] (n copies of H[1], maps d⁰ and d¹),
/// with the comparison to H[n]. Requires n ≥ 1.
LocalizationSource spine_source(int n);

/// ∫ of H[0] ← H[1] → H[3] ← H[1] → H[0] with maps !, d³d¹, d⁰d¹, !,
/// with the comparison to H[0].
LocalizationSource completeness_source();

/// Natural transformation between Cat-valued diagrams over the same shape.
using NatTrans = std::vector<FinFunctor>;

std::vector<std::string> validate_natural(const CatDiagram& from, const CatDiagram& to, const NatTrans& alpha);

/// ∫α: ∫D → ∫E.
FinFunctor grothendieck_map(const CatDiagram& from, const CatDiagram& to, const NatTrans& alpha,
                            const Grothendieck& gfrom, const Grothendieck& gto);

struct PullbackVerdict {
  bool preserved = false;
  std::size_t lhs_objects = 0;
  std::size_t lhs_morphisms = 0;
  std::size_t rhs_objects = 0;
  std::size_t rhs_morphisms = 0;
  std::string detail;
};

/// Compares ∫(D1 ×_{D3} D2) with ∫D1 ×_{∫D3} ∫D2 through the canonical
/// comparison functor. Throws DomainError if α or β is not natural.
PullbackVerdict check_pullback_preservation(const CatDiagram& d1, const CatDiagram& d2, const CatDiagram& d3,
                                            const NatTrans& alpha, const NatTrans& beta);

}  // namespace dblcat
