#pragma once

#include <string>

#include "dblcat/nerve.hpp"
#include "dblcat/poset.hpp"
#include "dblcat/sset.hpp"

namespace dblcat {

enum class ShapeKind { simplex, boundary, horn };

/// Δ[k], ∂Δ[k] or the horn Λᵗ[k].
struct Shape {
  ShapeKind kind = ShapeKind::simplex;
  int k = 0;
  int t = 0;

  static Shape simplex(int k) { return {ShapeKind::simplex, k, 0}; }
  static Shape boundary(int k) { return {ShapeKind::boundary, k, 0}; }
  static Shape horn(int k, int t) { return {ShapeKind::horn, k, t}; }
};

/// "simplex", "boundary" or "horn(t)" followed by "[k]".
std::string to_string(const Shape& s);
/// Throws DomainError for k < 0, or a horn with k < 1 or t outside [0, k].
void check_shape(const Shape& s);
/// Whether a face of Δ[k] with the given vertex bitmask belongs to the shape.
bool shape_contains(const Shape& s, std::uint32_t vertex_mask);

/// The shape as a simplicial set truncated at d. Simplices are monotone
/// vertex sequences, labelled by their digits ("001").
TruncSSet standard(const Shape& s, int d);

/// Nondegenerate simplices ordered by the face relation. Throws DomainError
/// unless every nondegenerate simplex has distinct vertices and is
/// determined by its vertex set.
FinPoset face_poset(const TruncSSet& x);

/// Barycentric subdivision: nerve of face_poset(x), truncated at x.trunc().
TruncSSet sd(const TruncSSet& x);

/// Strict chains I₁ ⊊ … ⊊ I_r of nonempty subsets of {0, …, k} allowed by the
/// shape, ordered by inclusion of their sets of entries. Labels read
/// "0<01<012".
FinPoset csd2_poset(const Shape& s);

/// csd2_poset(s) ⊆ csd2_poset(Δ[k]).
PosetInclusion csd2_inclusion(const Shape& s);

/// Pushout X ⨿_{Δ[0]} Y identifying vertex x0 of X with vertex y0 of Y.
/// Simplices of Y other than the glued point are labelled "label'".
TruncSSet wedge(const TruncSSet& x, SimplexId x0, const TruncSSet& y, SimplexId y0);

/// Δ[1] ⨿_{Δ[0]} Δ[1] glued along d⁰ on both sides: the zigzag 0 → 1 ← 0'.
TruncSSet interval_pushout_fixture(int d);

/// Sd(Sd(Δ[1])), the five-vertex zigzag.
TruncSSet sd2_interval(int d);

}  // namespace dblcat
