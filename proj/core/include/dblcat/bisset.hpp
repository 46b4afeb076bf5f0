#pragma once

#include <string>
#include <vector>

#include "dblcat/sset.hpp"

namespace dblcat {

/// Bisimplicial set truncated at n_max horizontally and k_max vertically.
///
/// Cells at ([n],[k]) are indexed per position. Horizontal operators act on
/// n and keep k; vertical operators act on k and keep n.
struct BiTruncSSet {
  using Table = std::vector<std::vector<std::vector<std::vector<SimplexId>>>>;  // [n][k][x][i]

  int n_max = 0;
  int k_max = 0;
  std::vector<std::vector<std::vector<std::string>>> labels;  // [n][k][x]
  Table h_faces, h_degens, v_faces, v_degens;

  std::size_t count(int n, int k) const { return labels[n][k].size(); }

  /// Column n: the vertical simplicial set ([k] ↦ cells at ([n],[k])).
  SSetTables column(int n) const;
  /// Row k: the horizontal simplicial set ([n] ↦ cells at ([n],[k])).
  SSetTables row(int k) const;
};

/// Simplicial identities in every row and column, and commutation of
/// horizontal with vertical operators. Empty iff valid.
std::vector<std::string> validate(const BiTruncSSet& b);

/// Assembles a bisimplicial set from its columns and the horizontal
/// operators, given as maps between columns: h_face_maps[n][i] is d_i from
/// column n to column n−1 (per level k, per cell), h_degen_maps[n][i] is s_i
/// from column n to column n+1.
BiTruncSSet bisset_from_columns(
    const std::vector<SSetRef>& columns,
    const std::vector<std::vector<std::vector<std::vector<SimplexId>>>>& h_face_maps,
    const std::vector<std::vector<std::vector<std::vector<SimplexId>>>>& h_degen_maps);

/// Cells at ([n],[n]) with d_i = d^h_i d^v_i and s_i = s^h_i s^v_i.
/// Throws DomainError unless n_max = k_max.
TruncSSet diag(const BiTruncSSet& b);

/// The bisimplicial set constant in the vertical direction.
BiTruncSSet vertically_constant(const TruncSSet& x, int k_max);

}  // namespace dblcat
