#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/bisset.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/nerve.hpp"

namespace dblcat {

/// A double category stored as an internal category (A0, A1, s, t, i, c).
///
/// Objects and vertical morphisms form A0; horizontal morphisms and squares
/// form A1. Horizontal composition c is a functor on the pullback
/// A1 ×_{A0} A1 of pairs (x, y) with t(x) = s(y): x is the left factor.
/// Members are public so that corrupted copies can be made for testing the
/// validator; treat values as immutable.
struct FinDblCat {
  CatRef a0;
  CatRef a1;
  FinFunctor s;
  FinFunctor t;
  FinFunctor i;
  Pullback pairs;
  FinFunctor c;

  std::size_t num_objects() const { return a0->num_objects(); }
  std::size_t num_horizontals() const { return a1->num_objects(); }
  std::size_t num_verticals() const { return a0->num_morphisms(); }
  std::size_t num_squares() const { return a1->num_morphisms(); }
  std::size_t num_nonidentity_horizontals() const;
  std::size_t num_nonidentity_verticals() const { return a0->num_nonidentity_morphisms(); }
  /// Squares that are neither A1 identities nor i(vertical).
  std::size_t num_nondegenerate_squares() const;
  bool is_identity_horizontal(ObjId h) const;
  bool is_degenerate_square(MorId sq) const;

  /// c(h, k) for horizontals with t(h) = s(k).
  std::optional<ObjId> compose_horizontal(ObjId h, ObjId k) const;
  /// c(x, y) for squares with t(x) = s(y).
  std::optional<MorId> compose_squares(MorId x, MorId y) const;
};

using DblRef = std::shared_ptr<const FinDblCat>;
inline DblRef share(FinDblCat a) { return std::make_shared<const FinDblCat>(std::move(a)); }

/// Assembles a double category; `compose(x, y)` gives c on square pairs with
/// t(x) = s(y), and c on horizontals is read off from identity squares.
/// Does not validate; call validate_double_category.
FinDblCat make_double_category(CatRef a0, CatRef a1, FinFunctor s, FinFunctor t, FinFunctor i,
                               const std::function<MorId(MorId x, MorId y)>& compose);

/// Every violated axiom, one line each, tagged "[category]", "[functor]",
/// "[source/target]", "[unit]", "[associativity]", "[interchange]" or
/// "[missing composite]" and naming the cells involved. Empty iff valid.
std::vector<std::string> validate_double_category(const FinDblCat& a);

struct DblFunctor {
  DblRef source;
  DblRef target;
  FinFunctor f0;
  FinFunctor f1;
};

std::vector<std::string> validate(const DblFunctor& g);
DblFunctor identity_dbl_functor(const DblRef& a);
DblFunctor compose(const DblFunctor& g, const DblFunctor& f);

/// H C: discrete vertical direction, horizontals = morphisms of C.
FinDblCat h_embed(const FinCat& c);
/// V C: A0 = A1 = C and s = t = i = id.
FinDblCat v_embed(const FinCat& c);
/// Componentwise product; A0 and A1 follow the index contract of product().
FinDblCat product(const FinDblCat& a, const FinDblCat& b);
/// C ⊠ D = H C × V D.
FinDblCat box(const FinCat& c, const FinCat& d);

/// Horizontal category: objects and horizontal morphisms.
FinCat underlying_h(const FinDblCat& a);
/// Vertical category A0.
FinCat underlying_v(const FinDblCat& a);

/// H F and V F for a functor F.
DblFunctor h_functor(const FinFunctor& f, const DblRef& hsrc, const DblRef& htgt);
DblFunctor v_functor(const FinFunctor& f, const DblRef& vsrc, const DblRef& vtgt);
/// F ⊠ G between box products built with box().
DblFunctor box_functor(const FinFunctor& f, const FinFunctor& g, const DblRef& src, const DblRef& tgt);
/// Horizontal part of a double functor, between underlying_h categories.
FinFunctor underlying_h_functor(const DblFunctor& g, const CatRef& src, const CatRef& tgt);
/// Unit C → underlying_h(H C) and counit H(underlying_h A) → A.
FinFunctor unit_h(const CatRef& c, const CatRef& uhc);
DblFunctor counit_h(const DblRef& h_of_underlying, const DblRef& a);
/// Unit C → underlying_v(V C) and counit V(A0) → A.
FinFunctor unit_v(const CatRef& c, const CatRef& uvc);
DblFunctor counit_v(const DblRef& v_of_a0, const DblRef& a);

/// Level m of the horizontal nerve: the category of m composable horizontal
/// morphisms and horizontally composable squares (level 0 is A0).
struct HNerveLevel {
  CatRef category;
  int m = 0;
  std::vector<std::vector<ObjId>> object_tuples;   // A0 objects at m = 0, else A1 objects
  std::vector<std::vector<MorId>> morphism_tuples;
};

HNerveLevel horizontal_nerve_level(const FinDblCat& a, int m);

/// Levels 0..m_max with face and degeneracy functors.
struct HorizontalNerve {
  std::vector<HNerveLevel> levels;
  std::vector<std::vector<FinFunctor>> faces;   // faces[m][i]: level m → m−1
  std::vector<std::vector<FinFunctor>> degens;  // degens[m][i]: level m → m+1, m < m_max
};

HorizontalNerve horizontal_nerve(const FinDblCat& a, int m_max);

/// Functor between horizontal-nerve levels induced by a double functor.
FinFunctor horizontal_nerve_functor(const DblFunctor& g, const HNerveLevel& src, const HNerveLevel& tgt);

/// ([n],[k]) ↦ N(N^h_n A)_k.
struct DoubleNerve {
  HorizontalNerve horizontal;
  std::vector<CategoryNerve> columns;
  BiTruncSSet bisset;
};

DoubleNerve double_nerve(const FinDblCat& a, int n_max, int k_max);

/// Map of double nerves induced by g, restricted to the diagonal.
SimplicialMap diag_map(const DblFunctor& g, const DoubleNerve& src, const DoubleNerve& tgt,
                       const SSetRef& diag_src, const SSetRef& diag_tgt);

// --- fixtures for the validator --------------------------------------------

/// One object, one horizontal (the identity), squares {id, e} with e∘e = e
/// vertically and horizontally. Squares can be distinguished only by
/// composition, so corruptions of c do not disturb any boundary.
FinDblCat idempotent_double_category();

enum class Corruption { interchange, left_unit, right_unit, source, target };
std::string to_string(Corruption k);
/// A copy of a valid fixture with exactly one table entry changed.
FinDblCat corrupted_fixture(Corruption kind);

}  // namespace dblcat
