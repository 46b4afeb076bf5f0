#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dblcat/dblcat.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/poset.hpp"

namespace dblcat {

/// Pushout of C × P → A along C × P ⊆ C × Q, for a finite set C.
///
/// `f` is a functor out of product(discrete_category(c), P.as_category()).
struct SievePushoutSpec {
  std::vector<std::string> c;
  PosetInclusion inc;
  CatRef a;
  FinFunctor f;
};

/// Pushout of C ⊠ P → 𝔸 along C ⊠ P ⊆ C ⊠ Q.
///
/// `f` is a double functor out of box(*c, P.as_category()).
struct DblSievePushoutSpec {
  CatRef c;
  PosetInclusion inc;
  DblRef a;
  DblFunctor f;
};

/// Raw presentation a → F(c, p) → (c, q) of a formal morphism; p indexes P,
/// q indexes Q and lies outside P.
struct FormalCell {
  MorId u = 0;
  std::size_t c = 0;
  std::size_t p = 0;
  std::size_t q = 0;

  auto operator<=>(const FormalCell&) const = default;
};

enum class CellKind { from_a, adjoined, formal };

/// Description of one morphism of a sieve pushout.
///
/// from_a: `a_morphism`. adjoined: (c, q ≤ q_to) with q, q_to outside P.
/// formal: the class of `formal`, whose members are listed in `members`.
struct PushoutCell {
  CellKind kind = CellKind::from_a;
  MorId a_morphism = kInvalidId;
  std::size_t c = 0;
  std::size_t q = 0;
  std::size_t q_to = 0;
  FormalCell formal;
  std::vector<FormalCell> members;
};

struct SievePushout {
  CatRef category;
  CatRef cq;
  /// A → result and C × Q → result.
  FinFunctor from_a;
  FinFunctor from_cq;
  /// One entry per morphism of `category`; objects of A come first with
  /// their indices unchanged, and so do the morphisms of A.
  std::vector<PushoutCell> cells;
  /// (c, q) for each adjoined object, in order after the objects of A.
  std::vector<std::pair<std::size_t, std::size_t>> adjoined_pairs;

  ObjId adjoined_object(std::size_t c, std::size_t q) const;
  MorId adjoined_morphism(std::size_t c, std::size_t q, std::size_t q_to) const;
  /// The morphism presented by a raw formal cell.
  MorId formal_morphism(const FormalCell& cell) const;

  std::map<std::pair<std::size_t, std::size_t>, ObjId> adjoined_objects;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, MorId> adjoined_morphisms;
  std::map<FormalCell, MorId> formal_morphisms;
};

/// Explicit pushout along a sieve: objects of A and pairs (c, q) with
/// q ∈ Q ∖ P; morphisms from A, adjoined (c, q ≤ q′), and formal composites
/// a → F(c, p) → (c, q) identified along the relations of C × P.
/// Throws DomainError unless the inclusion is a sieve and `f` is a functor
/// out of C × P.
SievePushout pushout_cat_sieve(const SievePushoutSpec& spec);

/// The pairwise criterion for equality of two formal presentations with the
/// same source and target: (i) a common p ∈ P with p₁, p₂ ≤ p ≤ q after which
/// the composites into F(c, p) agree, or (ii) a common p ≤ p₁, p₂ and a
/// morphism a → F(c, p) through which both factor.
bool type3_equal(const SievePushoutSpec& spec, const FormalCell& m1, const FormalCell& m2);

struct DblSievePushout {
  DblRef dbl;
  DblRef cq;
  DblFunctor from_a;
  DblFunctor from_cq;
  /// Vertical part (objects and vertical morphisms) and horizontal part
  /// (horizontal morphisms and squares), both sieve pushouts: the first
  /// over Ob C, the second over Mor C.
  SievePushout vertical;
  SievePushout horizontal;
};

/// Explicit pushout of double categories along C ⊠ P ⊆ C ⊠ Q. Squares are
/// squares of 𝔸, adjoined squares (f, q ≤ q′), and formal composites of a
/// square of 𝔸 with F(f, p) → (f, q). Throws DomainError unless the sieve is
/// weakly solid.
DblSievePushout pushout_dbl_box_sieve(const DblSievePushoutSpec& spec);

struct LevelVerdict {
  int m = 0;
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::size_t expected_objects = 0;
  std::size_t expected_morphisms = 0;
  bool isomorphic = false;
  std::string detail;
};

/// For each m ≤ m_max, compares N^h(pushout)_m with the sieve pushout of
/// N^h(𝔸)_m along (m-paths of C) × (P ⊆ Q) through the canonical comparison
/// functor, and records whether it is an isomorphism.
std::vector<LevelVerdict> verify_nerve_preserves_pushout(const DblSievePushoutSpec& spec, int m_max);

/// C = [0], P = {0} ⊆ Q = [1], 𝔸 = [1] ⊠ [0], F = d¹ ⊠ id.
DblSievePushoutSpec counterexample_spec();

/// Identity spec: 𝔸 = C ⊠ P and F the identity.
DblSievePushoutSpec identity_spec(const FinCat& c, const PosetInclusion& inc);

}  // namespace dblcat
