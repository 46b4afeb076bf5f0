#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblcat/fincat.hpp"

namespace dblcat {

/// Finite poset storing the full ≤ relation as a dense matrix.
class FinPoset {
 public:
  FinPoset() = default;

  /// Reflexive-transitive closure of `relations` (pairs a ≤ b by index).
  /// Throws DomainError if the closure is not antisymmetric.
  static FinPoset from_relations(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  /// Takes `leq` (row-major, n×n) as the complete relation; throws
  /// DomainError listing the first violated poset axiom.
  static FinPoset from_matrix(std::vector<std::string> labels, const std::vector<std::uint8_t>& leq);

  /// Same contract as from_matrix; `leq(a, b)` is queried once per pair.
  static FinPoset from_predicate(std::vector<std::string> labels,
                                 const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const noexcept { return labels_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;

  /// Covering pairs a ⋖ b, derived on demand.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Thin category with one morphism "a<=b" per relation; morphisms are
  /// ordered by (a, b) lexicographically.
  FinCat as_category() const;
  /// Index of the morphism a ≤ b in as_category().
  MorId relation_morphism(std::size_t a, std::size_t b) const;

 private:
  void index_relations();

  std::vector<std::string> labels_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<MorId> rel_index_;
};

/// Violated poset axioms of an n×n relation, one line each.
std::vector<std::string> partial_order_violations(std::size_t n, const std::vector<std::uint8_t>& leq);

/// Injective order-preserving map P → Q.
class PosetInclusion {
 public:
  /// Throws DomainError if `embedding` is not injective or not monotone.
  PosetInclusion(FinPoset sub, FinPoset ambient, std::vector<std::size_t> embedding);

  /// Full subposet of `ambient` on `elements` (ambient indices, kept in the given order).
  static PosetInclusion full_subposet(const FinPoset& ambient, std::vector<std::size_t> elements);

  /// Embedding that matches elements by label.
  static PosetInclusion by_labels(FinPoset sub, FinPoset ambient);

  const FinPoset& sub() const noexcept { return sub_; }
  const FinPoset& ambient() const noexcept { return ambient_; }
  const std::vector<std::size_t>& embedding() const noexcept { return embedding_; }
  std::size_t image(std::size_t p) const { return embedding_[p]; }
  /// Preimage of an ambient element, if it lies in the image.
  std::optional<std::size_t> preimage(std::size_t q) const;
  /// Ambient elements outside the image, ascending.
  std::vector<std::size_t> complement() const;

 private:
  FinPoset sub_;
  FinPoset ambient_;
  std::vector<std::size_t> embedding_;
  std::vector<std::size_t> preimage_;
};

/// Full and down-closed.
bool is_sieve(const PosetInclusion& inc);

/// Any p₁, p₂ ∈ P below q ∈ Q have some p ∈ P with p₁, p₂ ≤ p ≤ q.
/// Throws DomainError when the inclusion is not a sieve.
bool is_weakly_solid(const PosetInclusion& inc);

/// The chain 0 < 1 < ... < n.
FinPoset chain_poset(int n);

}  // namespace dblcat
