#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dblcat/common.hpp"

namespace dblcat {

/// A finite category with globally indexed objects and morphisms.
///
/// Composition is stored densely over composable pairs: for every morphism f
/// there is one slot per morphism leaving tgt(f). Instances are immutable once
/// built; use FinCatBuilder to construct them.
class FinCat {
 public:
  FinCat() = default;

  std::size_t num_objects() const noexcept { return obj_labels_.size(); }
  std::size_t num_morphisms() const noexcept { return mor_labels_.size(); }
  std::size_t num_nonidentity_morphisms() const noexcept {
    return num_morphisms() - num_objects();
  }

  ObjId src(MorId f) const { return src_[f]; }
  ObjId tgt(MorId f) const { return tgt_[f]; }
  MorId identity(ObjId x) const { return id_[x]; }
  bool is_identity(MorId f) const { return id_[src_[f]] == f; }

  /// g ∘ f, or nullopt when tgt(f) != src(g).
  std::optional<MorId> compose(MorId g, MorId f) const;
  /// g ∘ f for a pair already known to be composable.
  MorId compose_unchecked(MorId g, MorId f) const { return comp_[f][out_pos_[g]]; }

  std::span<const MorId> out_morphisms(ObjId x) const { return out_[x]; }
  std::span<const MorId> in_morphisms(ObjId x) const { return in_[x]; }
  std::vector<MorId> hom(ObjId a, ObjId b) const;

  const std::string& object_label(ObjId x) const { return obj_labels_[x]; }
  const std::string& morphism_label(MorId f) const { return mor_labels_[f]; }
  std::optional<ObjId> find_object(const std::string& label) const;
  std::optional<MorId> find_morphism(const std::string& label) const;

  /// Number of composable pairs (size of the composition table).
  std::size_t num_composable_pairs() const noexcept { return num_pairs_; }

  /// Copy with one table entry overwritten. The result is generally not a
  /// category; it exists so that validate() can be exercised on corruptions.
  FinCat with_composite(MorId g, MorId f, MorId gf) const;

 private:
  friend class FinCatBuilder;

  std::vector<std::string> obj_labels_;
  std::vector<std::string> mor_labels_;
  std::vector<ObjId> src_;
  std::vector<ObjId> tgt_;
  std::vector<MorId> id_;
  std::vector<std::vector<MorId>> out_;
  std::vector<std::vector<MorId>> in_;
  std::vector<std::uint32_t> out_pos_;
  std::vector<std::vector<MorId>> comp_;
  std::unordered_map<std::string, ObjId> obj_index_;
  std::unordered_map<std::string, MorId> mor_index_;
  std::size_t num_pairs_ = 0;
};

using CatRef = std::shared_ptr<const FinCat>;

inline CatRef share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

/// Incremental constructor for FinCat.
///
/// Composites with an identity default to the unit law; every other
/// composable pair needs either an explicit entry or a composition rule.
class FinCatBuilder {
 public:
  using CompositionRule = std::function<MorId(MorId g, MorId f)>;

  ObjId add_object(std::string label);
  /// Adds an object together with its identity morphism "id_<label>".
  ObjId add_object_with_identity(std::string label);
  MorId add_morphism(std::string label, ObjId src, ObjId tgt);
  void set_identity(ObjId x, MorId f);
  void set_composite(MorId g, MorId f, MorId gf);

  std::size_t num_objects() const noexcept { return cat_.obj_labels_.size(); }
  std::size_t num_morphisms() const noexcept { return cat_.mor_labels_.size(); }
  MorId identity(ObjId x) const { return cat_.id_[x]; }

  /// Throws DomainError on duplicate labels, missing identities, or a
  /// composable pair left undefined.
  FinCat build(const CompositionRule& rule = {}) &&;

 private:
  FinCat cat_;
  std::unordered_map<std::uint64_t, MorId> explicit_;
};

/// Lists every violated category law with a witness; empty iff valid.
std::vector<std::string> validate(const FinCat& c);

/// Functor between finite categories.
struct FinFunctor {
  CatRef source;
  CatRef target;
  std::vector<ObjId> on_objects;
  std::vector<MorId> on_morphisms;

  ObjId obj(ObjId x) const { return on_objects[x]; }
  MorId mor(MorId f) const { return on_morphisms[f]; }
};

bool operator==(const FinFunctor& a, const FinFunctor& b);

std::vector<std::string> validate(const FinFunctor& f);
FinFunctor identity_functor(const CatRef& c);
/// g ∘ f.
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);
/// Bijective on objects and morphisms and a valid functor.
bool is_isomorphism(const FinFunctor& f);
/// Inverse of an isomorphism; throws DomainError otherwise.
FinFunctor inverse(const FinFunctor& f);

/// The chain [n] = {0 < 1 < ... < n} as a category; morphisms "i<=j".
FinCat chain_category(int n);
FinCat discrete_category(const std::vector<std::string>& labels);
FinCat terminal_category();

/// Object (x, y) has index x * |Ob D| + y; morphism (f, g) has index
/// f * |Mor D| + g.
FinCat product(const FinCat& c, const FinCat& d);
inline ObjId product_object(const FinCat& d, ObjId x, ObjId y) {
  return static_cast<ObjId>(x * d.num_objects() + y);
}
inline MorId product_morphism(const FinCat& d, MorId f, MorId g) {
  return static_cast<MorId>(f * d.num_morphisms() + g);
}
FinFunctor product_projection(const CatRef& product_cat, const CatRef& c, const CatRef& d,
                              int which);
/// Functor f × g between products built with product().
FinFunctor product_functor(const FinFunctor& f, const FinFunctor& g, const CatRef& source,
                           const CatRef& target);

/// Objects of c first, then objects of d.
FinCat coproduct(const FinCat& c, const FinCat& d);

struct Pullback {
  CatRef category;
  std::vector<std::pair<ObjId, ObjId>> objects;
  std::vector<std::pair<MorId, MorId>> morphisms;
  FinFunctor first;
  FinFunctor second;

  std::optional<ObjId> object_of(ObjId a, ObjId b) const;
  std::optional<MorId> morphism_of(MorId f, MorId g) const;

  std::map<std::pair<ObjId, ObjId>, ObjId> object_index;
  std::map<std::pair<MorId, MorId>, MorId> morphism_index;
};

/// Strict pullback of F: A → C ← B: G, ordered lexicographically by pairs.
/// Throws DomainError when F and G have different targets.
Pullback pullback(const FinFunctor& f, const FinFunctor& g);
/// Subcategory of A × B on the listed pairs, kept in the given order.
/// Throws DomainError if the pairs are not closed under identities and composition.
Pullback pullback_of_pairs(const CatRef& a, const CatRef& b, std::vector<std::pair<ObjId, ObjId>> objects,
                           std::vector<std::pair<MorId, MorId>> morphisms);

/// Functor between chain categories given by a monotone map of vertices.
FinFunctor monotone_functor(const CatRef& chain_src, const CatRef& chain_tgt,
                            const std::vector<int>& values);

/// Functor into a thin category determined by its object map.
FinFunctor functor_into_thin(const CatRef& src, const CatRef& tgt, std::vector<ObjId> on_objects);

/// Constant functor at object `x` of tgt.
FinFunctor constant_functor(const CatRef& src, const CatRef& tgt, ObjId x);

/// Free category on a finite acyclic graph; morphisms are paths.
FinCat free_category(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<ObjId, ObjId>>& edges);

/// Calls `visit` for every functor src → tgt, in lexicographic order of the
/// object and morphism assignments; stops early when `visit` returns false.
void for_each_functor(const CatRef& src, const CatRef& tgt,
                      const std::function<bool(const FinFunctor&)>& visit);

}  // namespace dblcat
