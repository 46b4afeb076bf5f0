#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dblcat/common.hpp"

namespace dblcat {

using SimplexId = std::uint32_t;
/// Monotone map [m] → [k], listed as its values θ(0), …, θ(m).
using Operator = std::vector<int>;

/// Raw tables of a truncated simplicial set.
///
/// faces[k][x][i] = d_i x for 1 ≤ k ≤ d (faces[0] is empty per simplex);
/// degens[k][x][i] = s_i x for 0 ≤ k < d (degens[d] is empty per simplex).
struct SSetTables {
  int trunc = 0;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<SimplexId>>> faces;
  std::vector<std::vector<std::vector<SimplexId>>> degens;
};

/// Every violated simplicial identity (and table shape error), one line each.
std::vector<std::string> simplicial_identity_violations(const SSetTables& t);

/// Simplicial set truncated at dimension d.
///
/// Every simplex carries its Eilenberg–Zilber decomposition x = η^* y with
/// y nondegenerate and η a surjection; act() evaluates arbitrary monotone
/// operators within the truncation range.
class TruncSSet {
 public:
  struct EZ {
    int base_level = 0;
    SimplexId base = 0;
    Operator surjection;  // [k] → [base_level]
  };

  TruncSSet() = default;
  /// Throws DomainError if the tables violate a simplicial identity.
  static TruncSSet from_tables(SSetTables tables);

  int trunc() const noexcept { return t_.trunc; }
  std::size_t count(int k) const { return t_.labels[k].size(); }
  std::size_t total_count() const;
  SimplexId face(int k, SimplexId x, int i) const { return t_.faces[k][x][i]; }
  SimplexId degen(int k, SimplexId x, int i) const { return t_.degens[k][x][i]; }
  const std::string& label(int k, SimplexId x) const { return t_.labels[k][x]; }
  std::optional<SimplexId> find(int k, const std::string& label) const;

  bool is_degenerate(int k, SimplexId x) const { return ez_[k][x].base_level != k; }
  const EZ& decomposition(int k, SimplexId x) const { return ez_[k][x]; }
  std::vector<SimplexId> nondegenerate(int k) const;
  std::vector<std::size_t> nondegenerate_counts() const;

  /// θ^* x for a monotone θ: [m] → [k] with m ≤ d.
  SimplexId act(int k, SimplexId x, const Operator& theta) const;
  /// Vertices x(0), …, x(k).
  std::vector<SimplexId> vertices(int k, SimplexId x) const;

  const SSetTables& tables() const noexcept { return t_; }

 private:
  SSetTables t_;
  std::vector<std::vector<EZ>> ez_;
  std::vector<std::unordered_map<std::string, SimplexId>> index_;
};

using SSetRef = std::shared_ptr<const TruncSSet>;
inline SSetRef share(TruncSSet x) { return std::make_shared<const TruncSSet>(std::move(x)); }

bool operator==(const TruncSSet& a, const TruncSSet& b);

/// Levelwise disjoint union; simplices of part j are labelled "j:label".
TruncSSet disjoint_union(const std::vector<TruncSSet>& parts);

/// Restriction to dimensions ≤ d.
TruncSSet truncate(const TruncSSet& x, int d);

/// Level-preserving map commuting with faces and degeneracies.
struct SimplicialMap {
  SSetRef source;
  SSetRef target;
  std::vector<std::vector<SimplexId>> levels;

  SimplexId operator()(int k, SimplexId x) const { return levels[k][x]; }
};

std::vector<std::string> validate(const SimplicialMap& f);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap identity_map(const SSetRef& x);

/// Map determined by its values on nondegenerate simplices, extended by the
/// EZ decomposition. on_nondegenerate[k][x] is read only for nondegenerate x.
/// Throws DomainError if the result is not simplicial.
SimplicialMap map_from_nondegenerate(const SSetRef& source, const SSetRef& target,
                                     const std::vector<std::vector<SimplexId>>& on_nondegenerate);

/// Searches for a level-wise bijective simplicial map. Used in tests to
/// compare fixtures with differing labels; exhaustive, meant for small inputs.
std::optional<SimplicialMap> find_isomorphism(const SSetRef& a, const SSetRef& b);

// --- operators on [n] ------------------------------------------------------

/// θ ∘ η as maps (apply η first).
Operator compose_operators(const Operator& theta, const Operator& eta);
/// Coface δ^i: [k−1] → [k] (skips i).
Operator coface(int k, int i);
/// Codegeneracy σ^i: [k+1] → [k] (repeats i).
Operator codegeneracy(int k, int i);
/// All monotone maps [m] → [k], lexicographic.
std::vector<Operator> monotone_maps(int m, int k);

/// Builds tables from per-level keys and face/degeneracy rules on keys.
/// `face(k, key, i)` and `degen(k, key, i)` must return keys present at the
/// adjacent level.
template <typename Key, typename Hash, typename FaceFn, typename DegenFn, typename LabelFn>
SSetTables tables_from_keys(int d, const std::vector<std::vector<Key>>& levels, FaceFn face,
                            DegenFn degen, LabelFn label) {
  SSetTables t;
  t.trunc = d;
  t.labels.resize(d + 1);
  t.faces.resize(d + 1);
  t.degens.resize(d + 1);
  std::vector<std::unordered_map<Key, SimplexId, Hash>> index(d + 1);
  for (int k = 0; k <= d; ++k) {
    for (std::size_t x = 0; x < levels[k].size(); ++x) {
      index[k].emplace(levels[k][x], static_cast<SimplexId>(x));
      t.labels[k].push_back(label(k, levels[k][x]));
    }
  }
  auto lookup = [&](int k, const Key& key) {
    auto it = index[k].find(key);
    if (it == index[k].end()) throw DomainError("simplicial operator leaves the enumerated simplices");
    return it->second;
  };
  for (int k = 0; k <= d; ++k) {
    t.faces[k].resize(levels[k].size());
    t.degens[k].resize(levels[k].size());
    for (std::size_t x = 0; x < levels[k].size(); ++x) {
      if (k > 0)
        for (int i = 0; i <= k; ++i) t.faces[k][x].push_back(lookup(k - 1, face(k, levels[k][x], i)));
      if (k < d)
        for (int i = 0; i <= k; ++i) t.degens[k][x].push_back(lookup(k + 1, degen(k, levels[k][x], i)));
    }
  }
  return t;
}

}  // namespace dblcat
