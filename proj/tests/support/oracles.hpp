#pragma once

// Brute-force reference computations, written directly from the definitions
// and sharing no code paths with the library beyond the data structures.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dblcat/dblcat.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/groth.hpp"
#include "dblcat/poset.hpp"
#include "dblcat/pushout.hpp"
#include "dblcat/subdivision.hpp"

namespace oracle {

using namespace dblcat;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Weakly increasing sequences of length k + 1 in {0, ..., n}.
inline std::uint64_t chain_nerve_count(int n, int k) {
  std::uint64_t count = 0;
  std::function<void(int, int)> go = [&](int len, int lo) {
    if (len == k + 1) {
      ++count;
      return;
    }
    for (int v = lo; v <= n; ++v) go(len + 1, v);
  };
  go(0, 0);
  return count;
}

/// Whether a face (vertex bitmask) of Δ[k] lies in the shape.
inline bool allowed(const Shape& s, std::uint32_t mask) {
  const std::uint32_t full = (1u << (s.k + 1)) - 1;
  if (mask == 0) return false;
  switch (s.kind) {
    case ShapeKind::simplex: return true;
    case ShapeKind::boundary: return mask != full;
    case ShapeKind::horn: return mask != full && mask != (full & ~(1u << s.t));
  }
  return false;
}

/// Strict chains of allowed faces, enumerated by depth-first search.
inline std::uint64_t csd2_size(const Shape& s) {
  const std::uint32_t full = (1u << (s.k + 1)) - 1;
  std::uint64_t count = 0;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t top) {
    ++count;
    for (std::uint32_t m = 1; m <= full; ++m)
      if (allowed(s, m) && (m & top) == top && m != top) extend(m);
  };
  for (std::uint32_t m = 1; m <= full; ++m)
    if (allowed(s, m)) extend(m);
  return count;
}

inline bool is_sieve(const PosetInclusion& inc) {
  const FinPoset& p = inc.sub();
  const FinPoset& q = inc.ambient();
  std::vector<bool> in(q.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) in[inc.image(x)] = true;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (q.leq(inc.image(a), inc.image(b)) != p.leq(a, b)) return false;
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      if (in[y] && q.leq(x, y) && !in[x]) return false;
  return true;
}

inline bool is_weakly_solid(const PosetInclusion& inc) {
  const FinPoset& q = inc.ambient();
  const std::size_t np = inc.sub().size();
  for (std::size_t top = 0; top < q.size(); ++top)
    for (std::size_t a = 0; a < np; ++a)
      for (std::size_t b = 0; b < np; ++b) {
        const std::size_t qa = inc.image(a), qb = inc.image(b);
        if (!q.leq(qa, top) || !q.leq(qb, top)) continue;
        bool found = false;
        for (std::size_t c = 0; c < np && !found; ++c) {
          const std::size_t qc = inc.image(c);
          found = q.leq(qa, qc) && q.leq(qb, qc) && q.leq(qc, top);
        }
        if (!found) return false;
      }
  return true;
}

/// Every functor src → tgt, by backtracking over objects then morphisms.
inline std::vector<FinFunctor> all_functors(const CatRef& src, const CatRef& tgt) {
  std::vector<FinFunctor> out;
  const FinCat& a = *src;
  const FinCat& b = *tgt;
  std::vector<ObjId> objs(a.num_objects());
  std::vector<MorId> mors(a.num_morphisms(), kInvalidId);
  std::function<void(MorId)> assign_mor = [&](MorId f) {
    if (f == a.num_morphisms()) {
      for (MorId g = 0; g < a.num_morphisms(); ++g)
        for (MorId h : a.out_morphisms(a.tgt(g)))
          if (b.compose(mors[h], mors[g]) != mors[a.compose_unchecked(h, g)]) return;
      out.push_back(FinFunctor{src, tgt, objs, mors});
      return;
    }
    if (a.is_identity(f)) {
      mors[f] = b.identity(objs[a.src(f)]);
      assign_mor(f + 1);
      return;
    }
    for (MorId g : b.hom(objs[a.src(f)], objs[a.tgt(f)])) {
      mors[f] = g;
      assign_mor(f + 1);
    }
  };
  std::function<void(ObjId)> assign_obj = [&](ObjId x) {
    if (x == a.num_objects()) {
      assign_mor(0);
      return;
    }
    for (ObjId y = 0; y < b.num_objects(); ++y) {
      objs[x] = y;
      assign_obj(x + 1);
    }
  };
  assign_obj(0);
  return out;
}

struct Counts {
  std::size_t objects = 0;
  std::size_t nonidentity_verticals = 0;
  std::size_t nonidentity_horizontals = 0;
  std::size_t nondegenerate_squares = 0;
};

/// Cell counts of ∫F read off the definition: (j, x) for objects and
/// (s, x, u: F(s)x → x′) for morphisms, once in A0 and once in A1.
inline Counts grothendieck_counts(const DblDiagram& d) {
  const FinCat& shape = *d.shape;
  Counts c;
  std::size_t verticals = 0, horizontals = 0, squares = 0, identity_verticals = 0;
  for (ObjId j = 0; j < shape.num_objects(); ++j) {
    c.objects += d.values[j]->num_objects();
    horizontals += d.values[j]->num_horizontals();
    identity_verticals += d.values[j]->num_objects();
  }
  for (MorId s = 0; s < shape.num_morphisms(); ++s) {
    const FinDblCat& from = *d.values[shape.src(s)];
    const FinDblCat& to = *d.values[shape.tgt(s)];
    for (ObjId x = 0; x < from.num_objects(); ++x) verticals += to.a0->out_morphisms(d.action[s].f0.obj(x)).size();
    for (ObjId h = 0; h < from.num_horizontals(); ++h) squares += to.a1->out_morphisms(d.action[s].f1.obj(h)).size();
  }
  std::size_t identity_horizontals = 0;
  for (ObjId j = 0; j < shape.num_objects(); ++j)
    for (ObjId h = 0; h < d.values[j]->num_horizontals(); ++h)
      identity_horizontals += d.values[j]->is_identity_horizontal(h) ? 1 : 0;
  c.nonidentity_verticals = verticals - identity_verticals;
  c.nonidentity_horizontals = horizontals - identity_horizontals;
  // degenerate squares: identities of A1 (one per horizontal) and i(v) for v non-identity
  c.nondegenerate_squares = squares - horizontals - c.nonidentity_verticals;
  return c;
}

/// Every poset on {0, …, n−1} in which a ≤ b implies a ≤ b as integers.
/// Each finite poset has a linear extension, so this meets every
/// isomorphism class.
inline std::vector<FinPoset> natural_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<FinPoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::uint8_t> m(n * n, 0);
    for (int a = 0; a < n; ++a) m[a * n + a] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) m[slots[s].first * n + slots[s].second] = 1;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int c = 0; c < n && transitive; ++c)
          if (m[a * n + b] && m[b * n + c] && !m[a * n + c]) transitive = false;
    if (transitive) out.push_back(FinPoset::from_matrix(labels, m));
  }
  return out;
}

/// One poset from each isomorphism class on n elements.
inline std::vector<FinPoset> poset_classes(int n) {
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<FinPoset> out;
  for (FinPoset& q : natural_posets(n)) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    do {
      std::vector<std::uint8_t> key(n * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) key[perm[a] * n + perm[b]] = q.leq(a, b) ? 1 : 0;
      if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(std::move(q));
  }
  return out;
}

/// Down-closed subsets of q as sorted element lists, excluding the empty set
/// and q itself.
inline std::vector<std::vector<std::size_t>> proper_down_sets(const FinPoset& q) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = q.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    bool down = true;
    for (std::size_t x = 0; x < n && down; ++x)
      for (std::size_t y = 0; y < n && down; ++y)
        if ((mask >> y & 1) && q.leq(x, y) && !(mask >> x & 1)) down = false;
    if (!down) continue;
    std::vector<std::size_t> els;
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1) els.push_back(x);
    out.push_back(els);
  }
  return out;
}

/// Edge indices of a free-category morphism, read from its "e0.e2" label.
inline std::vector<std::size_t> path_of(const FinCat& j, MorId s) {
  std::vector<std::size_t> out;
  if (j.is_identity(s)) return out;
  const std::string& l = j.morphism_label(s);
  std::size_t pos = 0;
  while (pos < l.size()) {
    const std::size_t dot = l.find('.', pos);
    out.push_back(std::stoul(l.substr(pos + 1, dot == std::string::npos ? std::string::npos : dot - pos - 1)));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return out;
}

}  // namespace oracle
