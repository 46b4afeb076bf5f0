#include "dblcat/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <boost/multiprecision/cpp_int.hpp>

#include "dblcat/nerve.hpp"
#include "dblcat/bisset.hpp"

namespace dblcat {

namespace {

using boost::multiprecision::cpp_int;
using Column = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// c ← c − k·p; returns false (leaving c untouched) on int64 overflow.
bool axpy(Column& c, std::int64_t k, const Column& p) {
  Column out;
  out.reserve(c.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < p.size()) {
    if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
      out.push_back(c[i++]);
      continue;
    }
    std::int64_t prod;
    if (__builtin_mul_overflow(k, p[j].second, &prod)) return false;
    if (i == c.size() || p[j].first < c[i].first) {
      if (prod == std::numeric_limits<std::int64_t>::min()) return false;
      out.emplace_back(p[j].first, -prod);
      ++j;
      continue;
    }
    std::int64_t v;
    if (__builtin_sub_overflow(c[i].second, prod, &v)) return false;
    if (v != 0) out.emplace_back(c[i].first, v);
    ++i;
    ++j;
  }
  c = std::move(out);
  return true;
}

/// Eliminates unit pivots; returns the number eliminated and leaves the rest
/// of the matrix (pivot rows and columns removed) in `cols`.
std::size_t unit_elimination(std::vector<Column>& cols, std::size_t nrows) {
  std::vector<std::vector<std::uint32_t>> row_cols(nrows);
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) row_cols[r].push_back(c);
  std::vector<bool> dead(cols.size(), false);
  std::size_t eliminated = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < cols.size(); ++c)
      if (!dead[c] && !cols[c].empty()) order.push_back(c);
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return cols[a].size() != cols[b].size() ? cols[a].size() < cols[b].size() : a < b; });
    for (std::uint32_t c : order) {
      if (dead[c] || cols[c].empty()) continue;
      // pivot: unit entry whose row touches the fewest live columns
      std::size_t best = SIZE_MAX;
      std::uint32_t prow = 0;
      std::int64_t pval = 0;
      for (const auto& [r, v] : cols[c]) {
        if (v != 1 && v != -1) continue;
        std::size_t live = 0;
        for (auto c2 : row_cols[r]) live += dead[c2] ? 0 : 1;
        if (live < best) {
          best = live;
          prow = r;
          pval = v;
        }
      }
      if (best == SIZE_MAX) continue;
      const Column pivot = cols[c];
      bool ok = true;
      std::vector<std::uint32_t> touched;
      for (auto c2 : row_cols[prow]) {
        if (c2 == c || dead[c2]) continue;
        auto it = std::lower_bound(cols[c2].begin(), cols[c2].end(), std::pair<std::uint32_t, std::int64_t>{prow, INT64_MIN});
        if (it == cols[c2].end() || it->first != prow) continue;
        const std::int64_t k = it->second * pval;  // pval = ±1 so a/pval = a·pval
        Column before = cols[c2];
        if (!axpy(cols[c2], k, pivot)) {
          ok = false;
          break;
        }
        for (const auto& [r, v] : cols[c2])
          if (!std::binary_search(before.begin(), before.end(), std::pair<std::uint32_t, std::int64_t>{r, INT64_MIN},
                                  [](const auto& a, const auto& b) { return a.first < b.first; }))
            row_cols[r].push_back(c2);
        touched.push_back(c2);
      }
      if (!ok) return eliminated;  // leave the rest to the dense phase
      // row prow now only meets column c: drop both
      dead[c] = true;
      for (auto c2 : touched)
        cols[c2].erase(std::remove_if(cols[c2].begin(), cols[c2].end(), [&](const auto& e) { return e.first == prow; }),
                       cols[c2].end());
      ++eliminated;
      progress = true;
    }
  }
  std::vector<Column> rest;
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    if (!dead[c] && !cols[c].empty()) rest.push_back(std::move(cols[c]));
  cols = std::move(rest);
  return eliminated;
}

/// Smith normal form of a dense integer matrix; returns the nonzero diagonal.
std::vector<cpp_int> dense_smith(std::vector<std::vector<cpp_int>> a) {
  std::vector<cpp_int> diag;
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < m && t < n) {
    // pivot of minimal absolute value
    std::size_t pr = m, pc = n;
    cpp_int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < best)) {
          best = abs(a[i][j]);
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const cpp_int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const cpp_int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility of the remaining block
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            clean = false;
            break;
          }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

std::size_t rank_mod2(const SparseMatrix& m) {
  const std::size_t words = (m.rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cols;
  for (const auto& c : m.columns) {
    std::vector<std::uint64_t> bits(words, 0);
    for (const auto& [r, v] : c)
      if (v % 2 != 0) bits[r / 64] ^= std::uint64_t{1} << (r % 64);
    cols.push_back(std::move(bits));
  }
  std::vector<std::vector<std::uint64_t>> basis(m.rows);  // indexed by leading row
  std::vector<bool> used(m.rows, false);
  std::size_t rank = 0;
  for (auto& c : cols) {
    for (std::size_t w = 0; w < words; ++w) {
      while (c[w] != 0) {
        const std::size_t r = w * 64 + static_cast<std::size_t>(__builtin_ctzll(c[w]));
        if (!used[r]) {
          used[r] = true;
          basis[r] = c;
          ++rank;
          goto next;
        }
        for (std::size_t k = 0; k < words; ++k) c[k] ^= basis[r][k];
      }
    }
  next:;
  }
  return rank;
}

SparseMatrix from_columns(std::size_t rows, std::vector<Column> cols) {
  SparseMatrix m;
  m.rows = rows;
  m.cols = cols.size();
  m.columns = std::move(cols);
  return m;
}

}  // namespace

ChainComplex chain_complex(const TruncSSet& x) {
  ChainComplex c;
  c.max_degree = x.trunc();
  std::vector<std::vector<std::uint32_t>> position(x.trunc() + 1);
  for (int k = 0; k <= x.trunc(); ++k) {
    c.bases.push_back(x.nondegenerate(k));
    position[k].assign(x.count(k), kInvalidId);
    for (std::uint32_t j = 0; j < c.bases[k].size(); ++j) position[k][c.bases[k][j]] = j;
  }
  c.boundaries.push_back(from_columns(0, std::vector<Column>(c.bases[0].size())));
  for (int k = 1; k <= x.trunc(); ++k) {
    std::vector<Column> cols;
    for (SimplexId s : c.bases[k]) {
      std::map<std::uint32_t, std::int64_t> acc;
      for (int i = 0; i <= k; ++i) {
        const SimplexId f = x.face(k, s, i);
        if (x.is_degenerate(k - 1, f)) continue;
        acc[position[k - 1][f]] += (i % 2 == 0) ? 1 : -1;
      }
      Column col;
      for (const auto& [r, v] : acc)
        if (v != 0) col.emplace_back(r, v);
      cols.push_back(std::move(col));
    }
    c.boundaries.push_back(from_columns(c.bases[k - 1].size(), std::move(cols)));
  }
  return c;
}

std::vector<std::string> boundary_squared_violations(const ChainComplex& c) {
  std::vector<std::string> out;
  for (int k = 2; k <= c.max_degree; ++k) {
    const SparseMatrix& outer = c.boundaries[k - 1];
    const SparseMatrix& inner = c.boundaries[k];
    for (std::size_t j = 0; j < inner.cols; ++j) {
      std::map<std::uint32_t, cpp_int> acc;
      for (const auto& [mid, v] : inner.columns[j])
        for (const auto& [r, w] : outer.columns[mid]) acc[r] += cpp_int(v) * w;
      for (const auto& [r, v] : acc)
        if (v != 0) {
          out.push_back("d" + std::to_string(k - 1) + " d" + std::to_string(k) + " != 0 on generator " +
                        std::to_string(j) + " of degree " + std::to_string(k));
          break;
        }
    }
  }
  return out;
}

std::string to_string(Ring r) {
  switch (r) {
    case Ring::rationals: return "q";
    case Ring::integers: return "z";
    case Ring::mod2: return "z2";
  }
  return {};
}

Ring parse_ring(const std::string& s) {
  if (s == "q" || s == "rationals") return Ring::rationals;
  if (s == "z" || s == "integers") return Ring::integers;
  if (s == "z2" || s == "mod2") return Ring::mod2;
  throw DomainError("unknown ring '" + s + "' (expected q, z or z2)");
}

SmithSummary smith(const SparseMatrix& m, Ring ring) {
  SmithSummary out;
  if (ring == Ring::mod2) {
    out.rank = rank_mod2(m);
    return out;
  }
  std::vector<Column> cols = m.columns;
  out.rank = unit_elimination(cols, m.rows);
  if (cols.empty()) return out;
  std::vector<std::uint32_t> rows;
  for (const auto& c : cols)
    for (const auto& [r, v] : c) rows.push_back(r);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  check_cell_budget(rows.size() * cols.size(), "dense Smith normal form entries");
  std::vector<std::vector<cpp_int>> dense(rows.size(), std::vector<cpp_int>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, v] : cols[j])
      dense[std::lower_bound(rows.begin(), rows.end(), r) - rows.begin()][j] = v;
  for (const cpp_int& d : dense_smith(std::move(dense))) {
    ++out.rank;
    if (ring == Ring::integers && d > 1) out.torsion.push_back(d.str());
  }
  return out;
}

HomologyReport betti(const TruncSSet& x, Ring ring) {
  const ChainComplex c = chain_complex(x);
  HomologyReport rep;
  rep.ring = ring;
  rep.max_degree = c.max_degree;
  rep.valid_through = c.max_degree - 1;
  rep.boundary_ranks.assign(c.max_degree + 1, 0);
  std::vector<std::vector<std::string>> torsion_of(c.max_degree + 1);
  for (int k = 0; k <= c.max_degree; ++k) rep.chain_ranks.push_back(c.rank(k));
  for (int k = 1; k <= c.max_degree; ++k) {
    const SmithSummary s = smith(c.boundaries[k], ring);
    rep.boundary_ranks[k] = s.rank;
    torsion_of[k - 1] = s.torsion;
  }
  for (int k = 0; k <= c.max_degree; ++k) {
    if (k <= rep.valid_through) {
      rep.betti.push_back(c.rank(k) - rep.boundary_ranks[k] - rep.boundary_ranks[k + 1]);
      rep.torsion.push_back(torsion_of[k]);
    } else {
      rep.betti.push_back(std::nullopt);
      rep.torsion.push_back({});
    }
  }
  return rep;
}

WitnessReport we_witness(const SimplicialMap& f, int d) {
  const TruncSSet& X = *f.source;
  const TruncSSet& Y = *f.target;
  d = std::min({d, X.trunc(), Y.trunc()});
  const ChainComplex cx = chain_complex(X);
  const ChainComplex cy = chain_complex(Y);
  std::vector<std::vector<std::uint32_t>> ypos(d + 1);
  for (int k = 0; k <= d; ++k) {
    ypos[k].assign(Y.count(k), kInvalidId);
    for (std::uint32_t j = 0; j < cy.bases[k].size(); ++j) ypos[k][cy.bases[k][j]] = j;
  }
  auto rank = [](const SparseMatrix& m) { return smith(m, Ring::rationals).rank; };

  WitnessReport rep;
  rep.valid_through = d - 1;
  rep.passes = true;
  for (int k = 0; k <= d - 1; ++k) {
    // Φ = [[∂_k^X, 0], [f_k, ∂_{k+1}^Y]]: C_k X ⊕ C_{k+1} Y → C_{k−1} X ⊕ C_k Y.
    // rank H_k(f) = rank Φ − rank ∂_k^X − rank ∂_{k+1}^Y.
    const std::size_t top = cx.bases[k].size() ? cx.boundaries[k].rows : 0;
    std::vector<Column> cols;
    for (std::size_t j = 0; j < cx.bases[k].size(); ++j) {
      Column col = cx.boundaries[k].columns[j];
      const SimplexId image = f(k, cx.bases[k][j]);
      if (!Y.is_degenerate(k, image)) col.emplace_back(static_cast<std::uint32_t>(top + ypos[k][image]), 1);
      cols.push_back(std::move(col));
    }
    for (const Column& c : cy.boundaries[k + 1].columns) {
      Column col;
      for (const auto& [r, v] : c) col.emplace_back(static_cast<std::uint32_t>(top + r), v);
      cols.push_back(std::move(col));
    }
    const SparseMatrix phi = from_columns(top + cy.bases[k].size(), std::move(cols));
    const std::size_t rx_k = rank(cx.boundaries[k]);
    const std::size_t rx_k1 = rank(cx.boundaries[k + 1]);
    const std::size_t ry_k = rank(cy.boundaries[k]);
    const std::size_t ry_k1 = rank(cy.boundaries[k + 1]);
    DegreeWitness w;
    w.degree = k;
    w.source_betti = cx.rank(k) - rx_k - rx_k1;
    w.target_betti = cy.rank(k) - ry_k - ry_k1;
    w.induced_rank = rank(phi) - rx_k - ry_k1;
    w.iso = w.source_betti == w.target_betti && w.induced_rank == w.source_betti;
    if (!w.iso && !rep.first_failure) rep.first_failure = k;
    rep.passes = rep.passes && w.iso;
    rep.degrees.push_back(w);
  }
  return rep;
}

WitnessReport we_witness(const FinFunctor& f, int d) {
  const CategoryNerve src = nerve(f.source, d);
  const CategoryNerve tgt = nerve(f.target, d);
  return we_witness(nerve_of_functor(f, src, tgt), d);
}

WitnessReport we_witness(const DblFunctor& f, int d) {
  const DoubleNerve src = double_nerve(*f.source, d, d);
  const DoubleNerve tgt = double_nerve(*f.target, d, d);
  auto ds = share(diag(src.bisset));
  auto dt = share(diag(tgt.bisset));
  return we_witness(diag_map(f, src, tgt, ds, dt), d);
}

}  // namespace dblcat
