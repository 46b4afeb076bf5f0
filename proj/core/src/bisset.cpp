#include "dblcat/bisset.hpp"

namespace dblcat {

namespace {

std::string at(int n, int k, SimplexId x) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ") cell " + std::to_string(x);
}

}  // namespace

SSetTables BiTruncSSet::column(int n) const {
  SSetTables t;
  t.trunc = k_max;
  for (int k = 0; k <= k_max; ++k) {
    t.labels.push_back(labels[n][k]);
    t.faces.push_back(v_faces[n][k]);
    t.degens.push_back(v_degens[n][k]);
  }
  return t;
}

SSetTables BiTruncSSet::row(int k) const {
  SSetTables t;
  t.trunc = n_max;
  for (int n = 0; n <= n_max; ++n) {
    t.labels.push_back(labels[n][k]);
    t.faces.push_back(h_faces[n][k]);
    t.degens.push_back(h_degens[n][k]);
  }
  return t;
}

std::vector<std::string> validate(const BiTruncSSet& b) {
  std::vector<std::string> out;
  for (int n = 0; n <= b.n_max; ++n)
    for (const auto& e : simplicial_identity_violations(b.column(n)))
      out.push_back("column " + std::to_string(n) + ": " + e);
  for (int k = 0; k <= b.k_max; ++k)
    for (const auto& e : simplicial_identity_violations(b.row(k)))
      out.push_back("row " + std::to_string(k) + ": " + e);
  if (!out.empty()) return out;
  for (int n = 0; n <= b.n_max; ++n)
    for (int k = 0; k <= b.k_max; ++k)
      for (SimplexId x = 0; x < b.count(n, k); ++x) {
        // horizontal op (a, i) then vertical op (c, j) versus the reverse order
        const int hops = (n > 0 ? n + 1 : 0) + (n < b.n_max ? n + 1 : 0);
        const int vops = (k > 0 ? k + 1 : 0) + (k < b.k_max ? k + 1 : 0);
        for (int hi = 0; hi < hops; ++hi)
          for (int vi = 0; vi < vops; ++vi) {
            const bool hface = n > 0 && hi <= n;
            const int h = hface ? hi : hi - (n > 0 ? n + 1 : 0);
            const bool vface = k > 0 && vi <= k;
            const int v = vface ? vi : vi - (k > 0 ? k + 1 : 0);
            const int n2 = hface ? n - 1 : n + 1;
            const int k2 = vface ? k - 1 : k + 1;
            const auto& H = hface ? b.h_faces : b.h_degens;
            const auto& V = vface ? b.v_faces : b.v_degens;
            const SimplexId hv = V[n2][k][H[n][k][x][h]][v];
            const SimplexId vh = H[n][k2][V[n][k][x][v]][h];
            if (hv != vh)
              out.push_back(at(n, k, x) + ": horizontal " + (hface ? "d" : "s") + std::to_string(h) +
                            " does not commute with vertical " + (vface ? "d" : "s") + std::to_string(v));
          }
      }
  return out;
}

BiTruncSSet bisset_from_columns(
    const std::vector<SSetRef>& columns,
    const std::vector<std::vector<std::vector<std::vector<SimplexId>>>>& h_face_maps,
    const std::vector<std::vector<std::vector<std::vector<SimplexId>>>>& h_degen_maps) {
  BiTruncSSet b;
  b.n_max = static_cast<int>(columns.size()) - 1;
  if (b.n_max < 0) throw DomainError("bisset_from_columns: no columns");
  b.k_max = columns[0]->trunc();
  for (const auto& c : columns)
    if (c->trunc() != b.k_max) throw DomainError("bisset_from_columns: column truncations differ");
  const int N = b.n_max, K = b.k_max;
  b.labels.resize(N + 1);
  b.h_faces.resize(N + 1);
  b.h_degens.resize(N + 1);
  b.v_faces.resize(N + 1);
  b.v_degens.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    const auto& t = columns[n]->tables();
    b.labels[n] = t.labels;
    b.v_faces[n] = t.faces;
    b.v_degens[n] = t.degens;
    b.h_faces[n].resize(K + 1);
    b.h_degens[n].resize(K + 1);
    for (int k = 0; k <= K; ++k) {
      const std::size_t cnt = columns[n]->count(k);
      b.h_faces[n][k].assign(cnt, {});
      b.h_degens[n][k].assign(cnt, {});
      for (SimplexId x = 0; x < cnt; ++x) {
        for (int i = 0; n > 0 && i <= n; ++i) b.h_faces[n][k][x].push_back(h_face_maps[n][i][k][x]);
        for (int i = 0; n < N && i <= n; ++i) b.h_degens[n][k][x].push_back(h_degen_maps[n][i][k][x]);
      }
    }
  }
  return b;
}

TruncSSet diag(const BiTruncSSet& b) {
  if (b.n_max != b.k_max) throw DomainError("diag: horizontal and vertical truncations differ");
  SSetTables t;
  t.trunc = b.n_max;
  for (int n = 0; n <= b.n_max; ++n) {
    t.labels.push_back(b.labels[n][n]);
    t.faces.emplace_back(b.count(n, n));
    t.degens.emplace_back(b.count(n, n));
    for (SimplexId x = 0; x < b.count(n, n); ++x) {
      for (int i = 0; n > 0 && i <= n; ++i)
        t.faces[n][x].push_back(b.h_faces[n][n - 1][b.v_faces[n][n][x][i]][i]);
      for (int i = 0; n < b.n_max && i <= n; ++i)
        t.degens[n][x].push_back(b.h_degens[n][n + 1][b.v_degens[n][n][x][i]][i]);
    }
  }
  return TruncSSet::from_tables(std::move(t));
}

BiTruncSSet vertically_constant(const TruncSSet& x, int k_max) {
  BiTruncSSet b;
  b.n_max = x.trunc();
  b.k_max = k_max;
  const auto& t = x.tables();
  const int N = b.n_max;
  b.labels.resize(N + 1);
  b.h_faces.resize(N + 1);
  b.h_degens.resize(N + 1);
  b.v_faces.resize(N + 1);
  b.v_degens.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= k_max; ++k) {
      b.labels[n].push_back(t.labels[n]);
      b.h_faces[n].push_back(t.faces[n]);
      b.h_degens[n].push_back(t.degens[n]);
      std::vector<std::vector<SimplexId>> vf(x.count(n)), vd(x.count(n));
      for (SimplexId s = 0; s < x.count(n); ++s) {
        if (k > 0) vf[s].assign(k + 1, s);
        if (k < k_max) vd[s].assign(k + 1, s);
      }
      b.v_faces[n].push_back(std::move(vf));
      b.v_degens[n].push_back(std::move(vd));
    }
  return b;
}

}  // namespace dblcat
