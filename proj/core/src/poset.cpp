#include "dblcat/poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace dblcat {

namespace {

struct Packed {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> rows;

  explicit Packed(std::size_t size) : n(size), words((size + 63) / 64), rows(size * words, 0) {}
  bool get(std::size_t a, std::size_t b) const { return (rows[a * words + b / 64] >> (b % 64)) & 1U; }
  void set(std::size_t a, std::size_t b) { rows[a * words + b / 64] |= std::uint64_t{1} << (b % 64); }
  const std::uint64_t* row(std::size_t a) const { return rows.data() + a * words; }
};

std::vector<std::string> packed_violations(const Packed& m) {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < m.n; ++a)
    if (!m.get(a, a)) out.push_back("reflexivity fails at " + std::to_string(a));
  for (std::size_t a = 0; a < m.n; ++a)
    for (std::size_t b = a + 1; b < m.n; ++b)
      if (m.get(a, b) && m.get(b, a))
        out.push_back("antisymmetry fails at " + std::to_string(a) + "," + std::to_string(b));
  // a ≤ b requires row(b) ⊆ row(a); report the first c witnessing failure
  for (std::size_t a = 0; a < m.n; ++a)
    for (std::size_t b = 0; b < m.n; ++b) {
      if (!m.get(a, b)) continue;
      const std::uint64_t* ra = m.row(a);
      const std::uint64_t* rb = m.row(b);
      for (std::size_t w = 0; w < m.words; ++w) {
        const std::uint64_t missing = rb[w] & ~ra[w];
        if (missing == 0) continue;
        const std::size_t c = w * 64 + static_cast<std::size_t>(__builtin_ctzll(missing));
        out.push_back("transitivity fails at " + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c));
        break;
      }
    }
  return out;
}

}  // namespace

FinPoset FinPoset::from_relations(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  const std::size_t n = labels.size();
  Packed m(n);
  for (std::size_t a = 0; a < n; ++a) m.set(a, a);
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw DomainError("poset relation out of range");
    m.set(a, b);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (m.get(a, k))
        for (std::size_t w = 0; w < m.words; ++w) m.rows[a * m.words + w] |= m.rows[k * m.words + w];
  return from_predicate(std::move(labels), [&](std::size_t a, std::size_t b) { return m.get(a, b); });
}

FinPoset FinPoset::from_matrix(std::vector<std::string> labels, const std::vector<std::uint8_t>& leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n * n) throw DomainError("poset relation matrix has the wrong size");
  return from_predicate(std::move(labels), [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; });
}

FinPoset FinPoset::from_predicate(std::vector<std::string> labels,
                                  const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t n = labels.size();
  check_cell_budget(n, "poset elements");
  Packed m(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq(a, b)) m.set(a, b);
  auto violations = packed_violations(m);
  if (!violations.empty()) throw DomainError("not a partial order: " + violations.front());
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t a = 0; a < n; ++a) {
    if (!seen.emplace(labels[a], a).second) throw DomainError("duplicate poset element '" + labels[a] + "'");
  }
  FinPoset p;
  p.labels_ = std::move(labels);
  p.words_ = m.words;
  p.rows_ = std::move(m.rows);
  p.index_relations();
  return p;
}

void FinPoset::index_relations() {
  const std::size_t n = size();
  rel_index_.assign(n * n, kInvalidId);
  MorId next = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq(a, b)) rel_index_[a * n + b] = next++;
}

std::optional<std::size_t> FinPoset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> FinPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) cover = !(less(a, c) && less(c, b));
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

FinCat FinPoset::as_category() const {
  const std::size_t n = size();
  FinCatBuilder b;
  for (const auto& l : labels_) b.add_object(l);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (leq(a, c)) b.add_morphism(labels_[a] + "<=" + labels_[c], static_cast<ObjId>(a), static_cast<ObjId>(c));
  for (std::size_t a = 0; a < n; ++a) b.set_identity(static_cast<ObjId>(a), rel_index_[a * n + a]);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (leq(a, c)) ends.emplace_back(a, c);
  return std::move(b).build(
      [&](MorId g, MorId f) { return rel_index_[ends[f].first * n + ends[g].second]; });
}

MorId FinPoset::relation_morphism(std::size_t a, std::size_t b) const {
  const MorId m = rel_index_[a * size() + b];
  if (m == kInvalidId) throw DomainError("relation " + labels_[a] + "<=" + labels_[b] + " does not hold");
  return m;
}

std::vector<std::string> partial_order_violations(std::size_t n, const std::vector<std::uint8_t>& leq) {
  Packed m(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq[a * n + b]) m.set(a, b);
  return packed_violations(m);
}

// ---------------------------------------------------------------------------

PosetInclusion::PosetInclusion(FinPoset sub, FinPoset ambient, std::vector<std::size_t> embedding)
    : sub_(std::move(sub)), ambient_(std::move(ambient)), embedding_(std::move(embedding)) {
  if (embedding_.size() != sub_.size()) throw DomainError("embedding has the wrong size");
  preimage_.assign(ambient_.size(), kInvalidId);
  for (std::size_t p = 0; p < embedding_.size(); ++p) {
    const std::size_t q = embedding_[p];
    if (q >= ambient_.size()) throw DomainError("embedding maps out of range");
    if (preimage_[q] != kInvalidId) throw DomainError("embedding is not injective");
    preimage_[q] = p;
  }
  for (std::size_t a = 0; a < sub_.size(); ++a)
    for (std::size_t b = 0; b < sub_.size(); ++b)
      if (sub_.leq(a, b) && !ambient_.leq(embedding_[a], embedding_[b]))
        throw DomainError("embedding is not order-preserving at " + sub_.label(a) + "<=" + sub_.label(b));
}

PosetInclusion PosetInclusion::full_subposet(const FinPoset& ambient, std::vector<std::size_t> elements) {
  const std::size_t k = elements.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(ambient.label(elements[a]));
    for (std::size_t b = 0; b < k; ++b) leq[a * k + b] = ambient.leq(elements[a], elements[b]);
  }
  return PosetInclusion(FinPoset::from_matrix(std::move(labels), std::move(leq)), ambient,
                        std::move(elements));
}

PosetInclusion PosetInclusion::by_labels(FinPoset sub, FinPoset ambient) {
  std::vector<std::size_t> emb;
  for (std::size_t p = 0; p < sub.size(); ++p) {
    auto q = ambient.find(sub.label(p));
    if (!q) throw DomainError("element '" + sub.label(p) + "' missing from the ambient poset");
    emb.push_back(*q);
  }
  return PosetInclusion(std::move(sub), std::move(ambient), std::move(emb));
}

std::optional<std::size_t> PosetInclusion::preimage(std::size_t q) const {
  if (preimage_[q] == kInvalidId) return std::nullopt;
  return preimage_[q];
}

std::vector<std::size_t> PosetInclusion::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < ambient_.size(); ++q)
    if (preimage_[q] == kInvalidId) out.push_back(q);
  return out;
}

bool is_sieve(const PosetInclusion& inc) {
  const FinPoset& p = inc.sub();
  const FinPoset& q = inc.ambient();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (q.leq(inc.image(a), inc.image(b)) && !p.leq(a, b)) return false;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t x = 0; x < q.size(); ++x)
      if (q.leq(x, inc.image(a)) && !inc.preimage(x)) return false;
  return true;
}

bool is_weakly_solid(const PosetInclusion& inc) {
  if (!is_sieve(inc)) throw DomainError("is_weakly_solid: inclusion is not a sieve");
  const FinPoset& q = inc.ambient();
  const std::size_t np = inc.sub().size();
  // Only q outside P matters: inside P, q itself is the witness.
  for (std::size_t top : inc.complement()) {
    std::vector<std::size_t> below;
    for (std::size_t a = 0; a < np; ++a)
      if (q.leq(inc.image(a), top)) below.push_back(inc.image(a));
    for (std::size_t i = 0; i < below.size(); ++i)
      for (std::size_t j = i + 1; j < below.size(); ++j) {
        bool found = false;
        for (std::size_t k = 0; k < below.size() && !found; ++k)
          found = q.leq(below[i], below[k]) && q.leq(below[j], below[k]);
        if (!found) return false;
      }
  }
  return true;
}

FinPoset chain_poset(int n) {
  if (n < 0) throw DomainError("chain_poset: n must be non-negative");
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (int i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return FinPoset::from_relations(std::move(labels), rel);
}

}  // namespace dblcat
