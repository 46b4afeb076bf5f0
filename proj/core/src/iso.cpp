#include "dblcat/iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace dblcat {

namespace {

struct Signature {
  std::size_t endo = 0;
  std::vector<std::size_t> out_sizes;  // sorted multiset of |hom(x, y)| over y != x
  std::vector<std::size_t> in_sizes;

  auto tie() const { return std::tie(endo, out_sizes, in_sizes); }
  bool operator==(const Signature& o) const { return tie() == o.tie(); }
};

std::vector<std::vector<std::size_t>> hom_sizes(const FinCat& c) {
  std::vector<std::vector<std::size_t>> sz(c.num_objects(),
                                           std::vector<std::size_t>(c.num_objects(), 0));
  for (MorId f = 0; f < c.num_morphisms(); ++f) ++sz[c.src(f)][c.tgt(f)];
  return sz;
}

std::vector<Signature> signatures(const FinCat& c, const std::vector<std::vector<std::size_t>>& sz) {
  std::vector<Signature> out(c.num_objects());
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    out[x].endo = sz[x][x];
    for (ObjId y = 0; y < c.num_objects(); ++y) {
      if (y == x) continue;
      if (sz[x][y] > 0) out[x].out_sizes.push_back(sz[x][y]);
      if (sz[y][x] > 0) out[x].in_sizes.push_back(sz[y][x]);
    }
    std::sort(out[x].out_sizes.begin(), out[x].out_sizes.end());
    std::sort(out[x].in_sizes.begin(), out[x].in_sizes.end());
  }
  return out;
}

struct Composition {
  MorId g, f, gf;
};

class Search {
 public:
  Search(const CatRef& c, const CatRef& d, IsoSearchLimits limits)
      : c_(*c), d_(*d), limits_(limits), result_{c, d, {}, {}} {
    csz_ = hom_sizes(c_);
    dsz_ = hom_sizes(d_);
    csig_ = signatures(c_, csz_);
    dsig_ = signatures(d_, dsz_);
    result_.on_objects.assign(c_.num_objects(), kInvalidId);
    result_.on_morphisms.assign(c_.num_morphisms(), kInvalidId);
    d_used_obj_.assign(d_.num_objects(), false);
    d_used_mor_.assign(d_.num_morphisms(), false);
    touching_.assign(c_.num_morphisms(), {});
    for (MorId f = 0; f < c_.num_morphisms(); ++f) {
      if (c_.is_identity(f)) continue;
      for (MorId g : c_.out_morphisms(c_.tgt(f))) {
        if (c_.is_identity(g)) continue;
        const Composition comp{g, f, c_.compose_unchecked(g, f)};
        touching_[f].push_back(comp);
        touching_[g].push_back(comp);
        if (comp.gf != f && comp.gf != g) touching_[comp.gf].push_back(comp);
      }
    }
    // morphisms ordered so that each hom-set is filled contiguously
    for (ObjId x = 0; x < c_.num_objects(); ++x)
      for (MorId f : c_.out_morphisms(x))
        if (!c_.is_identity(f)) order_.push_back(f);
    std::stable_sort(order_.begin(), order_.end(), [&](MorId a, MorId b) {
      return std::make_pair(c_.src(a), c_.tgt(a)) < std::make_pair(c_.src(b), c_.tgt(b));
    });
  }

  IsoStatus run() {
    if (objects(0)) return IsoStatus::found;
    return aborted_ ? IsoStatus::inconclusive : IsoStatus::none;
  }

  const FinFunctor& result() const { return result_; }

 private:
  bool tick() {
    if (++nodes_ > limits_.max_nodes) aborted_ = true;
    return !aborted_;
  }

  bool objects(ObjId x) {
    if (!tick()) return false;
    if (x == c_.num_objects()) {
      for (ObjId y = 0; y < c_.num_objects(); ++y)
        result_.on_morphisms[c_.identity(y)] = d_.identity(result_.on_objects[y]);
      if (morphisms(0)) return true;
      for (ObjId y = 0; y < c_.num_objects(); ++y) result_.on_morphisms[c_.identity(y)] = kInvalidId;
      return false;
    }
    for (ObjId y = 0; y < d_.num_objects(); ++y) {
      if (d_used_obj_[y] || !(csig_[x] == dsig_[y])) continue;
      bool ok = true;
      for (ObjId z = 0; z < x && ok; ++z) {
        const ObjId w = result_.on_objects[z];
        ok = csz_[x][z] == dsz_[y][w] && csz_[z][x] == dsz_[w][y];
      }
      if (!ok) continue;
      result_.on_objects[x] = y;
      d_used_obj_[y] = true;
      if (objects(x + 1)) return true;
      d_used_obj_[y] = false;
      result_.on_objects[x] = kInvalidId;
      if (aborted_) return false;
    }
    return false;
  }

  bool assigned(MorId f) const { return result_.on_morphisms[f] != kInvalidId; }

  bool consistent(MorId m) const {
    for (const auto& comp : touching_[m]) {
      if (!assigned(comp.g) || !assigned(comp.f) || !assigned(comp.gf)) continue;
      if (d_.compose_unchecked(result_.on_morphisms[comp.g], result_.on_morphisms[comp.f]) !=
          result_.on_morphisms[comp.gf])
        return false;
    }
    return true;
  }

  bool morphisms(std::size_t k) {
    if (!tick()) return false;
    if (k == order_.size()) return true;
    const MorId m = order_[k];
    for (MorId cand : d_.hom(result_.on_objects[c_.src(m)], result_.on_objects[c_.tgt(m)])) {
      if (d_used_mor_[cand] || d_.is_identity(cand)) continue;
      result_.on_morphisms[m] = cand;
      d_used_mor_[cand] = true;
      if (consistent(m) && morphisms(k + 1)) return true;
      d_used_mor_[cand] = false;
      result_.on_morphisms[m] = kInvalidId;
      if (aborted_) return false;
    }
    return false;
  }

  const FinCat& c_;
  const FinCat& d_;
  IsoSearchLimits limits_;
  FinFunctor result_;
  std::vector<std::vector<std::size_t>> csz_, dsz_;
  std::vector<Signature> csig_, dsig_;
  std::vector<bool> d_used_obj_, d_used_mor_;
  std::vector<std::vector<Composition>> touching_;
  std::vector<MorId> order_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

IsoResult iso_check(const CatRef& c, const CatRef& d, IsoSearchLimits limits) {
  if (c->num_objects() != d->num_objects() || c->num_morphisms() != d->num_morphisms()) {
    return {IsoStatus::none, std::nullopt};
  }
  {
    auto cs = signatures(*c, hom_sizes(*c));
    auto ds = signatures(*d, hom_sizes(*d));
    auto key = [](const Signature& s) { return s.tie(); };
    std::sort(cs.begin(), cs.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    std::sort(ds.begin(), ds.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    if (!(cs == ds)) return {IsoStatus::none, std::nullopt};
  }
  if (c->num_morphisms() > limits.max_morphisms) return {IsoStatus::inconclusive, std::nullopt};
  Search search(c, d, limits);
  const IsoStatus status = search.run();
  if (status == IsoStatus::found) return {status, search.result()};
  return {status, std::nullopt};
}

std::optional<FinFunctor> label_isomorphism(const CatRef& c, const CatRef& d) {
  if (c->num_objects() != d->num_objects() || c->num_morphisms() != d->num_morphisms()) {
    return std::nullopt;
  }
  FinFunctor f{c, d, {}, {}};
  for (ObjId x = 0; x < c->num_objects(); ++x) {
    auto y = d->find_object(c->object_label(x));
    if (!y) return std::nullopt;
    f.on_objects.push_back(*y);
  }
  for (MorId m = 0; m < c->num_morphisms(); ++m) {
    auto n = d->find_morphism(c->morphism_label(m));
    if (!n) return std::nullopt;
    f.on_morphisms.push_back(*n);
  }
  if (!is_isomorphism(f)) return std::nullopt;
  return f;
}

}  // namespace dblcat
