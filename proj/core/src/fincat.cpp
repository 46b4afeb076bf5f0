#include "dblcat/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dblcat {

namespace {

std::uint64_t pair_key(MorId g, MorId f) {
  return (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint64_t>(f);
}

}  // namespace

std::optional<MorId> FinCat::compose(MorId g, MorId f) const {
  if (tgt_[f] != src_[g]) return std::nullopt;
  return comp_[f][out_pos_[g]];
}

std::vector<MorId> FinCat::hom(ObjId a, ObjId b) const {
  std::vector<MorId> out;
  for (MorId f : out_[a]) {
    if (tgt_[f] == b) out.push_back(f);
  }
  return out;
}

std::optional<ObjId> FinCat::find_object(const std::string& label) const {
  auto it = obj_index_.find(label);
  if (it == obj_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCat::find_morphism(const std::string& label) const {
  auto it = mor_index_.find(label);
  if (it == mor_index_.end()) return std::nullopt;
  return it->second;
}

FinCat FinCat::with_composite(MorId g, MorId f, MorId gf) const {
  if (tgt_[f] != src_[g]) throw DomainError("with_composite: pair is not composable");
  if (gf >= num_morphisms()) throw DomainError("with_composite: morphism out of range");
  FinCat copy = *this;
  copy.comp_[f][out_pos_[g]] = gf;
  return copy;
}

// ---------------------------------------------------------------------------

ObjId FinCatBuilder::add_object(std::string label) {
  const auto x = static_cast<ObjId>(cat_.obj_labels_.size());
  if (!cat_.obj_index_.emplace(label, x).second) {
    throw DomainError("duplicate object label '" + label + "'");
  }
  cat_.obj_labels_.push_back(std::move(label));
  cat_.id_.push_back(kInvalidId);
  return x;
}

ObjId FinCatBuilder::add_object_with_identity(std::string label) {
  std::string id_label = "id_" + label;
  const ObjId x = add_object(std::move(label));
  set_identity(x, add_morphism(std::move(id_label), x, x));
  return x;
}

MorId FinCatBuilder::add_morphism(std::string label, ObjId src, ObjId tgt) {
  if (src >= num_objects() || tgt >= num_objects()) {
    throw DomainError("morphism '" + label + "' has an endpoint out of range");
  }
  const auto f = static_cast<MorId>(cat_.mor_labels_.size());
  if (!cat_.mor_index_.emplace(label, f).second) {
    throw DomainError("duplicate morphism label '" + label + "'");
  }
  cat_.mor_labels_.push_back(std::move(label));
  cat_.src_.push_back(src);
  cat_.tgt_.push_back(tgt);
  return f;
}

void FinCatBuilder::set_identity(ObjId x, MorId f) {
  if (x >= num_objects() || f >= num_morphisms()) throw DomainError("set_identity: out of range");
  cat_.id_[x] = f;
}

void FinCatBuilder::set_composite(MorId g, MorId f, MorId gf) {
  if (g >= num_morphisms() || f >= num_morphisms() || gf >= num_morphisms()) {
    throw DomainError("set_composite: morphism out of range");
  }
  explicit_[pair_key(g, f)] = gf;
}

FinCat FinCatBuilder::build(const CompositionRule& rule) && {
  FinCat& c = cat_;
  const std::size_t n_obj = c.obj_labels_.size();
  const std::size_t n_mor = c.mor_labels_.size();
  check_cell_budget(n_mor, "category morphisms");
  for (ObjId x = 0; x < n_obj; ++x) {
    const MorId i = c.id_[x];
    if (i == kInvalidId) throw DomainError("object '" + c.obj_labels_[x] + "' has no identity");
    if (c.src_[i] != x || c.tgt_[i] != x) {
      throw DomainError("identity of '" + c.obj_labels_[x] + "' is not an endomorphism of it");
    }
  }
  c.out_.assign(n_obj, {});
  c.in_.assign(n_obj, {});
  c.out_pos_.assign(n_mor, 0);
  for (MorId f = 0; f < n_mor; ++f) {
    c.out_pos_[f] = static_cast<std::uint32_t>(c.out_[c.src_[f]].size());
    c.out_[c.src_[f]].push_back(f);
    c.in_[c.tgt_[f]].push_back(f);
  }
  std::size_t pairs = 0;
  for (MorId f = 0; f < n_mor; ++f) pairs += c.out_[c.tgt_[f]].size();
  check_cell_budget(pairs, "composition table");
  c.num_pairs_ = pairs;

  c.comp_.assign(n_mor, {});
  for (MorId f = 0; f < n_mor; ++f) {
    const auto& outs = c.out_[c.tgt_[f]];
    auto& row = c.comp_[f];
    row.resize(outs.size());
    const bool f_id = c.id_[c.src_[f]] == f;
    for (std::size_t k = 0; k < outs.size(); ++k) {
      const MorId g = outs[k];
      if (auto it = explicit_.find(pair_key(g, f)); it != explicit_.end()) {
        row[k] = it->second;
      } else if (f_id) {
        row[k] = g;
      } else if (c.id_[c.src_[g]] == g) {
        row[k] = f;
      } else if (rule) {
        const MorId gf = rule(g, f);
        if (gf >= n_mor) {
          throw DomainError("composition rule returned an invalid morphism for " +
                            c.mor_labels_[g] + " o " + c.mor_labels_[f]);
        }
        row[k] = gf;
      } else {
        throw DomainError("composite " + c.mor_labels_[g] + " o " + c.mor_labels_[f] +
                          " is undefined");
      }
    }
  }
  explicit_.clear();
  return std::move(cat_);
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate(const FinCat& c) {
  std::vector<std::string> report;
  auto lbl = [&](MorId f) { return c.morphism_label(f); };
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    const MorId i = c.identity(x);
    if (c.src(i) != x || c.tgt(i) != x) {
      report.push_back("identity: " + lbl(i) + " is not an endomorphism of " + c.object_label(x));
    }
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (MorId g : c.out_morphisms(c.tgt(f))) {
      const MorId gf = c.compose_unchecked(g, f);
      if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g)) {
        report.push_back("source-target: " + lbl(g) + " o " + lbl(f) + " = " + lbl(gf) +
                         " has the wrong endpoints");
      }
    }
    if (c.compose_unchecked(c.identity(c.tgt(f)), f) != f) {
      report.push_back("unit: id o " + lbl(f) + " != " + lbl(f));
    }
    if (c.compose_unchecked(f, c.identity(c.src(f))) != f) {
      report.push_back("unit: " + lbl(f) + " o id != " + lbl(f));
    }
  }
  if (!report.empty()) return report;  // associativity needs consistent endpoints
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (MorId g : c.out_morphisms(c.tgt(f))) {
      const MorId gf = c.compose_unchecked(g, f);
      for (MorId h : c.out_morphisms(c.tgt(g))) {
        const MorId lhs = c.compose_unchecked(h, gf);
        const MorId rhs = c.compose_unchecked(c.compose_unchecked(h, g), f);
        if (lhs != rhs) {
          report.push_back("associativity: (" + lbl(h) + " o " + lbl(g) + ") o " + lbl(f) +
                           " != " + lbl(h) + " o (" + lbl(g) + " o " + lbl(f) + ")");
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

bool operator==(const FinFunctor& a, const FinFunctor& b) {
  return a.on_objects == b.on_objects && a.on_morphisms == b.on_morphisms;
}

std::vector<std::string> validate(const FinFunctor& f) {
  std::vector<std::string> report;
  if (!f.source || !f.target) {
    report.emplace_back("functor: missing source or target");
    return report;
  }
  const FinCat& a = *f.source;
  const FinCat& b = *f.target;
  if (f.on_objects.size() != a.num_objects() || f.on_morphisms.size() != a.num_morphisms()) {
    report.emplace_back("functor: map sizes do not match the source category");
    return report;
  }
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (f.obj(x) >= b.num_objects()) {
      report.push_back("functor: object " + a.object_label(x) + " maps out of range");
    }
  }
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    if (f.mor(m) >= b.num_morphisms()) {
      report.push_back("functor: morphism " + a.morphism_label(m) + " maps out of range");
    }
  }
  if (!report.empty()) return report;
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    const MorId fm = f.mor(m);
    if (b.src(fm) != f.obj(a.src(m)) || b.tgt(fm) != f.obj(a.tgt(m))) {
      report.push_back("functor: " + a.morphism_label(m) + " -> " + b.morphism_label(fm) +
                       " does not preserve source/target");
    }
  }
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    if (f.mor(a.identity(x)) != b.identity(f.obj(x))) {
      report.push_back("functor: identity of " + a.object_label(x) + " not preserved");
    }
  }
  if (!report.empty()) return report;
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    for (MorId n : a.out_morphisms(a.tgt(m))) {
      const MorId lhs = f.mor(a.compose_unchecked(n, m));
      const MorId rhs = b.compose_unchecked(f.mor(n), f.mor(m));
      if (lhs != rhs) {
        report.push_back("functor: composite " + a.morphism_label(n) + " o " +
                         a.morphism_label(m) + " not preserved");
      }
    }
  }
  return report;
}

FinFunctor identity_functor(const CatRef& c) {
  FinFunctor f{c, c, {}, {}};
  f.on_objects.resize(c->num_objects());
  std::iota(f.on_objects.begin(), f.on_objects.end(), 0);
  f.on_morphisms.resize(c->num_morphisms());
  std::iota(f.on_morphisms.begin(), f.on_morphisms.end(), 0);
  return f;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h{f.source, g.target, {}, {}};
  h.on_objects.reserve(f.on_objects.size());
  for (ObjId y : f.on_objects) h.on_objects.push_back(g.obj(y));
  h.on_morphisms.reserve(f.on_morphisms.size());
  for (MorId m : f.on_morphisms) h.on_morphisms.push_back(g.mor(m));
  return h;
}

namespace {

template <typename Id>
bool is_bijection(const std::vector<Id>& map, std::size_t codomain) {
  if (map.size() != codomain) return false;
  std::vector<bool> hit(codomain, false);
  for (Id v : map) {
    if (v >= codomain || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

bool is_isomorphism(const FinFunctor& f) {
  if (!validate(f).empty()) return false;
  return is_bijection(f.on_objects, f.target->num_objects()) &&
         is_bijection(f.on_morphisms, f.target->num_morphisms());
}

FinFunctor inverse(const FinFunctor& f) {
  if (!is_isomorphism(f)) throw DomainError("inverse: functor is not an isomorphism");
  FinFunctor g{f.target, f.source, {}, {}};
  g.on_objects.assign(f.on_objects.size(), 0);
  for (ObjId x = 0; x < f.on_objects.size(); ++x) g.on_objects[f.obj(x)] = x;
  g.on_morphisms.assign(f.on_morphisms.size(), 0);
  for (MorId m = 0; m < f.on_morphisms.size(); ++m) g.on_morphisms[f.mor(m)] = m;
  return g;
}

// ---------------------------------------------------------------------------

FinCat chain_category(int n) {
  if (n < 0) throw DomainError("chain_category: n must be non-negative");
  FinCatBuilder b;
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<MorId>> idx(n + 1, std::vector<MorId>(n + 1, kInvalidId));
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      idx[i][j] = b.add_morphism(std::to_string(i) + "<=" + std::to_string(j),
                                 static_cast<ObjId>(i), static_cast<ObjId>(j));
    }
    b.set_identity(static_cast<ObjId>(i), idx[i][i]);
  }
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) ends.emplace_back(i, j);
  return std::move(b).build([&](MorId g, MorId f) { return idx[ends[f].first][ends[g].second]; });
}

FinCat discrete_category(const std::vector<std::string>& labels) {
  FinCatBuilder b;
  for (const auto& l : labels) b.add_object_with_identity(l);
  return std::move(b).build();
}

FinCat terminal_category() { return discrete_category({"*"}); }

FinCat product(const FinCat& c, const FinCat& d) {
  check_cell_budget(c.num_morphisms() * d.num_morphisms(), "product morphisms");
  FinCatBuilder b;
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < d.num_objects(); ++y)
      b.add_object(tuple_label({c.object_label(x), d.object_label(y)}));
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId g = 0; g < d.num_morphisms(); ++g)
      b.add_morphism(tuple_label({c.morphism_label(f), d.morphism_label(g)}),
                     product_object(d, c.src(f), d.src(g)), product_object(d, c.tgt(f), d.tgt(g)));
  for (ObjId x = 0; x < c.num_objects(); ++x)
    for (ObjId y = 0; y < d.num_objects(); ++y)
      b.set_identity(product_object(d, x, y), product_morphism(d, c.identity(x), d.identity(y)));
  const std::size_t nd = d.num_morphisms();
  return std::move(b).build([&](MorId g, MorId f) {
    return product_morphism(d, c.compose_unchecked(g / nd, f / nd),
                            d.compose_unchecked(g % nd, f % nd));
  });
}

FinFunctor product_projection(const CatRef& product_cat, const CatRef& c, const CatRef& d,
                              int which) {
  FinFunctor p{product_cat, which == 0 ? c : d, {}, {}};
  const std::size_t nod = d->num_objects();
  const std::size_t nmd = d->num_morphisms();
  for (ObjId x = 0; x < product_cat->num_objects(); ++x)
    p.on_objects.push_back(static_cast<ObjId>(which == 0 ? x / nod : x % nod));
  for (MorId f = 0; f < product_cat->num_morphisms(); ++f)
    p.on_morphisms.push_back(static_cast<MorId>(which == 0 ? f / nmd : f % nmd));
  return p;
}

FinFunctor product_functor(const FinFunctor& f, const FinFunctor& g, const CatRef& source,
                           const CatRef& target) {
  FinFunctor h{source, target, {}, {}};
  const FinCat& gd = *g.source;
  const FinCat& gt = *g.target;
  for (ObjId x = 0; x < source->num_objects(); ++x) {
    const ObjId a = static_cast<ObjId>(x / gd.num_objects());
    const ObjId b = static_cast<ObjId>(x % gd.num_objects());
    h.on_objects.push_back(product_object(gt, f.obj(a), g.obj(b)));
  }
  for (MorId m = 0; m < source->num_morphisms(); ++m) {
    const MorId a = static_cast<MorId>(m / gd.num_morphisms());
    const MorId b = static_cast<MorId>(m % gd.num_morphisms());
    h.on_morphisms.push_back(product_morphism(gt, f.mor(a), g.mor(b)));
  }
  return h;
}

FinCat coproduct(const FinCat& c, const FinCat& d) {
  FinCatBuilder b;
  const auto oc = static_cast<ObjId>(c.num_objects());
  const auto mc = static_cast<MorId>(c.num_morphisms());
  for (ObjId x = 0; x < c.num_objects(); ++x) b.add_object("in0(" + c.object_label(x) + ")");
  for (ObjId y = 0; y < d.num_objects(); ++y) b.add_object("in1(" + d.object_label(y) + ")");
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    b.add_morphism("in0(" + c.morphism_label(f) + ")", c.src(f), c.tgt(f));
  for (MorId g = 0; g < d.num_morphisms(); ++g)
    b.add_morphism("in1(" + d.morphism_label(g) + ")", oc + d.src(g), oc + d.tgt(g));
  for (ObjId x = 0; x < c.num_objects(); ++x) b.set_identity(x, c.identity(x));
  for (ObjId y = 0; y < d.num_objects(); ++y) b.set_identity(oc + y, mc + d.identity(y));
  return std::move(b).build([&](MorId g, MorId f) -> MorId {
    if (f < mc) return c.compose_unchecked(g, f);
    return mc + d.compose_unchecked(g - mc, f - mc);
  });
}

std::optional<ObjId> Pullback::object_of(ObjId a, ObjId b) const {
  auto it = object_index.find({a, b});
  if (it == object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> Pullback::morphism_of(MorId f, MorId g) const {
  auto it = morphism_index.find({f, g});
  if (it == morphism_index.end()) return std::nullopt;
  return it->second;
}

Pullback pullback_of_pairs(const CatRef& a_ref, const CatRef& b_ref, std::vector<std::pair<ObjId, ObjId>> objects,
                           std::vector<std::pair<MorId, MorId>> morphisms) {
  const FinCat& a = *a_ref;
  const FinCat& b = *b_ref;
  Pullback pb;
  FinCatBuilder builder;
  pb.objects = std::move(objects);
  pb.morphisms = std::move(morphisms);
  for (ObjId p = 0; p < pb.objects.size(); ++p) {
    const auto [x, y] = pb.objects[p];
    builder.add_object(tuple_label({a.object_label(x), b.object_label(y)}));
    pb.object_index.emplace(pb.objects[p], p);
  }
  auto pair_object = [&](ObjId x, ObjId y) {
    auto it = pb.object_index.find({x, y});
    if (it == pb.object_index.end())
      throw DomainError("pullback: missing object (" + a.object_label(x) + ", " + b.object_label(y) + ")");
    return it->second;
  };
  auto pair_morphism = [&](MorId m, MorId n) {
    auto it = pb.morphism_index.find({m, n});
    if (it == pb.morphism_index.end())
      throw DomainError("pullback: missing morphism (" + a.morphism_label(m) + ", " + b.morphism_label(n) + ")");
    return it->second;
  };
  for (MorId q = 0; q < pb.morphisms.size(); ++q) {
    const auto [m, n] = pb.morphisms[q];
    builder.add_morphism(tuple_label({a.morphism_label(m), b.morphism_label(n)}), pair_object(a.src(m), b.src(n)),
                         pair_object(a.tgt(m), b.tgt(n)));
    pb.morphism_index.emplace(pb.morphisms[q], q);
  }
  for (ObjId p = 0; p < pb.objects.size(); ++p) {
    auto [x, y] = pb.objects[p];
    builder.set_identity(p, pair_morphism(a.identity(x), b.identity(y)));
  }
  pb.category = share(std::move(builder).build([&](MorId q, MorId p) {
    const auto [m1, n1] = pb.morphisms[p];
    const auto [m2, n2] = pb.morphisms[q];
    return pair_morphism(a.compose_unchecked(m2, m1), b.compose_unchecked(n2, n1));
  }));
  pb.first = FinFunctor{pb.category, a_ref, {}, {}};
  pb.second = FinFunctor{pb.category, b_ref, {}, {}};
  for (auto [x, y] : pb.objects) {
    pb.first.on_objects.push_back(x);
    pb.second.on_objects.push_back(y);
  }
  for (auto [m, n] : pb.morphisms) {
    pb.first.on_morphisms.push_back(m);
    pb.second.on_morphisms.push_back(n);
  }
  return pb;
}

Pullback pullback(const FinFunctor& f, const FinFunctor& g) {
  if (f.target.get() != g.target.get() &&
      (f.target->num_objects() != g.target->num_objects() ||
       f.target->num_morphisms() != g.target->num_morphisms())) {
    throw DomainError("pullback: functors have different targets");
  }
  const FinCat& a = *f.source;
  const FinCat& b = *g.source;
  std::vector<std::pair<ObjId, ObjId>> objects;
  std::vector<std::pair<MorId, MorId>> morphisms;
  for (ObjId x = 0; x < a.num_objects(); ++x)
    for (ObjId y = 0; y < b.num_objects(); ++y)
      if (f.obj(x) == g.obj(y)) objects.emplace_back(x, y);
  // Group b's morphisms by image to avoid the full |Mor A| x |Mor B| scan.
  std::unordered_map<MorId, std::vector<MorId>> by_image;
  for (MorId n = 0; n < b.num_morphisms(); ++n) by_image[g.mor(n)].push_back(n);
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    auto it = by_image.find(f.mor(m));
    if (it == by_image.end()) continue;
    for (MorId n : it->second) {
      morphisms.emplace_back(m, n);
      check_cell_budget(morphisms.size(), "pullback morphisms");
    }
  }
  return pullback_of_pairs(f.source, g.source, std::move(objects), std::move(morphisms));
}

FinFunctor monotone_functor(const CatRef& chain_src, const CatRef& chain_tgt,
                            const std::vector<int>& values) {
  if (values.size() != chain_src->num_objects()) {
    throw DomainError("monotone_functor: wrong number of values");
  }
  std::vector<ObjId> objs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || static_cast<std::size_t>(values[i]) >= chain_tgt->num_objects()) {
      throw DomainError("monotone_functor: value out of range");
    }
    if (i > 0 && values[i] < values[i - 1]) throw DomainError("monotone_functor: not monotone");
    objs.push_back(static_cast<ObjId>(values[i]));
  }
  return functor_into_thin(chain_src, chain_tgt, std::move(objs));
}

FinFunctor functor_into_thin(const CatRef& src, const CatRef& tgt,
                             std::vector<ObjId> on_objects) {
  FinFunctor f{src, tgt, std::move(on_objects), {}};
  for (MorId m = 0; m < src->num_morphisms(); ++m) {
    const auto hom = tgt->hom(f.obj(src->src(m)), f.obj(src->tgt(m)));
    if (hom.size() != 1) {
      throw DomainError("functor_into_thin: no unique morphism for " + src->morphism_label(m));
    }
    f.on_morphisms.push_back(hom.front());
  }
  return f;
}

FinFunctor constant_functor(const CatRef& src, const CatRef& tgt, ObjId x) {
  FinFunctor f{src, tgt, std::vector<ObjId>(src->num_objects(), x),
               std::vector<MorId>(src->num_morphisms(), tgt->identity(x))};
  return f;
}

FinCat free_category(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<ObjId, ObjId>>& edges) {
  const std::size_t n = vertices.size();
  // paths as edge sequences, enumerated by increasing length
  std::vector<std::vector<std::size_t>> paths;
  std::vector<ObjId> p_src;
  std::vector<ObjId> p_tgt;
  for (ObjId v = 0; v < n; ++v) {
    paths.push_back({});
    p_src.push_back(v);
    p_tgt.push_back(v);
  }
  std::size_t frontier_begin = 0;
  std::size_t frontier_end = paths.size();
  for (std::size_t len = 1; frontier_begin < frontier_end; ++len) {
    if (len > n) throw DomainError("free_category: graph has a cycle");
    for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].first != p_tgt[p]) continue;
        auto next = paths[p];
        next.push_back(e);
        paths.push_back(std::move(next));
        p_src.push_back(p_src[p]);
        p_tgt.push_back(edges[e].second);
        check_cell_budget(paths.size(), "free category paths");
      }
    }
    frontier_begin = frontier_end;
    frontier_end = paths.size();
  }
  std::map<std::vector<std::size_t>, MorId> index;
  FinCatBuilder b;
  for (const auto& v : vertices) b.add_object(v);
  for (std::size_t p = 0; p < paths.size(); ++p) {
    std::string label;
    if (paths[p].empty()) {
      label = "id_" + vertices[p_src[p]];
    } else {
      label = "e" + std::to_string(paths[p][0]);
      for (std::size_t k = 1; k < paths[p].size(); ++k) label += ".e" + std::to_string(paths[p][k]);
    }
    index.emplace(paths[p], b.add_morphism(label, p_src[p], p_tgt[p]));
  }
  for (ObjId v = 0; v < n; ++v) b.set_identity(v, v);
  return std::move(b).build([&](MorId g, MorId f) {
    auto joined = paths[f];
    joined.insert(joined.end(), paths[g].begin(), paths[g].end());
    return index.at(joined);
  });
}

namespace {

struct FunctorSearch {
  const FinCat& s;
  const FinCat& t;
  const std::function<bool(const FinFunctor&)>& visit;
  FinFunctor current;
  std::vector<MorId> order;  // non-identity morphisms of s
  bool stop = false;

  bool consistent_upto(std::size_t k) const {
    // every composable pair among assigned morphisms whose composite is
    // assigned must be preserved
    const MorId m = order[k];
    auto assigned = [&](MorId x) {
      return s.is_identity(x) || current.on_morphisms[x] != kInvalidId;
    };
    for (MorId n : s.out_morphisms(s.tgt(m))) {
      if (!assigned(n)) continue;
      const MorId nm = s.compose_unchecked(n, m);
      if (!assigned(nm)) continue;
      if (current.on_morphisms[nm] != t.compose_unchecked(current.on_morphisms[n],
                                                          current.on_morphisms[m]))
        return false;
    }
    for (MorId n : s.in_morphisms(s.src(m))) {
      if (!assigned(n)) continue;
      const MorId mn = s.compose_unchecked(m, n);
      if (!assigned(mn)) continue;
      if (current.on_morphisms[mn] != t.compose_unchecked(current.on_morphisms[m],
                                                          current.on_morphisms[n]))
        return false;
    }
    // m as a composite of two assigned morphisms
    for (MorId f = 0; f < s.num_morphisms(); ++f) {
      if (!assigned(f) || s.src(f) != s.src(m)) continue;
      for (MorId g : s.out_morphisms(s.tgt(f))) {
        if (!assigned(g) || s.compose_unchecked(g, f) != m) continue;
        if (current.on_morphisms[m] != t.compose_unchecked(current.on_morphisms[g],
                                                           current.on_morphisms[f]))
          return false;
      }
    }
    return true;
  }

  void morphisms(std::size_t k) {
    if (stop) return;
    if (k == order.size()) {
      if (!visit(current)) stop = true;
      return;
    }
    const MorId m = order[k];
    for (MorId cand : t.hom(current.on_objects[s.src(m)], current.on_objects[s.tgt(m)])) {
      current.on_morphisms[m] = cand;
      if (consistent_upto(k)) morphisms(k + 1);
      if (stop) break;
    }
    current.on_morphisms[m] = kInvalidId;
  }

  void objects(ObjId x) {
    if (stop) return;
    if (x == s.num_objects()) {
      for (ObjId y = 0; y < s.num_objects(); ++y)
        current.on_morphisms[s.identity(y)] = t.identity(current.on_objects[y]);
      morphisms(0);
      return;
    }
    for (ObjId y = 0; y < t.num_objects(); ++y) {
      current.on_objects[x] = y;
      objects(x + 1);
      if (stop) return;
    }
  }
};

}  // namespace

void for_each_functor(const CatRef& src, const CatRef& tgt,
                      const std::function<bool(const FinFunctor&)>& visit) {
  FunctorSearch search{*src, *tgt, visit, FinFunctor{src, tgt, {}, {}}, {}};
  search.current.on_objects.assign(src->num_objects(), 0);
  search.current.on_morphisms.assign(src->num_morphisms(), kInvalidId);
  for (MorId m = 0; m < src->num_morphisms(); ++m)
    if (!src->is_identity(m)) search.order.push_back(m);
  if (src->num_objects() > 0 && tgt->num_objects() == 0) return;
  search.objects(0);
}

}  // namespace dblcat
