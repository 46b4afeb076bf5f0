#include "dblcat/io.hpp"

#include <unordered_map>

namespace dblcat {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) throw DomainError(where + ": expected a string, got " + j.dump());
  return j.get<std::string>();
}

template <class F>
auto guarded(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DomainError(where + ": " + e.what());
  }
}

ObjId object_named(const FinCat& c, const std::string& label, const std::string& where) {
  auto x = c.find_object(label);
  if (!x) throw DomainError(where + ": unknown object '" + label + "'");
  return *x;
}

MorId morphism_named(const FinCat& c, const std::string& label, const std::string& where) {
  auto f = c.find_morphism(label);
  if (!f) throw DomainError(where + ": unknown morphism '" + label + "'");
  return *f;
}

std::size_t element_named(const FinPoset& p, const std::string& label, const std::string& where) {
  auto x = p.find(label);
  if (!x) throw DomainError(where + ": unknown element '" + label + "'");
  return *x;
}

Json dbl_map_json(const DblFunctor& f) { return {{"f0", functor_map_json(f.f0)}, {"f1", functor_map_json(f.f1)}}; }

DblFunctor dbl_map_from_json(const Json& j, const DblRef& src, const DblRef& tgt) {
  DblFunctor g;
  g.source = src;
  g.target = tgt;
  g.f0 = functor_from_json(field(j, "f0", "double functor"), src->a0, tgt->a0);
  g.f1 = functor_from_json(field(j, "f1", "double functor"), src->a1, tgt->a1);
  return g;
}

Json embedding_json(const PosetInclusion& inc) {
  Json e = Json::array();
  for (std::size_t p = 0; p < inc.sub().size(); ++p) e.push_back(inc.ambient().label(inc.image(p)));
  return e;
}

PosetInclusion inclusion_from_json(const Json& j) {
  FinPoset p = poset_from_json(field(j, "P", "pushout spec"));
  FinPoset q = poset_from_json(field(j, "Q", "pushout spec"));
  const Json& e = field(j, "embedding", "pushout spec");
  if (!e.is_array() || e.size() != p.size())
    throw DomainError("pushout spec: 'embedding' must list one element of Q per element of P");
  std::vector<std::size_t> images;
  for (const auto& l : e) images.push_back(element_named(q, text(l, "embedding"), "embedding"));
  return PosetInclusion(std::move(p), std::move(q), std::move(images));
}

}  // namespace

Json parse_json(const std::string& input, const std::string& source) {
  try {
    return Json::parse(input);
  } catch (const Json::parse_error& e) {
    throw DomainError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

DocKind detect_kind(const Json& j) {
  if (!j.is_object()) return DocKind::unknown;
  if (j.contains("A0")) return DocKind::double_category;
  if (j.contains("elements")) return DocKind::poset;
  if (j.contains("trunc")) return DocKind::sset;
  if (j.contains("compose")) return DocKind::category;
  if (j.contains("map") && j.contains("source"))
    return j["map"].contains("f0") ? DocKind::dbl_functor : DocKind::functor;
  if (j.contains("shape") && j.contains("values")) {
    for (const auto& [k, v] : j["values"].items())
      if (v.contains("A0")) return DocKind::dbl_diagram;
    return DocKind::cat_diagram;
  }
  if (j.contains("Q") && j.contains("C")) return j["C"].is_array() ? DocKind::sieve_pushout : DocKind::dbl_sieve_pushout;
  return DocKind::unknown;
}

std::string to_string(DocKind k) {
  switch (k) {
    case DocKind::category: return "category";
    case DocKind::poset: return "poset";
    case DocKind::sset: return "simplicial set";
    case DocKind::double_category: return "double category";
    case DocKind::functor: return "functor";
    case DocKind::dbl_functor: return "double functor";
    case DocKind::cat_diagram: return "diagram of categories";
    case DocKind::dbl_diagram: return "diagram of double categories";
    case DocKind::sieve_pushout: return "sieve pushout spec";
    case DocKind::dbl_sieve_pushout: return "double sieve pushout spec";
    case DocKind::unknown: return "unknown";
  }
  return "unknown";
}

Json to_json(const FinCat& c) {
  Json objects = Json::array(), morphisms = Json::array(), compose = Json::array();
  Json identities = Json::object();
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    objects.push_back(c.object_label(x));
    identities[c.object_label(x)] = c.morphism_label(c.identity(x));
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    morphisms.push_back({{"id", c.morphism_label(f)},
                         {"src", c.object_label(c.src(f))},
                         {"tgt", c.object_label(c.tgt(f))}});
    for (MorId g : c.out_morphisms(c.tgt(f)))
      compose.push_back({c.morphism_label(g), c.morphism_label(f), c.morphism_label(c.compose_unchecked(g, f))});
  }
  return {{"objects", objects}, {"morphisms", morphisms}, {"identities", identities}, {"compose", compose}};
}

FinCat fincat_from_json(const Json& j) {
  return guarded("category", [&] {
    FinCatBuilder b;
    std::unordered_map<std::string, ObjId> objs;
    std::unordered_map<std::string, MorId> mors;
    for (const auto& o : field(j, "objects", "category")) {
      const std::string l = text(o, "category objects");
      objs[l] = b.add_object(l);
    }
    auto obj = [&](const Json& v, const char* what) {
      auto it = objs.find(text(v, what));
      if (it == objs.end()) throw DomainError(std::string(what) + ": unknown object " + v.dump());
      return it->second;
    };
    auto mor = [&](const Json& v, const char* what) {
      auto it = mors.find(text(v, what));
      if (it == mors.end()) throw DomainError(std::string(what) + ": unknown morphism " + v.dump());
      return it->second;
    };
    for (const auto& m : field(j, "morphisms", "category")) {
      const std::string l = text(field(m, "id", "category morphism"), "morphism id");
      mors[l] = b.add_morphism(l, obj(field(m, "src", "morphism " + l), "morphism src"),
                               obj(field(m, "tgt", "morphism " + l), "morphism tgt"));
    }
    for (const auto& [o, m] : field(j, "identities", "category").items()) {
      auto it = objs.find(o);
      if (it == objs.end()) throw DomainError("identities: unknown object '" + o + "'");
      b.set_identity(it->second, mor(m, "identities"));
    }
    for (const auto& t : field(j, "compose", "category")) {
      if (!t.is_array() || t.size() != 3) throw DomainError("compose: expected [g, f, gf], got " + t.dump());
      b.set_composite(mor(t[0], "compose"), mor(t[1], "compose"), mor(t[2], "compose"));
    }
    return std::move(b).build();
  });
}

Json to_json(const FinPoset& p) {
  Json leq = Json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) leq.push_back({p.label(a), p.label(b)});
  return {{"elements", p.labels()}, {"leq", leq}};
}

FinPoset poset_from_json(const Json& j) {
  return guarded("poset", [&] {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& e : field(j, "elements", "poset")) {
      labels.push_back(text(e, "poset elements"));
      if (!index.emplace(labels.back(), labels.size() - 1).second)
        throw DomainError("poset: duplicate element '" + labels.back() + "'");
    }
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (const auto& r : field(j, "leq", "poset")) {
      if (!r.is_array() || r.size() != 2) throw DomainError("leq: expected [a, b], got " + r.dump());
      auto a = index.find(text(r[0], "leq")), b = index.find(text(r[1], "leq"));
      if (a == index.end() || b == index.end()) throw DomainError("leq: unknown element in " + r.dump());
      rel.emplace_back(a->second, b->second);
    }
    return FinPoset::from_relations(std::move(labels), rel);
  });
}

Json functor_map_json(const FinFunctor& f) {
  Json objects = Json::object(), morphisms = Json::object();
  for (ObjId x = 0; x < f.source->num_objects(); ++x)
    objects[f.source->object_label(x)] = f.target->object_label(f.obj(x));
  for (MorId m = 0; m < f.source->num_morphisms(); ++m)
    morphisms[f.source->morphism_label(m)] = f.target->morphism_label(f.mor(m));
  return {{"objects", objects}, {"morphisms", morphisms}};
}

FinFunctor functor_from_json(const Json& j, const CatRef& source, const CatRef& target) {
  return guarded("functor", [&] {
    FinFunctor f{source, target, {}, {}};
    const Json& objects = field(j, "objects", "functor");
    const Json& morphisms = field(j, "morphisms", "functor");
    for (ObjId x = 0; x < source->num_objects(); ++x) {
      const std::string& l = source->object_label(x);
      f.on_objects.push_back(object_named(*target, text(field(objects, l.c_str(), "functor objects"), l), "functor"));
    }
    for (MorId m = 0; m < source->num_morphisms(); ++m) {
      const std::string& l = source->morphism_label(m);
      f.on_morphisms.push_back(
          morphism_named(*target, text(field(morphisms, l.c_str(), "functor morphisms"), l), "functor"));
    }
    return f;
  });
}

Json to_json(const TruncSSet& x) {
  const SSetTables& t = x.tables();
  Json faces = Json::object(), degens = Json::object();
  for (int k = 1; k <= t.trunc; ++k) faces[std::to_string(k)] = t.faces[k];
  for (int k = 0; k < t.trunc; ++k) degens[std::to_string(k)] = t.degens[k];
  return {{"trunc", t.trunc},
          {"levels", t.labels},
          {"faces", faces},
          {"degens", degens},
          {"nondegenerate", x.nondegenerate_counts()}};
}

TruncSSet sset_from_json(const Json& j) {
  return guarded("simplicial set", [&] {
    SSetTables t;
    t.trunc = field(j, "trunc", "simplicial set").get<int>();
    if (t.trunc < 0) throw DomainError("simplicial set: negative truncation");
    t.labels = field(j, "levels", "simplicial set").get<std::vector<std::vector<std::string>>>();
    if (t.labels.size() != static_cast<std::size_t>(t.trunc) + 1)
      throw DomainError("simplicial set: 'levels' must have trunc + 1 entries");
    const Json& faces = field(j, "faces", "simplicial set");
    const Json& degens = field(j, "degens", "simplicial set");
    for (int k = 0; k <= t.trunc; ++k) {
      const std::string key = std::to_string(k);
      const std::size_t n = t.labels[k].size();
      t.faces.push_back(k == 0 ? std::vector<std::vector<SimplexId>>(n)
                               : field(faces, key.c_str(), "faces").get<std::vector<std::vector<SimplexId>>>());
      t.degens.push_back(k == t.trunc ? std::vector<std::vector<SimplexId>>(n)
                                      : field(degens, key.c_str(), "degens").get<std::vector<std::vector<SimplexId>>>());
    }
    return TruncSSet::from_tables(std::move(t));
  });
}

Json to_json(const FinDblCat& a) {
  auto label_or_null = [](const FinCat& c, std::uint32_t x, bool object) -> Json {
    if (x == kInvalidId) return nullptr;
    return object ? c.object_label(x) : c.morphism_label(x);
  };
  Json cobj = Json::array(), cmor = Json::array();
  for (std::size_t p = 0; p < a.pairs.objects.size(); ++p) {
    const auto [h, k] = a.pairs.objects[p];
    cobj.push_back({a.a1->object_label(h), a.a1->object_label(k), label_or_null(*a.a1, a.c.on_objects[p], true)});
  }
  for (std::size_t p = 0; p < a.pairs.morphisms.size(); ++p) {
    const auto [x, y] = a.pairs.morphisms[p];
    cmor.push_back(
        {a.a1->morphism_label(x), a.a1->morphism_label(y), label_or_null(*a.a1, a.c.on_morphisms[p], false)});
  }
  return {{"A0", to_json(*a.a0)},
          {"A1", to_json(*a.a1)},
          {"s", functor_map_json(a.s)},
          {"t", functor_map_json(a.t)},
          {"i", functor_map_json(a.i)},
          {"c", {{"objects", cobj}, {"morphisms", cmor}}}};
}

FinDblCat dbl_from_json(const Json& j) {
  return guarded("double category", [&] {
    FinDblCat a;
    a.a0 = share(fincat_from_json(field(j, "A0", "double category")));
    a.a1 = share(fincat_from_json(field(j, "A1", "double category")));
    a.s = functor_from_json(field(j, "s", "double category"), a.a1, a.a0);
    a.t = functor_from_json(field(j, "t", "double category"), a.a1, a.a0);
    a.i = functor_from_json(field(j, "i", "double category"), a.a0, a.a1);
    const Json& c = field(j, "c", "double category");
    if (validate(a.s).empty() && validate(a.t).empty()) {
      a.pairs = pullback(a.t, a.s);
    } else {
      // s or t is broken: keep the pairs exactly as listed under c
      std::vector<std::pair<ObjId, ObjId>> objs;
      std::vector<std::pair<MorId, MorId>> mors;
      for (const auto& e : field(c, "objects", "c"))
        objs.emplace_back(object_named(*a.a1, text(e.at(0), "c"), "c"), object_named(*a.a1, text(e.at(1), "c"), "c"));
      for (const auto& e : field(c, "morphisms", "c"))
        mors.emplace_back(morphism_named(*a.a1, text(e.at(0), "c"), "c"),
                          morphism_named(*a.a1, text(e.at(1), "c"), "c"));
      a.pairs = pullback_of_pairs(a.a1, a.a1, std::move(objs), std::move(mors));
    }
    a.c = FinFunctor{a.pairs.category, a.a1, std::vector<ObjId>(a.pairs.objects.size(), kInvalidId),
                     std::vector<MorId>(a.pairs.morphisms.size(), kInvalidId)};
    for (const auto& e : field(c, "objects", "c")) {
      if (!e.is_array() || e.size() != 3) throw DomainError("c objects: expected [h, k, hk], got " + e.dump());
      const ObjId h = object_named(*a.a1, text(e[0], "c"), "c"), k = object_named(*a.a1, text(e[1], "c"), "c");
      if (auto p = a.pairs.object_of(h, k); p && !e[2].is_null())
        a.c.on_objects[*p] = object_named(*a.a1, text(e[2], "c"), "c");
    }
    for (const auto& e : field(c, "morphisms", "c")) {
      if (!e.is_array() || e.size() != 3) throw DomainError("c morphisms: expected [x, y, xy], got " + e.dump());
      const MorId x = morphism_named(*a.a1, text(e[0], "c"), "c"), y = morphism_named(*a.a1, text(e[1], "c"), "c");
      if (auto p = a.pairs.morphism_of(x, y); p && !e[2].is_null())
        a.c.on_morphisms[*p] = morphism_named(*a.a1, text(e[2], "c"), "c");
    }
    return a;
  });
}

Json to_json(const FinFunctor& f) {
  return {{"source", to_json(*f.source)}, {"target", to_json(*f.target)}, {"map", functor_map_json(f)}};
}

Json to_json(const DblFunctor& f) {
  return {{"source", to_json(*f.source)}, {"target", to_json(*f.target)}, {"map", dbl_map_json(f)}};
}

FinFunctor functor_doc_from_json(const Json& j) {
  auto src = share(fincat_from_json(field(j, "source", "functor")));
  auto tgt = share(fincat_from_json(field(j, "target", "functor")));
  return functor_from_json(field(j, "map", "functor"), src, tgt);
}

DblFunctor dbl_functor_doc_from_json(const Json& j) {
  auto src = share(dbl_from_json(field(j, "source", "double functor")));
  auto tgt = share(dbl_from_json(field(j, "target", "double functor")));
  return dbl_map_from_json(field(j, "map", "double functor"), src, tgt);
}

Json to_json(const CatDiagram& d) {
  Json values = Json::object(), action = Json::object();
  for (ObjId x = 0; x < d.shape->num_objects(); ++x) values[d.shape->object_label(x)] = to_json(*d.values[x]);
  for (MorId s = 0; s < d.shape->num_morphisms(); ++s)
    action[d.shape->morphism_label(s)] = functor_map_json(d.action[s]);
  return {{"shape", to_json(*d.shape)}, {"values", values}, {"action", action}};
}

Json to_json(const DblDiagram& d) {
  Json values = Json::object(), action = Json::object();
  for (ObjId x = 0; x < d.shape->num_objects(); ++x) values[d.shape->object_label(x)] = to_json(*d.values[x]);
  for (MorId s = 0; s < d.shape->num_morphisms(); ++s) action[d.shape->morphism_label(s)] = dbl_map_json(d.action[s]);
  return {{"shape", to_json(*d.shape)}, {"values", values}, {"action", action}};
}

CatDiagram cat_diagram_from_json(const Json& j) {
  CatDiagram d;
  d.shape = share(fincat_from_json(field(j, "shape", "diagram")));
  const Json& values = field(j, "values", "diagram");
  const Json& action = field(j, "action", "diagram");
  for (ObjId x = 0; x < d.shape->num_objects(); ++x)
    d.values.push_back(share(fincat_from_json(field(values, d.shape->object_label(x).c_str(), "diagram values"))));
  for (MorId s = 0; s < d.shape->num_morphisms(); ++s)
    d.action.push_back(functor_from_json(field(action, d.shape->morphism_label(s).c_str(), "diagram action"),
                                         d.values[d.shape->src(s)], d.values[d.shape->tgt(s)]));
  return d;
}

DblDiagram dbl_diagram_from_json(const Json& j) {
  DblDiagram d;
  d.shape = share(fincat_from_json(field(j, "shape", "diagram")));
  const Json& values = field(j, "values", "diagram");
  const Json& action = field(j, "action", "diagram");
  for (ObjId x = 0; x < d.shape->num_objects(); ++x)
    d.values.push_back(share(dbl_from_json(field(values, d.shape->object_label(x).c_str(), "diagram values"))));
  for (MorId s = 0; s < d.shape->num_morphisms(); ++s)
    d.action.push_back(dbl_map_from_json(field(action, d.shape->morphism_label(s).c_str(), "diagram action"),
                                         d.values[d.shape->src(s)], d.values[d.shape->tgt(s)]));
  return d;
}

Json to_json(const SievePushoutSpec& s) {
  return {{"C", s.c},
          {"P", to_json(s.inc.sub())},
          {"Q", to_json(s.inc.ambient())},
          {"embedding", embedding_json(s.inc)},
          {"A", to_json(*s.a)},
          {"F", functor_map_json(s.f)}};
}

Json to_json(const DblSievePushoutSpec& s) {
  return {{"C", to_json(*s.c)},
          {"P", to_json(s.inc.sub())},
          {"Q", to_json(s.inc.ambient())},
          {"embedding", embedding_json(s.inc)},
          {"A", to_json(*s.a)},
          {"F", dbl_map_json(s.f)}};
}

SievePushoutSpec sieve_spec_from_json(const Json& j) {
  return guarded("pushout spec", [&] {
    auto c = field(j, "C", "pushout spec").get<std::vector<std::string>>();
    PosetInclusion inc = inclusion_from_json(j);
    auto a = share(fincat_from_json(field(j, "A", "pushout spec")));
    auto src = share(product(discrete_category(c), inc.sub().as_category()));
    FinFunctor f = functor_from_json(field(j, "F", "pushout spec"), src, a);
    return SievePushoutSpec{std::move(c), std::move(inc), a, std::move(f)};
  });
}

DblSievePushoutSpec dbl_sieve_spec_from_json(const Json& j) {
  return guarded("pushout spec", [&] {
    auto c = share(fincat_from_json(field(j, "C", "pushout spec")));
    PosetInclusion inc = inclusion_from_json(j);
    auto a = share(dbl_from_json(field(j, "A", "pushout spec")));
    auto src = share(box(*c, inc.sub().as_category()));
    DblFunctor f = dbl_map_from_json(field(j, "F", "pushout spec"), src, a);
    return DblSievePushoutSpec{c, std::move(inc), a, std::move(f)};
  });
}

}  // namespace dblcat
