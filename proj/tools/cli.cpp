#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dblcat/dot.hpp"
#include "dblcat/ex.hpp"
#include "dblcat/groth.hpp"
#include "dblcat/homology.hpp"
#include "dblcat/io.hpp"
#include "dblcat/nerve.hpp"
#include "dblcat/pushout.hpp"
#include "dblcat/subdivision.hpp"

namespace dblcat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  int max_dim = 3;
  std::string ring = "q";
  std::string format = "json";
  std::string shape;
  int k = 0;
  int t = 0;
  int n = 2;
  int m = 1;
  std::string kind = "interchange";
  std::string name;
};

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  Json load() const {
    std::string text;
    if (o_.input == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(o_.input, std::ios::binary);
      if (!f) throw DomainError("cannot read '" + o_.input + "'");
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    return parse_json(text, o_.input == "-" ? "<stdin>" : o_.input);
  }

  template <class T>
  void emit(const Json& j, const T& value) const {
    if (o_.format == "dot") {
      out_ << to_dot(value);
    } else {
      out_ << dump_json(j);
    }
  }

  /// Reports have no picture.
  void emit_report(const Json& j) const {
    if (o_.format == "dot") throw UsageError("--format dot is not available for this command");
    out_ << dump_json(j);
  }

  void emit_cat(const FinCat& c) const { emit(to_json(c), c); }
  void emit_poset(const FinPoset& p) const { emit(to_json(p), p); }
  void emit_sset(const TruncSSet& x) const { emit(to_json(x), x); }
  void emit_dbl(const FinDblCat& a) const { emit(to_json(a), a); }

  Shape shape() const {
    Shape s;
    if (o_.shape == "simplex") {
      s = Shape::simplex(o_.k);
    } else if (o_.shape == "boundary") {
      s = Shape::boundary(o_.k);
    } else if (o_.shape == "horn") {
      s = Shape::horn(o_.k, o_.t);
    } else {
      throw UsageError("--shape must be simplex, boundary or horn");
    }
    check_shape(s);
    return s;
  }

  /// An input simplicial set, or the standard shape when --shape is given.
  TruncSSet sset_input() const {
    if (!o_.shape.empty()) return standard(shape(), o_.max_dim);
    const Json j = load();
    expect(j, {DocKind::sset});
    return sset_from_json(j);
  }

  /// Anything with a nerve, as a simplicial set truncated at --max-dim.
  TruncSSet space(const Json& j) const {
    const int d = o_.max_dim;
    switch (detect_kind(j)) {
      case DocKind::sset: {
        TruncSSet x = sset_from_json(j);
        return x.trunc() > d ? truncate(x, d) : x;
      }
      case DocKind::category: return *nerve(share(fincat_from_json(j)), d).sset;
      case DocKind::poset: return *nerve(share(poset_from_json(j).as_category()), d).sset;
      case DocKind::double_category: {
        const FinDblCat a = dbl_from_json(j);
        require_valid(a);
        return diag(double_nerve(a, d, d).bisset);
      }
      default: throw DomainError("expected a simplicial set, category, poset or double category, got " +
                                 to_string(detect_kind(j)));
    }
  }

  static void expect(const Json& j, std::initializer_list<DocKind> kinds) {
    const DocKind k = detect_kind(j);
    if (std::find(kinds.begin(), kinds.end(), k) != kinds.end()) return;
    std::string want;
    for (DocKind w : kinds) want += (want.empty() ? "" : " or ") + to_string(w);
    throw DomainError("expected " + want + ", got " + to_string(k));
  }

  static void require_valid(const FinDblCat& a) {
    const auto v = validate_double_category(a);
    if (!v.empty()) throw DomainError("invalid double category: " + v.front());
  }

  FinDblCat dbl_input() const {
    const Json j = load();
    expect(j, {DocKind::double_category});
    FinDblCat a = dbl_from_json(j);
    require_valid(a);
    return a;
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
};

std::vector<std::string> violations_of(const Json& j, DocKind& kind) {
  kind = detect_kind(j);
  try {
    switch (kind) {
      case DocKind::category: return validate(fincat_from_json(j));
      case DocKind::poset: poset_from_json(j); return {};
      case DocKind::sset: sset_from_json(j); return {};
      case DocKind::double_category: return validate_double_category(dbl_from_json(j));
      case DocKind::functor: return validate(functor_doc_from_json(j));
      case DocKind::dbl_functor: return validate(dbl_functor_doc_from_json(j));
      case DocKind::cat_diagram: return validate(cat_diagram_from_json(j));
      case DocKind::dbl_diagram: return validate(dbl_diagram_from_json(j));
      case DocKind::sieve_pushout: {
        const SievePushoutSpec s = sieve_spec_from_json(j);
        auto v = validate(s.f);
        if (!is_sieve(s.inc)) v.push_back("[sieve] P is not a sieve in Q");
        return v;
      }
      case DocKind::dbl_sieve_pushout: {
        const DblSievePushoutSpec s = dbl_sieve_spec_from_json(j);
        auto v = validate(s.f);
        if (!is_sieve(s.inc)) {
          v.push_back("[sieve] P is not a sieve in Q");
        } else if (!is_weakly_solid(s.inc)) {
          v.push_back("[sieve] P is not weakly solid in Q");
        }
        return v;
      }
      case DocKind::unknown: throw DomainError("unrecognized document");
    }
  } catch (const CellLimitExceeded&) {
    throw;
  } catch (const DomainError& e) {
    return {e.what()};
  }
  return {};
}

Json report_json(const HomologyReport& r) {
  Json betti = Json::array();
  for (const auto& b : r.betti) betti.push_back(b ? Json(*b) : Json(nullptr));
  return {{"ring", to_string(r.ring)},
          {"max_degree", r.max_degree},
          {"valid_through", r.valid_through},
          {"betti", betti},
          {"torsion", r.torsion},
          {"chain_ranks", r.chain_ranks},
          {"boundary_ranks", r.boundary_ranks}};
}

Json witness_json(const WitnessReport& w) {
  Json degrees = Json::array();
  for (const auto& d : w.degrees)
    degrees.push_back({{"degree", d.degree},
                       {"source_betti", d.source_betti},
                       {"target_betti", d.target_betti},
                       {"induced_rank", d.induced_rank},
                       {"iso", d.iso}});
  return {{"valid_through", w.valid_through},
          {"passes", w.passes},
          {"first_failure", w.first_failure ? Json(*w.first_failure) : Json(nullptr)},
          {"degrees", degrees},
          {"note", "rational homology comparison; a failure refutes a weak equivalence, a pass does not prove one"}};
}

Corruption parse_corruption(const std::string& s) {
  for (Corruption c : {Corruption::interchange, Corruption::left_unit, Corruption::right_unit, Corruption::source,
                       Corruption::target})
    if (to_string(c) == s) return c;
  throw UsageError("--kind must be interchange, left-unit, right-unit, source or target");
}

void fixture(const Session& s, const Options& o) {
  const std::string& f = o.name;
  if (f == "spine" || f == "spine-diagram" || f == "spine-target") {
    if (o.n < 1) throw DomainError("spine needs --n >= 1");
    const LocalizationSource src = spine_source(o.n);
    if (f == "spine") return s.emit_dbl(*src.source.dbl);
    if (f == "spine-target") return s.emit_dbl(*src.target);
    return s.emit_report(to_json(src.diagram));
  }
  if (f == "completeness" || f == "completeness-diagram") {
    const LocalizationSource src = completeness_source();
    if (f == "completeness") return s.emit_dbl(*src.source.dbl);
    return s.emit_report(to_json(src.diagram));
  }
  if (f == "counterexample") return s.emit_report(to_json(counterexample_spec()));
  if (f == "counterexample-leg") {
    const DblSievePushout po = pushout_dbl_box_sieve(counterexample_spec());
    return s.emit_report(to_json(po.from_a));
  }
  if (f == "corrupted") return s.emit_dbl(corrupted_fixture(parse_corruption(o.kind)));
  if (f == "idempotent") return s.emit_dbl(idempotent_double_category());
  if (f == "chain") return s.emit_cat(chain_category(o.n));
  if (f == "box") return s.emit_dbl(box(chain_category(o.n), chain_category(o.m)));
  if (f == "shape") return s.emit_sset(standard(s.shape(), o.max_dim));
  if (f == "interval-pushout") return s.emit_sset(interval_pushout_fixture(o.max_dim));
  if (f == "sd2-interval") return s.emit_sset(sd2_interval(o.max_dim));
  if (f == "csd2-inclusion") {
    const PosetInclusion inc = csd2_inclusion(s.shape());
    auto sub = share(inc.sub().as_category());
    auto amb = share(inc.ambient().as_category());
    std::vector<ObjId> objs;
    for (std::size_t p = 0; p < inc.sub().size(); ++p) objs.push_back(static_cast<ObjId>(inc.image(p)));
    return s.emit_report(to_json(functor_into_thin(sub, amb, objs)));
  }
  throw UsageError("unknown fixture '" + f +
                   "' (spine, spine-diagram, spine-target, completeness, completeness-diagram, counterexample, "
                   "counterexample-leg, corrupted, idempotent, chain, box, shape, interval-pushout, sd2-interval, "
                   "csd2-inclusion)");
}

int dispatch(const std::string& cmd, const Options& o, std::istream& in, std::ostream& out) {
  const Session s(o, in, out);
  if (cmd == "validate") {
    DocKind kind;
    const auto v = violations_of(s.load(), kind);
    s.emit_report({{"kind", to_string(kind)}, {"valid", v.empty()}, {"violations", v}});
    return v.empty() ? 0 : 1;
  }
  if (cmd == "nerve") {
    const Json j = s.load();
    Session::expect(j, {DocKind::category, DocKind::poset});
    s.emit_sset(s.space(j));
  } else if (cmd == "sd") {
    s.emit_sset(sd(s.sset_input()));
  } else if (cmd == "csd2") {
    s.emit_poset(csd2_poset(s.shape()));
  } else if (cmd == "hnerve") {
    if (o.m < 0) throw DomainError("--m must be non-negative");
    s.emit_cat(*horizontal_nerve_level(s.dbl_input(), o.m).category);
  } else if (cmd == "dnerve") {
    const DoubleNerve dn = double_nerve(s.dbl_input(), o.max_dim, o.max_dim);
    Json counts = Json::array();
    for (int n = 0; n <= dn.bisset.n_max; ++n) {
      Json row = Json::array();
      for (int k = 0; k <= dn.bisset.k_max; ++k) row.push_back(dn.bisset.count(n, k));
      counts.push_back(row);
    }
    s.emit_report({{"n_max", dn.bisset.n_max}, {"k_max", dn.bisset.k_max}, {"counts", counts},
                   {"valid", validate(dn.bisset).empty()}});
  } else if (cmd == "diag") {
    s.emit_sset(diag(double_nerve(s.dbl_input(), o.max_dim, o.max_dim).bisset));
  } else if (cmd == "ex") {
    TruncSSet x = s.sset_input();
    const int d = std::min(o.max_dim, x.trunc());
    s.emit_sset(*ex(share(x.trunc() > d ? truncate(x, d) : std::move(x)), d).sset);
  } else if (cmd == "pushout-cat") {
    const Json j = s.load();
    Session::expect(j, {DocKind::sieve_pushout});
    s.emit_cat(*pushout_cat_sieve(sieve_spec_from_json(j)).category);
  } else if (cmd == "pushout-dbl") {
    const Json j = s.load();
    Session::expect(j, {DocKind::dbl_sieve_pushout});
    s.emit_dbl(*pushout_dbl_box_sieve(dbl_sieve_spec_from_json(j)).dbl);
  } else if (cmd == "verify-nerve") {
    const Json j = s.load();
    Session::expect(j, {DocKind::dbl_sieve_pushout});
    Json levels = Json::array();
    bool all = true;
    for (const LevelVerdict& v : verify_nerve_preserves_pushout(dbl_sieve_spec_from_json(j), o.max_dim)) {
      all = all && v.isomorphic;
      levels.push_back({{"m", v.m},
                        {"objects", v.objects},
                        {"morphisms", v.morphisms},
                        {"expected_objects", v.expected_objects},
                        {"expected_morphisms", v.expected_morphisms},
                        {"isomorphic", v.isomorphic},
                        {"detail", v.detail}});
    }
    s.emit_report({{"levels", levels}, {"all_isomorphic", all}});
  } else if (cmd == "groth") {
    const Json j = s.load();
    Session::expect(j, {DocKind::cat_diagram, DocKind::dbl_diagram});
    if (detect_kind(j) == DocKind::cat_diagram) {
      s.emit_cat(*grothendieck_cat(cat_diagram_from_json(j)).category);
    } else {
      s.emit_dbl(*grothendieck_dbl(dbl_diagram_from_json(j)).dbl);
    }
  } else if (cmd == "fixture") {
    fixture(s, o);
  } else if (cmd == "homology") {
    s.emit_report(report_json(betti(s.space(s.load()), parse_ring(o.ring))));
  } else if (cmd == "witness") {
    const Json j = s.load();
    Session::expect(j, {DocKind::functor, DocKind::dbl_functor});
    const WitnessReport w = detect_kind(j) == DocKind::functor ? we_witness(functor_doc_from_json(j), o.max_dim)
                                                               : we_witness(dbl_functor_doc_from_json(j), o.max_dim);
    s.emit_report(witness_json(w));
  } else if (cmd == "export") {
    const Json j = s.load();
    switch (detect_kind(j)) {
      case DocKind::category: s.emit_cat(fincat_from_json(j)); break;
      case DocKind::poset: s.emit_poset(poset_from_json(j)); break;
      case DocKind::sset: s.emit_sset(sset_from_json(j)); break;
      case DocKind::double_category: s.emit_dbl(dbl_from_json(j)); break;
      default: s.emit_report(j);
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite double categories, sieve pushouts, nerves and homology witnesses", "dblcat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add = [&](const std::string& name, const std::string& desc) { return app.add_subcommand(name, desc); };
  auto input = [&](CLI::App* c) { c->add_option("input", o.input, "JSON document, or - for stdin")->capture_default_str(); };
  auto max_dim = [&](CLI::App* c) {
    c->add_option("--max-dim", o.max_dim, "Truncation dimension")->capture_default_str()->check(CLI::NonNegativeNumber);
  };
  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "dot"}));
  };
  auto shape = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--shape", o.shape, "simplex, boundary or horn");
    if (required) opt->required();
    c->add_option("--k", o.k, "Dimension of the shape")->capture_default_str();
    c->add_option("--t", o.t, "Missing face of a horn")->capture_default_str();
  };

  auto* validate_cmd = add("validate", "Check the axioms of any document; exit 1 on violations");
  input(validate_cmd);
  auto* nerve_cmd = add("nerve", "Nerve of a category or poset");
  input(nerve_cmd), max_dim(nerve_cmd), format(nerve_cmd);
  auto* sd_cmd = add("sd", "Barycentric subdivision of a simplicial set");
  input(sd_cmd), max_dim(sd_cmd), format(sd_cmd), shape(sd_cmd, false);
  auto* csd2_cmd = add("csd2", "The poset cSd² of a standard shape");
  format(csd2_cmd), shape(csd2_cmd, true);
  auto* hnerve_cmd = add("hnerve", "Level m of the horizontal nerve");
  input(hnerve_cmd), format(hnerve_cmd);
  hnerve_cmd->add_option("--m", o.m, "Level")->capture_default_str();
  auto* dnerve_cmd = add("dnerve", "Cell counts of the double nerve");
  input(dnerve_cmd), max_dim(dnerve_cmd);
  auto* diag_cmd = add("diag", "Diagonal of the double nerve");
  input(diag_cmd), max_dim(diag_cmd), format(diag_cmd);
  auto* ex_cmd = add("ex", "Kan's Ex of a simplicial set (dimension at most 3)");
  input(ex_cmd), max_dim(ex_cmd), format(ex_cmd), shape(ex_cmd, false);
  auto* pcat_cmd = add("pushout-cat", "Pushout of categories along C × P ⊆ C × Q");
  input(pcat_cmd), format(pcat_cmd);
  auto* pdbl_cmd = add("pushout-dbl", "Pushout of double categories along C ⊠ P ⊆ C ⊠ Q");
  input(pdbl_cmd), format(pdbl_cmd);
  auto* verify_cmd = add("verify-nerve", "Compare horizontal nerve levels of a pushout with levelwise pushouts");
  input(verify_cmd), max_dim(verify_cmd);
  auto* groth_cmd = add("groth", "Grothendieck construction of a diagram");
  input(groth_cmd), format(groth_cmd);
  auto* fixture_cmd = add("fixture", "Emit a built-in fixture");
  fixture_cmd->add_option("name", o.name, "Fixture name")->required();
  fixture_cmd->add_option("--n", o.n, "Size parameter")->capture_default_str();
  fixture_cmd->add_option("--m", o.m, "Second size parameter")->capture_default_str();
  fixture_cmd->add_option("--kind", o.kind, "Corruption kind")->capture_default_str();
  max_dim(fixture_cmd), format(fixture_cmd), shape(fixture_cmd, false);
  auto* homology_cmd = add("homology", "Betti numbers and torsion of a nerve or simplicial set");
  input(homology_cmd), max_dim(homology_cmd);
  homology_cmd->add_option("--ring", o.ring, "q, z or z2")->capture_default_str()->check(CLI::IsMember({"q", "z", "z2"}));
  auto* witness_cmd = add("witness", "Rational homology comparison along a functor or double functor");
  input(witness_cmd), max_dim(witness_cmd);
  auto* export_cmd = add("export", "Re-emit a document canonically or as DOT");
  input(export_cmd), format(export_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "dblcat: " << e.what() << "\n";
    return 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, in, out);
  } catch (const UsageError& e) {
    err << "dblcat " << cmd << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "dblcat " << cmd << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dblcat::cli
