#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dblcat/dblcat.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/groth.hpp"
#include "dblcat/poset.hpp"
#include "dblcat/pushout.hpp"
#include "dblcat/sset.hpp"

namespace dblcat {

using Json = nlohmann::json;

/// Parses JSON text; throws DomainError naming `source` and the byte offset
/// on malformed input.
Json parse_json(const std::string& text, const std::string& source);
/// Two-space indented dump with sorted keys and a trailing newline.
std::string dump_json(const Json& j);

enum class DocKind {
  category,
  poset,
  sset,
  double_category,
  functor,
  dbl_functor,
  cat_diagram,
  dbl_diagram,
  sieve_pushout,
  dbl_sieve_pushout,
  unknown
};

/// Classifies a document by its top-level keys.
DocKind detect_kind(const Json& j);
std::string to_string(DocKind k);

/// {"objects", "morphisms":[{"id","src","tgt"}], "identities", "compose":[[g,f,gf]]}.
Json to_json(const FinCat& c);
FinCat fincat_from_json(const Json& j);

/// {"elements", "leq":[[a,b]]} listing every pair a ≤ b.
Json to_json(const FinPoset& p);
FinPoset poset_from_json(const Json& j);

/// {"objects":{x:F x}, "morphisms":{f:F f}} keyed by labels.
Json functor_map_json(const FinFunctor& f);
FinFunctor functor_from_json(const Json& j, const CatRef& source, const CatRef& target);

/// {"trunc", "levels":[[label]], "faces":{"k":[[id]]}, "degens":{"k":[[id]]},
/// "nondegenerate":[count]}. The last field is derived and ignored on input.
Json to_json(const TruncSSet& x);
TruncSSet sset_from_json(const Json& j);

/// {"A0", "A1", "s", "t", "i", "c"}; c lists [h,k,c(h,k)] and [x,y,c(x,y)]
/// by label, with null for undefined entries.
Json to_json(const FinDblCat& a);
/// Does not validate, so corrupted documents can be read back and checked.
FinDblCat dbl_from_json(const Json& j);

/// {"source", "target", "map"} for functors; "map" holds "f0" and "f1" for
/// double functors.
Json to_json(const FinFunctor& f);
Json to_json(const DblFunctor& f);
FinFunctor functor_doc_from_json(const Json& j);
DblFunctor dbl_functor_doc_from_json(const Json& j);

/// {"shape", "values":{j:value}, "action":{s:functor map}}.
Json to_json(const CatDiagram& d);
Json to_json(const DblDiagram& d);
CatDiagram cat_diagram_from_json(const Json& j);
DblDiagram dbl_diagram_from_json(const Json& j);

/// {"C", "P", "Q", "embedding":[label of the image of each p], "A", "F"}.
/// C is a list of labels in the Cat case and a category in the double case;
/// F is a functor map (Cat) or {"f0","f1"} (double).
Json to_json(const SievePushoutSpec& s);
Json to_json(const DblSievePushoutSpec& s);
SievePushoutSpec sieve_spec_from_json(const Json& j);
DblSievePushoutSpec dbl_sieve_spec_from_json(const Json& j);

}  // namespace dblcat
