#include "dblcat/dot.hpp"

#include <sstream>

namespace dblcat {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

void nodes(std::ostringstream& os, std::size_t n, const auto& label) {
  for (std::size_t x = 0; x < n; ++x) os << "  n" << x << " [label=" << quoted(label(x)) << "];\n";
}

}  // namespace

std::string to_dot(const FinCat& c) {
  std::ostringstream os;
  os << "digraph category {\n";
  nodes(os, c.num_objects(), [&](std::size_t x) { return c.object_label(static_cast<ObjId>(x)); });
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    if (!c.is_identity(f))
      os << "  n" << c.src(f) << " -> n" << c.tgt(f) << " [label=" << quoted(c.morphism_label(f)) << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const FinPoset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  nodes(os, p.size(), [&](std::size_t x) { return p.label(x); });
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const TruncSSet& x) {
  std::ostringstream os;
  os << "digraph sset {\n";
  nodes(os, x.count(0), [&](std::size_t v) { return x.label(0, static_cast<SimplexId>(v)); });
  if (x.trunc() >= 1)
    for (SimplexId e : x.nondegenerate(1))
      os << "  n" << x.face(1, e, 1) << " -> n" << x.face(1, e, 0) << " [label=" << quoted(x.label(1, e)) << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const FinDblCat& a) {
  std::ostringstream os;
  os << "digraph double_category {\n";
  nodes(os, a.num_objects(), [&](std::size_t x) { return a.a0->object_label(static_cast<ObjId>(x)); });
  for (ObjId h = 0; h < a.num_horizontals(); ++h)
    if (!a.is_identity_horizontal(h))
      os << "  n" << a.s.obj(h) << " -> n" << a.t.obj(h) << " [label=" << quoted(a.a1->object_label(h)) << "];\n";
  for (MorId v = 0; v < a.num_verticals(); ++v)
    if (!a.a0->is_identity(v))
      os << "  n" << a.a0->src(v) << " -> n" << a.a0->tgt(v) << " [style=dashed, label=" << quoted(a.a0->morphism_label(v))
         << "];\n";
  for (MorId sq = 0; sq < a.num_squares(); ++sq)
    if (!a.is_degenerate_square(sq))
      os << "  sq" << sq << " [shape=box, style=dotted, label=" << quoted(a.a1->morphism_label(sq)) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace dblcat
