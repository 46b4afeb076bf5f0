#include "dblcat/nerve.hpp"

namespace dblcat {

namespace {

using Chain = std::vector<MorId>;

Chain chain_face(const FinCat& c, int k, const Chain& ch, int i) {
  if (k == 1) return {c.identity(i == 0 ? c.tgt(ch[0]) : c.src(ch[0]))};
  Chain out;
  for (int j = 0; j < k; ++j) {
    if (i == 0 && j == 0) continue;
    if (i == k && j == k - 1) continue;
    if (i > 0 && i < k && j == i - 1) continue;
    if (i > 0 && i < k && j == i) {
      out.push_back(c.compose_unchecked(ch[i], ch[i - 1]));
      continue;
    }
    out.push_back(ch[j]);
  }
  return out;
}

Chain chain_degen(const FinCat& c, int k, const Chain& ch, int i) {
  if (k == 0) return ch;
  const ObjId x = i < k ? c.src(ch[i]) : c.tgt(ch[k - 1]);
  Chain out(ch);
  out.insert(out.begin() + i, c.identity(x));
  return out;
}

}  // namespace

ObjId CategoryNerve::vertex(int k, SimplexId x, int j) const {
  const Chain& ch = chains[k][x];
  if (k == 0) return category->src(ch[0]);
  return j < k ? category->src(ch[j]) : category->tgt(ch[k - 1]);
}

bool is_thin(const FinCat& c) {
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    std::vector<bool> seen(c.num_objects(), false);
    for (MorId f : c.out_morphisms(x)) {
      if (seen[c.tgt(f)]) return false;
      seen[c.tgt(f)] = true;
    }
  }
  return true;
}

CategoryNerve nerve(const CatRef& cref, int d) {
  if (d < 0) throw DomainError("nerve: negative truncation");
  const FinCat& c = *cref;
  CategoryNerve n{cref, nullptr, {}};
  n.chains.resize(d + 1);
  for (ObjId x = 0; x < c.num_objects(); ++x) n.chains[0].push_back({c.identity(x)});
  for (int k = 1; k <= d; ++k) {
    for (const Chain& ch : n.chains[k - 1]) {
      const ObjId last = k == 1 ? c.src(ch[0]) : c.tgt(ch.back());
      for (MorId f : c.out_morphisms(last)) {
        Chain next = k == 1 ? Chain{} : ch;
        next.push_back(f);
        n.chains[k].push_back(std::move(next));
      }
      check_cell_budget(n.chains[k].size(), "nerve simplices");
    }
  }
  const bool thin = is_thin(c);
  auto label = [&](int k, const Chain& ch) {
    if (k == 0) return c.object_label(c.src(ch[0]));
    std::vector<std::string> parts;
    if (thin) {
      parts.push_back(c.object_label(c.src(ch[0])));
      for (MorId f : ch) parts.push_back(c.object_label(c.tgt(f)));
    } else {
      for (MorId f : ch) parts.push_back(c.morphism_label(f));
    }
    return tuple_label(parts);
  };
  auto tables = tables_from_keys<Chain, VectorHash>(
      d, n.chains, [&](int k, const Chain& ch, int i) { return chain_face(c, k, ch, i); },
      [&](int k, const Chain& ch, int i) { return chain_degen(c, k, ch, i); }, label);
  n.sset = share(TruncSSet::from_tables(std::move(tables)));
  return n;
}

SimplicialMap nerve_of_functor(const FinFunctor& f, const CategoryNerve& source,
                               const CategoryNerve& target) {
  const int d = source.sset->trunc();
  if (target.sset->trunc() != d) throw DomainError("nerve_of_functor: truncations differ");
  std::vector<std::unordered_map<Chain, SimplexId, VectorHash>> index(d + 1);
  for (int k = 0; k <= d; ++k)
    for (SimplexId x = 0; x < target.chains[k].size(); ++x) index[k].emplace(target.chains[k][x], x);
  SimplicialMap m{source.sset, target.sset, {}};
  for (int k = 0; k <= d; ++k) {
    m.levels.emplace_back();
    for (const Chain& ch : source.chains[k]) {
      Chain img;
      for (MorId g : ch) img.push_back(f.mor(g));
      m.levels[k].push_back(index[k].at(img));
    }
  }
  return m;
}

}  // namespace dblcat
