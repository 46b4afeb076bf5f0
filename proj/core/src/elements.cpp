#include "dblcat/elements.hpp"

#include <map>

namespace dblcat {

FinCat category_of_elements(const TruncSSet& x) {
  const int d = x.trunc();
  std::vector<std::vector<ObjId>> obj(d + 1);
  std::vector<std::string> names;
  FinCatBuilder b;
  for (int k = 0; k <= d; ++k)
    for (SimplexId s = 0; s < x.count(k); ++s) {
      names.push_back(std::to_string(k) + ":" + x.label(k, s));
      obj[k].push_back(b.add_object(names.back()));
    }

  struct Arrow {
    Operator theta;
    ObjId target;
  };
  std::vector<Arrow> arrows;
  std::map<std::pair<Operator, ObjId>, MorId> index;
  for (int m = 0; m <= d; ++m)
    for (SimplexId t = 0; t < x.count(m); ++t)
      for (int k = 0; k <= d; ++k)
        for (Operator& theta : monotone_maps(k, m)) {
          const ObjId src = obj[k][x.act(m, t, theta)];
          const ObjId tgt = obj[m][t];
          std::string word;
          for (int v : theta) word += std::to_string(v);
          const MorId f = b.add_morphism(word + ":" + names[src] + "->" + names[tgt], src, tgt);
          bool is_id = k == m;
          for (int i = 0; is_id && i <= k; ++i) is_id = theta[i] == i;
          if (is_id) b.set_identity(tgt, f);
          index.emplace(std::make_pair(theta, tgt), f);
          arrows.push_back({std::move(theta), tgt});
          check_cell_budget(arrows.size(), "category of elements morphisms");
        }
  return std::move(b).build([&](MorId g, MorId f) {
    return index.at({compose_operators(arrows[g].theta, arrows[f].theta), arrows[g].target});
  });
}

}  // namespace dblcat
