#include "reebkit/level_sets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "reebkit/disjoint_set.hpp"

namespace reebkit {

std::vector<SimplexSet> components_where(const SimplicialComplex& k, const std::function<bool(SimplexId)>& meets) {
  const int n = k.simplex_count();
  std::vector<char> in(n, 0);
  for (SimplexId s = 0; s < n; ++s) in[s] = meets(s) ? 1 : 0;

  DisjointSet ds(n);
  for (SimplexId s = 0; s < n; ++s) {
    if (!in[s]) continue;
    for (SimplexId f : k.faces_of(s))
      if (in[f]) ds.unite(s, f);
  }

  std::map<int, int> root_to_component;
  std::vector<SimplexSet> out;
  for (SimplexId s = 0; s < n; ++s) {
    if (!in[s]) continue;
    auto [it, inserted] = root_to_component.emplace(ds.find(s), static_cast<int>(out.size()));
    if (inserted) out.emplace_back();
    out[it->second].push_back(s);
  }
  return out;
}

std::vector<SimplexSet> level_components(const SimplicialComplex& k, const PLFunction& f, const Scalar& t) {
  auto ranges = f.ranges(k);
  return components_where(k, [&](SimplexId s) { return ranges[s].contains(t); });
}

std::vector<SimplexSet> interval_preimage_components(const SimplicialComplex& k, const PLFunction& f,
                                                     const Scalar& a, const Scalar& b) {
  if (a > b) throw std::invalid_argument("interval_preimage_components: lower bound exceeds upper bound");
  auto ranges = f.ranges(k);
  return components_where(k, [&](SimplexId s) { return ranges[s].meets(a, b); });
}

}  // namespace reebkit
