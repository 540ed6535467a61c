#include "reebkit/pl_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace reebkit {

Scalar PLFunction::min() const {
  if (values_.empty()) throw std::logic_error("min of empty function");
  return *std::min_element(values_.begin(), values_.end());
}

Scalar PLFunction::max() const {
  if (values_.empty()) throw std::logic_error("max of empty function");
  return *std::max_element(values_.begin(), values_.end());
}

Scalar PLFunction::evaluate(const SimplicialComplex& k, const ComplexPoint& p) const {
  auto verts = k.vertices_of(p.simplex);
  Scalar sum = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) sum += p.barycentric[i] * values_[verts[i]];
  return sum;
}

ValueRange PLFunction::range(const SimplicialComplex& k, SimplexId s) const {
  auto verts = k.vertices_of(s);
  ValueRange r{values_[verts[0]], values_[verts[0]]};
  for (VertexId v : verts) {
    if (values_[v] < r.lo) r.lo = values_[v];
    if (values_[v] > r.hi) r.hi = values_[v];
  }
  return r;
}

std::vector<ValueRange> PLFunction::ranges(const SimplicialComplex& k) const {
  std::vector<ValueRange> out;
  out.reserve(k.simplex_count());
  for (SimplexId s = 0; s < k.simplex_count(); ++s) out.push_back(range(k, s));
  return out;
}

std::vector<Scalar> PLFunction::distinct_values() const { return sorted_unique(values_); }

Scalar sup_distance(const PLFunction& f, const PLFunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("functions live on different complexes");
  Scalar best = 0;
  for (std::size_t v = 0; v < f.size(); ++v) {
    Scalar d = f[v] - g[v];
    if (d < 0) d = -d;
    if (d > best) best = d;
  }
  return best;
}

PLFunction interpolate(const PLFunction& f, const PLFunction& g, const Scalar& lambda) {
  if (f.size() != g.size()) throw std::invalid_argument("functions live on different complexes");
  std::vector<Scalar> out(f.size());
  const Scalar mu = 1 - lambda;
  for (std::size_t v = 0; v < f.size(); ++v) out[v] = mu * f[v] + lambda * g[v];
  return PLFunction(std::move(out));
}

}  // namespace reebkit
