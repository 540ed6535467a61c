#pragma once

#include <utility>
#include <vector>

#include "reebkit/complex.hpp"
#include "reebkit/scalar.hpp"

namespace reebkit {

/// Closed value interval [lo, hi] of a function on one simplex.
struct ValueRange {
  Scalar lo;
  Scalar hi;

  bool contains(const Scalar& t) const { return lo <= t && t <= hi; }
  bool meets(const Scalar& a, const Scalar& b) const { return lo <= b && a <= hi; }
  bool constant() const { return lo == hi; }
};

/// Vertex values of a function that is linear on every simplex.
class PLFunction {
 public:
  PLFunction() = default;
  explicit PLFunction(std::vector<Scalar> values) : values_(std::move(values)) {}

  const Scalar& operator[](VertexId v) const { return values_[v]; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Scalar>& values() const { return values_; }

  Scalar min() const;
  Scalar max() const;

  /// Value at a point, by barycentric interpolation.
  Scalar evaluate(const SimplicialComplex& k, const ComplexPoint& p) const;
  ValueRange range(const SimplicialComplex& k, SimplexId s) const;
  std::vector<ValueRange> ranges(const SimplicialComplex& k) const;

  /// Distinct vertex values, ascending.
  std::vector<Scalar> distinct_values() const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  std::vector<Scalar> values_;
};

/// Sup norm of f - g over |K|; attained at vertices.
Scalar sup_distance(const PLFunction& f, const PLFunction& g);

/// (1 - lambda) f + lambda g, vertexwise.
PLFunction interpolate(const PLFunction& f, const PLFunction& g, const Scalar& lambda);

}  // namespace reebkit
