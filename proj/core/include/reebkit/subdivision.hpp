#pragma once

#include <vector>

#include "reebkit/complex.hpp"
#include "reebkit/pl_function.hpp"

namespace reebkit {

/// A subdivision K' of a base complex K, with every K' simplex inside one
/// base simplex and every K' vertex located in K.
struct Subdivision {
  ComplexPtr base;
  ComplexPtr complex;
  std::vector<SimplexId> owner;              // smallest base simplex containing each K' simplex
  std::vector<ComplexPoint> vertex_position; // each K' vertex as a point of K

  /// Identity subdivision of k.
  static Subdivision identity(ComplexPtr k);
  /// A base function pulled back to K' (still simplexwise linear).
  PLFunction pull(const PLFunction& f) const;
  /// A K' point expressed in K.
  ComplexPoint push(const ComplexPoint& p) const;
};

/// Cuts every simplex of k along the levels f = t for each t in `levels`, so
/// that no simplex of the result has a level strictly inside its value range.
/// Base vertices keep their ids. Returns the identity when nothing is cut.
Subdivision subdivide_at_levels(ComplexPtr k, const PLFunction& f, const std::vector<Scalar>& levels);

/// outer subdivides inner.complex; the result subdivides inner.base.
Subdivision compose(const Subdivision& inner, const Subdivision& outer);

}  // namespace reebkit
