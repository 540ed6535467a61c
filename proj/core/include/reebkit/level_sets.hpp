#pragma once

#include <functional>
#include <vector>

#include "reebkit/complex.hpp"
#include "reebkit/pl_function.hpp"

namespace reebkit {

/// One connected piece of a level set or interval preimage, given by the
/// simplices whose intersection with it is nonempty. Sorted ids.
using SimplexSet = std::vector<SimplexId>;

/// Components of the union of the pieces `sigma ∩ A` over simplices for which
/// `meets(sigma)` holds, assuming every piece is connected and two pieces touch
/// exactly when a common face also meets A. Components are ordered by their
/// smallest simplex id.
std::vector<SimplexSet> components_where(const SimplicialComplex& k, const std::function<bool(SimplexId)>& meets);

/// Connected components of f^{-1}(t). Empty when t is outside [min f, max f].
std::vector<SimplexSet> level_components(const SimplicialComplex& k, const PLFunction& f, const Scalar& t);

/// Connected components of f^{-1}([a, b]). Throws std::invalid_argument if a > b.
std::vector<SimplexSet> interval_preimage_components(const SimplicialComplex& k, const PLFunction& f,
                                                     const Scalar& a, const Scalar& b);

}  // namespace reebkit
