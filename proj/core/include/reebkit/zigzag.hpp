#pragma once

#include <utility>
#include <vector>

#include "reebkit/category.hpp"
#include "reebkit/coupling.hpp"

namespace reebkit {

/// R_0 <- X_0 -> R_1 <- X_1 -> ... -> R_n. legs[i] = (X_i -> R_i, X_i -> R_{i+1}).
struct ZigzagDiagram {
  std::vector<GraphPtr> graphs;
  std::vector<std::pair<ReebQuotientMap, ReebQuotientMap>> legs;
};

/// Shape checks plus every leg certified.
VerifyResult verify_zigzag(const ZigzagDiagram& z);

ZigzagDiagram zigzag_from_coupling(const Coupling& c);
/// n copies of g joined by identity charts.
ZigzagDiagram identity_zigzag(const GraphPtr& g, int n);

/// Fiber product of the lower row, triangulated.
LimitCellComplex zigzag_limit(const ZigzagDiagram& z);

struct ZigzagCost {
  Scalar cost;
  std::vector<ComplexPoint> maximizer;  // one point per space
  std::vector<Scalar> values;           // graph values at the maximizer
};

/// Max over the limit of (max_i f_i - min_i f_i). When both legs of every
/// space agree up to an affine change on each simplex, a sweep of prefix
/// envelopes along the chain; otherwise zigzag_cost_exhaustive.
/// Throws std::invalid_argument for an empty limit.
ZigzagCost zigzag_cost(const ZigzagDiagram& z);

/// Same quantity, maximized over every vertex of the limit cell complex.
ZigzagCost zigzag_cost_exhaustive(const ZigzagDiagram& z);

}  // namespace reebkit
