#pragma once

#include <string>
#include <vector>

#include "reebkit/category.hpp"
#include "reebkit/reeb_graph.hpp"

namespace reebkit {

/// Components of value^{-1}([a, b]) on a graph, as lists of cells meeting it.
/// Throws std::invalid_argument if a > b.
std::vector<std::vector<Cell>> interval_preimage_components(const ReebGraph& g, const Scalar& a, const Scalar& b);

/// Smallest b - a such that x and y share a component of value^{-1}([a, b]).
Scalar d_f(const ReebGraph& g, const GraphPoint& x, const GraphPoint& y);

/// d_f between all pairs of the given points (row-major, symmetric).
std::vector<std::vector<Scalar>> pairwise_d(const ReebGraph& g, const std::vector<GraphPoint>& points);

struct CorrespondenceRow {
  GraphPoint p;
  GraphPoint q;
  Scalar defect;       // |value(p) - value(q)|
  int worst_partner;   // row index maximizing the distortion against this row
  Scalar d_f;
  Scalar d_g;
};

struct DistortionReport {
  Scalar distortion;      // max of |d_f(p,p') - d_g(q,q')| / 2 over sampled pairs
  Scalar defect_phi;      // sup |f - g∘phi|
  Scalar defect_psi;      // sup |f∘psi - g|
  bool tight = false;     // halving every sample gap leaves the maximum unchanged
  std::vector<CorrespondenceRow> rows;

  Scalar bound() const;
};

/// Evaluates the distortion of (phi, psi) on a sample of the correspondence:
/// all nodes, every node value of either graph and every chart breakpoint
/// inside an edge, and `sample_density` evenly spaced points per edge.
/// Throws std::invalid_argument if the maps do not go between the same graphs.
DistortionReport distortion(const PLGraphMap& phi, const PLGraphMap& psi, int sample_density,
                            bool check_tightness = true);

struct FDBound {
  Scalar bound;
  int best = -1;
  std::vector<DistortionReport> reports;
};

/// Minimum over candidates of max(distortion, defects).
/// Throws std::invalid_argument for an empty candidate list.
FDBound fd_upper_bound(const GraphPtr& rf, const GraphPtr& rg,
                       const std::vector<std::pair<PLGraphMap, PLGraphMap>>& candidates, int sample_density);

/// CSV table: p_cell,p_value,q_cell,q_value,defect,partner,d_f,d_g.
std::string correspondence_csv(const DistortionReport& r);

}  // namespace reebkit
