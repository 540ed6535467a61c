#pragma once

#include <vector>

#include "reebkit/category.hpp"
#include "reebkit/reeb.hpp"
#include "reebkit/zigzag.hpp"

namespace reebkit {

/// Order-change parameters of f_λ = (1 - λ) f + λ g.
struct HomotopySchedule {
  std::vector<Scalar> breakpoints;       // 0 = λ_0 < ... < λ_n = 1
  std::vector<Scalar> midpoints;         // ρ_i = (λ_i + λ_{i+1}) / 2
  std::vector<ValueTransform> chi;       // f_{ρ_i} values -> f_{λ_i} values
  std::vector<ValueTransform> xi;        // f_{ρ_i} values -> f_{λ_{i+1}} values
};

/// Every λ in (0, 1) where two vertices' values cross, plus 0 and 1, with
/// the reparametrizations interpolating between consecutive distinct values.
HomotopySchedule homotopy_breakpoints(const SimplicialComplex& k, const PLFunction& f, const PLFunction& g);

/// Weakly increasing PL map through (f(v), g(v)), constant at both ends.
/// Throws MapError if some pair of vertices has f(v) = f(w) but g(v) != g(w)
/// or the order is reversed.
ValueTransform vertex_reparametrization(const PLFunction& f, const PLFunction& g);

/// Quotient map R_f -> R_g for g = chi ∘ f on vertices, built as the
/// composite R_f -> R_h -> R_g with h = chi ∘ f. Throws MapError with the
/// witness vertex when chi ∘ f and g disagree.
PLGraphMap induced_quotient_via_reparam(const ComplexPtr& k, const PLFunction& f, const PLFunction& g,
                                        const ValueTransform& chi);

/// Same, reusing Reeb graphs already computed on k.
PLGraphMap induced_quotient_via_reparam(const ReebResult& rf, const ReebResult& rg, const ValueTransform& chi);

/// Restates a graph map on a chart cut at the given values (plus its own cuts).
PLGraphMap rechart(const PLGraphMap& m, const std::vector<std::vector<Scalar>>& extra_cuts);

struct HomotopyZigzag {
  HomotopySchedule schedule;
  ZigzagDiagram diagram;                 // graphs R_{λ_i}, spaces charts of R_{ρ_i}
  std::vector<GraphPtr> middle_graphs;   // R_{ρ_i}
  std::vector<std::pair<PLGraphMap, PLGraphMap>> maps;  // (p_i, o_{i+1})
  Scalar cost;
  Scalar sup_distance;
};

/// The straight-line homotopy zigzag from R_f to R_g and its cost.
/// Throws std::invalid_argument for a disconnected complex.
HomotopyZigzag build_homotopy_zigzag(const ComplexPtr& k, const PLFunction& f, const PLFunction& g);

}  // namespace reebkit
