#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reebkit/complex.hpp"
#include "reebkit/level_sets.hpp"
#include "reebkit/pl_function.hpp"
#include "reebkit/reeb_graph.hpp"

namespace reebkit {

/// A simplicial map from a complex onto a graph. Each vertex goes to a graph
/// point, each simplex into a single closed cell (its carrier), linearly in
/// the value coordinate.
struct ReebQuotientMap {
  ComplexPtr source;
  GraphPtr target;
  std::vector<GraphPoint> images;  // per source vertex
  std::vector<Cell> carriers;      // per source simplex

  /// Target values of the vertex images, as a function on the source.
  PLFunction pulled_values() const;
  GraphPoint evaluate(const ComplexPoint& p) const;
};

/// Fills in carriers from vertex images. Throws std::invalid_argument when a
/// simplex has no unique smallest carrier (e.g. images on both ends of
/// parallel edges); callers must then supply carriers themselves.
std::vector<Cell> infer_carriers(const SimplicialComplex& k, const ReebGraph& g,
                                 const std::vector<GraphPoint>& images);

/// The identity chart map of a graph: chart complex onto the graph.
ReebQuotientMap chart_map(const GraphPtr& g);

struct VerifyResult {
  enum class Axiom { kNone, kStructure, kSurjectivity, kConnectedFibers, kValueCommutation };
  Axiom violated = Axiom::kNone;
  std::optional<GraphPoint> witness;
  std::optional<VertexId> witness_vertex;
  std::string message;

  bool ok() const { return violated == Axiom::kNone; }
  explicit operator bool() const { return ok(); }
};

std::string to_string(VerifyResult::Axiom a);

/// Simplices of the source meeting the fiber over y.
SimplexSet fiber_support(const ReebQuotientMap& p, const GraphPoint& y);

/// Finite witness points that exhaust the fiber types: all nodes, every value
/// of a vertex image interior to an edge, and one point per open segment.
std::vector<GraphPoint> fiber_witnesses(const ReebQuotientMap& p);

/// Checks well-formedness, surjectivity, connected fibers and, when given,
/// f = value ∘ p on vertices. Stops at the first violation.
VerifyResult verify_reeb_quotient(const ReebQuotientMap& p, const std::optional<PLFunction>& f = std::nullopt);

}  // namespace reebkit
