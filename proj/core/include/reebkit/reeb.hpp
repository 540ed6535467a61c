#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "reebkit/quotient_map.hpp"
#include "reebkit/subdivision.hpp"

namespace reebkit {

/// Cells of the Reeb graph met by one input simplex, level by level:
/// nodes[j] at levels[first_level + j], edges[j] on the gap above it.
struct SimplexPath {
  int first_level = 0;
  std::vector<int> nodes;
  std::vector<int> edges;
};

struct ReebResult {
  GraphPtr graph;
  ReebQuotientMap map;       // source is subdivision.complex
  Subdivision subdivision;   // of the input complex at all levels
  std::vector<Scalar> levels;
  std::vector<SimplexPath> paths;  // per input simplex

  /// Image of the point of simplex sigma (of the input complex) with value t.
  GraphPoint locate(SimplexId sigma, const Scalar& t) const;
};

/// Reeb graph of f on a connected complex, with the quotient map.
/// Nodes sit at every distinct vertex value (degree-2 nodes are kept).
/// Throws std::invalid_argument for a disconnected or empty complex.
ReebResult compute_reeb(ComplexPtr k, const PLFunction& f);

using Locator = std::function<GraphPoint(SimplexId base_simplex, const Scalar& value)>;

/// Builds a map on a subdivision from a per-base-simplex locator. Every
/// subdivided simplex must land in one closed cell, or logic_error is thrown.
ReebQuotientMap realize_map(const Subdivision& sub, const PLFunction& base_values, const GraphPtr& graph,
                            const Locator& locate);

/// Removes nodes with exactly one edge below and one above, merging the edges.
ReebGraph minimalize(const ReebGraph& g);

/// Reeb graph of the graph's own value function.
ReebResult reeb_of_graph(const GraphPtr& g);

/// Value-preserving node bijection a -> b respecting edge counts, if any.
std::optional<std::vector<int>> graph_isomorphic(const ReebGraph& a, const ReebGraph& b);

}  // namespace reebkit
