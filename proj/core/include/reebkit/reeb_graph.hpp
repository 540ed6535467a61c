#pragma once

#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "reebkit/complex.hpp"
#include "reebkit/pl_function.hpp"
#include "reebkit/scalar.hpp"

namespace reebkit {

struct GraphEdge {
  int lower = 0;
  int upper = 0;
  int multiplicity = 0;  // distinguishes parallel edges between the same nodes
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// A closed cell of a graph: a node or an edge.
struct Cell {
  enum class Kind { kNode, kEdge };
  Kind kind = Kind::kNode;
  int id = 0;

  static Cell node(int id) { return {Kind::kNode, id}; }
  static Cell edge(int id) { return {Kind::kEdge, id}; }
  bool is_node() const { return kind == Kind::kNode; }
  bool is_edge() const { return kind == Kind::kEdge; }
  int code() const { return is_node() ? 2 * id : 2 * id + 1; }
  static Cell from_code(int c) { return c % 2 == 0 ? node(c / 2) : edge(c / 2); }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A point of a graph: a node, or an edge with a value strictly inside it.
struct GraphPoint {
  Cell cell;
  Scalar value;
  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

/// Finite graph with a value per node and strictly increasing edges.
///
/// Also carries its chart: a 1-complex with one vertex per node, one midpoint
/// vertex per edge (id node_count() + e), and two half-edges per edge.
class ReebGraph {
 public:
  ReebGraph() = default;
  /// Throws std::invalid_argument unless every edge is strictly increasing
  /// and all ids are in range. Multiplicities are renumbered per node pair.
  ReebGraph(std::vector<Scalar> node_values, std::vector<GraphEdge> edges);

  int node_count() const { return static_cast<int>(values_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Scalar& value(int node) const { return values_[node]; }
  const std::vector<Scalar>& node_values() const { return values_; }
  const GraphEdge& edge(int e) const { return edges_[e]; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::span<const int> incident(int node) const { return incident_[node]; }
  const Scalar& lower_value(int e) const { return values_[edges_[e].lower]; }
  const Scalar& upper_value(int e) const { return values_[edges_[e].upper]; }

  bool connected() const;
  /// First Betti number E - V + components.
  int betti1() const;
  Scalar min_value() const;
  Scalar max_value() const;

  /// Lowest closed cell containing (cell, value), turning edge endpoints into nodes.
  /// Throws if the value lies outside the closed cell.
  GraphPoint normalize(const Cell& cell, const Scalar& value) const;
  bool in_closed(const Cell& cell, const GraphPoint& p) const;
  /// Whether a lies in the closure of b.
  bool is_face(const Cell& a, const Cell& b) const;

  const ComplexPtr& chart() const { return chart_; }
  const PLFunction& chart_values() const { return chart_values_; }
  /// Graph cell carrying each chart simplex.
  const std::vector<Cell>& chart_carrier() const { return chart_carrier_; }
  ComplexPoint chart_point(const GraphPoint& p) const;
  GraphPoint from_chart(const ComplexPoint& p) const;

  friend bool operator==(const ReebGraph& a, const ReebGraph& b) {
    return a.values_ == b.values_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Scalar> values_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> incident_;
  ComplexPtr chart_;
  PLFunction chart_values_;
  std::vector<Cell> chart_carrier_;
};

using GraphPtr = std::shared_ptr<const ReebGraph>;

/// Graph with one node of value c.
ReebGraph point_graph(const Scalar& c);

}  // namespace reebkit
