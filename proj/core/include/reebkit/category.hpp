#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reebkit/product_cells.hpp"
#include "reebkit/quotient_map.hpp"
#include "reebkit/subdivision.hpp"

namespace reebkit {

/// Weakly increasing PL map R -> R through the given points, constant
/// beyond the first and last. No points means the identity.
class ValueTransform {
 public:
  ValueTransform() = default;
  /// Throws std::invalid_argument unless x is strictly and y weakly increasing.
  explicit ValueTransform(std::vector<std::pair<Scalar, Scalar>> points);
  static ValueTransform identity() { return {}; }

  Scalar operator()(const Scalar& t) const;
  bool is_identity() const { return points_.empty(); }
  const std::vector<std::pair<Scalar, Scalar>>& points() const { return points_; }
  /// Breakpoint abscissae strictly inside (lo, hi).
  std::vector<Scalar> breaks_between(const Scalar& lo, const Scalar& hi) const;

 private:
  std::vector<std::pair<Scalar, Scalar>> points_;
};

/// Thrown when a map cannot be built; carries the offending source vertex.
class MapError : public std::invalid_argument {
 public:
  MapError(const std::string& what, std::optional<VertexId> vertex = std::nullopt)
      : std::invalid_argument(what), vertex(vertex) {}
  std::optional<VertexId> vertex;
};

/// A PL map between graphs. `chart` is a homeomorphism from a 1-complex S
/// onto the source; `map` sends S to the target.
class PLGraphMap {
 public:
  PLGraphMap() = default;
  /// Indexes the chart. Throws std::invalid_argument if the legs do not share
  /// a source or the chart leg is not injective on vertices.
  PLGraphMap(ReebQuotientMap chart, ReebQuotientMap map);
  static PLGraphMap identity(const GraphPtr& g);

  const GraphPtr& source() const { return chart_.target; }
  const GraphPtr& target() const { return map_.target; }
  const ReebQuotientMap& chart() const { return chart_; }
  const ReebQuotientMap& map() const { return map_; }

  ComplexPoint chart_point(const GraphPoint& x) const;
  GraphPoint operator()(const GraphPoint& x) const;
  /// Values of chart vertices inside each source edge, ascending, with endpoints.
  const std::vector<std::vector<std::pair<Scalar, VertexId>>>& edge_vertices() const { return edge_vertices_; }

 private:
  ReebQuotientMap chart_;
  ReebQuotientMap map_;
  std::vector<VertexId> node_vertex_;
  std::vector<std::vector<std::pair<Scalar, VertexId>>> edge_vertices_;
};

/// Chart leg plus homeomorphism check, and the Reeb-quotient axioms of the map leg.
VerifyResult verify_graph_map(const PLGraphMap& phi);

/// Builds a graph map from chart cuts: S has the graph nodes as vertices
/// 0..N-1, then for each edge its cut values (strictly inside, ascending,
/// at least one). `images` covers all S vertices; segment carriers are
/// taken from `segment_cells` (per edge, one per segment) when given.
PLGraphMap make_graph_map(const GraphPtr& source, const GraphPtr& target, const std::vector<std::vector<Scalar>>& cuts,
                          const std::vector<GraphPoint>& images,
                          const std::vector<std::vector<Cell>>& segment_cells);

/// The map R_f -> R_g through which p_g factors, given g = xi ∘ f on the
/// common source. xi must be linear on every source simplex's f-range.
/// Throws MapError (with the vertex) if commutation or well-definedness fails.
PLGraphMap induced_map(const ReebQuotientMap& p_f, const ReebQuotientMap& p_g,
                       const ValueTransform& xi = ValueTransform::identity());

struct SimplicialMap {
  ComplexPtr source;
  ComplexPtr target;
  std::vector<VertexId> vertex_map;
};

struct RefinedMap {
  Subdivision subdivision;  // of the inner map's source
  ReebQuotientMap map;      // from subdivision.complex
};

/// outer ∘ inner where inner is simplicial.
ReebQuotientMap compose(const ReebQuotientMap& outer, const SimplicialMap& inner);
/// outer ∘ inner, on a subdivision of inner's source fine enough to be simplicial.
RefinedMap compose(const PLGraphMap& outer, const ReebQuotientMap& inner);
PLGraphMap compose(const PLGraphMap& outer, const PLGraphMap& inner);

/// p restated on a subdivision of its source.
ReebQuotientMap refine(const ReebQuotientMap& p, const Subdivision& sub);

/// Triangulated fiber product of a chain of complexes, each glued to the
/// next over a common graph.
struct LimitCellComplex {
  std::shared_ptr<const ProductCellComplex> cells;
  ProductTriangulation triangulation;

  int factor_count() const { return cells->factor_count(); }
  /// Factor-i leg of a map out of that factor, pulled to the triangulation.
  ReebQuotientMap pull(int factor, const ReebQuotientMap& m) const;
};

/// m ∘ (projection of t onto `factor`).
ReebQuotientMap pull_map(const ProductTriangulation& t, int factor, const ReebQuotientMap& m);

/// A ×_C B for p1: A -> C and p2: B -> C. Projections are factors 0 and 1.
/// Throws std::invalid_argument on different targets or an empty result.
LimitCellComplex pullback(const ReebQuotientMap& p1, const ReebQuotientMap& p2);

/// X_0 ×_{R_1} X_1 ×_{R_2} ... for legs (left_i: X_i -> R_i, right_i: X_i -> R_{i+1}).
/// Only the right leg of each factor but the last and the left leg of each
/// factor but the first are used for gluing.
ProductCellComplex chain_limit_cells(const std::vector<std::pair<ReebQuotientMap, ReebQuotientMap>>& legs);

/// The product A × B of the two charts, with both projections.
LimitCellComplex chart_product(const GraphPtr& a, const GraphPtr& b);

}  // namespace reebkit
