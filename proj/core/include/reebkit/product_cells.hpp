#pragma once

#include <map>
#include <optional>
#include <vector>

#include "reebkit/complex.hpp"
#include "reebkit/pl_function.hpp"

namespace reebkit {

/// One factor X_i of a chained fiber product X_0 ×_{C_0} X_1 ×_{C_1} ... .
///
/// Factor i is glued to factor i+1 along a "link": the points (x_i, x_{i+1})
/// are compatible when right(x_i) == left(x_{i+1}) and, if carriers are given,
/// the carrier cell of x_i's simplex equals that of x_{i+1}'s simplex. Values
/// are linear on every simplex. A link with no values on either side is free
/// (plain product).
struct FactorSpec {
  ComplexPtr complex;
  std::optional<PLFunction> left = std::nullopt;
  std::optional<PLFunction> right = std::nullopt;
  std::optional<std::vector<int>> left_carrier = std::nullopt;
  std::optional<std::vector<int>> right_carrier = std::nullopt;
};

/// A cell of the product: one simplex per factor such that a compatible
/// tuple exists with every coordinate in the open simplex. The closed cell is
/// the polytope {x in prod sigma_i : link equalities}.
struct ProductCell {
  std::vector<SimplexId> key;
  int dimension = 0;
};

/// Simplicial subdivision of a product cell complex.
struct ProductTriangulation {
  ComplexPtr complex;
  /// Per vertex, the point it represents in every factor.
  std::vector<std::vector<ComplexPoint>> vertex_points;
  /// Per simplex, the factor simplices whose open cells contain its interior.
  std::vector<std::vector<SimplexId>> owner;
};

class ProductCellComplex {
 public:
  /// Enumerates every cell exactly. Throws std::invalid_argument when the
  /// factor specs are inconsistent (one-sided links, size mismatches).
  static ProductCellComplex build(std::vector<FactorSpec> factors);

  int factor_count() const { return static_cast<int>(factors_.size()); }
  const FactorSpec& factor(int i) const { return factors_[i]; }
  bool link_active(int i) const;

  const std::vector<ProductCell>& cells() const { return cells_; }
  std::optional<int> find_cell(const std::vector<SimplexId>& key) const;

  /// 0-dimensional cells, in enumeration order; vertex ids index this list.
  int vertex_count() const { return static_cast<int>(vertex_cells_.size()); }
  int vertex_cell(int vertex) const { return vertex_cells_[vertex]; }
  const std::vector<ComplexPoint>& vertex_point(int vertex) const { return vertex_points_[vertex]; }
  std::optional<int> vertex_of_cell(int cell) const;

  /// Indices of all cells that are faces of `cell` (itself included).
  std::vector<int> faces_of(int cell) const;

  int dimension() const;

  /// Pulling triangulation in global vertex order; consistent across shared faces.
  ProductTriangulation triangulate() const;

 private:
  struct Pt {
    Scalar in;
    Scalar out;
  };
  struct OpenSet;
  struct DfsState;

  std::vector<Pt> points_of(int factor, SimplexId s) const;
  template <typename Visit>
  void enumerate(const std::vector<std::vector<SimplexId>>* restrict_to, Visit&& visit) const;
  std::vector<ComplexPoint> solve_vertex(const std::vector<SimplexId>& key, const std::vector<OpenSet>& forward) const;

  std::vector<FactorSpec> factors_;
  std::vector<ProductCell> cells_;
  std::map<std::vector<SimplexId>, int> cell_index_;
  std::vector<int> vertex_cells_;
  std::vector<std::vector<ComplexPoint>> vertex_points_;
  std::map<int, int> cell_to_vertex_;
  // Per factor: carrier key -> simplices sorted by the lower end of their left range.
  std::vector<std::map<int, std::vector<SimplexId>>> candidates_;
  std::vector<std::vector<ValueRange>> left_ranges_;
};

}  // namespace reebkit
