#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reebkit/scalar.hpp"

namespace reebkit {

using VertexId = int;
using SimplexId = int;

/// Findings of validate_complex on a raw simplex list.
struct ComplexReport {
  std::vector<std::vector<VertexId>> missing_faces;
  std::vector<std::vector<VertexId>> duplicates;
  std::vector<std::string> malformed;  // out-of-range ids, repeated vertices, empty simplices
  int component_count = 0;

  bool valid() const { return missing_faces.empty() && duplicates.empty() && malformed.empty(); }
};

/// Reports face-closure violations, duplicates and the number of connected
/// components (vertices in no simplex count as their own component).
ComplexReport validate_complex(int vertex_count, const std::vector<std::vector<VertexId>>& simplices);

/// Finite abstract simplicial complex on vertices 0..n-1.
///
/// Simplices are sorted vertex tuples, numbered in (dimension, lexicographic)
/// order, so vertex v is always simplex v. Every face of every simplex is
/// present. Immutable after construction.
class SimplicialComplex {
 public:
  enum class Closure { kRequire, kClose };

  /// Builds from any simplex list. With kClose missing faces are added; with
  /// kRequire they are an error. Duplicates are always an error.
  static SimplicialComplex from_simplices(int vertex_count, std::vector<std::vector<VertexId>> simplices,
                                          Closure closure = Closure::kClose);

  int vertex_count() const { return vertex_count_; }
  int simplex_count() const { return static_cast<int>(simplices_.size()); }
  int dimension() const { return dimension_; }

  std::span<const VertexId> vertices_of(SimplexId s) const { return simplices_[s]; }
  int dimension_of(SimplexId s) const { return static_cast<int>(simplices_[s].size()) - 1; }

  /// Id of a sorted vertex tuple, if present.
  std::optional<SimplexId> find(std::span<const VertexId> sorted_vertices) const;

  /// All nonempty faces of s, including s itself, in increasing id order.
  std::span<const SimplexId> faces_of(SimplexId s) const { return faces_[s]; }

  /// Simplices having v as a vertex.
  std::span<const SimplexId> star_of(VertexId v) const { return star_[v]; }

  /// Connected component label per vertex, labels 0..k-1 in order of first vertex.
  std::vector<int> component_labels() const;
  int component_count() const;
  bool connected() const { return component_count() == 1; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.simplices_ == b.simplices_;
  }

 private:
  int vertex_count_ = 0;
  int dimension_ = -1;
  std::vector<std::vector<VertexId>> simplices_;
  std::map<std::vector<VertexId>, SimplexId> index_;
  std::vector<std::vector<SimplexId>> faces_;
  std::vector<std::vector<SimplexId>> star_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// A point of |K|: the simplex whose interior contains it, with barycentric
/// coordinates aligned to vertices_of(simplex). All coordinates positive.
struct ComplexPoint {
  SimplexId simplex = 0;
  std::vector<Scalar> barycentric;

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

/// Point of simplex s with nonnegative barycentric weights (summing to one),
/// moved to the face on which all weights are positive.
ComplexPoint reduce_point(const SimplicialComplex& k, SimplexId s, const std::vector<Scalar>& barycentric);

}  // namespace reebkit
