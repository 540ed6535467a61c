#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "reebkit/category.hpp"
#include "reebkit/quotient_map.hpp"

namespace reebkit {

struct Instance {
  std::string name;
  ComplexPtr complex;
  PLFunction f;
  std::optional<PLFunction> g;
};

/// x-coordinates of a regular 2n-gon, rounded to multiples of 1/10^6 except
/// the exact values ±1 at k = 0, n and 0 at k = n/2, 3n/2. Requires n >= 2.
std::vector<Scalar> polygon_x(int n);

/// The 2n-gon with its x-coordinates as node values.
ReebGraph polygon_graph(int n);

/// Circle x^2 + y^2 = 1 times the slab |2z - x| <= 1, as two rings of 2n
/// vertices (bottom k, top 2n + k) joined by a band of triangles.
/// f = x, g = z. Requires n >= 2.
Instance cylinder(int n);

/// (x, y, z) -> (x, y) onto polygon_graph(n).
ReebQuotientMap cylinder_projection(int n);

/// Path graph with nodes -1 and 1 and a single edge.
ReebGraph unit_path_graph();

/// Candidate maps between polygon_graph(n) and unit_path_graph(): phi keeps
/// the value, psi lifts each value to the upper arc (nodes 0..n).
std::pair<PLGraphMap, PLGraphMap> cylinder_distortion_maps(int n);

/// Polygonal circle with f = x.
Instance circle(int n);

/// Path of n edges, values -1 .. 1 evenly spaced.
Instance path_instance(int n);

/// One vertex with value c.
Instance point_instance(const Scalar& c);

struct RandomSpec {
  std::uint64_t seed = 0;
  int vertex_count = 8;
  int value_range = 4;       // integer values in [-value_range, value_range]
  int extra_triangles = 2;   // triangles added between existing vertices
};

/// Connected random 2-complex with two integer-valued functions.
/// Deterministic in the seed.
Instance random_instance(const RandomSpec& spec);

}  // namespace reebkit
