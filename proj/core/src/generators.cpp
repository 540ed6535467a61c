#include "reebkit/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace reebkit {

std::vector<Scalar> polygon_x(int n) {
  if (n < 2) throw std::invalid_argument("polygon resolution must be at least 2");
  std::vector<Scalar> x(2 * n);
  for (int k = 0; k <= n; ++k) {
    if (k == 0) x[k] = 1;
    else if (k == n) x[k] = -1;
    else if (2 * k == n) x[k] = 0;
    else {
      x[k] = Scalar(static_cast<long>(std::lround(std::cos(std::numbers::pi * k / n) * 1e6)), 1000000L);
      x[k].canonicalize();
    }
  }
  for (int k = n + 1; k < 2 * n; ++k) x[k] = x[2 * n - k];
  return x;
}

ReebGraph polygon_graph(int n) {
  auto x = polygon_x(n);
  std::vector<GraphEdge> edges;
  for (int k = 0; k < 2 * n; ++k) {
    const int a = k, b = (k + 1) % (2 * n);
    edges.push_back(x[a] < x[b] ? GraphEdge{a, b, 0} : GraphEdge{b, a, 0});
  }
  return ReebGraph(std::move(x), std::move(edges));
}

Instance cylinder(int n) {
  auto x = polygon_x(n);
  const int m = 2 * n;
  std::vector<std::vector<VertexId>> tris;
  for (int k = 0; k < m; ++k) {
    const int k1 = (k + 1) % m;
    tris.push_back({k, k1, m + k});
    tris.push_back({k1, m + k, m + k1});
  }
  std::vector<Scalar> f(2 * m), g(2 * m);
  for (int k = 0; k < m; ++k) {
    f[k] = f[m + k] = x[k];
    g[k] = (x[k] - 1) / 2;
    g[m + k] = (x[k] + 1) / 2;
  }
  Instance inst;
  inst.name = "cylinder(" + std::to_string(n) + ")";
  inst.complex = std::make_shared<SimplicialComplex>(SimplicialComplex::from_simplices(2 * m, std::move(tris)));
  inst.f = PLFunction(std::move(f));
  inst.g = PLFunction(std::move(g));
  return inst;
}

ReebQuotientMap cylinder_projection(int n) {
  Instance inst = cylinder(n);
  auto graph = std::make_shared<ReebGraph>(polygon_graph(n));
  const int m = 2 * n;
  ReebQuotientMap p;
  p.source = inst.complex;
  p.target = graph;
  for (VertexId v = 0; v < 2 * m; ++v) p.images.push_back({Cell::node(v % m), graph->value(v % m)});
  p.carriers = infer_carriers(*p.source, *graph, p.images);
  return p;
}

ReebGraph unit_path_graph() { return ReebGraph({Scalar(-1), Scalar(1)}, {GraphEdge{0, 1, 0}}); }

std::pair<PLGraphMap, PLGraphMap> cylinder_distortion_maps(int n) {
  auto circle_graph = std::make_shared<ReebGraph>(polygon_graph(n));
  auto path = std::make_shared<ReebGraph>(unit_path_graph());
  const ReebGraph& c = *circle_graph;

  std::vector<std::vector<Scalar>> cuts;
  std::vector<GraphPoint> images;
  for (int v = 0; v < c.node_count(); ++v) images.push_back(path->normalize(Cell::edge(0), c.value(v)));
  for (int e = 0; e < c.edge_count(); ++e) {
    Scalar mid = (c.lower_value(e) + c.upper_value(e)) / 2;
    cuts.push_back({mid});
    images.push_back(path->normalize(Cell::edge(0), mid));
  }
  PLGraphMap phi = make_graph_map(circle_graph, path, cuts, images, {});

  std::vector<Scalar> lifts;
  std::vector<GraphPoint> up{{Cell::node(n), Scalar(-1)}, {Cell::node(0), Scalar(1)}};
  for (int k = n - 1; k >= 1; --k) {
    lifts.push_back(c.value(k));
    up.push_back({Cell::node(k), c.value(k)});
  }
  PLGraphMap psi = make_graph_map(path, circle_graph, {lifts}, up, {});
  return {std::move(phi), std::move(psi)};
}

Instance circle(int n) {
  auto x = polygon_x(n);
  const int m = 2 * n;
  std::vector<std::vector<VertexId>> edges;
  for (int k = 0; k < m; ++k) edges.push_back({k, (k + 1) % m});
  Instance inst;
  inst.name = "circle(" + std::to_string(n) + ")";
  inst.complex = std::make_shared<SimplicialComplex>(SimplicialComplex::from_simplices(m, std::move(edges)));
  inst.f = PLFunction(std::move(x));
  return inst;
}

Instance path_instance(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one edge");
  std::vector<std::vector<VertexId>> edges;
  std::vector<Scalar> f;
  for (int k = 0; k <= n; ++k) {
    Scalar t(2 * k, n);
    t.canonicalize();
    f.push_back(t - 1);
    if (k < n) edges.push_back({k, k + 1});
  }
  Instance inst;
  inst.name = "path(" + std::to_string(n) + ")";
  inst.complex = std::make_shared<SimplicialComplex>(SimplicialComplex::from_simplices(n + 1, std::move(edges)));
  inst.f = PLFunction(std::move(f));
  return inst;
}

Instance point_instance(const Scalar& c) {
  Instance inst;
  inst.name = "point(" + to_string(c) + ")";
  inst.complex = std::make_shared<SimplicialComplex>(SimplicialComplex::from_simplices(1, {}));
  inst.f = PLFunction({c});
  return inst;
}

Instance random_instance(const RandomSpec& spec) {
  if (spec.vertex_count < 1) throw std::invalid_argument("random instance needs a vertex");
  if (spec.value_range < 0 || spec.extra_triangles < 0) throw std::invalid_argument("negative random parameter");
  std::mt19937_64 rng(spec.seed);
  auto pick = [&rng](int bound) { return static_cast<int>(std::uniform_int_distribution<int>(0, bound - 1)(rng)); };

  const int n = spec.vertex_count;
  std::set<std::vector<VertexId>> simplices;
  std::vector<std::vector<VertexId>> edges;
  for (int v = 1; v < n; ++v) {
    // attach v by an edge, or as a triangle on an existing edge
    if (!edges.empty() && pick(3) != 0) {
      auto e = edges[pick(static_cast<int>(edges.size()))];
      simplices.insert({e[0], e[1], v});
      edges.push_back({e[0], v});
      edges.push_back({e[1], v});
    } else {
      const int u = pick(v);
      simplices.insert({u, v});
      edges.push_back({u, v});
    }
  }
  for (int t = 0; t < spec.extra_triangles && n >= 3; ++t) {
    int a = pick(n), b = pick(n), c = pick(n);
    if (a == b || b == c || a == c) continue;
    std::vector<VertexId> tri{a, b, c};
    std::sort(tri.begin(), tri.end());
    simplices.insert(tri);
  }
  std::vector<Scalar> f(n), g(n);
  std::uniform_int_distribution<int> value(-spec.value_range, spec.value_range);
  for (int v = 0; v < n; ++v) f[v] = value(rng);
  for (int v = 0; v < n; ++v) g[v] = value(rng);

  Instance inst;
  inst.name = "random(" + std::to_string(spec.seed) + ")";
  inst.complex = std::make_shared<SimplicialComplex>(SimplicialComplex::from_simplices(
      n, std::vector<std::vector<VertexId>>(simplices.begin(), simplices.end())));
  inst.f = PLFunction(std::move(f));
  inst.g = PLFunction(std::move(g));
  return inst;
}

}  // namespace reebkit
