#include "reebkit/reeb.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace reebkit {

namespace {

int level_index(const std::vector<Scalar>& levels, const Scalar& t) {
  return static_cast<int>(std::lower_bound(levels.begin(), levels.end(), t) - levels.begin());
}

}  // namespace

GraphPoint ReebResult::locate(SimplexId sigma, const Scalar& t) const {
  const SimplexPath& path = paths[sigma];
  const int i = level_index(levels, t);
  if (i < static_cast<int>(levels.size()) && levels[i] == t) {
    const int j = i - path.first_level;
    if (j < 0 || j >= static_cast<int>(path.nodes.size())) throw std::invalid_argument("value outside simplex range");
    return {Cell::node(path.nodes[j]), t};
  }
  const int j = i - 1 - path.first_level;
  if (j < 0 || j >= static_cast<int>(path.edges.size())) throw std::invalid_argument("value outside simplex range");
  return {Cell::edge(path.edges[j]), t};
}

ReebQuotientMap realize_map(const Subdivision& sub, const PLFunction& base_values, const GraphPtr& graph,
                            const Locator& locate) {
  const SimplicialComplex& k = *sub.complex;
  PLFunction f = sub.pull(base_values);
  ReebQuotientMap p;
  p.source = sub.complex;
  p.target = graph;
  p.images.reserve(k.vertex_count());
  for (VertexId v = 0; v < k.vertex_count(); ++v) p.images.push_back(locate(sub.vertex_position[v].simplex, f[v]));
  p.carriers.resize(k.simplex_count());
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    ValueRange r = f.range(k, s);
    GraphPoint y = locate(sub.owner[s], (r.lo + r.hi) / 2);
    for (VertexId v : k.vertices_of(s))
      if (!graph->in_closed(y.cell, p.images[v])) throw std::logic_error("subdivision too coarse for the map");
    p.carriers[s] = y.cell;
  }
  return p;
}

ReebResult compute_reeb(ComplexPtr k, const PLFunction& f) {
  if (!k || k->vertex_count() == 0) throw std::invalid_argument("empty complex");
  if (!k->connected()) throw std::invalid_argument("complex is not connected");
  if (f.size() != static_cast<std::size_t>(k->vertex_count()))
    throw std::invalid_argument("function does not match complex");

  ReebResult r;
  r.levels = f.distinct_values();
  const auto& levels = r.levels;
  const int level_count = static_cast<int>(levels.size());
  const auto ranges = f.ranges(*k);

  r.paths.resize(k->simplex_count());
  for (SimplexId s = 0; s < k->simplex_count(); ++s) {
    const int p = level_index(levels, ranges[s].lo);
    const int q = level_index(levels, ranges[s].hi);
    r.paths[s].first_level = p;
    r.paths[s].nodes.assign(q - p + 1, -1);
    r.paths[s].edges.assign(q - p, -1);
  }

  std::vector<Scalar> node_values;
  for (int i = 0; i < level_count; ++i) {
    for (const auto& comp : level_components(*k, f, levels[i])) {
      const int node = static_cast<int>(node_values.size());
      node_values.push_back(levels[i]);
      for (SimplexId s : comp) r.paths[s].nodes[i - r.paths[s].first_level] = node;
    }
  }
  std::vector<GraphEdge> edges;
  for (int i = 0; i + 1 < level_count; ++i) {
    const Scalar mid = (levels[i] + levels[i + 1]) / 2;
    for (const auto& comp : level_components(*k, f, mid)) {
      const int edge = static_cast<int>(edges.size());
      const SimplexPath& rep = r.paths[comp.front()];
      const int j = i - rep.first_level;
      edges.push_back({rep.nodes[j], rep.nodes[j + 1], 0});
      for (SimplexId s : comp) r.paths[s].edges[i - r.paths[s].first_level] = edge;
    }
  }
  r.graph = std::make_shared<ReebGraph>(std::move(node_values), std::move(edges));
  r.subdivision = subdivide_at_levels(k, f, levels);
  r.map = realize_map(r.subdivision, f, r.graph, [&r](SimplexId s, const Scalar& t) { return r.locate(s, t); });
  return r;
}

ReebGraph minimalize(const ReebGraph& g) {
  std::vector<GraphEdge> edges = g.edges();
  std::vector<bool> alive_edge(edges.size(), true);
  std::vector<std::vector<int>> inc(g.node_count());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    inc[edges[e].lower].push_back(e);
    inc[edges[e].upper].push_back(e);
  }
  std::vector<bool> alive_node(g.node_count(), true);
  for (int n = 0; n < g.node_count(); ++n) {
    std::vector<int> live;
    for (int e : inc[n])
      if (alive_edge[e]) live.push_back(e);
    if (live.size() != 2) continue;
    int down = -1, up = -1;
    for (int e : live) (edges[e].upper == n ? down : up) = e;
    if (down < 0 || up < 0) continue;
    const int merged = static_cast<int>(edges.size());
    edges.push_back({edges[down].lower, edges[up].upper, 0});
    alive_edge[down] = alive_edge[up] = false;
    alive_edge.push_back(true);
    inc[edges[merged].lower].push_back(merged);
    inc[edges[merged].upper].push_back(merged);
    alive_node[n] = false;
  }
  std::vector<int> renum(g.node_count(), -1);
  std::vector<Scalar> values;
  for (int n = 0; n < g.node_count(); ++n) {
    if (!alive_node[n]) continue;
    renum[n] = static_cast<int>(values.size());
    values.push_back(g.value(n));
  }
  std::vector<GraphEdge> out;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (alive_edge[e]) out.push_back({renum[edges[e].lower], renum[edges[e].upper], 0});
  std::sort(out.begin(), out.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::pair(a.lower, a.upper) < std::pair(b.lower, b.upper);
  });
  return ReebGraph(std::move(values), std::move(out));
}

ReebResult reeb_of_graph(const GraphPtr& g) { return compute_reeb(g->chart(), g->chart_values()); }

std::optional<std::vector<int>> graph_isomorphic(const ReebGraph& a, const ReebGraph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  const int n = a.node_count();
  auto counts = [](const ReebGraph& g) {
    std::map<std::pair<int, int>, int> c;
    for (const auto& e : g.edges()) ++c[{std::min(e.lower, e.upper), std::max(e.lower, e.upper)}];
    return c;
  };
  const auto ca = counts(a), cb = counts(b);
  auto count = [](const std::map<std::pair<int, int>, int>& c, int x, int y) {
    auto it = c.find({std::min(x, y), std::max(x, y)});
    return it == c.end() ? 0 : it->second;
  };
  auto signature = [](const ReebGraph& g, int v) {
    int up = 0, down = 0;
    for (int e : g.incident(v)) (g.edge(e).lower == v ? up : down)++;
    return std::pair(up, down);
  };

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a.value(x) < a.value(y); });

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == n) return true;
    const int x = order[idx];
    for (int y = 0; y < n; ++y) {
      if (used[y] || b.value(y) != a.value(x) || signature(a, x) != signature(b, y)) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        const int z = order[j];
        ok = count(ca, x, z) == count(cb, y, map[z]);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (rec(idx + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

}  // namespace reebkit
