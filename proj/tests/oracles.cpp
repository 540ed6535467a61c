#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace oracle {

using reebkit::Cell;
using reebkit::GraphEdge;
using reebkit::SimplexId;
using reebkit::SimplicialComplex;
using reebkit::VertexId;

Subdivided barycentric(const ComplexPtr& k, const PLFunction& f) {
  const int n = k->simplex_count();
  std::vector<Scalar> values(n);
  for (SimplexId s = 0; s < n; ++s) {
    auto vs = k->vertices_of(s);
    Scalar sum = 0;
    for (VertexId v : vs) sum += f[v];
    values[s] = sum / static_cast<long>(vs.size());
  }
  // chains of strictly nested simplices, by their top element
  std::vector<std::vector<std::vector<int>>> chains(n);
  for (SimplexId s = 0; s < n; ++s) {
    chains[s].push_back({s});
    for (SimplexId t : k->faces_of(s)) {
      if (t == s) continue;
      for (const auto& c : chains[t]) {
        auto d = c;
        d.push_back(s);
        chains[s].push_back(std::move(d));
      }
    }
  }
  std::vector<std::vector<VertexId>> simplices;
  for (auto& per : chains) {
    for (auto& c : per) {
      std::sort(c.begin(), c.end());
      simplices.push_back(c);
    }
  }
  auto sd = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_simplices(n, std::move(simplices), SimplicialComplex::Closure::kRequire));
  return {sd, PLFunction(std::move(values))};
}

namespace {

struct Range {
  Scalar lo, hi;
};

// Components of the simplices selected by `meets`, joined through faces.
std::vector<int> components(const SimplicialComplex& k, const std::vector<char>& meets) {
  std::vector<int> parent(k.simplex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    if (!meets[s]) continue;
    for (SimplexId t : k.faces_of(s)) {
      if (meets[t]) parent[find(t)] = find(s);
    }
  }
  std::vector<int> label(k.simplex_count(), -1);
  std::map<int, int> ids;
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    if (!meets[s]) continue;
    auto [it, _] = ids.emplace(find(s), static_cast<int>(ids.size()));
    label[s] = it->second;
  }
  return label;
}

}  // namespace

ReebGraph contract_regular(const ReebGraph& g) {
  std::vector<Scalar> values;
  for (int i = 0; i < g.node_count(); ++i) values.push_back(g.value(i));
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.edge_count(); ++e) edges.emplace_back(g.edge(e).lower, g.edge(e).upper);
  std::vector<char> alive(values.size(), 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < static_cast<int>(values.size()); ++v) {
      if (!alive[v]) continue;
      std::vector<int> down, up;
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edges[e].second == v) down.push_back(e);
        if (edges[e].first == v) up.push_back(e);
      }
      if (down.size() != 1 || up.size() != 1) continue;
      const int lo = edges[down[0]].first, hi = edges[up[0]].second;
      edges.erase(edges.begin() + std::max(down[0], up[0]));
      edges.erase(edges.begin() + std::min(down[0], up[0]));
      edges.emplace_back(lo, hi);
      alive[v] = 0;
      changed = true;
    }
  }
  std::vector<int> id(values.size(), -1);
  std::vector<Scalar> kept;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (alive[v]) {
      id[v] = static_cast<int>(kept.size());
      kept.push_back(values[v]);
    }
  }
  std::vector<GraphEdge> out;
  for (auto [a, b] : edges) out.push_back({id[a], id[b], 0});
  return ReebGraph(std::move(kept), std::move(out));
}

ReebGraph reeb_graph(const ComplexPtr& k, const PLFunction& f) {
  auto once = barycentric(k, f);
  auto twice = barycentric(once.complex, once.f);
  const SimplicialComplex& l = *twice.complex;
  const PLFunction& h = twice.f;
  std::vector<Range> range(l.simplex_count());
  for (SimplexId s = 0; s < l.simplex_count(); ++s) {
    auto vs = l.vertices_of(s);
    range[s] = {h[vs[0]], h[vs[0]]};
    for (VertexId v : vs) {
      range[s].lo = std::min(range[s].lo, h[v]);
      range[s].hi = std::max(range[s].hi, h[v]);
    }
  }
  auto levels = reebkit::sorted_unique(std::vector<Scalar>(h.values().begin(), h.values().end()));
  const auto two_skeleton = [&](SimplexId s) { return l.dimension_of(s) <= 2; };

  std::vector<Scalar> node_values;
  std::vector<std::vector<int>> node_of(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::vector<char> meets(l.simplex_count(), 0);
    for (SimplexId s = 0; s < l.simplex_count(); ++s)
      meets[s] = two_skeleton(s) && range[s].lo <= levels[i] && levels[i] <= range[s].hi;
    auto label = components(l, meets);
    const int base = static_cast<int>(node_values.size());
    int count = 0;
    node_of[i].assign(l.simplex_count(), -1);
    for (SimplexId s = 0; s < l.simplex_count(); ++s) {
      if (label[s] < 0) continue;
      node_of[i][s] = base + label[s];
      count = std::max(count, label[s] + 1);
    }
    node_values.insert(node_values.end(), count, levels[i]);
  }
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    std::vector<char> meets(l.simplex_count(), 0);
    for (SimplexId s = 0; s < l.simplex_count(); ++s)
      meets[s] = two_skeleton(s) && range[s].lo <= levels[i] && levels[i + 1] <= range[s].hi;
    auto label = components(l, meets);
    std::map<int, SimplexId> rep;
    for (SimplexId s = 0; s < l.simplex_count(); ++s) {
      if (label[s] >= 0) rep.emplace(label[s], s);
    }
    for (auto [_, s] : rep) edges.push_back({node_of[i][s], node_of[i + 1][s], 0});
  }
  return contract_regular(ReebGraph(std::move(node_values), std::move(edges)));
}

Scalar d_f(const ReebGraph& g, const GraphPoint& x, const GraphPoint& y) {
  // vertices: nodes, then x and y when they sit inside edges
  std::vector<Scalar> value;
  for (int i = 0; i < g.node_count(); ++i) value.push_back(g.value(i));
  std::vector<std::vector<std::pair<Scalar, int>>> inner(g.edge_count());
  auto place = [&](const GraphPoint& p) {
    if (p.cell.is_node()) return p.cell.id;
    for (auto [v, id] : inner[p.cell.id]) {
      if (v == p.value) return id;
    }
    value.push_back(p.value);
    inner[p.cell.id].emplace_back(p.value, static_cast<int>(value.size()) - 1);
    return static_cast<int>(value.size()) - 1;
  };
  const int sx = place(x), sy = place(y);
  std::vector<std::vector<int>> adj(value.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto pts = inner[e];
    std::sort(pts.begin(), pts.end());
    int prev = g.edge(e).lower;
    for (auto [v, id] : pts) {
      adj[prev].push_back(id);
      adj[id].push_back(prev);
      prev = id;
    }
    adj[prev].push_back(g.edge(e).upper);
    adj[g.edge(e).upper].push_back(prev);
  }
  std::optional<Scalar> best;
  std::vector<char> on(value.size(), 0);
  std::function<void(int, Scalar, Scalar)> walk = [&](int v, Scalar lo, Scalar hi) {
    lo = std::min(lo, value[v]);
    hi = std::max(hi, value[v]);
    if (best && hi - lo >= *best) return;
    if (v == sy) {
      best = hi - lo;
      return;
    }
    on[v] = 1;
    for (int w : adj[v]) {
      if (!on[w]) walk(w, lo, hi);
    }
    on[v] = 0;
  };
  walk(sx, value[sx], value[sx]);
  if (!best) throw std::invalid_argument("points in different components");
  return *best;
}

bool isomorphic(const ReebGraph& a, const ReebGraph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.node_count();
  auto edge_bag = [](const ReebGraph& g, const std::vector<int>& relabel) {
    std::multiset<std::pair<int, int>> out;
    for (int e = 0; e < g.edge_count(); ++e) out.emplace(relabel[g.edge(e).lower], relabel[g.edge(e).upper]);
    return out;
  };
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  const auto target = edge_bag(b, identity);
  std::vector<int> perm = identity;
  do {
    bool values_match = true;
    for (int i = 0; i < n && values_match; ++i) values_match = a.value(i) == b.value(perm[i]);
    if (values_match && edge_bag(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Scalar grid_coupling_cost(const reebkit::Coupling& c, int steps) {
  const auto& k = *c.space;
  Scalar best = 0;
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    const int d = k.dimension_of(s) + 1;
    std::vector<int> w(d, 0);
    std::function<void(int, int)> fill = [&](int i, int left) {
      if (i == d - 1) {
        w[i] = left;
        std::vector<Scalar> bary;
        for (int x : w) bary.push_back(Scalar(x, steps));
        for (auto& x : bary) x.canonicalize();
        auto p = reebkit::reduce_point(k, s, bary);
        Scalar gap = c.p_f.evaluate(p).value - c.p_g.evaluate(p).value;
        if (gap < 0) gap = -gap;
        best = std::max(best, gap);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        w[i] = x;
        fill(i + 1, left - x);
      }
    };
    fill(0, steps);
  }
  return best;
}

ReebGraph random_graph(unsigned seed, int nodes, int extra_edges, int range) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-range, range);
  std::vector<Scalar> values;
  std::vector<GraphEdge> edges;
  auto link = [&](int a, int b) {
    if (values[a] > values[b]) std::swap(a, b);
    edges.push_back({a, b, 0});
  };
  for (int i = 0; i < nodes; ++i) {
    values.emplace_back(val(rng));
    if (i == 0) continue;
    const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    if (values[i] == values[j]) values[i] += 1;
    link(i, j);
  }
  for (int t = 0; t < extra_edges; ++t) {
    const int a = std::uniform_int_distribution<int>(0, nodes - 1)(rng);
    const int b = std::uniform_int_distribution<int>(0, nodes - 1)(rng);
    if (values[a] != values[b]) link(a, b);
  }
  return ReebGraph(std::move(values), std::move(edges));
}

}  // namespace oracle
