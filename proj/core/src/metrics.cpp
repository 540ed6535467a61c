#include "reebkit/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "reebkit/disjoint_set.hpp"

namespace reebkit {

std::vector<std::vector<Cell>> interval_preimage_components(const ReebGraph& g, const Scalar& a, const Scalar& b) {
  if (a > b) throw std::invalid_argument("interval with a > b");
  const int n = g.node_count();
  DisjointSet ds(n + g.edge_count());
  std::vector<bool> in(n + g.edge_count(), false);
  for (int v = 0; v < n; ++v) in[v] = a <= g.value(v) && g.value(v) <= b;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(g.lower_value(e) < b && g.upper_value(e) > a)) continue;
    in[n + e] = true;
    if (in[g.edge(e).lower]) ds.unite(n + e, g.edge(e).lower);
    if (in[g.edge(e).upper]) ds.unite(n + e, g.edge(e).upper);
  }
  std::map<int, std::vector<Cell>> parts;
  std::map<int, int> order;
  for (int c = 0; c < n + g.edge_count(); ++c) {
    if (!in[c]) continue;
    const int root = ds.find(c);
    if (!order.count(root)) order[root] = static_cast<int>(order.size());
    parts[order[root]].push_back(c < n ? Cell::node(c) : Cell::edge(c - n));
  }
  std::vector<std::vector<Cell>> out;
  for (auto& [k, cells] : parts) {
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.code() < y.code(); });
    out.push_back(std::move(cells));
  }
  return out;
}

namespace {

// Graph refined at the given points, values scaled by a common denominator
// when the result fits in 64 bits.
struct Refined {
  std::vector<Scalar> values;
  std::vector<std::vector<int>> adj;
  std::vector<int> tracked;  // refined vertex of each input point
};

Refined refine_at(const ReebGraph& g, const std::vector<GraphPoint>& points) {
  Refined r;
  r.values = g.node_values();
  std::vector<std::vector<std::pair<Scalar, int>>> on_edge(g.edge_count());
  std::map<std::pair<int, Scalar>, int> seen;
  r.tracked.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const GraphPoint p = g.normalize(points[i].cell, points[i].value);
    if (p.cell.is_node()) {
      r.tracked[i] = p.cell.id;
      continue;
    }
    auto [it, fresh] = seen.try_emplace({p.cell.id, p.value}, static_cast<int>(r.values.size()));
    if (fresh) {
      r.values.push_back(p.value);
      on_edge[p.cell.id].emplace_back(p.value, it->second);
    }
    r.tracked[i] = it->second;
  }
  r.adj.resize(r.values.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto& list = on_edge[e];
    std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    int prev = g.edge(e).lower;
    for (const auto& [t, v] : list) {
      r.adj[prev].push_back(v);
      r.adj[v].push_back(prev);
      prev = v;
    }
    r.adj[prev].push_back(g.edge(e).upper);
    r.adj[g.edge(e).upper].push_back(prev);
  }
  return r;
}

template <typename T>
std::vector<std::vector<T>> sweep(const std::vector<T>& val, const std::vector<std::vector<int>>& adj,
                                  const std::vector<int>& tracked) {
  const int n = static_cast<int>(val.size());
  const int m = static_cast<int>(tracked.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return val[a] < val[b]; });

  // tracked refined vertex -> indices of input points on it
  std::vector<std::vector<int>> points_at(n);
  for (int i = 0; i < m; ++i) points_at[tracked[i]].push_back(i);

  std::vector<std::vector<T>> best(m, std::vector<T>(m));
  std::vector<std::vector<bool>> known(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (tracked[i] == tracked[j]) known[i][j] = true;  // best stays zero

  std::vector<int> parent(n);
  std::vector<std::vector<int>> members(n);
  std::vector<bool> added(n);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (int start = 0; start < n; ++start) {
    if (start > 0 && val[order[start]] == val[order[start - 1]]) continue;
    const T a = val[order[start]];
    for (int v = 0; v < n; ++v) {
      parent[v] = v;
      members[v] = points_at[v];
      added[v] = false;
    }
    for (int idx = start; idx < n; ++idx) {
      const int v = order[idx];
      added[v] = true;
      const T gap = val[v] - a;
      for (int u : adj[v]) {
        if (!added[u]) continue;
        int ru = find(u), rv = find(v);
        if (ru == rv) continue;
        for (int i : members[ru]) {
          for (int j : members[rv]) {
            if (!known[i][j] || gap < best[i][j]) {
              best[i][j] = best[j][i] = gap;
              known[i][j] = known[j][i] = true;
            }
          }
        }
        if (members[ru].size() < members[rv].size()) std::swap(ru, rv);
        members[ru].insert(members[ru].end(), members[rv].begin(), members[rv].end());
        members[rv].clear();
        parent[rv] = ru;
      }
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!known[i][j]) throw std::invalid_argument("points lie in different components");
  return best;
}

}  // namespace

std::vector<std::vector<Scalar>> pairwise_d(const ReebGraph& g, const std::vector<GraphPoint>& points) {
  Refined r = refine_at(g, points);
  mpz_class denom = 1;
  for (const Scalar& v : r.values) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.get_den_mpz_t());
  bool fits = true;
  std::vector<std::int64_t> scaled;
  scaled.reserve(r.values.size());
  const mpz_class limit = mpz_class(1) << 61;
  for (const Scalar& v : r.values) {
    mpz_class s = v.get_num() * (denom / v.get_den());
    if (abs(s) >= limit) {
      fits = false;
      break;
    }
    scaled.push_back(s.get_si());
  }
  const std::size_t m = points.size();
  std::vector<std::vector<Scalar>> out(m, std::vector<Scalar>(m));
  if (fits) {
    auto best = sweep(scaled, r.adj, r.tracked);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        out[i][j] = Scalar(mpz_class(static_cast<long>(best[i][j])), denom);
        out[i][j].canonicalize();
      }
  } else {
    out = sweep(r.values, r.adj, r.tracked);
  }
  return out;
}

Scalar d_f(const ReebGraph& g, const GraphPoint& x, const GraphPoint& y) { return pairwise_d(g, {x, y})[0][1]; }

Scalar DistortionReport::bound() const { return std::max({distortion, defect_phi, defect_psi}); }

namespace {

bool same_graph(const GraphPtr& a, const GraphPtr& b) { return a == b || (a && b && *a == *b); }

std::vector<GraphPoint> sample_points(const ReebGraph& g, const std::vector<Scalar>& extra, int density, bool halve) {
  std::vector<GraphPoint> out;
  for (int v = 0; v < g.node_count(); ++v) out.push_back({Cell::node(v), g.value(v)});
  for (int e = 0; e < g.edge_count(); ++e) {
    const Scalar& lo = g.lower_value(e);
    const Scalar& hi = g.upper_value(e);
    std::vector<Scalar> ts{lo, hi};
    for (const Scalar& t : extra)
      if (lo < t && t < hi) ts.push_back(t);
    for (int k = 1; k <= density; ++k) ts.push_back(lo + (hi - lo) * k / (density + 1));
    ts = sorted_unique(std::move(ts));
    if (halve) {
      const std::size_t n = ts.size();
      for (std::size_t i = 0; i + 1 < n; ++i) ts.push_back((ts[i] + ts[i + 1]) / 2);
      ts = sorted_unique(std::move(ts));
    }
    for (std::size_t i = 1; i + 1 < ts.size(); ++i) out.push_back({Cell::edge(e), ts[i]});
  }
  return out;
}

struct Evaluation {
  Scalar distortion;
  std::vector<CorrespondenceRow> rows;
};

Evaluation evaluate_pairs(const PLGraphMap& phi, const PLGraphMap& psi, const std::vector<GraphPoint>& sf,
                          const std::vector<GraphPoint>& sg) {
  std::vector<CorrespondenceRow> rows;
  for (const auto& p : sf) {
    GraphPoint q = phi(p);
    rows.push_back({p, q, abs(Scalar(p.value - q.value)), -1, 0, 0});
  }
  for (const auto& q : sg) {
    GraphPoint p = psi(q);
    rows.push_back({p, q, abs(Scalar(p.value - q.value)), -1, 0, 0});
  }
  std::vector<GraphPoint> ps, qs;
  for (const auto& r : rows) {
    ps.push_back(r.p);
    qs.push_back(r.q);
  }
  auto df = pairwise_d(*phi.source(), ps);
  auto dg = pairwise_d(*phi.target(), qs);
  Evaluation ev;
  ev.distortion = 0;
  std::vector<Scalar> worst(rows.size(), Scalar(-1));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      Scalar d = abs(Scalar(df[i][j] - dg[i][j])) / 2;
      if (d > worst[i]) {
        worst[i] = d;
        rows[i].worst_partner = static_cast<int>(j);
        rows[i].d_f = df[i][j];
        rows[i].d_g = dg[i][j];
      }
      if (d > ev.distortion) ev.distortion = d;
    }
  }
  ev.rows = std::move(rows);
  return ev;
}

Scalar value_defect(const PLGraphMap& m) {
  Scalar out = 0;
  for (std::size_t v = 0; v < m.chart().images.size(); ++v) {
    Scalar d = abs(Scalar(m.chart().images[v].value - m.map().images[v].value));
    if (d > out) out = d;
  }
  return out;
}

}  // namespace

DistortionReport distortion(const PLGraphMap& phi, const PLGraphMap& psi, int sample_density, bool check_tightness) {
  if (!same_graph(phi.source(), psi.target()) || !same_graph(phi.target(), psi.source()))
    throw std::invalid_argument("maps do not go between the same two graphs");
  if (sample_density < 0) throw std::invalid_argument("negative sample density");
  std::vector<Scalar> extra = phi.source()->node_values();
  extra.insert(extra.end(), phi.target()->node_values().begin(), phi.target()->node_values().end());
  for (const auto* m : {&phi, &psi}) {
    for (const auto& y : m->chart().images) extra.push_back(y.value);
    for (const auto& y : m->map().images) extra.push_back(y.value);
  }
  extra = sorted_unique(std::move(extra));

  auto sf = sample_points(*phi.source(), extra, sample_density, false);
  auto sg = sample_points(*phi.target(), extra, sample_density, false);
  Evaluation ev = evaluate_pairs(phi, psi, sf, sg);
  DistortionReport r;
  r.distortion = ev.distortion;
  r.rows = std::move(ev.rows);
  r.defect_phi = value_defect(phi);
  r.defect_psi = value_defect(psi);
  if (check_tightness) {
    auto hf = sample_points(*phi.source(), extra, sample_density, true);
    auto hg = sample_points(*phi.target(), extra, sample_density, true);
    r.tight = evaluate_pairs(phi, psi, hf, hg).distortion == r.distortion;
  }
  return r;
}

FDBound fd_upper_bound(const GraphPtr& rf, const GraphPtr& rg,
                       const std::vector<std::pair<PLGraphMap, PLGraphMap>>& candidates, int sample_density) {
  if (candidates.empty()) throw std::invalid_argument("no candidate maps");
  FDBound out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& [phi, psi] = candidates[i];
    if (!same_graph(phi.source(), rf) || !same_graph(phi.target(), rg))
      throw std::invalid_argument("candidate maps between other graphs");
    out.reports.push_back(distortion(phi, psi, sample_density));
    const Scalar b = out.reports.back().bound();
    if (out.best < 0 || b < out.bound) {
      out.bound = b;
      out.best = static_cast<int>(i);
    }
  }
  return out;
}

namespace {

std::string cell_text(const Cell& c) { return (c.is_node() ? "node:" : "edge:") + std::to_string(c.id); }

}  // namespace

std::string correspondence_csv(const DistortionReport& r) {
  std::ostringstream out;
  out << "p_cell,p_value,q_cell,q_value,defect,partner,d_f,d_g\n";
  for (const auto& row : r.rows) {
    out << cell_text(row.p.cell) << ',' << to_string(row.p.value) << ',' << cell_text(row.q.cell) << ','
        << to_string(row.q.value) << ',' << to_string(row.defect) << ',' << row.worst_partner << ','
        << to_string(row.d_f) << ',' << to_string(row.d_g) << '\n';
  }
  return out.str();
}

}  // namespace reebkit
