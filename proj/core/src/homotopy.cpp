#include "reebkit/homotopy.hpp"

#include <algorithm>
#include <stdexcept>

namespace reebkit {

ValueTransform vertex_reparametrization(const PLFunction& f, const PLFunction& g) {
  if (f.size() != g.size() || f.size() == 0) throw MapError("functions differ in size");
  std::vector<VertexId> order(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) order[v] = static_cast<VertexId>(v);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return f[a] < f[b]; });
  std::vector<std::pair<Scalar, Scalar>> points;
  for (VertexId v : order) {
    if (!points.empty() && points.back().first == f[v]) {
      if (points.back().second != g[v]) throw MapError("equal values sent to different values", v);
      continue;
    }
    if (!points.empty() && g[v] < points.back().second) throw MapError("value order reversed", v);
    points.emplace_back(f[v], g[v]);
  }
  return ValueTransform(std::move(points));
}

HomotopySchedule homotopy_breakpoints(const SimplicialComplex& k, const PLFunction& f, const PLFunction& g) {
  if (f.size() != g.size() || f.size() != static_cast<std::size_t>(k.vertex_count()))
    throw std::invalid_argument("functions do not match complex");
  std::vector<Scalar> lambdas{Scalar(0), Scalar(1)};
  for (std::size_t v = 0; v < f.size(); ++v) {
    for (std::size_t w = v + 1; w < f.size(); ++w) {
      Scalar d0 = f[v] - f[w];
      Scalar d1 = g[v] - g[w];
      if (d0 == d1) continue;
      Scalar lambda = d0 / (d0 - d1);
      if (0 < lambda && lambda < 1) lambdas.push_back(lambda);
    }
  }
  HomotopySchedule s;
  s.breakpoints = sorted_unique(std::move(lambdas));
  for (std::size_t i = 0; i + 1 < s.breakpoints.size(); ++i) {
    const Scalar rho = (s.breakpoints[i] + s.breakpoints[i + 1]) / 2;
    s.midpoints.push_back(rho);
    PLFunction mid = interpolate(f, g, rho);
    s.chi.push_back(vertex_reparametrization(mid, interpolate(f, g, s.breakpoints[i])));
    s.xi.push_back(vertex_reparametrization(mid, interpolate(f, g, s.breakpoints[i + 1])));
  }
  return s;
}

namespace {

PLFunction base_values(const ReebResult& r) {
  const int n = r.subdivision.base->vertex_count();
  std::vector<Scalar> out;
  out.reserve(n);
  for (VertexId v = 0; v < n; ++v) out.push_back(r.map.images[v].value);
  return PLFunction(std::move(out));
}

}  // namespace

PLGraphMap induced_quotient_via_reparam(const ReebResult& rf, const ReebResult& rg, const ValueTransform& chi) {
  const ComplexPtr& k = rf.subdivision.base;
  if (!(k == rg.subdivision.base || *k == *rg.subdivision.base))
    throw MapError("Reeb graphs of different complexes");
  const PLFunction f = base_values(rf);
  const PLFunction g = base_values(rg);
  for (VertexId v = 0; v < k->vertex_count(); ++v)
    if (chi(f[v]) != g[v]) throw MapError("chi(f) differs from g at a vertex", v);

  // h = chi ∘ f is linear on the f-subdivision, whose levels include chi's breaks.
  const ComplexPtr& kf = rf.subdivision.complex;
  const PLFunction f_fine = rf.map.pulled_values();
  std::vector<Scalar> h_vals;
  h_vals.reserve(f_fine.size());
  for (const Scalar& t : f_fine.values()) h_vals.push_back(chi(t));
  const PLFunction h(std::move(h_vals));
  const ReebResult rh = compute_reeb(kf, h);
  const PLGraphMap to_h = induced_map(refine(rf.map, rh.subdivision), rh.map, chi);

  // k: X -> R_h, sending x in the open simplex sigma to the h-level component
  // through sigma at height g(x).
  std::vector<std::vector<SimplexId>> pieces(k->simplex_count());
  for (SimplexId t = 0; t < kf->simplex_count(); ++t) pieces[rf.subdivision.owner[t]].push_back(t);
  const auto h_ranges = h.ranges(*kf);
  auto locate = [&](SimplexId sigma, const Scalar& t) -> GraphPoint {
    for (SimplexId piece : pieces[sigma]) {
      const ValueRange& r = h_ranges[piece];
      if ((r.lo < t && t < r.hi) || (r.constant() && r.lo == t)) return rh.locate(piece, t);
    }
    throw std::logic_error("no h-level through the open simplex");
  };
  const ReebQuotientMap lift = realize_map(rg.subdivision, g, rh.graph, locate);
  const PLGraphMap from_h = induced_map(lift, rg.map);
  return compose(from_h, to_h);
}

PLGraphMap induced_quotient_via_reparam(const ComplexPtr& k, const PLFunction& f, const PLFunction& g,
                                        const ValueTransform& chi) {
  for (VertexId v = 0; v < k->vertex_count(); ++v)
    if (chi(f[v]) != g[v]) throw MapError("chi(f) differs from g at a vertex", v);
  return induced_quotient_via_reparam(compute_reeb(k, f), compute_reeb(k, g), chi);
}

PLGraphMap rechart(const PLGraphMap& m, const std::vector<std::vector<Scalar>>& extra_cuts) {
  const ReebGraph& src = *m.source();
  std::vector<std::vector<Scalar>> cuts(src.edge_count());
  for (int e = 0; e < src.edge_count(); ++e) {
    const auto& list = m.edge_vertices()[e];
    for (std::size_t i = 1; i + 1 < list.size(); ++i) cuts[e].push_back(list[i].first);
    if (e < static_cast<int>(extra_cuts.size()))
      for (const Scalar& t : extra_cuts[e])
        if (src.lower_value(e) < t && t < src.upper_value(e)) cuts[e].push_back(t);
    if (cuts[e].empty()) cuts[e].push_back((src.lower_value(e) + src.upper_value(e)) / 2);
    cuts[e] = sorted_unique(std::move(cuts[e]));
  }
  std::vector<GraphPoint> images;
  for (int n = 0; n < src.node_count(); ++n) images.push_back(m({Cell::node(n), src.value(n)}));
  std::vector<std::vector<Cell>> segments(src.edge_count());
  for (int e = 0; e < src.edge_count(); ++e) {
    std::vector<Scalar> ends{src.lower_value(e)};
    for (const Scalar& t : cuts[e]) {
      images.push_back(m({Cell::edge(e), t}));
      ends.push_back(t);
    }
    ends.push_back(src.upper_value(e));
    for (std::size_t i = 0; i + 1 < ends.size(); ++i)
      segments[e].push_back(m({Cell::edge(e), (ends[i] + ends[i + 1]) / 2}).cell);
  }
  return make_graph_map(m.source(), m.target(), cuts, images, segments);
}

HomotopyZigzag build_homotopy_zigzag(const ComplexPtr& k, const PLFunction& f, const PLFunction& g) {
  if (!k->connected()) throw std::invalid_argument("complex is not connected");
  HomotopyZigzag out;
  out.schedule = homotopy_breakpoints(*k, f, g);
  const auto& s = out.schedule;

  std::vector<ReebResult> ends;
  for (const Scalar& lambda : s.breakpoints) ends.push_back(compute_reeb(k, interpolate(f, g, lambda)));
  for (const auto& r : ends) out.diagram.graphs.push_back(r.graph);

  for (std::size_t i = 0; i < s.midpoints.size(); ++i) {
    const ReebResult mid = compute_reeb(k, interpolate(f, g, s.midpoints[i]));
    PLGraphMap p = induced_quotient_via_reparam(mid, ends[i], s.chi[i]);
    PLGraphMap o = induced_quotient_via_reparam(mid, ends[i + 1], s.xi[i]);
    std::vector<std::vector<Scalar>> shared(mid.graph->edge_count());
    for (const PLGraphMap* m : {&p, &o})
      for (int e = 0; e < mid.graph->edge_count(); ++e)
        for (const auto& [t, v] : m->edge_vertices()[e]) shared[e].push_back(t);
    p = rechart(p, shared);
    o = rechart(o, shared);
    out.diagram.legs.emplace_back(p.map(), o.map());
    out.middle_graphs.push_back(mid.graph);
    out.maps.emplace_back(std::move(p), std::move(o));
  }
  out.cost = zigzag_cost(out.diagram).cost;
  out.sup_distance = sup_distance(f, g);
  return out;
}

}  // namespace reebkit
