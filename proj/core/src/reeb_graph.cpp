#include "reebkit/reeb_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "reebkit/disjoint_set.hpp"

namespace reebkit {

ReebGraph::ReebGraph(std::vector<Scalar> node_values, std::vector<GraphEdge> edges)
    : values_(std::move(node_values)), edges_(std::move(edges)) {
  const int n = node_count();
  incident_.resize(n);
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < edge_count(); ++e) {
    GraphEdge& ed = edges_[e];
    if (ed.lower < 0 || ed.lower >= n || ed.upper < 0 || ed.upper >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (!(values_[ed.lower] < values_[ed.upper])) throw std::invalid_argument("edge is not strictly increasing");
    ed.multiplicity = seen[{ed.lower, ed.upper}]++;
    incident_[ed.lower].push_back(e);
    incident_[ed.upper].push_back(e);
  }

  std::vector<std::vector<VertexId>> simplices;
  std::vector<Scalar> chart_vals = values_;
  for (int e = 0; e < edge_count(); ++e) {
    const int mid = n + e;
    chart_vals.push_back((values_[edges_[e].lower] + values_[edges_[e].upper]) / 2);
    simplices.push_back({edges_[e].lower, mid});
    simplices.push_back({edges_[e].upper, mid});
  }
  auto chart = std::make_shared<SimplicialComplex>(
      SimplicialComplex::from_simplices(n + edge_count(), std::move(simplices)));
  chart_carrier_.resize(chart->simplex_count());
  for (SimplexId s = 0; s < chart->simplex_count(); ++s) {
    auto vs = chart->vertices_of(s);
    const int top = vs.back();
    chart_carrier_[s] = top < n ? Cell::node(top) : Cell::edge(top - n);
  }
  chart_ = std::move(chart);
  chart_values_ = PLFunction(std::move(chart_vals));
}

bool ReebGraph::connected() const {
  if (node_count() == 0) return false;
  DisjointSet ds(node_count());
  int parts = node_count();
  for (const auto& e : edges_)
    if (ds.unite(e.lower, e.upper)) --parts;
  return parts == 1;
}

int ReebGraph::betti1() const {
  DisjointSet ds(node_count());
  int parts = node_count();
  for (const auto& e : edges_)
    if (ds.unite(e.lower, e.upper)) --parts;
  return edge_count() - node_count() + parts;
}

Scalar ReebGraph::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
Scalar ReebGraph::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

GraphPoint ReebGraph::normalize(const Cell& cell, const Scalar& value) const {
  if (cell.is_node()) {
    if (values_[cell.id] != value) throw std::invalid_argument("value does not match node");
    return {cell, value};
  }
  const GraphEdge& e = edges_[cell.id];
  if (value == values_[e.lower]) return {Cell::node(e.lower), value};
  if (value == values_[e.upper]) return {Cell::node(e.upper), value};
  if (value < values_[e.lower] || value > values_[e.upper]) throw std::invalid_argument("value outside edge");
  return {cell, value};
}

bool ReebGraph::is_face(const Cell& a, const Cell& b) const {
  if (a == b) return true;
  if (a.is_node() && b.is_edge()) return edges_[b.id].lower == a.id || edges_[b.id].upper == a.id;
  return false;
}

bool ReebGraph::in_closed(const Cell& cell, const GraphPoint& p) const { return is_face(p.cell, cell); }

ComplexPoint ReebGraph::chart_point(const GraphPoint& p) const {
  if (p.cell.is_node()) return {p.cell.id, {Scalar(1)}};
  const int e = p.cell.id;
  const int mid = node_count() + e;
  const Scalar& m = chart_values_[mid];
  if (p.value == m) return {mid, {Scalar(1)}};
  const int end = p.value < m ? edges_[e].lower : edges_[e].upper;
  std::vector<VertexId> key{std::min(end, mid), std::max(end, mid)};
  SimplexId s = *chart_->find(key);
  Scalar w_end = (p.value - m) / (values_[end] - m);
  Scalar w_mid = 1 - w_end;
  return key[0] == end ? ComplexPoint{s, {w_end, w_mid}} : ComplexPoint{s, {w_mid, w_end}};
}

GraphPoint ReebGraph::from_chart(const ComplexPoint& p) const {
  return normalize(chart_carrier_[p.simplex], chart_values_.evaluate(*chart_, p));
}

ReebGraph point_graph(const Scalar& c) { return ReebGraph({c}, {}); }

}  // namespace reebkit
