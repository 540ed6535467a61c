#include "reebkit/category.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "reebkit/reeb.hpp"

namespace reebkit {

namespace {

bool same_graph(const GraphPtr& a, const GraphPtr& b) { return a == b || (a && b && *a == *b); }
bool same_complex(const ComplexPtr& a, const ComplexPtr& b) { return a == b || (a && b && *a == *b); }

std::vector<int> carrier_codes(const std::vector<Cell>& cells) {
  std::vector<int> out;
  out.reserve(cells.size());
  for (const Cell& c : cells) out.push_back(c.code());
  return out;
}

SimplexId edge_between(const SimplicialComplex& k, VertexId a, VertexId b) {
  std::vector<VertexId> key{std::min(a, b), std::max(a, b)};
  auto id = k.find(key);
  if (!id) throw std::invalid_argument("chart vertices are not joined by an edge");
  return *id;
}

}  // namespace

ValueTransform::ValueTransform(std::vector<std::pair<Scalar, Scalar>> points) : points_(std::move(points)) {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].first < points_[i].first)) throw std::invalid_argument("transform abscissae must increase");
    if (points_[i].second < points_[i - 1].second) throw std::invalid_argument("transform must be weakly increasing");
  }
}

Scalar ValueTransform::operator()(const Scalar& t) const {
  if (points_.empty()) return t;
  if (t <= points_.front().first) return points_.front().second;
  if (t >= points_.back().first) return points_.back().second;
  auto it = std::upper_bound(points_.begin(), points_.end(), t,
                             [](const Scalar& x, const std::pair<Scalar, Scalar>& p) { return x < p.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  return lo.second + (t - lo.first) * (hi.second - lo.second) / (hi.first - lo.first);
}

std::vector<Scalar> ValueTransform::breaks_between(const Scalar& lo, const Scalar& hi) const {
  std::vector<Scalar> out;
  for (const auto& p : points_)
    if (lo < p.first && p.first < hi) out.push_back(p.first);
  return out;
}

PLGraphMap::PLGraphMap(ReebQuotientMap chart, ReebQuotientMap map) : chart_(std::move(chart)), map_(std::move(map)) {
  if (!same_complex(chart_.source, map_.source)) throw std::invalid_argument("graph map legs have different sources");
  const ReebGraph& g = *chart_.target;
  node_vertex_.assign(g.node_count(), -1);
  edge_vertices_.assign(g.edge_count(), {});
  for (VertexId v = 0; v < chart_.source->vertex_count(); ++v) {
    const GraphPoint& y = chart_.images[v];
    if (y.cell.is_node()) {
      if (node_vertex_[y.cell.id] >= 0) throw std::invalid_argument("chart is not injective at a node");
      node_vertex_[y.cell.id] = v;
    } else {
      edge_vertices_[y.cell.id].emplace_back(y.value, v);
    }
  }
  for (int n = 0; n < g.node_count(); ++n)
    if (node_vertex_[n] < 0) throw std::invalid_argument("chart misses a node");
  for (int e = 0; e < g.edge_count(); ++e) {
    auto& list = edge_vertices_[e];
    list.emplace_back(g.lower_value(e), node_vertex_[g.edge(e).lower]);
    list.emplace_back(g.upper_value(e), node_vertex_[g.edge(e).upper]);
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i - 1].first == list[i].first) throw std::invalid_argument("chart is not injective on an edge");
      edge_between(*chart_.source, list[i - 1].second, list[i].second);
    }
  }
}

PLGraphMap PLGraphMap::identity(const GraphPtr& g) {
  ReebQuotientMap c = chart_map(g);
  return PLGraphMap(c, c);
}

ComplexPoint PLGraphMap::chart_point(const GraphPoint& x) const {
  if (x.cell.is_node()) return {node_vertex_[x.cell.id], {Scalar(1)}};
  const auto& list = edge_vertices_[x.cell.id];
  auto it = std::lower_bound(list.begin(), list.end(), x.value,
                             [](const std::pair<Scalar, VertexId>& p, const Scalar& t) { return p.first < t; });
  if (it == list.begin() || it == list.end()) throw std::invalid_argument("point outside its edge");
  if (it->first == x.value) return {it->second, {Scalar(1)}};
  const auto& lo = *(it - 1);
  const auto& hi = *it;
  const SimplexId s = edge_between(*chart_.source, lo.second, hi.second);
  Scalar w_hi = (x.value - lo.first) / (hi.first - lo.first);
  Scalar w_lo = 1 - w_hi;
  return lo.second < hi.second ? ComplexPoint{s, {w_lo, w_hi}} : ComplexPoint{s, {w_hi, w_lo}};
}

GraphPoint PLGraphMap::operator()(const GraphPoint& x) const { return map_.evaluate(chart_point(x)); }

VerifyResult verify_graph_map(const PLGraphMap& phi) {
  const auto& chart = phi.chart();
  for (SimplexId s = 0; s < chart.source->simplex_count(); ++s) {
    if (chart.source->dimension_of(s) > 1) {
      VerifyResult r;
      r.violated = VerifyResult::Axiom::kStructure;
      r.message = "chart is not one-dimensional";
      return r;
    }
    if (chart.source->dimension_of(s) == 1) {
      auto vs = chart.source->vertices_of(s);
      if (chart.images[vs[0]].value == chart.images[vs[1]].value) {
        VerifyResult r;
        r.violated = VerifyResult::Axiom::kStructure;
        r.message = "chart collapses an edge";
        r.witness_vertex = vs[0];
        return r;
      }
    }
  }
  if (auto r = verify_reeb_quotient(chart); !r) {
    r.message = "chart: " + r.message;
    return r;
  }
  return verify_reeb_quotient(phi.map());
}

PLGraphMap make_graph_map(const GraphPtr& source, const GraphPtr& target, const std::vector<std::vector<Scalar>>& cuts,
                          const std::vector<GraphPoint>& images,
                          const std::vector<std::vector<Cell>>& segment_cells) {
  const ReebGraph& g = *source;
  if (cuts.size() != static_cast<std::size_t>(g.edge_count())) throw std::invalid_argument("one cut list per edge");
  std::vector<std::vector<VertexId>> simplices;
  std::vector<GraphPoint> chart_images;
  for (int n = 0; n < g.node_count(); ++n) chart_images.push_back({Cell::node(n), g.value(n)});
  std::vector<std::vector<VertexId>> chain(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (cuts[e].empty()) throw std::invalid_argument("every edge needs a cut");
    chain[e].push_back(g.edge(e).lower);
    for (const Scalar& t : cuts[e]) {
      if (!(g.lower_value(e) < t && t < g.upper_value(e))) throw std::invalid_argument("cut outside its edge");
      if (chain[e].size() > 1 && !(chart_images[chain[e].back()].value < t))
        throw std::invalid_argument("cuts must increase");
      chain[e].push_back(static_cast<VertexId>(chart_images.size()));
      chart_images.push_back({Cell::edge(e), t});
    }
    chain[e].push_back(g.edge(e).upper);
    for (std::size_t i = 0; i + 1 < chain[e].size(); ++i) simplices.push_back({chain[e][i], chain[e][i + 1]});
  }
  if (images.size() != chart_images.size()) throw std::invalid_argument("one image per chart vertex");
  auto s = std::make_shared<SimplicialComplex>(
      SimplicialComplex::from_simplices(static_cast<int>(chart_images.size()), std::move(simplices)));

  ReebQuotientMap chart{s, source, chart_images, infer_carriers(*s, g, chart_images)};
  ReebQuotientMap map{s, target, images, {}};
  if (segment_cells.empty()) {
    map.carriers = infer_carriers(*s, *target, images);
  } else {
    map.carriers.resize(s->simplex_count());
    for (VertexId v = 0; v < s->vertex_count(); ++v) map.carriers[v] = images[v].cell;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (segment_cells[e].size() + 1 != chain[e].size()) throw std::invalid_argument("one cell per segment");
      for (std::size_t i = 0; i + 1 < chain[e].size(); ++i)
        map.carriers[edge_between(*s, chain[e][i], chain[e][i + 1])] = segment_cells[e][i];
    }
  }
  return PLGraphMap(std::move(chart), std::move(map));
}

namespace {

// Locates points of a quotient map's fibers on the 1-skeleton of its source.
class FiberLocator {
 public:
  explicit FiberLocator(const ReebQuotientMap& p) : p_(p), values_(p.pulled_values()) {
    const SimplicialComplex& k = *p.source;
    for (SimplexId s = 0; s < k.simplex_count() && k.dimension_of(s) <= 1; ++s)
      by_cell_[p.carriers[s].code()].push_back(s);
  }

  // A point of the source over y, as (simplex, barycentric).
  std::optional<ComplexPoint> point_over(const GraphPoint& y) const {
    const ReebGraph& g = *p_.target;
    auto search = [&](const Cell& c) -> std::optional<ComplexPoint> {
      auto it = by_cell_.find(c.code());
      if (it == by_cell_.end()) return std::nullopt;
      for (SimplexId s : it->second) {
        auto vs = p_.source->vertices_of(s);
        if (vs.size() == 1) {
          if (p_.images[vs[0]] == y) return ComplexPoint{s, {Scalar(1)}};
          continue;
        }
        const Scalar& a = values_[vs[0]];
        const Scalar& b = values_[vs[1]];
        if (a == b || y.value < std::min(a, b) || y.value > std::max(a, b)) continue;
        Scalar w1 = (y.value - a) / (b - a);
        Scalar w0 = 1 - w1;
        return reduce_point(*p_.source, s, {w0, w1});
      }
      return std::nullopt;
    };
    if (auto hit = search(y.cell)) return hit;
    if (y.cell.is_node()) {
      for (int e : g.incident(y.cell.id))
        if (auto hit = search(Cell::edge(e))) return hit;
    }
    return std::nullopt;
  }

 private:
  const ReebQuotientMap& p_;
  PLFunction values_;
  std::map<int, std::vector<SimplexId>> by_cell_;
};

}  // namespace

PLGraphMap induced_map(const ReebQuotientMap& p_f, const ReebQuotientMap& p_g, const ValueTransform& xi) {
  if (!same_complex(p_f.source, p_g.source)) throw MapError("maps do not share a source");
  const SimplicialComplex& k = *p_f.source;
  const ReebGraph& rf = *p_f.target;
  const ReebGraph& rg = *p_g.target;

  for (VertexId v = 0; v < k.vertex_count(); ++v)
    if (p_g.images[v].value != xi(p_f.images[v].value)) throw MapError("g differs from xi(f) at a vertex", v);
  const PLFunction fv = p_f.pulled_values();
  const auto ranges = fv.ranges(k);
  for (SimplexId s = 0; s < k.simplex_count(); ++s)
    if (!xi.breaks_between(ranges[s].lo, ranges[s].hi).empty())
      throw MapError("xi bends inside a simplex", k.vertices_of(s)[0]);

  std::vector<std::vector<Scalar>> cuts(rf.edge_count());
  for (const auto& y : p_f.images)
    if (y.cell.is_edge()) cuts[y.cell.id].push_back(y.value);
  for (int e = 0; e < rf.edge_count(); ++e) {
    for (const Scalar& t : xi.breaks_between(rf.lower_value(e), rf.upper_value(e))) cuts[e].push_back(t);
    if (cuts[e].empty()) cuts[e].push_back((rf.lower_value(e) + rf.upper_value(e)) / 2);
    cuts[e] = sorted_unique(std::move(cuts[e]));
  }

  FiberLocator locator(p_f);
  auto image_of = [&](const GraphPoint& y) {
    auto x = locator.point_over(y);
    if (!x) throw MapError("p_f is not surjective");
    return p_g.evaluate(*x);
  };

  std::vector<GraphPoint> images;
  for (int n = 0; n < rf.node_count(); ++n) images.push_back(image_of({Cell::node(n), rf.value(n)}));
  std::vector<std::vector<Cell>> segment_cells(rf.edge_count());
  for (int e = 0; e < rf.edge_count(); ++e) {
    std::vector<Scalar> ends{rf.lower_value(e)};
    for (const Scalar& t : cuts[e]) {
      images.push_back(image_of({Cell::edge(e), t}));
      ends.push_back(t);
    }
    ends.push_back(rf.upper_value(e));
    for (std::size_t i = 0; i + 1 < ends.size(); ++i)
      segment_cells[e].push_back(image_of({Cell::edge(e), (ends[i] + ends[i + 1]) / 2}).cell);
  }
  PLGraphMap zeta = make_graph_map(p_f.target, p_g.target, cuts, images, segment_cells);

  // p_g = zeta ∘ p_f: vertices, then every chart breakpoint and midpoint inside each simplex.
  for (VertexId v = 0; v < k.vertex_count(); ++v)
    if (!(zeta(p_f.images[v]) == p_g.images[v])) throw MapError("p_g is not constant on a p_f fiber", v);
  for (SimplexId s = k.vertex_count(); s < k.simplex_count(); ++s) {
    const Cell& cf = p_f.carriers[s];
    if (!cf.is_edge() || ranges[s].constant()) continue;
    std::vector<Scalar> samples{ranges[s].lo};
    for (const auto& [t, v] : zeta.edge_vertices()[cf.id])
      if (ranges[s].lo < t && t < ranges[s].hi) samples.push_back(t);
    samples.push_back(ranges[s].hi);
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i + 1 < n; ++i) samples.push_back((samples[i] + samples[i + 1]) / 2);
    for (const Scalar& t : samples) {
      GraphPoint lhs = zeta(rf.normalize(cf, t));
      GraphPoint rhs = rg.normalize(p_g.carriers[s], xi(t));
      if (!(lhs == rhs)) throw MapError("p_g is not constant on a p_f fiber", k.vertices_of(s)[0]);
    }
  }
  return zeta;
}

ReebQuotientMap compose(const ReebQuotientMap& outer, const SimplicialMap& inner) {
  if (!same_complex(outer.source, inner.target)) throw std::invalid_argument("composed maps do not match");
  const SimplicialComplex& y = *inner.source;
  const SimplicialComplex& x = *inner.target;
  if (inner.vertex_map.size() != static_cast<std::size_t>(y.vertex_count()))
    throw std::invalid_argument("vertex map size mismatch");
  ReebQuotientMap p;
  p.source = inner.source;
  p.target = outer.target;
  for (VertexId v = 0; v < y.vertex_count(); ++v) p.images.push_back(outer.images[inner.vertex_map[v]]);
  p.carriers.resize(y.simplex_count());
  for (SimplexId s = 0; s < y.simplex_count(); ++s) {
    std::vector<VertexId> img;
    for (VertexId v : y.vertices_of(s)) img.push_back(inner.vertex_map[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto id = x.find(img);
    if (!id) throw std::invalid_argument("vertex map is not simplicial");
    p.carriers[s] = outer.carriers[*id];
  }
  return p;
}

RefinedMap compose(const PLGraphMap& outer, const ReebQuotientMap& inner) {
  if (!same_graph(inner.target, outer.source())) throw std::invalid_argument("composed maps do not match");
  std::vector<Scalar> levels;
  for (const auto& list : outer.edge_vertices())
    for (const auto& [t, v] : list) levels.push_back(t);
  for (const Scalar& t : outer.source()->node_values()) levels.push_back(t);
  levels = sorted_unique(std::move(levels));
  const PLFunction values = inner.pulled_values();
  RefinedMap r;
  r.subdivision = subdivide_at_levels(inner.source, values, levels);
  const ReebGraph& mid = *inner.target;
  r.map = realize_map(r.subdivision, values, outer.target(), [&](SimplexId s, const Scalar& t) {
    return outer(mid.normalize(inner.carriers[s], t));
  });
  return r;
}

PLGraphMap compose(const PLGraphMap& outer, const PLGraphMap& inner) {
  RefinedMap r = compose(outer, inner.map());
  return PLGraphMap(refine(inner.chart(), r.subdivision), std::move(r.map));
}

ReebQuotientMap refine(const ReebQuotientMap& p, const Subdivision& sub) {
  if (!same_complex(p.source, sub.base)) throw std::invalid_argument("subdivision of another complex");
  if (sub.complex == sub.base) return p;
  const ReebGraph& g = *p.target;
  return realize_map(sub, p.pulled_values(), p.target,
                     [&](SimplexId s, const Scalar& t) { return g.normalize(p.carriers[s], t); });
}

ReebQuotientMap pull_map(const ProductTriangulation& t, int factor, const ReebQuotientMap& m) {
  const SimplicialComplex& k = *t.complex;
  ReebQuotientMap p;
  p.source = t.complex;
  p.target = m.target;
  p.images.reserve(k.vertex_count());
  for (VertexId v = 0; v < k.vertex_count(); ++v) p.images.push_back(m.evaluate(t.vertex_points[v][factor]));
  p.carriers.resize(k.simplex_count());
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    Cell c = m.carriers[t.owner[s][factor]];
    if (c.is_edge()) {
      auto vs = k.vertices_of(s);
      const GraphPoint& first = p.images[vs[0]];
      bool collapsed = first.cell.is_node();
      for (VertexId v : vs) collapsed = collapsed && p.images[v] == first;
      if (collapsed) c = first.cell;
    }
    p.carriers[s] = c;
  }
  return p;
}

ReebQuotientMap LimitCellComplex::pull(int factor, const ReebQuotientMap& m) const {
  return pull_map(triangulation, factor, m);
}

LimitCellComplex pullback(const ReebQuotientMap& p1, const ReebQuotientMap& p2) {
  if (!same_graph(p1.target, p2.target)) throw std::invalid_argument("pullback maps have different targets");
  FactorSpec a{p1.source};
  a.right = p1.pulled_values();
  a.right_carrier = carrier_codes(p1.carriers);
  FactorSpec b{p2.source};
  b.left = p2.pulled_values();
  b.left_carrier = carrier_codes(p2.carriers);
  auto cells = std::make_shared<ProductCellComplex>(ProductCellComplex::build({std::move(a), std::move(b)}));
  if (cells->cells().empty()) throw std::invalid_argument("empty fiber product");
  LimitCellComplex out{cells, cells->triangulate()};
  return out;
}

ProductCellComplex chain_limit_cells(const std::vector<std::pair<ReebQuotientMap, ReebQuotientMap>>& legs) {
  if (legs.empty()) throw std::invalid_argument("empty chain");
  const int m = static_cast<int>(legs.size());
  std::vector<FactorSpec> factors;
  for (int i = 0; i < m; ++i) {
    const auto& [left, right] = legs[i];
    if (!same_complex(left.source, right.source)) throw std::invalid_argument("legs of a space differ in source");
    FactorSpec f{left.source};
    if (i > 0) {
      if (!same_graph(legs[i - 1].second.target, left.target)) throw std::invalid_argument("chain does not glue");
      f.left = left.pulled_values();
      f.left_carrier = carrier_codes(left.carriers);
    }
    if (i + 1 < m) {
      f.right = right.pulled_values();
      f.right_carrier = carrier_codes(right.carriers);
    }
    factors.push_back(std::move(f));
  }
  return ProductCellComplex::build(std::move(factors));
}

LimitCellComplex chart_product(const GraphPtr& a, const GraphPtr& b) {
  auto cells = std::make_shared<ProductCellComplex>(
      ProductCellComplex::build({FactorSpec{a->chart()}, FactorSpec{b->chart()}}));
  LimitCellComplex out{cells, cells->triangulate()};
  return out;
}

}  // namespace reebkit
