#include "reebkit/quotient_map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace reebkit {

PLFunction ReebQuotientMap::pulled_values() const {
  std::vector<Scalar> out;
  out.reserve(images.size());
  for (const auto& y : images) out.push_back(y.value);
  return PLFunction(std::move(out));
}

GraphPoint ReebQuotientMap::evaluate(const ComplexPoint& p) const {
  Scalar t = 0;
  auto verts = source->vertices_of(p.simplex);
  for (std::size_t j = 0; j < verts.size(); ++j) t += p.barycentric[j] * images[verts[j]].value;
  return target->normalize(carriers[p.simplex], t);
}

std::vector<Cell> infer_carriers(const SimplicialComplex& k, const ReebGraph& g,
                                 const std::vector<GraphPoint>& images) {
  std::vector<Cell> out(k.simplex_count());
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    auto verts = k.vertices_of(s);
    std::optional<Cell> edge;
    std::set<int> nodes;
    for (VertexId v : verts) {
      const Cell& c = images[v].cell;
      if (c.is_edge()) {
        if (edge && *edge != c) throw std::invalid_argument("simplex meets two open edges");
        edge = c;
      } else {
        nodes.insert(c.id);
      }
    }
    if (edge) {
      for (int n : nodes)
        if (!g.is_face(Cell::node(n), *edge)) throw std::invalid_argument("simplex image leaves its edge");
      out[s] = *edge;
    } else if (nodes.size() == 1) {
      out[s] = Cell::node(*nodes.begin());
    } else {
      if (nodes.size() != 2) throw std::invalid_argument("simplex spans more than two nodes");
      const int a = *nodes.begin(), b = *nodes.rbegin();
      std::optional<int> found;
      for (int e : g.incident(a)) {
        const GraphEdge& ed = g.edge(e);
        if ((ed.lower == a && ed.upper == b) || (ed.lower == b && ed.upper == a)) {
          if (found) throw std::invalid_argument("carrier ambiguous between parallel edges");
          found = e;
        }
      }
      if (!found) throw std::invalid_argument("simplex spans two non-adjacent nodes");
      out[s] = Cell::edge(*found);
    }
  }
  return out;
}

ReebQuotientMap chart_map(const GraphPtr& g) {
  ReebQuotientMap p;
  p.source = g->chart();
  p.target = g;
  const int n = g->node_count();
  p.images.reserve(g->chart()->vertex_count());
  for (int v = 0; v < n; ++v) p.images.push_back({Cell::node(v), g->value(v)});
  for (int e = 0; e < g->edge_count(); ++e) p.images.push_back({Cell::edge(e), g->chart_values()[n + e]});
  p.carriers = g->chart_carrier();
  return p;
}

std::string to_string(VerifyResult::Axiom a) {
  switch (a) {
    case VerifyResult::Axiom::kNone: return "none";
    case VerifyResult::Axiom::kStructure: return "structure";
    case VerifyResult::Axiom::kSurjectivity: return "surjectivity";
    case VerifyResult::Axiom::kConnectedFibers: return "connected-fibers";
    case VerifyResult::Axiom::kValueCommutation: return "value-commutation";
  }
  return "unknown";
}

namespace {

Scalar min_image(const ReebQuotientMap& p, SimplexId s) {
  auto verts = p.source->vertices_of(s);
  Scalar m = p.images[verts[0]].value;
  for (VertexId v : verts)
    if (p.images[v].value < m) m = p.images[v].value;
  return m;
}

Scalar max_image(const ReebQuotientMap& p, SimplexId s) {
  auto verts = p.source->vertices_of(s);
  Scalar m = p.images[verts[0]].value;
  for (VertexId v : verts)
    if (p.images[v].value > m) m = p.images[v].value;
  return m;
}

bool meets_fiber(const ReebQuotientMap& p, SimplexId s, const GraphPoint& y) {
  const Cell& c = p.carriers[s];
  if (y.cell.is_node()) {
    if (c == y.cell) return true;
    if (!c.is_edge() || !p.target->is_face(y.cell, c)) return false;
  } else if (c != y.cell) {
    return false;
  }
  return min_image(p, s) <= y.value && y.value <= max_image(p, s);
}

VerifyResult fail(VerifyResult::Axiom a, std::string msg, std::optional<GraphPoint> w = std::nullopt,
                  std::optional<VertexId> v = std::nullopt) {
  VerifyResult r;
  r.violated = a;
  r.message = std::move(msg);
  r.witness = std::move(w);
  r.witness_vertex = v;
  return r;
}

}  // namespace

SimplexSet fiber_support(const ReebQuotientMap& p, const GraphPoint& y) {
  SimplexSet out;
  for (SimplexId s = 0; s < p.source->simplex_count(); ++s)
    if (meets_fiber(p, s, y)) out.push_back(s);
  return out;
}

std::vector<GraphPoint> fiber_witnesses(const ReebQuotientMap& p) {
  const ReebGraph& g = *p.target;
  std::vector<GraphPoint> out;
  for (int n = 0; n < g.node_count(); ++n) out.push_back({Cell::node(n), g.value(n)});
  std::vector<std::vector<Scalar>> cuts(g.edge_count());
  for (const auto& y : p.images)
    if (y.cell.is_edge()) cuts[y.cell.id].push_back(y.value);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto& c = cuts[e];
    c.push_back(g.lower_value(e));
    c.push_back(g.upper_value(e));
    c = sorted_unique(std::move(c));
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (i > 0) out.push_back({Cell::edge(e), c[i]});
      out.push_back({Cell::edge(e), (c[i] + c[i + 1]) / 2});
    }
  }
  return out;
}

VerifyResult verify_reeb_quotient(const ReebQuotientMap& p, const std::optional<PLFunction>& f) {
  using A = VerifyResult::Axiom;
  if (!p.source || !p.target) return fail(A::kStructure, "missing source or target");
  const SimplicialComplex& k = *p.source;
  const ReebGraph& g = *p.target;
  if (p.images.size() != static_cast<std::size_t>(k.vertex_count()))
    return fail(A::kStructure, "image count differs from vertex count");
  if (p.carriers.size() != static_cast<std::size_t>(k.simplex_count()))
    return fail(A::kStructure, "carrier count differs from simplex count");
  if (k.vertex_count() == 0) return fail(A::kStructure, "empty source");
  if (!g.connected()) return fail(A::kStructure, "target graph is not connected");

  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    const GraphPoint& y = p.images[v];
    const int limit = y.cell.is_node() ? g.node_count() : g.edge_count();
    if (y.cell.id < 0 || y.cell.id >= limit) return fail(A::kStructure, "vertex image out of range", std::nullopt, v);
    try {
      if (!(g.normalize(y.cell, y.value) == y)) return fail(A::kStructure, "vertex image not normalized", y, v);
    } catch (const std::invalid_argument&) {
      return fail(A::kStructure, "vertex image value outside its cell", y, v);
    }
    if (p.carriers[v] != y.cell) return fail(A::kStructure, "vertex carrier differs from its image cell", y, v);
  }
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    const Cell& c = p.carriers[s];
    const int limit = c.is_node() ? g.node_count() : g.edge_count();
    if (c.id < 0 || c.id >= limit) return fail(A::kStructure, "carrier out of range");
    for (SimplexId t : k.faces_of(s))
      if (!g.is_face(p.carriers[t], c)) return fail(A::kStructure, "face carrier not a face of the simplex carrier");
    if (c.is_edge()) {
      auto verts = k.vertices_of(s);
      bool proper = false;
      for (VertexId v : verts) proper = proper || p.images[v].cell != p.images[verts[0]].cell;
      if (!proper) proper = p.images[verts[0]].cell.is_edge();
      if (!proper) return fail(A::kStructure, "edge carrier of a simplex collapsed to a node");
    }
  }

  if (f) {
    if (f->size() != static_cast<std::size_t>(k.vertex_count()))
      return fail(A::kValueCommutation, "function size differs from vertex count");
    for (VertexId v = 0; v < k.vertex_count(); ++v)
      if ((*f)[v] != p.images[v].value) return fail(A::kValueCommutation, "value not preserved", p.images[v], v);
  }

  for (const GraphPoint& y : fiber_witnesses(p)) {
    auto parts = components_where(k, [&](SimplexId s) { return meets_fiber(p, s, y); });
    if (parts.empty()) return fail(A::kSurjectivity, "point not in the image", y);
    if (parts.size() > 1) return fail(A::kConnectedFibers, "fiber has " + std::to_string(parts.size()) + " components", y);
  }
  return {};
}

}  // namespace reebkit
