#include "reebkit/zigzag.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace reebkit {

namespace {

bool same_graph(const GraphPtr& a, const GraphPtr& b) { return a == b || (a && b && *a == *b); }

VerifyResult shape_error(std::string msg) {
  VerifyResult r;
  r.violated = VerifyResult::Axiom::kStructure;
  r.message = std::move(msg);
  return r;
}

std::vector<std::pair<ReebQuotientMap, ReebQuotientMap>> chain_of(const ZigzagDiagram& z) { return z.legs; }

// On every simplex the two leg values move along a common line, so each
// simplex has the same image pair as one of its edges.
bool legs_collinear(const ReebQuotientMap& a, const ReebQuotientMap& b) {
  const auto& k = *a.source;
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    auto verts = k.vertices_of(s);
    if (verts.size() < 3) continue;
    std::optional<std::pair<Scalar, Scalar>> dir;
    for (std::size_t i = 1; i < verts.size(); ++i) {
      Scalar da = a.images[verts[i]].value - a.images[verts[0]].value;
      Scalar db = b.images[verts[i]].value - b.images[verts[0]].value;
      if (da == 0 && db == 0) continue;
      if (!dir) {
        dir.emplace(da, db);
      } else if (Scalar(da * dir->second - db * dir->first) != 0) {
        return false;
      }
    }
  }
  return true;
}

Scalar lerp(const Scalar& x0, const Scalar& x1, const Scalar& t) { return x0 + t * (x1 - x0); }

// A vertex or edge of a space, with both leg images along it.
struct Piece {
  SimplexId simplex = 0;
  Cell ca, cb;
  Scalar a0, a1, b0, b1;

  ComplexPoint point(const SimplicialComplex& k, const Scalar& t) const {
    if (k.dimension_of(simplex) == 0) return {simplex, {Scalar(1)}};
    return reduce_point(k, simplex, {1 - t, t});
  }
};

std::vector<Piece> pieces_of(const ReebQuotientMap& a, const ReebQuotientMap& b) {
  const auto& k = *a.source;
  std::vector<Piece> out;
  for (SimplexId s = 0; s < k.simplex_count() && k.dimension_of(s) <= 1; ++s) {
    auto vs = k.vertices_of(s);
    const VertexId u = vs.front(), w = vs.back();
    out.push_back({s, a.carriers[s], b.carriers[s], a.images[u].value, a.images[w].value, b.images[u].value,
                   b.images[w].value});
  }
  return out;
}

// How a lower-envelope entry is realized: started at this graph, or pushed
// through a piece from a parent entry. A fixed t pins the piece parameter.
struct Prov {
  int stage = 0;
  int piece = -1;
  int parent = -1;
  std::optional<Scalar> t;
};

// Closed linear piece of a function on one graph edge, in value coordinates.
struct Seg {
  Scalar v0, v1, m0, m1;
  int prov = 0;

  Scalar at(const Scalar& v) const { return v1 == v0 ? m0 : Scalar(m0 + (v - v0) * (m1 - m0) / (v1 - v0)); }
  bool covers(const Scalar& v) const { return v0 <= v && v <= v1; }
};

struct NodeEntry {
  Scalar m;
  int prov = 0;
};

// Lower envelope over a graph of the running prefix minimum (of sign * value).
struct Envelope {
  std::vector<std::vector<Seg>> edges;
  std::vector<NodeEntry> nodes;
};

struct Entry {
  Scalar m;
  int prov = -1;
};

Entry evaluate(const Envelope& env, const GraphPoint& y) {
  if (y.cell.is_node()) return {env.nodes[y.cell.id].m, env.nodes[y.cell.id].prov};
  Entry best;
  for (const Seg& s : env.edges[y.cell.id]) {
    if (!s.covers(y.value)) continue;
    Scalar m = s.at(y.value);
    if (best.prov < 0 || m < best.m) best = {m, s.prov};
  }
  if (best.prov < 0) throw std::logic_error("envelope has a gap");
  return best;
}

void compress(std::vector<Seg>& segs) {
  if (segs.size() < 2) return;
  std::vector<Scalar> bps;
  for (const Seg& s : segs) {
    bps.push_back(s.v0);
    bps.push_back(s.v1);
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Seg& p = segs[i];
    if (p.v0 == p.v1) continue;
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Seg& q = segs[j];
      if (q.v0 == q.v1) continue;
      const Scalar lo = std::max(p.v0, q.v0), hi = std::min(p.v1, q.v1);
      if (!(lo < hi)) continue;
      const Scalar dlo = p.at(lo) - q.at(lo), dhi = p.at(hi) - q.at(hi);
      if ((dlo < 0 && dhi > 0) || (dlo > 0 && dhi < 0)) bps.push_back(lo + (hi - lo) * dlo / (dlo - dhi));
    }
  }
  bps = sorted_unique(std::move(bps));
  std::vector<Seg> out;
  std::vector<std::optional<Seg>> pieces(bps.size());
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Scalar mid = (bps[i] + bps[i + 1]) / 2;
    const Seg* best = nullptr;
    Scalar bm;
    for (const Seg& s : segs) {
      if (s.v0 == s.v1 || !(s.v0 <= bps[i] && bps[i + 1] <= s.v1)) continue;
      Scalar m = s.at(mid);
      if (!best || m < bm) best = &s, bm = m;
    }
    if (best) pieces[i] = Seg{bps[i], bps[i + 1], best->at(bps[i]), best->at(bps[i + 1]), best->prov};
  }
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const Scalar& p = bps[i];
    Entry point;
    for (const Seg& s : segs) {
      if (!s.covers(p)) continue;
      Scalar m = s.at(p);
      if (point.prov < 0 || m < point.m) point = {m, s.prov};
    }
    std::optional<Scalar> side;
    if (i > 0 && pieces[i - 1]) side = pieces[i - 1]->m1;
    if (i + 1 < bps.size() && pieces[i] && (!side || pieces[i]->m0 < *side)) side = pieces[i]->m0;
    if (!side || point.m < *side) out.push_back({p, p, point.m, point.m, point.prov});
    if (i + 1 < bps.size() && pieces[i]) out.push_back(*pieces[i]);
  }
  segs = std::move(out);
}

struct Contribution {
  Scalar t0, t1, m0, m1;
  int prov = 0;
};

class Sweep {
 public:
  Sweep(const ZigzagDiagram& z, int sign) : z_(z), sign_(sign) {
    for (const auto& [a, b] : z.legs) pieces_.push_back(pieces_of(a, b));
  }

  struct Best {
    Scalar spread;
    int stage = -1;
    GraphPoint y;
    int prov = -1;
  };

  Best run() {
    Best best;
    Envelope env = start(0);
    consider(env, 0, best);
    for (int k = 0; k + 1 < static_cast<int>(z_.graphs.size()); ++k) {
      env = push(env, k);
      consider(env, k + 1, best);
    }
    return best;
  }

  // Walks provenance back to the starting stage; fills x and y on the way.
  int backtrack(const Best& b, std::vector<std::optional<ComplexPoint>>& x, std::vector<GraphPoint>& y) const {
    int stage = b.stage;
    GraphPoint cur = b.y;
    int prov = b.prov;
    y[stage] = cur;
    while (provs_[prov].piece >= 0) {
      const Prov& p = provs_[prov];
      const Piece& r = pieces_[p.stage][p.piece];
      const Scalar t = p.t ? *p.t : Scalar((cur.value - r.b0) / (r.b1 - r.b0));
      x[p.stage] = r.point(*z_.legs[p.stage].first.source, t);
      cur = z_.graphs[p.stage]->normalize(r.ca, lerp(r.a0, r.a1, t));
      y[p.stage] = cur;
      prov = p.parent;
      stage = p.stage;
    }
    return stage;
  }

 private:
  int add_prov(Prov p) {
    provs_.push_back(std::move(p));
    return static_cast<int>(provs_.size()) - 1;
  }

  Envelope start(int k) {
    const ReebGraph& g = *z_.graphs[k];
    const int p = add_prov({k, -1, -1, std::nullopt});
    Envelope env;
    for (int n = 0; n < g.node_count(); ++n) env.nodes.push_back({sign_ * g.value(n), p});
    env.edges.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      const Scalar &lo = g.lower_value(e), &hi = g.upper_value(e);
      env.edges[e].push_back({lo, hi, sign_ * lo, sign_ * hi, p});
    }
    return env;
  }

  void consider(const Envelope& env, int k, Best& best) const {
    const ReebGraph& g = *z_.graphs[k];
    auto offer = [&](const GraphPoint& y, const Scalar& m, int prov) {
      Scalar spread = sign_ * y.value - m;
      if (best.stage < 0 || spread > best.spread) best = {spread, k, y, prov};
    };
    for (int n = 0; n < g.node_count(); ++n) offer({Cell::node(n), g.value(n)}, env.nodes[n].m, env.nodes[n].prov);
    for (int e = 0; e < g.edge_count(); ++e) {
      for (const Seg& s : env.edges[e]) {
        offer(g.normalize(Cell::edge(e), s.v0), s.m0, s.prov);
        offer(g.normalize(Cell::edge(e), s.v1), s.m1, s.prov);
      }
    }
  }

  std::vector<Contribution> gather(const Envelope& env, int k, const Piece& r) const {
    const ReebGraph& g = *z_.graphs[k];
    std::vector<Contribution> out;
    if (r.ca.is_node() || r.a0 == r.a1) {
      Entry e = evaluate(env, g.normalize(r.ca, r.a0));
      out.push_back({0, 1, e.m, e.m, e.prov});
      return out;
    }
    for (const Scalar& t : {Scalar(0), Scalar(1)}) {
      Entry e = evaluate(env, g.normalize(r.ca, t == 0 ? r.a0 : r.a1));
      out.push_back({t, t, e.m, e.m, e.prov});
    }
    const Scalar lo = std::min(r.a0, r.a1), hi = std::max(r.a0, r.a1);
    for (const Seg& s : env.edges[r.ca.id]) {
      const Scalar v0 = std::max(s.v0, lo), v1 = std::min(s.v1, hi);
      if (v1 < v0) continue;
      Scalar t0 = (v0 - r.a0) / (r.a1 - r.a0), t1 = (v1 - r.a0) / (r.a1 - r.a0);
      Scalar m0 = s.at(v0), m1 = s.at(v1);
      if (t1 < t0) std::swap(t0, t1), std::swap(m0, m1);
      out.push_back({t0, t1, m0, m1, s.prov});
    }
    return out;
  }

  void deposit(Envelope& env, const GraphPoint& y, const Scalar& m, int prov) {
    if (y.cell.is_node()) {
      if (m < env.nodes[y.cell.id].m) env.nodes[y.cell.id] = {m, prov};
    } else {
      env.edges[y.cell.id].push_back({y.value, y.value, m, m, prov});
    }
  }

  Envelope push(const Envelope& env, int k) {
    const ReebGraph& h = *z_.graphs[k + 1];
    Envelope next = start(k + 1);
    for (int i = 0; i < static_cast<int>(pieces_[k].size()); ++i) {
      const Piece& r = pieces_[k][i];
      auto contribs = gather(env, k, r);
      if (r.cb.is_node() || r.b0 == r.b1) {
        const Contribution* best = nullptr;
        Scalar bm, bt;
        for (const auto& c : contribs) {
          for (int side = 0; side < 2; ++side) {
            const Scalar& m = side ? c.m1 : c.m0;
            if (!best || m < bm) best = &c, bm = m, bt = side ? c.t1 : c.t0;
          }
        }
        deposit(next, h.normalize(r.cb, r.b0), bm, add_prov({k, i, best->prov, bt}));
        continue;
      }
      for (const auto& c : contribs) {
        if (c.t0 == c.t1) {
          deposit(next, h.normalize(r.cb, lerp(r.b0, r.b1, c.t0)), c.m0, add_prov({k, i, c.prov, c.t0}));
          continue;
        }
        Scalar v0 = lerp(r.b0, r.b1, c.t0), v1 = lerp(r.b0, r.b1, c.t1);
        Scalar m0 = c.m0, m1 = c.m1;
        if (v1 < v0) std::swap(v0, v1), std::swap(m0, m1);
        next.edges[r.cb.id].push_back({v0, v1, m0, m1, add_prov({k, i, c.prov, std::nullopt})});
      }
    }
    for (auto& segs : next.edges) compress(segs);
    return next;
  }

  const ZigzagDiagram& z_;
  int sign_;
  std::vector<std::vector<Piece>> pieces_;
  std::vector<Prov> provs_;
};

ComplexPoint preimage(const ReebQuotientMap& leg, const GraphPoint& y) {
  const auto& k = *leg.source;
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    if (leg.images[v] == y) return {v, {Scalar(1)}};
  }
  if (y.cell.is_edge()) {
    for (SimplexId e = k.vertex_count(); e < k.simplex_count() && k.dimension_of(e) == 1; ++e) {
      if (leg.carriers[e] != y.cell) continue;
      auto vs = k.vertices_of(e);
      const Scalar &a = leg.images[vs[0]].value, &b = leg.images[vs[1]].value;
      if (a == b) continue;
      const Scalar t = (y.value - a) / (b - a);
      if (0 < t && t < 1) return reduce_point(k, e, {1 - t, t});
    }
  }
  throw std::logic_error("leg misses a graph point");
}

ZigzagCost sweep_cost(const ZigzagDiagram& z) {
  const int n = static_cast<int>(z.legs.size());
  std::optional<Sweep::Best> best;
  std::optional<Sweep> winner;
  for (int sign : {1, -1}) {
    Sweep s(z, sign);
    auto b = s.run();
    if (!best || b.spread > best->spread) best = b, winner.emplace(std::move(s));
  }
  std::vector<std::optional<ComplexPoint>> x(n);
  std::vector<GraphPoint> y(n + 1);
  const int first = winner->backtrack(*best, x, y);
  for (int k = first - 1; k >= 0; --k) {
    x[k] = preimage(z.legs[k].second, y[k + 1]);
    y[k] = z.legs[k].first.evaluate(*x[k]);
  }
  for (int k = best->stage; k < n; ++k) {
    x[k] = preimage(z.legs[k].first, y[k]);
    y[k + 1] = z.legs[k].second.evaluate(*x[k]);
  }
  ZigzagCost out;
  out.cost = best->spread;
  for (const auto& p : x) out.maximizer.push_back(*p);
  for (const auto& p : y) out.values.push_back(p.value);
  auto [lo, hi] = std::minmax_element(out.values.begin(), out.values.end());
  if (Scalar(*hi - *lo) != out.cost) throw std::logic_error("sweep witness does not attain the cost");
  return out;
}

}  // namespace

VerifyResult verify_zigzag(const ZigzagDiagram& z) {
  if (z.legs.empty() || z.graphs.size() != z.legs.size() + 1) return shape_error("zigzag needs n spaces and n+1 graphs");
  for (std::size_t i = 0; i < z.legs.size(); ++i) {
    const auto& [left, right] = z.legs[i];
    if (!same_graph(left.target, z.graphs[i]) || !same_graph(right.target, z.graphs[i + 1]))
      return shape_error("leg " + std::to_string(i) + " lands in the wrong graph");
    if (!(left.source == right.source || *left.source == *right.source))
      return shape_error("legs of space " + std::to_string(i) + " differ in source");
    for (const auto* leg : {&left, &right}) {
      if (auto r = verify_reeb_quotient(*leg); !r) {
        r.message = "space " + std::to_string(i) + ": " + r.message;
        return r;
      }
    }
  }
  return {};
}

ZigzagDiagram zigzag_from_coupling(const Coupling& c) { return {{c.rf(), c.rg()}, {{c.p_f, c.p_g}}}; }

ZigzagDiagram identity_zigzag(const GraphPtr& g, int n) {
  if (n < 1) throw std::invalid_argument("zigzag needs a space");
  ZigzagDiagram z;
  ReebQuotientMap id = chart_map(g);
  z.graphs.assign(n + 1, g);
  z.legs.assign(n, {id, id});
  return z;
}

LimitCellComplex zigzag_limit(const ZigzagDiagram& z) {
  auto cells = std::make_shared<ProductCellComplex>(chain_limit_cells(chain_of(z)));
  LimitCellComplex out{cells, cells->triangulate()};
  return out;
}

ZigzagCost zigzag_cost_exhaustive(const ZigzagDiagram& z) {
  const ProductCellComplex cells = chain_limit_cells(chain_of(z));
  if (cells.vertex_count() == 0) throw std::invalid_argument("empty limit");
  const int n = cells.factor_count();
  ZigzagCost out;
  bool first = true;
  for (int v = 0; v < cells.vertex_count(); ++v) {
    const auto& pt = cells.vertex_point(v);
    std::vector<Scalar> values;
    values.push_back(z.legs[0].first.evaluate(pt[0]).value);
    for (int i = 0; i < n; ++i) values.push_back(z.legs[i].second.evaluate(pt[i]).value);
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    Scalar spread = *hi - *lo;
    if (first || spread > out.cost) {
      first = false;
      out.cost = spread;
      out.maximizer = pt;
      out.values = std::move(values);
    }
  }
  return out;
}

ZigzagCost zigzag_cost(const ZigzagDiagram& z) {
  if (z.legs.empty()) throw std::invalid_argument("empty limit");
  for (const auto& [a, b] : z.legs) {
    if (!legs_collinear(a, b)) return zigzag_cost_exhaustive(z);
  }
  return sweep_cost(z);
}

}  // namespace reebkit
