#include "reebkit/coupling.hpp"

#include <stdexcept>
#include <tuple>

#include "reebkit/reeb.hpp"

namespace reebkit {

VerifyResult verify_coupling(const Coupling& c) {
  if (!(c.p_f.source == c.space || *c.p_f.source == *c.space) || !(c.p_g.source == c.space || *c.p_g.source == *c.space)) {
    VerifyResult r;
    r.violated = VerifyResult::Axiom::kStructure;
    r.message = "coupling legs leave the space";
    return r;
  }
  if (auto r = verify_reeb_quotient(c.p_f); !r) {
    r.message = "p_f: " + r.message;
    return r;
  }
  auto r = verify_reeb_quotient(c.p_g);
  if (!r) r.message = "p_g: " + r.message;
  return r;
}

VertexId coupling_maximizer(const Coupling& c) {
  VertexId best = 0;
  Scalar worst = -1;
  for (VertexId v = 0; v < c.space->vertex_count(); ++v) {
    Scalar d = abs(Scalar(c.p_f.images[v].value - c.p_g.images[v].value));
    if (d > worst) {
      worst = d;
      best = v;
    }
  }
  return best;
}

Scalar coupling_bound(const Coupling& c, bool certify) {
  if (certify) {
    if (auto r = verify_coupling(c); !r) throw std::invalid_argument("uncertified coupling: " + r.message);
  }
  const VertexId v = coupling_maximizer(c);
  return abs(Scalar(c.p_f.images[v].value - c.p_g.images[v].value));
}

Coupling identity_coupling(const GraphPtr& g) {
  ReebQuotientMap p = chart_map(g);
  return {p.source, p, p};
}

Coupling product_coupling(const GraphPtr& rf, const GraphPtr& rg) {
  LimitCellComplex l = chart_product(rf, rg);
  return {l.triangulation.complex, l.pull(0, chart_map(rf)), l.pull(1, chart_map(rg))};
}

Scalar point_distance(const ReebGraph& g, const Scalar& c) {
  Scalar out = 0;
  for (const Scalar& v : g.node_values()) {
    Scalar d = abs(Scalar(v - c));
    if (d > out) out = d;
  }
  return out;
}

Coupling compose_couplings(const Coupling& c1, const Coupling& c2) {
  if (!(c1.rg() == c2.rf() || *c1.rg() == *c2.rf())) throw std::invalid_argument("couplings do not share a graph");
  LimitCellComplex l = pullback(c1.p_g, c2.p_f);
  return {l.triangulation.complex, l.pull(0, c1.p_f), l.pull(1, c2.p_g)};
}

Coupling reeb_coupling(const ComplexPtr& k, const PLFunction& f, const PLFunction& g) {
  ReebResult rf = compute_reeb(k, f);
  ReebResult rg = compute_reeb(k, g);
  const Subdivision& first = rf.subdivision;
  Subdivision second = subdivide_at_levels(first.complex, first.pull(g), rg.levels);
  Subdivision both = compose(first, second);
  Coupling c;
  c.space = both.complex;
  c.p_f = refine(rf.map, second);
  c.p_g = realize_map(both, g, rg.graph, [&rg](SimplexId s, const Scalar& t) { return rg.locate(s, t); });
  return c;
}

void BoundRegistry::record(const std::string& a, const std::string& b, Kind kind, const Scalar& bound,
                           std::string witness) {
  log_.push_back({a, b, kind, bound, witness});
  std::vector<Kind> kinds{kind};
  if (kind == Kind::kCoupling) kinds = {Kind::kCoupling, Kind::kPLZigzag};
  if (kind == Kind::kGraphZigzag) kinds = {Kind::kGraphZigzag, Kind::kPLZigzag};
  for (Kind k : kinds) {
    for (const auto& key : {std::tuple(a, b, k), std::tuple(b, a, k)}) {
      auto it = best_.find(key);
      if (it == best_.end() || bound < it->second) best_[key] = bound;
    }
  }
}

std::optional<Scalar> BoundRegistry::best(const std::string& a, const std::string& b, Kind kind) const {
  auto it = best_.find({a, b, kind});
  if (it == best_.end()) return std::nullopt;
  return it->second;
}

}  // namespace reebkit
