#include "reebkit/subdivision.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "reebkit/product_cells.hpp"

namespace reebkit {

Subdivision Subdivision::identity(ComplexPtr k) {
  Subdivision s;
  s.base = k;
  s.complex = k;
  s.owner.resize(k->simplex_count());
  for (SimplexId i = 0; i < k->simplex_count(); ++i) s.owner[i] = i;
  s.vertex_position.resize(k->vertex_count());
  for (VertexId v = 0; v < k->vertex_count(); ++v) s.vertex_position[v] = ComplexPoint{v, {Scalar(1)}};
  return s;
}

PLFunction Subdivision::pull(const PLFunction& f) const {
  std::vector<Scalar> out;
  out.reserve(vertex_position.size());
  for (const auto& p : vertex_position) out.push_back(f.evaluate(*base, p));
  return PLFunction(std::move(out));
}

ComplexPoint Subdivision::push(const ComplexPoint& p) const {
  const SimplexId host = owner[p.simplex];
  auto host_verts = base->vertices_of(host);
  std::vector<Scalar> bary(host_verts.size());
  auto verts = complex->vertices_of(p.simplex);
  for (std::size_t j = 0; j < verts.size(); ++j) {
    const ComplexPoint& q = vertex_position[verts[j]];
    auto qv = base->vertices_of(q.simplex);
    for (std::size_t a = 0; a < qv.size(); ++a) {
      auto it = std::lower_bound(host_verts.begin(), host_verts.end(), qv[a]);
      bary[it - host_verts.begin()] += p.barycentric[j] * q.barycentric[a];
    }
  }
  return ComplexPoint{host, std::move(bary)};
}

Subdivision subdivide_at_levels(ComplexPtr k, const PLFunction& f, const std::vector<Scalar>& levels) {
  if (f.size() != static_cast<std::size_t>(k->vertex_count()))
    throw std::invalid_argument("function does not match complex");
  const auto ranges = f.ranges(*k);
  std::vector<Scalar> cuts;
  for (const Scalar& t : levels) {
    for (const auto& r : ranges) {
      if (r.lo < t && t < r.hi) {
        cuts.push_back(t);
        break;
      }
    }
  }
  if (cuts.empty()) return Subdivision::identity(k);

  cuts.push_back(f.min());
  cuts.push_back(f.max());
  cuts = sorted_unique(std::move(cuts));
  std::vector<std::vector<VertexId>> path;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    path.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  auto line = std::make_shared<SimplicialComplex>(
      SimplicialComplex::from_simplices(static_cast<int>(cuts.size()), std::move(path)));

  FactorSpec a{k};
  a.right = f;
  FactorSpec b{line};
  b.left = PLFunction(cuts);
  auto cells = ProductCellComplex::build({std::move(a), std::move(b)});
  auto tri = cells.triangulate();

  Subdivision s;
  s.base = k;
  s.complex = tri.complex;
  s.owner.reserve(tri.owner.size());
  for (const auto& own : tri.owner) s.owner.push_back(own[0]);
  s.vertex_position.reserve(tri.vertex_points.size());
  for (const auto& pts : tri.vertex_points) s.vertex_position.push_back(pts[0]);
  for (VertexId v = 0; v < k->vertex_count(); ++v)
    if (s.vertex_position[v].simplex != v) throw std::logic_error("subdivision moved a base vertex");
  return s;
}

Subdivision compose(const Subdivision& inner, const Subdivision& outer) {
  if (outer.base != inner.complex && !(*outer.base == *inner.complex))
    throw std::invalid_argument("subdivisions do not chain");
  Subdivision s;
  s.base = inner.base;
  s.complex = outer.complex;
  s.owner.reserve(outer.owner.size());
  for (SimplexId o : outer.owner) s.owner.push_back(inner.owner[o]);
  s.vertex_position.reserve(outer.vertex_position.size());
  for (const auto& p : outer.vertex_position) s.vertex_position.push_back(inner.push(p));
  return s;
}

}  // namespace reebkit
