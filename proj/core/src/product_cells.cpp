#include "reebkit/product_cells.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace reebkit {

namespace {

// Unique solution of a small dense system; throws if singular or inconsistent.
std::vector<Scalar> solve_unique(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b, std::size_t unknowns) {
  const std::size_t rows = a.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Scalar factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < unknowns; ++j) a[i][j] -= factor * a[r][j];
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) throw std::logic_error("product cell: inconsistent vertex system");
  if (r != unknowns) throw std::logic_error("product cell: vertex system is not uniquely solvable");
  std::vector<Scalar> x(unknowns);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

struct Span2 {
  int rank = 0;
  bool in_varies = false;
  bool out_varies = false;
  bool vertical = false;  // contains a direction with in == 0, out != 0
};

}  // namespace

struct ProductCellComplex::OpenSet {
  enum class Kind { kEmpty, kPoint, kInterval, kAll };
  Kind kind = Kind::kAll;
  Scalar lo;
  Scalar hi;

  static OpenSet all() { return {}; }
  static OpenSet empty() { return {Kind::kEmpty, 0, 0}; }
  static OpenSet relint(const Scalar& lo, const Scalar& hi) {
    return lo == hi ? OpenSet{Kind::kPoint, lo, hi} : OpenSet{Kind::kInterval, lo, hi};
  }
  bool bounded() const { return kind == Kind::kPoint || kind == Kind::kInterval; }

  friend bool meets(const OpenSet& a, const OpenSet& b) {
    if (a.kind == Kind::kEmpty || b.kind == Kind::kEmpty) return false;
    if (a.kind == Kind::kAll || b.kind == Kind::kAll) return true;
    if (a.kind == Kind::kPoint && b.kind == Kind::kPoint) return a.lo == b.lo;
    if (a.kind == Kind::kPoint) return b.lo < a.lo && a.lo < b.hi;
    if (b.kind == Kind::kPoint) return a.lo < b.lo && b.lo < a.hi;
    return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
  }

  friend OpenSet intersect(const OpenSet& a, const OpenSet& b) {
    if (!meets(a, b)) return empty();
    if (a.kind == Kind::kAll) return b;
    if (b.kind == Kind::kAll) return a;
    if (a.kind == Kind::kPoint) return a;
    if (b.kind == Kind::kPoint) return b;
    return relint(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
  }
};

struct ProductCellComplex::DfsState {
  std::vector<SimplexId> key;
  std::vector<OpenSet> forward;  // feasible right-link values after each factor
  int link_dim = 0;              // dimension of the image-space solution set
  int out_free = 0;              // whether the latest right value still varies
  int fiber_dim = 0;             // sum of kernel dimensions of the factor maps
};

namespace {

using Pts = std::vector<std::pair<Scalar, Scalar>>;

Span2 span_of(const Pts& pts) {
  Span2 s;
  std::vector<std::pair<Scalar, Scalar>> dirs;
  for (std::size_t j = 1; j < pts.size(); ++j) {
    Scalar di = pts[j].first - pts[0].first;
    Scalar dout = pts[j].second - pts[0].second;
    if (di != 0) s.in_varies = true;
    if (dout != 0) s.out_varies = true;
    if (di != 0 || dout != 0) dirs.emplace_back(di, dout);
  }
  if (dirs.empty()) return s;
  s.rank = 1;
  for (std::size_t j = 1; j < dirs.size(); ++j) {
    if (dirs[0].first * dirs[j].second - dirs[0].second * dirs[j].first != 0) {
      s.rank = 2;
      break;
    }
  }
  s.vertical = s.rank == 2 || (!s.in_varies && s.out_varies);
  return s;
}

// Range of the second coordinate over conv(pts) ∩ {lo <= first <= hi}.
std::pair<Scalar, Scalar> clipped_out_range(const Pts& pts, const Scalar& lo, const Scalar& hi) {
  std::vector<Scalar> outs;
  for (const auto& p : pts)
    if (lo <= p.first && p.first <= hi) outs.push_back(p.second);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const auto& p = pts[a];
      const auto& q = pts[b];
      if (p.first == q.first) continue;
      for (const Scalar* s : {&lo, &hi}) {
        const Scalar& x = *s;
        bool between = (p.first < x && x < q.first) || (q.first < x && x < p.first);
        if (!between) continue;
        outs.push_back(p.second + (x - p.first) * (q.second - p.second) / (q.first - p.first));
      }
    }
  }
  if (outs.empty()) throw std::logic_error("product cell: empty clip");
  auto [mn, mx] = std::minmax_element(outs.begin(), outs.end());
  return {*mn, *mx};
}

std::pair<Scalar, Scalar> first_range(const Pts& pts) {
  Scalar lo = pts[0].first, hi = pts[0].first;
  for (const auto& p : pts) {
    if (p.first < lo) lo = p.first;
    if (p.first > hi) hi = p.first;
  }
  return {lo, hi};
}

Pts swapped(const Pts& pts) {
  Pts out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p.second, p.first);
  return out;
}

}  // namespace

bool ProductCellComplex::link_active(int i) const {
  return i >= 0 && i + 1 < factor_count() && factors_[i].right.has_value();
}

std::vector<ProductCellComplex::Pt> ProductCellComplex::points_of(int factor, SimplexId s) const {
  const FactorSpec& f = factors_[factor];
  auto verts = f.complex->vertices_of(s);
  std::vector<Pt> pts;
  pts.reserve(verts.size());
  const bool use_in = link_active(factor - 1);
  const bool use_out = link_active(factor);
  for (VertexId v : verts) pts.push_back({use_in ? (*f.left)[v] : Scalar(0), use_out ? (*f.right)[v] : Scalar(0)});
  return pts;
}

template <typename Visit>
void ProductCellComplex::enumerate(const std::vector<std::vector<SimplexId>>* restrict_to, Visit&& visit) const {
  const int m = factor_count();
  DfsState state;
  state.key.resize(m);
  state.forward.resize(m);

  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      visit(state);
      return;
    }
    const bool linked = link_active(i - 1);
    const OpenSet incoming = linked ? state.forward[i - 1] : OpenSet::all();
    const FactorSpec& f = factors_[i];
    const bool carriers = linked && f.left_carrier.has_value();
    const int want = carriers ? (*factors_[i - 1].right_carrier)[state.key[i - 1]] : -1;

    auto try_simplex = [&](SimplexId s) {
      if (carriers && (*f.left_carrier)[s] != want) return;
      std::vector<Pt> raw = points_of(i, s);
      Pts pts;
      pts.reserve(raw.size());
      for (auto& p : raw) pts.emplace_back(std::move(p.in), std::move(p.out));

      if (linked) {
        auto [lo, hi] = first_range(pts);
        if (!meets(OpenSet::relint(lo, hi), incoming)) return;
      }
      OpenSet outgoing = OpenSet::all();
      if (link_active(i)) {
        if (incoming.bounded()) {
          auto [lo, hi] = clipped_out_range(pts, incoming.lo, incoming.hi);
          outgoing = OpenSet::relint(lo, hi);
        } else {
          auto [lo, hi] = first_range(swapped(pts));
          outgoing = OpenSet::relint(lo, hi);
        }
      }

      Span2 span = span_of(pts);
      const int k = static_cast<int>(pts.size()) - 1;
      const int saved_link = state.link_dim, saved_free = state.out_free, saved_fiber = state.fiber_dim;
      if (!linked) {
        state.link_dim += span.rank;
        state.out_free = span.out_varies ? 1 : 0;
      } else {
        const int rank = (state.out_free || span.in_varies) ? 1 : 0;
        state.link_dim += span.rank - rank;
        if (!span.out_varies) state.out_free = 0;
        else if (span.rank == 2 || span.vertical) state.out_free = 1;
        // otherwise a slanted line: out varies exactly when the incoming value does
      }
      state.fiber_dim += k - span.rank;
      state.key[i] = s;
      state.forward[i] = outgoing;
      rec(i + 1);
      state.link_dim = saved_link;
      state.out_free = saved_free;
      state.fiber_dim = saved_fiber;
    };

    if (restrict_to) {
      for (SimplexId s : (*restrict_to)[i]) try_simplex(s);
      return;
    }
    auto it = candidates_[i].find(want);
    if (it == candidates_[i].end()) return;
    for (SimplexId s : it->second) {
      if (linked && incoming.bounded()) {
        const ValueRange& r = left_ranges_[i][s];
        if (r.lo > incoming.hi) break;
        if (r.hi < incoming.lo) continue;
      }
      try_simplex(s);
    }
  };
  rec(0);
}

std::vector<ComplexPoint> ProductCellComplex::solve_vertex(const std::vector<SimplexId>& key,
                                                           const std::vector<OpenSet>& forward) const {
  const int m = factor_count();
  // Backward sets: feasible left-link values of factor i given the suffix.
  std::vector<OpenSet> backward(m, OpenSet::all());
  for (int i = m - 1; i >= 1; --i) {
    if (!link_active(i - 1)) continue;
    std::vector<Pt> raw = points_of(i, key[i]);
    Pts pts;
    for (auto& p : raw) pts.emplace_back(p.in, p.out);
    if (link_active(i) && backward[i + 1].bounded()) {
      // backward[i + 1] constrains this factor's right value.
      auto [lo, hi] = clipped_out_range(swapped(pts), backward[i + 1].lo, backward[i + 1].hi);
      backward[i] = OpenSet::relint(lo, hi);
    } else {
      auto [lo, hi] = first_range(pts);
      backward[i] = OpenSet::relint(lo, hi);
    }
  }
  std::vector<Scalar> link_value(std::max(m - 1, 0));
  for (int i = 0; i + 1 < m; ++i) {
    if (!link_active(i)) continue;
    OpenSet t = intersect(forward[i], backward[i + 1]);
    if (t.kind != OpenSet::Kind::kPoint) throw std::logic_error("product cell: vertex link value not pinned");
    link_value[i] = t.lo;
  }

  std::vector<ComplexPoint> out(m);
  for (int i = 0; i < m; ++i) {
    const FactorSpec& f = factors_[i];
    auto verts = f.complex->vertices_of(key[i]);
    const std::size_t n = verts.size();
    std::vector<std::vector<Scalar>> a;
    std::vector<Scalar> b;
    a.emplace_back(n, Scalar(1));
    b.emplace_back(1);
    if (link_active(i - 1)) {
      std::vector<Scalar> row;
      for (VertexId v : verts) row.push_back((*f.left)[v]);
      a.push_back(std::move(row));
      b.push_back(link_value[i - 1]);
    }
    if (link_active(i)) {
      std::vector<Scalar> row;
      for (VertexId v : verts) row.push_back((*f.right)[v]);
      a.push_back(std::move(row));
      b.push_back(link_value[i]);
    }
    std::vector<Scalar> lambda = solve_unique(std::move(a), std::move(b), n);
    for (const Scalar& l : lambda)
      if (l <= 0) throw std::logic_error("product cell: vertex outside its open cell");
    out[i] = ComplexPoint{key[i], std::move(lambda)};
  }
  return out;
}

ProductCellComplex ProductCellComplex::build(std::vector<FactorSpec> factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  const int m = static_cast<int>(factors.size());
  for (int i = 0; i < m; ++i) {
    const FactorSpec& f = factors[i];
    if (!f.complex) throw std::invalid_argument("factor without complex");
    const auto nv = static_cast<std::size_t>(f.complex->vertex_count());
    const auto ns = static_cast<std::size_t>(f.complex->simplex_count());
    if (f.left && f.left->size() != nv) throw std::invalid_argument("left values size mismatch");
    if (f.right && f.right->size() != nv) throw std::invalid_argument("right values size mismatch");
    if (f.left_carrier && f.left_carrier->size() != ns) throw std::invalid_argument("left carrier size mismatch");
    if (f.right_carrier && f.right_carrier->size() != ns) throw std::invalid_argument("right carrier size mismatch");
    if (f.left_carrier && !f.left) throw std::invalid_argument("carrier without values");
    if (f.right_carrier && !f.right) throw std::invalid_argument("carrier without values");
  }
  if (factors.front().left || factors.back().right) throw std::invalid_argument("dangling link at chain end");
  for (int i = 0; i + 1 < m; ++i) {
    if (factors[i].right.has_value() != factors[i + 1].left.has_value())
      throw std::invalid_argument("one-sided link between factors");
    if (factors[i].right_carrier.has_value() != factors[i + 1].left_carrier.has_value())
      throw std::invalid_argument("one-sided carrier link between factors");
  }

  ProductCellComplex pc;
  pc.factors_ = std::move(factors);
  pc.candidates_.resize(m);
  pc.left_ranges_.resize(m);
  for (int i = 0; i < m; ++i) {
    const FactorSpec& f = pc.factors_[i];
    const SimplicialComplex& k = *f.complex;
    std::vector<SimplexId> order(k.simplex_count());
    for (SimplexId s = 0; s < k.simplex_count(); ++s) order[s] = s;
    if (pc.link_active(i - 1)) {
      pc.left_ranges_[i] = f.left->ranges(k);
      const auto& r = pc.left_ranges_[i];
      std::stable_sort(order.begin(), order.end(), [&](SimplexId a, SimplexId b) { return r[a].lo < r[b].lo; });
    }
    for (SimplexId s : order) {
      int key = (pc.link_active(i - 1) && f.left_carrier) ? (*f.left_carrier)[s] : -1;
      pc.candidates_[i][key].push_back(s);
    }
  }

  pc.enumerate(nullptr, [&](const DfsState& st) {
    const int index = static_cast<int>(pc.cells_.size());
    const int dim = st.link_dim + st.fiber_dim;
    pc.cells_.push_back({st.key, dim});
    pc.cell_index_.emplace(st.key, index);
    if (dim == 0) {
      pc.cell_to_vertex_.emplace(index, static_cast<int>(pc.vertex_cells_.size()));
      pc.vertex_cells_.push_back(index);
      pc.vertex_points_.push_back(pc.solve_vertex(st.key, st.forward));
    }
  });
  return pc;
}

std::optional<int> ProductCellComplex::find_cell(const std::vector<SimplexId>& key) const {
  auto it = cell_index_.find(key);
  if (it == cell_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ProductCellComplex::vertex_of_cell(int cell) const {
  auto it = cell_to_vertex_.find(cell);
  if (it == cell_to_vertex_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> ProductCellComplex::faces_of(int cell) const {
  const auto& key = cells_[cell].key;
  std::vector<std::vector<SimplexId>> restrict(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    auto faces = factors_[i].complex->faces_of(key[i]);
    restrict[i].assign(faces.begin(), faces.end());
  }
  std::vector<int> out;
  enumerate(&restrict, [&](const DfsState& st) {
    auto id = find_cell(st.key);
    if (!id) throw std::logic_error("product cell: face missing from enumeration");
    out.push_back(*id);
  });
  std::sort(out.begin(), out.end());
  return out;
}

int ProductCellComplex::dimension() const {
  int d = -1;
  for (const auto& c : cells_) d = std::max(d, c.dimension);
  return d;
}

ProductTriangulation ProductCellComplex::triangulate() const {
  const int n = static_cast<int>(cells_.size());
  std::vector<std::vector<int>> faces(n);
  std::vector<std::vector<int>> corner(n);  // vertex ids of each cell
  for (int c = 0; c < n; ++c) {
    faces[c] = faces_of(c);
    for (int f : faces[c])
      if (auto v = vertex_of_cell(f)) corner[c].push_back(*v);
    std::sort(corner[c].begin(), corner[c].end());
  }

  std::vector<std::optional<std::vector<std::vector<int>>>> memo(n);
  std::function<const std::vector<std::vector<int>>&(int)> tri = [&](int c) -> const std::vector<std::vector<int>>& {
    if (memo[c]) return *memo[c];
    std::vector<std::vector<int>> out;
    if (cells_[c].dimension == 0) {
      out.push_back({*vertex_of_cell(c)});
    } else {
      const int apex = corner[c].front();
      for (int f : faces[c]) {
        if (cells_[f].dimension != cells_[c].dimension - 1) continue;
        if (std::binary_search(corner[f].begin(), corner[f].end(), apex)) continue;
        for (const auto& s : tri(f)) {
          std::vector<int> cone = s;
          cone.push_back(apex);
          std::sort(cone.begin(), cone.end());
          out.push_back(std::move(cone));
        }
      }
    }
    memo[c] = std::move(out);
    return *memo[c];
  };

  std::set<std::vector<int>> simplices;
  for (int c = 0; c < n; ++c)
    for (const auto& s : tri(c)) simplices.insert(s);

  ProductTriangulation out;
  auto complex = std::make_shared<SimplicialComplex>(SimplicialComplex::from_simplices(
      vertex_count(), std::vector<std::vector<VertexId>>(simplices.begin(), simplices.end())));
  out.vertex_points = vertex_points_;
  out.owner.resize(complex->simplex_count());
  const int m = factor_count();
  for (SimplexId s = 0; s < complex->simplex_count(); ++s) {
    auto& own = out.owner[s];
    own.resize(m);
    for (int i = 0; i < m; ++i) {
      std::set<VertexId> verts;
      for (int v : complex->vertices_of(s)) {
        auto fv = factors_[i].complex->vertices_of(vertex_points_[v][i].simplex);
        verts.insert(fv.begin(), fv.end());
      }
      std::vector<VertexId> sorted(verts.begin(), verts.end());
      auto id = factors_[i].complex->find(sorted);
      if (!id) throw std::logic_error("product triangulation: simplex not inside a factor simplex");
      own[i] = *id;
    }
  }
  out.complex = std::move(complex);
  return out;
}

}  // namespace reebkit
