#include "reebkit/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "reebkit/disjoint_set.hpp"

namespace reebkit {

namespace {

// Nonempty proper subsets of a sorted tuple, each sorted.
std::vector<std::vector<VertexId>> proper_faces(const std::vector<VertexId>& s) {
  std::vector<std::vector<VertexId>> out;
  const int n = static_cast<int>(s.size());
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<VertexId> face;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) face.push_back(s[i]);
    out.push_back(std::move(face));
  }
  return out;
}

int count_components(int vertex_count, const std::vector<std::vector<VertexId>>& simplices) {
  DisjointSet ds(vertex_count);
  for (const auto& s : simplices)
    for (std::size_t i = 1; i < s.size(); ++i) ds.unite(s[0], s[i]);
  int count = 0;
  for (int v = 0; v < vertex_count; ++v)
    if (ds.find(v) == v) ++count;
  return count;
}

}  // namespace

ComplexReport validate_complex(int vertex_count, const std::vector<std::vector<VertexId>>& simplices) {
  ComplexReport report;
  std::set<std::vector<VertexId>> seen;
  std::vector<std::vector<VertexId>> good;
  for (const auto& raw : simplices) {
    if (raw.empty()) {
      report.malformed.push_back("empty simplex");
      continue;
    }
    std::vector<VertexId> s = raw;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      report.malformed.push_back("repeated vertex in simplex");
      continue;
    }
    if (s.front() < 0 || s.back() >= vertex_count) {
      report.malformed.push_back("vertex id out of range");
      continue;
    }
    if (!seen.insert(s).second) {
      report.duplicates.push_back(s);
      continue;
    }
    good.push_back(std::move(s));
  }
  std::set<std::vector<VertexId>> missing;
  for (const auto& s : good)
    for (auto& f : proper_faces(s))
      if (!seen.count(f)) missing.insert(f);
  report.missing_faces.assign(missing.begin(), missing.end());
  report.component_count = count_components(vertex_count, good);
  return report;
}

SimplicialComplex SimplicialComplex::from_simplices(int vertex_count, std::vector<std::vector<VertexId>> simplices,
                                                    Closure closure) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (auto& s : simplices) std::sort(s.begin(), s.end());

  std::set<std::vector<VertexId>> all;
  for (const auto& s : simplices) {
    if (s.empty()) throw std::invalid_argument("empty simplex");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("simplex repeats a vertex");
    if (s.front() < 0 || s.back() >= vertex_count) throw std::invalid_argument("vertex id out of range");
    if (!all.insert(s).second && closure == Closure::kRequire)
      throw std::invalid_argument("duplicate simplex");
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (closure == Closure::kRequire && !all.count({v}))
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not listed as a simplex");
    all.insert({v});
  }
  if (closure == Closure::kRequire) {
    for (const auto& s : all)
      for (const auto& f : proper_faces(s))
        if (!all.count(f)) throw std::invalid_argument("complex is not closed under faces");
  } else {
    std::vector<std::vector<VertexId>> pending(all.begin(), all.end());
    for (const auto& s : pending)
      for (auto& f : proper_faces(s)) all.insert(std::move(f));
  }

  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  k.simplices_.assign(all.begin(), all.end());
  std::stable_sort(k.simplices_.begin(), k.simplices_.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (SimplexId id = 0; id < k.simplex_count(); ++id) {
    k.index_.emplace(k.simplices_[id], id);
    k.dimension_ = std::max(k.dimension_, k.dimension_of(id));
  }
  k.faces_.resize(k.simplices_.size());
  k.star_.resize(vertex_count);
  for (SimplexId id = 0; id < k.simplex_count(); ++id) {
    auto& faces = k.faces_[id];
    for (const auto& f : proper_faces(k.simplices_[id])) faces.push_back(k.index_.at(f));
    faces.push_back(id);
    std::sort(faces.begin(), faces.end());
    for (VertexId v : k.simplices_[id]) k.star_[v].push_back(id);
  }
  return k;
}

std::optional<SimplexId> SimplicialComplex::find(std::span<const VertexId> sorted_vertices) const {
  auto it = index_.find(std::vector<VertexId>(sorted_vertices.begin(), sorted_vertices.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> SimplicialComplex::component_labels() const {
  DisjointSet ds(vertex_count_);
  for (const auto& s : simplices_)
    for (std::size_t i = 1; i < s.size(); ++i) ds.unite(s[0], s[i]);
  std::vector<int> label(vertex_count_, -1);
  std::vector<int> root_label(vertex_count_, -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    int r = ds.find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

int SimplicialComplex::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

ComplexPoint reduce_point(const SimplicialComplex& k, SimplexId s, const std::vector<Scalar>& barycentric) {
  auto verts = k.vertices_of(s);
  std::vector<VertexId> face;
  std::vector<Scalar> weights;
  for (std::size_t j = 0; j < verts.size(); ++j) {
    if (barycentric[j] < 0) throw std::invalid_argument("negative barycentric weight");
    if (barycentric[j] == 0) continue;
    face.push_back(verts[j]);
    weights.push_back(barycentric[j]);
  }
  if (face.empty()) throw std::invalid_argument("all barycentric weights vanish");
  return ComplexPoint{*k.find(face), std::move(weights)};
}

}  // namespace reebkit
