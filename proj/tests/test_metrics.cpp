#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "reebkit/generators.hpp"
#include "reebkit/metrics.hpp"

using namespace reebkit;

namespace {

std::vector<GraphPoint> sample(const ReebGraph& g, unsigned seed) {
  std::vector<GraphPoint> out;
  for (int i = 0; i < g.node_count(); ++i) out.push_back({Cell::node(i), g.value(i)});
  std::mt19937 rng(seed);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Scalar lo = g.value(g.edge(e).lower), hi = g.value(g.edge(e).upper);
    Scalar t(std::uniform_int_distribution<int>(1, 6)(rng), 7);
    t.canonicalize();
    out.push_back({Cell::edge(e), Scalar(lo + t * (hi - lo))});
  }
  return out;
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("d_f agrees with path enumeration") {
    for (unsigned seed = 0; seed < 15; ++seed) {
      auto g = oracle::random_graph(seed, 3 + seed % 4, 2, 4);
      auto pts = sample(g, seed);
      auto table = pairwise_d(g, pts);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i; j < pts.size(); ++j) {
          CHECK(table[i][j] == oracle::d_f(g, pts[i], pts[j]));
          CHECK(d_f(g, pts[i], pts[j]) == table[i][j]);
        }
      }
    }
  }

  TEST_CASE("d_f is a metric bounded below by the value gap") {
    auto g = oracle::random_graph(42, 6, 3, 4);
    auto pts = sample(g, 1);
    auto d = pairwise_d(g, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(d[i][i] == 0);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        CHECK(d[i][j] == d[j][i]);
        CHECK(d[i][j] >= abs(Scalar(pts[i].value - pts[j].value)));
        if (i != j) CHECK(d[i][j] > 0);
        for (std::size_t k = 0; k < pts.size(); ++k) CHECK(d[i][k] <= d[i][j] + d[j][k]);
      }
    }
  }

  TEST_CASE("circle interval preimages") {
    auto g = polygon_graph(8);
    for (auto delta : {Scalar(1, 4), Scalar(1, 2), Scalar(3, 4)})
      CHECK(interval_preimage_components(g, -delta, delta).size() == 2);
    CHECK(interval_preimage_components(g, Scalar(-1), Scalar(1)).size() == 1);
    CHECK(interval_preimage_components(g, Scalar(1), Scalar(1)).size() == 1);
    CHECK(interval_preimage_components(g, Scalar(5), Scalar(6)).empty());
    CHECK_THROWS_AS(interval_preimage_components(g, Scalar(1), Scalar(0)), std::invalid_argument);
  }

  TEST_CASE("antipodal circle points are one apart") {
    auto g = polygon_graph(8);
    // nodes 0 and n are the extremes; the two arcs meet only there
    GraphPoint top{Cell::node(0), g.value(0)}, bottom{Cell::node(8), g.value(8)};
    CHECK(d_f(g, top, bottom) == 2);
    GraphPoint a{Cell::node(4), Scalar(0)}, b{Cell::node(12), Scalar(0)};
    CHECK(d_f(g, a, b) == 1);
  }

  TEST_CASE("cylinder distortion is one half") {
    for (int n : {8, 16}) {
      auto [phi, psi] = cylinder_distortion_maps(n);
      auto r = distortion(phi, psi, 2);
      CHECK(r.distortion == Scalar(1, 2));
      CHECK(r.defect_phi == 0);
      CHECK(r.defect_psi == 0);
      CHECK(r.tight);
      CHECK(r.bound() == Scalar(1, 2));
      for (const auto& row : r.rows) CHECK(abs(Scalar(row.d_f - row.d_g)) <= 1);
    }
  }

  TEST_CASE("fd bound picks the best candidate") {
    auto maps = cylinder_distortion_maps(8);
    auto fd = fd_upper_bound(maps.first.source(), maps.first.target(), {maps, maps}, 1);
    CHECK(fd.bound == Scalar(1, 2));
    CHECK(fd.reports.size() == 2);
    CHECK_THROWS_AS(fd_upper_bound(maps.first.source(), maps.first.target(), {}, 1), std::invalid_argument);
    auto csv = correspondence_csv(fd.reports[0]);
    CHECK(csv.rfind("p_cell,p_value,q_cell,q_value,defect,partner,d_f,d_g", 0) == 0);
  }
}
