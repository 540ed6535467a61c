#include "doctest.h"
#include "reebkit/generators.hpp"
#include "reebkit/homotopy.hpp"
#include "reebkit/reeb.hpp"

using namespace reebkit;

namespace {

// Sign pattern of all vertex pairs under f_t.
std::vector<int> order(const PLFunction& f, const PLFunction& g, const Scalar& t) {
  auto h = interpolate(f, g, t);
  std::vector<int> out;
  for (std::size_t v = 0; v < h.size(); ++v)
    for (std::size_t w = v + 1; w < h.size(); ++w) out.push_back(sgn(Scalar(h[v] - h[w])));
  return out;
}

}  // namespace

TEST_SUITE("homotopy") {
  TEST_CASE("breakpoints are exactly the order changes") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      auto in = random_instance({seed, 6, 3, 1});
      auto s = homotopy_breakpoints(*in.complex, in.f, *in.g);
      REQUIRE(s.breakpoints.size() >= 2);
      CHECK(s.breakpoints.front() == 0);
      CHECK(s.breakpoints.back() == 1);
      CHECK(s.midpoints.size() + 1 == s.breakpoints.size());
      for (std::size_t i = 0; i + 1 < s.breakpoints.size(); ++i) {
        const Scalar a = s.breakpoints[i], b = s.breakpoints[i + 1];
        const auto mid = order(in.f, *in.g, s.midpoints[i]);
        CHECK(order(in.f, *in.g, Scalar((3 * a + b) / 4)) == mid);
        CHECK(order(in.f, *in.g, Scalar((a + 3 * b) / 4)) == mid);
        if (i > 0) CHECK(order(in.f, *in.g, a) != mid);
        auto here = interpolate(in.f, *in.g, s.midpoints[i]);
        auto left = interpolate(in.f, *in.g, a), right = interpolate(in.f, *in.g, b);
        for (std::size_t v = 0; v < here.size(); ++v) {
          CHECK(s.chi[i](here[v]) == left[v]);
          CHECK(s.xi[i](here[v]) == right[v]);
        }
      }
    }
  }

  TEST_CASE("vertex reparametrization") {
    PLFunction f({Scalar(0), Scalar(1), Scalar(3)}), g({Scalar(0), Scalar(0), Scalar(4)});
    auto chi = vertex_reparametrization(f, g);
    CHECK(chi(Scalar(1)) == 0);
    CHECK(chi(Scalar(2)) == 2);
    CHECK(chi(Scalar(10)) == 4);
    CHECK_THROWS_AS(vertex_reparametrization(g, f), MapError);
    CHECK_THROWS_AS(vertex_reparametrization(f, PLFunction({Scalar(2), Scalar(1), Scalar(0)})), MapError);
  }

  TEST_CASE("cylinder homotopy costs one") {
    auto c = cylinder(8);
    auto z = build_homotopy_zigzag(c.complex, c.f, *c.g);
    CHECK(z.sup_distance == 1);
    CHECK(z.cost <= 1);
    CHECK(z.cost == 1);
    CHECK(verify_zigzag(z.diagram));
    CHECK(z.diagram.graphs.size() == z.schedule.breakpoints.size());
  }

  TEST_CASE("random homotopies stay within the sup distance") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto in = random_instance({seed + 77, 4 + static_cast<int>(seed % 4), 3, 2});
      auto z = build_homotopy_zigzag(in.complex, in.f, *in.g);
      CHECK(verify_zigzag(z.diagram));
      CHECK(z.cost <= sup_distance(in.f, *in.g));
      CHECK(z.cost == zigzag_cost(z.diagram).cost);
      for (const auto& [p, o] : z.maps) {
        CHECK(verify_graph_map(p));
        CHECK(verify_graph_map(o));
      }
    }
  }

  TEST_CASE("a constant homotopy is free") {
    auto in = random_instance({9, 6, 3, 2});
    auto z = build_homotopy_zigzag(in.complex, in.f, in.f);
    CHECK(z.cost == 0);
    CHECK(z.schedule.breakpoints.size() == 2);
  }
}
