#include "doctest.h"
#include "reebkit/generators.hpp"
#include "reebkit/reeb.hpp"

using namespace reebkit;

TEST_SUITE("generators") {
  TEST_CASE("polygon coordinates") {
    auto x = polygon_x(8);
    REQUIRE(x.size() == 16);
    CHECK(x[0] == 1);
    CHECK(x[8] == -1);
    CHECK(x[4] == 0);
    CHECK(x[12] == 0);
    CHECK(x[1] == x[15]);
    for (int k = 0; k < 8; ++k) CHECK(x[k] > x[k + 1]);
    CHECK_THROWS(polygon_x(1));
  }

  TEST_CASE("cylinder") {
    auto c = cylinder(8);
    CHECK(c.complex->vertex_count() == 32);
    CHECK(c.complex->dimension() == 2);
    CHECK(c.complex->connected());
    CHECK(sup_distance(c.f, *c.g) == 1);
    CHECK(verify_reeb_quotient(cylinder_projection(8), c.f));
    CHECK(c.g->min() == -1);
    CHECK(c.g->max() == 1);
  }

  TEST_CASE("point and path") {
    auto p = point_instance(Scalar(5, 2));
    CHECK(p.complex->vertex_count() == 1);
    CHECK(p.f[0] == Scalar(5, 2));
    auto q = path_instance(4);
    CHECK(q.f[0] == -1);
    CHECK(q.f[4] == 1);
    CHECK(q.f[2] == 0);
    CHECK(q.complex->simplex_count() == 9);
  }

  TEST_CASE("random instances are deterministic and connected") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      RandomSpec spec{seed, 4 + static_cast<int>(seed % 6), 3, 2};
      auto a = random_instance(spec), b = random_instance(spec);
      CHECK(*a.complex == *b.complex);
      CHECK(a.f == b.f);
      CHECK(*a.g == *b.g);
      CHECK(a.complex->connected());
      CHECK(a.complex->vertex_count() == spec.vertex_count);
      for (const auto& v : a.f.values()) CHECK(abs(v) <= 3);
    }
    auto one = random_instance({1, 8, 4, 2}), two = random_instance({2, 8, 4, 2});
    const bool same = *one.complex == *two.complex && one.f == two.f;
    CHECK_FALSE(same);
  }
}
