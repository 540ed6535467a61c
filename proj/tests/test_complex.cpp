#include "doctest.h"
#include "reebkit/complex.hpp"
#include "reebkit/level_sets.hpp"
#include "reebkit/pl_function.hpp"

using namespace reebkit;

TEST_SUITE("complex") {
  TEST_CASE("scalars parse exactly") {
    CHECK(parse_scalar("3/6") == Scalar(1, 2));
    CHECK(parse_scalar("-0.125") == Scalar(-1, 8));
    CHECK(parse_scalar("7") == 7);
    CHECK(to_string(parse_scalar("4/-8")) == "-1/2");
    CHECK(to_string(Scalar(6)) == "6");
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
    auto u = sorted_unique({Scalar(2), Scalar(1), Scalar(2), Scalar(1, 2)});
    REQUIRE(u.size() == 3);
    CHECK(u.front() == Scalar(1, 2));
  }

  TEST_CASE("closure adds faces and numbering puts vertices first") {
    auto k = SimplicialComplex::from_simplices(4, {{0, 1, 2}, {2, 3}});
    CHECK(k.dimension() == 2);
    CHECK(k.simplex_count() == 4 + 4 + 1);
    for (VertexId v = 0; v < 4; ++v) CHECK(k.vertices_of(v).size() == 1);
    const std::vector<VertexId> tri{0, 1, 2};
    auto t = k.find(tri);
    REQUIRE(t);
    CHECK(k.faces_of(*t).size() == 7);
    CHECK(k.star_of(2).size() == 5);
    CHECK(k.connected());
  }

  TEST_CASE("strict construction rejects missing faces and duplicates") {
    using C = SimplicialComplex::Closure;
    CHECK_THROWS_AS(SimplicialComplex::from_simplices(3, {{0, 1, 2}}, C::kRequire), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_simplices(2, {{0}, {1}, {0, 1}, {0, 1}}, C::kRequire), std::invalid_argument);
    CHECK(SimplicialComplex::from_simplices(2, {{0, 1}, {0, 1}}).simplex_count() == 3);
    auto r = validate_complex(3, {{0, 1, 2}, {0, 5}, {1, 1}, {0, 1, 2}});
    CHECK_FALSE(r.valid());
    CHECK(r.missing_faces.size() == 6);
    CHECK(r.duplicates.size() == 1);
    CHECK(r.malformed.size() == 2);
  }

  TEST_CASE("components count isolated vertices") {
    auto k = SimplicialComplex::from_simplices(5, {{0, 1}, {2, 3}});
    CHECK(k.component_count() == 3);
    auto labels = k.component_labels();
    CHECK(labels[0] == labels[1]);
    CHECK(labels[0] != labels[2]);
    CHECK(labels[4] == 2);
  }

  TEST_CASE("reduce_point drops zero weights") {
    auto k = SimplicialComplex::from_simplices(3, {{0, 1, 2}});
    const std::vector<VertexId> tri{0, 1, 2}, e02{0, 2};
    auto p = reduce_point(k, *k.find(tri), {Scalar(1, 3), Scalar(0), Scalar(2, 3)});
    CHECK(p.simplex == *k.find(e02));
    CHECK(p.barycentric == std::vector<Scalar>{Scalar(1, 3), Scalar(2, 3)});
    auto v = reduce_point(k, *k.find(tri), {Scalar(0), Scalar(1), Scalar(0)});
    CHECK(v.simplex == 1);
  }

  TEST_CASE("PL functions evaluate linearly") {
    auto k = SimplicialComplex::from_simplices(3, {{0, 1, 2}});
    PLFunction f({Scalar(0), Scalar(3), Scalar(-6)});
    const std::vector<VertexId> tri{0, 1, 2};
    ComplexPoint p{*k.find(tri), {Scalar(1, 3), Scalar(1, 3), Scalar(1, 3)}};
    CHECK(f.evaluate(k, p) == -1);
    auto r = f.range(k, *k.find(tri));
    CHECK(r.lo == -6);
    CHECK(r.hi == 3);
    PLFunction g({Scalar(1), Scalar(1), Scalar(1)});
    CHECK(sup_distance(f, g) == 7);
    auto h = interpolate(f, g, Scalar(1, 2));
    CHECK(h[2] == Scalar(-5, 2));
    CHECK(f.min() == -6);
    CHECK(f.max() == 3);
  }

  TEST_CASE("sup distance is a metric on vertex values") {
    PLFunction a({Scalar(0), Scalar(2)}), b({Scalar(1), Scalar(-1)}), c({Scalar(5), Scalar(0)});
    CHECK(sup_distance(a, a) == 0);
    CHECK(sup_distance(a, b) == sup_distance(b, a));
    CHECK(sup_distance(a, c) <= sup_distance(a, b) + sup_distance(b, c));
  }

  TEST_CASE("level sets of a square split and merge") {
    // 4-cycle with f = 0, 1, 0, -1
    auto k = SimplicialComplex::from_simplices(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    PLFunction f({Scalar(0), Scalar(1), Scalar(0), Scalar(-1)});
    CHECK(level_components(k, f, Scalar(1, 2)).size() == 2);
    CHECK(level_components(k, f, Scalar(1)).size() == 1);
    CHECK(level_components(k, f, Scalar(0)).size() == 2);
    CHECK(level_components(k, f, Scalar(2)).empty());
    CHECK(interval_preimage_components(k, f, Scalar(-1, 2), Scalar(1, 2)).size() == 2);
    CHECK(interval_preimage_components(k, f, Scalar(-1), Scalar(1)).size() == 1);
  }
}
