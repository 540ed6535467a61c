#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "reebkit/generators.hpp"
#include "reebkit/reeb.hpp"

using namespace reebkit;

namespace {

ComplexPtr make(int n, std::vector<std::vector<VertexId>> s) {
  return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_simplices(n, std::move(s)));
}

GraphPtr graph(std::vector<int> values, std::vector<GraphEdge> edges) {
  std::vector<Scalar> v(values.begin(), values.end());
  return std::make_shared<const ReebGraph>(std::move(v), std::move(edges));
}

// Same graph with nodes shuffled.
ReebGraph relabel(const ReebGraph& g, unsigned seed) {
  std::vector<int> perm(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) perm[i] = i;
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Scalar> values(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) values[perm[i]] = g.value(i);
  std::vector<GraphEdge> edges;
  for (int e = 0; e < g.edge_count(); ++e) edges.push_back({perm[g.edge(e).lower], perm[g.edge(e).upper], 0});
  std::shuffle(edges.begin(), edges.end(), rng);
  return ReebGraph(std::move(values), std::move(edges));
}

}  // namespace

TEST_SUITE("reeb") {
  TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(ReebGraph({Scalar(0), Scalar(0)}, {{0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ReebGraph({Scalar(1), Scalar(0)}, {{0, 1, 0}}), std::invalid_argument);
    auto g = graph({0, 1, 2}, {{0, 1, 0}, {0, 1, 0}, {1, 2, 0}});
    CHECK(g->betti1() == 1);
    CHECK(g->connected());
    CHECK(g->edge(0).multiplicity != g->edge(1).multiplicity);
    CHECK(g->normalize(Cell::edge(2), Scalar(1)) == GraphPoint{Cell::node(1), Scalar(1)});
    CHECK(g->normalize(Cell::edge(2), Scalar(3, 2)).cell == Cell::edge(2));
  }

  TEST_CASE("small complexes") {
    auto path = path_instance(5);
    auto r = compute_reeb(path.complex, path.f);
    auto m = minimalize(*r.graph);
    CHECK(m.node_count() == 2);
    CHECK(m.edge_count() == 1);
    CHECK(verify_reeb_quotient(r.map, r.subdivision.pull(path.f)));

    auto c = circle(6);
    auto rc = compute_reeb(c.complex, c.f);
    CHECK(rc.graph->betti1() == 1);
    CHECK(minimalize(*rc.graph).node_count() == 2);
    CHECK(verify_reeb_quotient(rc.map));

    auto p = point_instance(Scalar(3));
    auto rp = compute_reeb(p.complex, p.f);
    CHECK(rp.graph->node_count() == 1);
    CHECK(rp.graph->value(0) == 3);
  }

  TEST_CASE("tripod has one merge node") {
    // centre 0 at height 0, legs up to 1, 2 and down to -1
    auto k = make(4, {{0, 1}, {0, 2}, {0, 3}});
    PLFunction f({Scalar(0), Scalar(1), Scalar(2), Scalar(-1)});
    auto r = compute_reeb(k, f);
    auto m = minimalize(*r.graph);
    CHECK(m.node_count() == 4);
    CHECK(m.edge_count() == 3);
    CHECK(m.betti1() == 0);
  }

  TEST_CASE("a flat triangle collapses to a point") {
    auto k = make(3, {{0, 1, 2}});
    PLFunction f({Scalar(2), Scalar(2), Scalar(2)});
    auto r = compute_reeb(k, f);
    CHECK(r.graph->node_count() == 1);
    CHECK(r.graph->edge_count() == 0);
    CHECK(verify_reeb_quotient(r.map));
  }

  TEST_CASE("each axiom has a failing example") {
    using A = VerifyResult::Axiom;
    auto edge = make(2, {{0, 1}});
    auto two_edges = graph({0, 1, 2}, {{0, 1, 0}, {1, 2, 0}});
    ReebQuotientMap not_onto{edge, two_edges, {{Cell::node(0), Scalar(0)}, {Cell::node(1), Scalar(1)}}, {}};
    not_onto.carriers = infer_carriers(*edge, *two_edges, not_onto.images);
    CHECK(verify_reeb_quotient(not_onto).violated == A::kSurjectivity);

    auto vee = make(3, {{0, 1}, {1, 2}});
    auto unit = graph({0, 1}, {{0, 1, 0}});
    ReebQuotientMap folded{vee, unit, {{Cell::node(0), Scalar(0)}, {Cell::node(1), Scalar(1)}, {Cell::node(0), Scalar(0)}},
                           {}};
    folded.carriers = infer_carriers(*vee, *unit, folded.images);
    auto r = verify_reeb_quotient(folded);
    CHECK(r.violated == A::kConnectedFibers);
    CHECK(r.witness.has_value());

    ReebQuotientMap fine{edge, unit, {{Cell::node(0), Scalar(0)}, {Cell::node(1), Scalar(1)}}, {}};
    fine.carriers = infer_carriers(*edge, *unit, fine.images);
    CHECK(verify_reeb_quotient(fine));
    auto bad_values = verify_reeb_quotient(fine, PLFunction({Scalar(0), Scalar(2)}));
    CHECK(bad_values.violated == A::kValueCommutation);
    CHECK(bad_values.witness_vertex == 1);

    auto broken = fine;
    broken.carriers[0] = Cell::node(1);
    CHECK(verify_reeb_quotient(broken).violated == A::kStructure);
  }

  TEST_CASE("isomorphism agrees with brute force") {
    for (unsigned seed = 0; seed < 30; ++seed) {
      auto g = oracle::random_graph(seed, 3 + seed % 5, 2, 3);
      auto h = relabel(g, seed + 100);
      CHECK(graph_isomorphic(g, h).has_value());
      CHECK(oracle::isomorphic(g, h));
      auto other = oracle::random_graph(seed + 1000, g.node_count(), 2, 3);
      CHECK(graph_isomorphic(g, other).has_value() == oracle::isomorphic(g, other));
    }
  }

  TEST_CASE("isomorphism maps nodes value-preservingly") {
    auto g = oracle::random_graph(7, 6, 3, 4);
    auto h = relabel(g, 8);
    auto iso = graph_isomorphic(g, h);
    REQUIRE(iso);
    for (int i = 0; i < g.node_count(); ++i) CHECK(g.value(i) == h.value((*iso)[i]));
  }

  TEST_CASE("compute_reeb matches the subdivision oracle") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      auto in = random_instance({seed, 5 + static_cast<int>(seed % 3), 3, 2});
      auto r = compute_reeb(in.complex, in.f);
      CHECK(verify_reeb_quotient(r.map, r.subdivision.pull(in.f)));
      auto expect = oracle::reeb_graph(in.complex, in.f);
      CHECK(graph_isomorphic(minimalize(*r.graph), expect).has_value());
    }
  }

  TEST_CASE("minimalize is idempotent and keeps Betti numbers") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto in = random_instance({seed, 7, 3, 3});
      auto g = *compute_reeb(in.complex, *in.g).graph;
      auto m = minimalize(g);
      CHECK(m == minimalize(m));
      CHECK(m.betti1() == g.betti1());
      CHECK(graph_isomorphic(m, oracle::contract_regular(g)).has_value());
    }
  }
}
