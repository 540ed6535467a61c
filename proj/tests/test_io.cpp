#include "doctest.h"
#include "reebkit/generators.hpp"
#include "reebkit/io.hpp"
#include "reebkit/reeb.hpp"

using namespace reebkit;

TEST_SUITE("io") {
  TEST_CASE("instance round trip") {
    auto c = cylinder(4);
    auto text = write_instance(*c.complex, {"f", "g"}, {c.f, *c.g});
    auto back = parse_instance(text);
    CHECK(*back.complex == *c.complex);
    CHECK(back.function("f") == c.f);
    CHECK(back.function("g") == *c.g);
    CHECK(back.has("g"));
    CHECK_FALSE(back.has("h"));
    CHECK(write_instance(*back.complex, back.names, back.functions) == text);
    CHECK(document_kind(text) == DocumentKind::kInstance);
  }

  TEST_CASE("single function and fractions") {
    const char* text = R"({"vertex_count": 2, "simplices": [[0, 1]],
      "vertices": [{"id": 1, "value": "-3/6"}, {"id": 0, "value": 0.25}]})";
    auto in = parse_instance(text);
    CHECK(in.function()[0] == Scalar(1, 4));
    CHECK(in.function()[1] == Scalar(-1, 2));
  }

  TEST_CASE("graph and map round trips are byte stable") {
    auto c = cylinder(4);
    auto r = compute_reeb(c.complex, c.f);
    auto gtext = write_graph(*r.graph);
    CHECK(*parse_graph(gtext) == *r.graph);
    CHECK(write_graph(*parse_graph(gtext)) == gtext);
    CHECK(document_kind(gtext) == DocumentKind::kGraph);

    auto mtext = write_map(r.map);
    auto m = parse_map(mtext);
    CHECK(m.images == r.map.images);
    CHECK(m.carriers == r.map.carriers);
    CHECK(verify_reeb_quotient(m));
    CHECK(write_map(m) == mtext);
    CHECK(document_kind(mtext) == DocumentKind::kMap);
  }

  TEST_CASE("coupling and zigzag round trips") {
    auto c = cylinder(4);
    auto cp = reeb_coupling(c.complex, c.f, *c.g);
    auto text = write_coupling(cp);
    auto back = parse_coupling(text);
    CHECK(coupling_bound(back, true) == 1);
    CHECK(write_coupling(back) == text);
    CHECK(document_kind(text) == DocumentKind::kCoupling);

    ZigzagWitness w{zigzag_from_coupling(cp), std::nullopt, Scalar(1)};
    w.cost = zigzag_cost(w.diagram);
    auto ztext = write_zigzag(w);
    auto zback = parse_zigzag(ztext);
    CHECK(zback.cost->cost == 1);
    CHECK(*zback.sup_distance == 1);
    CHECK(verify_zigzag(zback.diagram));
    CHECK(write_zigzag(zback) == ztext);
    CHECK(document_kind(ztext) == DocumentKind::kZigzag);
  }

  TEST_CASE("syntax errors carry a position") {
    const std::string text = "{\n  \"nodes\": [\n    {\"id\": 0,, \"value\": 1}\n  ]\n}";
    try {
      parse_graph(text);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 0);
      CHECK(e.offset() > 0);
      CHECK(e.offset() <= text.size());
    }
  }

  TEST_CASE("schema errors carry a pointer") {
    const char* text = R"({"nodes": [{"id": 0, "value": 0}, {"id": 1}], "edges": [[0, 1]]})";
    try {
      parse_graph(text);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.pointer().rfind("/nodes/1", 0) == 0);
    }
    CHECK_THROWS_AS(parse_graph(R"({"nodes": [{"id": 0, "value": "1/0"}], "edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"nodes": [{"id": 0, "value": 1}, {"id": 1, "value": 1}], "edges": [[0, 1]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"nodes": [{"id": 3, "value": 1}], "edges": []})"), ParseError);
  }

  TEST_CASE("dot output labels nodes with values") {
    ReebGraph g({Scalar(-1), Scalar(1, 2)}, {{0, 1, 0}});
    auto dot = graph_dot(g, "demo");
    CHECK(dot.rfind("graph demo {", 0) == 0);
    CHECK(dot.find("n0 [label=\"-1\"]") != std::string::npos);
    CHECK(dot.find("n1 [label=\"1/2\"]") != std::string::npos);
    CHECK(dot.find("n0 -- n1;") != std::string::npos);
  }
}
