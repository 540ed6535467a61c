// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "reebkit/category.hpp"
#include "reebkit/coupling.hpp"
#include "reebkit/generators.hpp"
#include "reebkit/homotopy.hpp"
#include "reebkit/metrics.hpp"
#include "reebkit/reeb.hpp"
#include "reebkit/zigzag.hpp"

using namespace reebkit;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

int failures = 0;

void run(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  if (!o.pass) ++failures;
  std::printf("%s %d %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), seconds_since(t),
              o.detail.str().c_str());
  std::fflush(stdout);
}

std::string str(const Scalar& s) { return to_string(s); }

Instance random_case(std::uint64_t seed, int lo, int spread, int range = 3) {
  return random_instance({seed, lo + static_cast<int>(seed % spread), range, 2});
}

// Strictly increasing on vertex values and affine between them.
PLFunction stretch(const PLFunction& f) {
  std::vector<Scalar> out;
  for (const auto& v : f.values()) out.push_back(v < 0 ? Scalar(2 * v) : Scalar(v + Scalar(1, 2)));
  return PLFunction(std::move(out));
}

PLFunction random_function(int n, unsigned seed, int range) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Scalar> v;
  for (int i = 0; i < n; ++i) v.emplace_back(d(rng));
  return PLFunction(std::move(v));
}

}  // namespace

int main() {
  run(1, "cylinder Reeb graphs", [](Outcome& o) {
    for (int n : {8, 16, 32}) {
      auto t = Clock::now();
      auto c = cylinder(n);
      auto rf = compute_reeb(c.complex, c.f);
      auto rg = compute_reeb(c.complex, *c.g);
      const double elapsed = seconds_since(t);
      auto mf = minimalize(*rf.graph), mg = minimalize(*rg.graph);
      if (mf.betti1() != 1 || mf.min_value() != -1 || mf.max_value() != 1) o.fail("R_f shape n=" + std::to_string(n));
      if (mg.node_count() != 2 || mg.edge_count() != 1 || mg.min_value() != -1 || mg.max_value() != 1)
        o.fail("R_g is not the path n=" + std::to_string(n));
      if (!verify_reeb_quotient(rf.map, rf.subdivision.pull(c.f)) || !verify_reeb_quotient(rg.map, rg.subdivision.pull(*c.g)))
        o.fail("quotient map rejected n=" + std::to_string(n));
      if (elapsed >= 1.0) o.fail("slow n=" + std::to_string(n));
      o.detail << "n=" << n << ":" << elapsed << "s ";
    }
  });

  run(2, "cylinder coupling bound", [](Outcome& o) {
    auto c = cylinder(8);
    const Scalar b = coupling_bound(reeb_coupling(c.complex, c.f, *c.g), true);
    o.detail << "bound=" << str(b);
    if (b != 1) o.fail(" expected 1");
  });

  run(3, "cylinder distortion and circle intervals", [](Outcome& o) {
    for (int n : {8, 16, 32}) {
      auto maps = cylinder_distortion_maps(n);
      auto fd = fd_upper_bound(maps.first.source(), maps.first.target(), {maps}, 1);
      const auto& r = fd.reports[0];
      o.detail << "n=" << n << ":" << str(fd.bound) << " ";
      if (fd.bound > Scalar(1, 2)) o.fail("bound above 1/2 ");
      if (r.defect_phi != 0 || r.defect_psi != 0) o.fail("nonzero defect ");
      for (const auto& row : r.rows)
        if (abs(Scalar(row.d_f - row.d_g)) > 1) o.fail("node pair gap above 1 ");
      auto g = polygon_graph(n);
      for (auto d : {Scalar(1, 4), Scalar(1, 2), Scalar(3, 4)})
        if (interval_preimage_components(g, -d, d).size() != 2) o.fail("interval components ");
    }
  });

  run(4, "distance to a point", [](Outcome& o) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto in = random_case(seed, 4, 6);
      auto g = std::make_shared<const ReebGraph>(minimalize(*compute_reeb(in.complex, in.f).graph));
      const Scalar c(static_cast<int>(seed % 7) - 3);
      Scalar direct = 0;
      for (int i = 0; i < g->node_count(); ++i) direct = std::max(direct, Scalar(abs(Scalar(g->value(i) - c))));
      const Scalar pd = point_distance(*g, c);
      const Scalar via = coupling_bound(product_coupling(g, std::make_shared<const ReebGraph>(point_graph(c))));
      if (pd != direct || via != direct) o.fail("seed " + std::to_string(seed));
    }
    o.detail << "50 graphs";
  });

  run(5, "homotopy zigzag stability", [](Outcome& o) {
    auto t = Clock::now();
    int stages = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto in = random_instance({seed, 4 + static_cast<int>(seed % 9), 4, 2});
      auto z = build_homotopy_zigzag(in.complex, in.f, *in.g);
      stages += static_cast<int>(z.maps.size());
      if (!verify_zigzag(z.diagram)) o.fail("diagram rejected seed " + std::to_string(seed));
      for (const auto& [p, q] : z.maps)
        if (!verify_graph_map(p) || !verify_graph_map(q)) o.fail("map rejected seed " + std::to_string(seed));
      if (z.cost > sup_distance(in.f, *in.g)) o.fail("cost above sup seed " + std::to_string(seed));
    }
    const double elapsed = seconds_since(t);
    o.detail << "100 pairs, " << stages << " stages";
    if (elapsed >= 60) o.fail(" over 60s");
  });

  run(6, "zigzag of a coupling", [](Outcome& o) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Coupling c;
      if (seed % 5 == 4) {
        auto a = std::make_shared<const ReebGraph>(oracle::random_graph(seed, 3, 1, 3));
        auto b = std::make_shared<const ReebGraph>(oracle::random_graph(seed + 7, 3, 1, 3));
        c = product_coupling(a, b);
      } else {
        auto in = random_case(seed + 500, 4, 5);
        c = reeb_coupling(in.complex, in.f, *in.g);
      }
      if (zigzag_cost(zigzag_from_coupling(c)).cost != coupling_bound(c)) o.fail("seed " + std::to_string(seed));
    }
    o.detail << "50 couplings";
  });

  run(7, "category laws", [](Outcome& o) {
    int composed = 0, pulled = 0, lifted = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto in = random_case(seed + 1000, 4, 4);
      auto rf = compute_reeb(in.complex, in.f);
      auto rh = compute_reeb(in.complex, stretch(in.f));
      auto phi = induced_quotient_via_reparam(rf, rh, vertex_reparametrization(in.f, stretch(in.f)));
      auto back = induced_map(rf.map, rf.map);
      if (verify_graph_map(phi) && verify_reeb_quotient(compose(phi, rf.map).map) &&
          verify_graph_map(compose(phi, back)))
        ++composed;
      else
        o.fail("compose seed " + std::to_string(seed) + " ");

      auto small = random_case(seed + 2000, 3, 3, 2);
      auto rs = compute_reeb(small.complex, small.f);
      auto chart = chart_map(rs.graph);
      auto pb = pullback(rs.map, chart);
      if (pb.triangulation.complex->connected() && verify_reeb_quotient(pb.pull(0, rs.map)) &&
          verify_reeb_quotient(pb.pull(1, chart)))
        ++pulled;
      else
        o.fail("pullback seed " + std::to_string(seed) + " ");

      auto again = reeb_of_graph(rf.graph);
      const bool idem = graph_isomorphic(minimalize(*again.graph), minimalize(*rf.graph)).has_value();
      auto edge = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_simplices(2, {{0, 1}}));
      auto tri = ProductCellComplex::build({FactorSpec{small.complex}, FactorSpec{edge}}).triangulate();
      std::vector<Scalar> up;
      for (const auto& pts : tri.vertex_points) up.push_back(small.f[pts[0].simplex]);
      auto thick = compute_reeb(tri.complex, PLFunction(up));
      const bool lift = graph_isomorphic(minimalize(*thick.graph), minimalize(*rs.graph)).has_value();
      if (idem && lift)
        ++lifted;
      else
        o.fail("reeb invariance seed " + std::to_string(seed) + " ");
    }
    o.detail << "compose " << composed << "/50, pullback " << pulled << "/50, reeb " << lifted << "/50";
  });

  run(8, "triangle inequality for couplings", [](Outcome& o) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto in = random_case(seed + 3000, 3, 4, 2);
      auto h = random_function(in.complex->vertex_count(), static_cast<unsigned>(seed), 2);
      auto c1 = reeb_coupling(in.complex, in.f, *in.g);
      auto c2 = reeb_coupling(in.complex, *in.g, h);
      auto glued = compose_couplings(c1, c2);
      if (!verify_coupling(glued)) o.fail("glued coupling rejected seed " + std::to_string(seed) + " ");
      if (coupling_bound(glued) > coupling_bound(c1) + coupling_bound(c2)) o.fail("seed " + std::to_string(seed) + " ");
    }
    o.detail << "50 triples";
  });

  run(9, "Reeb graph against subdivision oracle", [](Outcome& o) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto in = random_case(seed + 4000, 4, 4);
      auto got = minimalize(*compute_reeb(in.complex, in.f).graph);
      if (!graph_isomorphic(got, oracle::reeb_graph(in.complex, in.f)).has_value())
        o.fail("seed " + std::to_string(seed) + " ");
    }
    o.detail << "50 complexes";
  });

  return failures;
}
