// reebkit: Reeb graphs, couplings and zigzag bounds from the command line.
//
// Exit codes: 0 success, 1 a certificate or axiom check failed,
// 2 usage or input error, 3 internal error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reebkit/coupling.hpp"
#include "reebkit/generators.hpp"
#include "reebkit/homotopy.hpp"
#include "reebkit/io.hpp"
#include "reebkit/metrics.hpp"
#include "reebkit/reeb.hpp"
#include "reebkit/zigzag.hpp"

namespace fs = std::filesystem;
using namespace reebkit;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relative output paths land in $REEB_OUT_DIR when it is set.
std::string resolve_output(const std::string& path) {
  const char* dir = std::getenv("REEB_OUT_DIR");
  if (!dir || !*dir || fs::path(path).is_absolute()) return path;
  fs::create_directories(dir);
  return (fs::path(dir) / path).string();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(resolve_output(path), text);
  }
}

GraphPoint parse_graph_point(const ReebGraph& g, const std::string& text) {
  // "n3" or "e2:1/2"
  auto bad = [&] { throw UsageError("bad graph point \"" + text + "\" (want n<id> or e<id>:<value>)"); };
  if (text.size() < 2 || (text[0] != 'n' && text[0] != 'e')) bad();
  const auto colon = text.find(':');
  int id = 0;
  try {
    id = std::stoi(text.substr(1, colon == std::string::npos ? std::string::npos : colon - 1));
  } catch (const std::exception&) {
    bad();
  }
  if (text[0] == 'n') {
    if (colon != std::string::npos || id < 0 || id >= g.node_count()) bad();
    return {Cell::node(id), g.value(id)};
  }
  if (colon == std::string::npos || id < 0 || id >= g.edge_count()) bad();
  Scalar v = parse_scalar(text.substr(colon + 1));
  if (!(g.lower_value(id) <= v && v <= g.upper_value(id))) throw UsageError("value outside edge " + text);
  return g.normalize(Cell::edge(id), v);
}

std::string point_text(const GraphPoint& p) {
  return p.cell.is_node() ? "n" + std::to_string(p.cell.id)
                          : "e" + std::to_string(p.cell.id) + ":" + to_string(p.value);
}

std::string summary(const ReebGraph& g) {
  return "nodes " + std::to_string(g.node_count()) + " edges " + std::to_string(g.edge_count()) + " betti1 " +
         std::to_string(g.betti1()) + " range [" + to_string(g.min_value()) + ", " + to_string(g.max_value()) + "]";
}

void require(const VerifyResult& r, const std::string& what) {
  if (r) return;
  std::string msg = what + ": " + to_string(r.violated) + ": " + r.message;
  if (r.witness) msg += " (witness " + point_text(*r.witness) + ")";
  if (r.witness_vertex) msg += " (vertex " + std::to_string(*r.witness_vertex) + ")";
  throw Violation(msg);
}

struct FunctionPair {
  ComplexPtr complex;
  PLFunction f, g;
};

// One file carrying f and g, or two files on the same complex.
FunctionPair load_pair(const std::vector<std::string>& files, const std::string& fname, const std::string& gname) {
  if (files.size() == 1) {
    auto in = parse_instance(read_text_file(files[0]));
    return {in.complex, in.function(fname), in.function(gname)};
  }
  if (files.size() != 2) throw UsageError("expected one instance with two functions or two instances");
  auto a = parse_instance(read_text_file(files[0]));
  auto b = parse_instance(read_text_file(files[1]));
  if (!(*a.complex == *b.complex)) throw UsageError("the two instances live on different complexes");
  return {a.complex, a.function(), b.function()};
}

// Recomputes the cost and checks the recorded maximizer is a limit point
// attaining it.
void certify_zigzag(const ZigzagWitness& w) {
  require(verify_zigzag(w.diagram), "zigzag");
  const auto cost = zigzag_cost(w.diagram);
  if (!w.cost) return;
  if (w.cost->cost != cost.cost) {
    throw Violation("recorded cost " + to_string(w.cost->cost) + " differs from recomputed " + to_string(cost.cost));
  }
  const auto& legs = w.diagram.legs;
  const auto& x = w.cost->maximizer;
  std::vector<Scalar> values{legs[0].first.evaluate(x[0]).value};
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const GraphPoint right = legs[i].second.evaluate(x[i]);
    if (i + 1 < legs.size() && !(right == legs[i + 1].first.evaluate(x[i + 1])))
      throw Violation("maximizer leaves the limit between spaces " + std::to_string(i) + " and " +
                      std::to_string(i + 1));
    values.push_back(right.value);
  }
  if (values != w.cost->values) throw Violation("maximizer values differ from the recorded ones");
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (Scalar(*hi - *lo) != cost.cost) throw Violation("maximizer does not attain the cost");
  if (w.sup_distance && cost.cost > *w.sup_distance) throw Violation("cost exceeds the recorded sup distance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reeb graphs of PL functions with exact rational arithmetic"};
  app.require_subcommand(1);

  // reeb
  std::string reeb_in, reeb_fn, reeb_out, reeb_dot, reeb_map;
  bool reeb_min = false;
  auto* reeb = app.add_subcommand("reeb", "Reeb graph of a function on a complex");
  reeb->add_option("instance", reeb_in, "Instance JSON")->required();
  reeb->add_option("--function", reeb_fn, "Function name when the instance has several");
  reeb->add_option("-o,--output", reeb_out, "Graph JSON (default stdout)");
  reeb->add_option("--dot", reeb_dot, "DOT export");
  reeb->add_option("--map", reeb_map, "Quotient map JSON");
  reeb->add_flag("--minimal", reeb_min, "Drop regular degree-2 nodes");

  // verify
  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "Check a map, coupling or zigzag witness");
  verify->add_option("witness", verify_in, "Map, coupling or zigzag JSON")->required();

  // metric
  std::string metric_in, metric_csv;
  std::vector<std::string> metric_points;
  auto* metric = app.add_subcommand("metric", "d_f between graph points");
  metric->add_option("graph", metric_in, "Graph JSON")->required();
  metric->add_option("--point", metric_points, "n<id> or e<id>:<value>; two points, or none for all node pairs");
  metric->add_option("-o,--output", metric_csv, "CSV output (default stdout)");

  // distortion
  int dist_n = 0, dist_density = 4;
  std::string dist_csv;
  auto* dist = app.add_subcommand("distortion", "Functional distortion of the cylinder candidate maps");
  dist->add_option("--cylinder", dist_n, "Polygon resolution n")->required()->check(CLI::Range(2, 4096));
  dist->add_option("--density", dist_density, "Samples per edge")->check(CLI::Range(1, 64));
  dist->add_option("--csv", dist_csv, "Correspondence table");

  // bound
  std::string bound_coupling, bound_graph, bound_point, bound_witness, bound_fn = "f", bound_gn = "g";
  bool bound_certify = false;
  auto* bound = app.add_subcommand("bound", "Certified upper bound from a coupling");
  auto* bc = bound->add_option("--coupling", bound_coupling, "Instance with f and g, or a coupling JSON");
  auto* bg = bound->add_option("--graph", bound_graph, "Graph JSON, with --point");
  bound->add_option("--point", bound_point, "Value c of the one-point graph");
  bound->add_option("--f", bound_fn, "First function name");
  bound->add_option("--g", bound_gn, "Second function name");
  bound->add_option("--witness", bound_witness, "Write the coupling JSON");
  bound->add_flag("--certify", bound_certify, "Re-verify both legs");
  bc->excludes(bg);

  // zigzag
  std::string zz_in, zz_witness, zz_fn = "f", zz_gn = "g";
  bool zz_certify = false;
  auto* zz = app.add_subcommand("zigzag", "One-space zigzag of a coupling, or certify a zigzag witness");
  zz->add_option("input", zz_in, "Instance with f and g, or with --certify a zigzag witness")->required();
  zz->add_option("--f", zz_fn, "First function name");
  zz->add_option("--g", zz_gn, "Second function name");
  zz->add_option("--witness", zz_witness, "Write the witness JSON");
  zz->add_flag("--certify", zz_certify, "Re-run every check on a witness file");

  // homotopy
  std::vector<std::string> hom_in;
  std::string hom_witness, hom_fn = "f", hom_gn = "g";
  bool hom_certify = false;
  auto* hom = app.add_subcommand("homotopy", "Straight-line homotopy zigzag from R_f to R_g");
  hom->add_option("instances", hom_in, "f.json g.json, or one instance with f and g")->required()->expected(1, 2);
  hom->add_option("--f", hom_fn, "First function name");
  hom->add_option("--g", hom_gn, "Second function name");
  hom->add_option("--witness", hom_witness, "Write the witness JSON");
  hom->add_flag("--certify", hom_certify, "Verify every leg and the cost bound");

  // generate
  std::string gen_kind, gen_out;
  int gen_n = 8, gen_vertices = 8, gen_range = 4, gen_extra = 2;
  std::uint64_t gen_seed = 0;
  std::string gen_c = "0";
  auto* gen = app.add_subcommand("generate", "Write an instance");
  gen->add_option("kind", gen_kind, "cylinder | circle | path | point | random")
      ->required()
      ->check(CLI::IsMember({"cylinder", "circle", "path", "point", "random"}));
  gen->add_option("-n", gen_n, "Resolution (cylinder, circle) or length (path)")->check(CLI::Range(1, 4096));
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--vertices", gen_vertices, "Random vertex count")->check(CLI::Range(1, 4096));
  gen->add_option("--range", gen_range, "Random value range")->check(CLI::Range(0, 1000000));
  gen->add_option("--extra", gen_extra, "Random extra triangles")->check(CLI::Range(0, 4096));
  gen->add_option("--c", gen_c, "Value of the point instance");
  gen->add_option("-o,--output", gen_out, "Instance JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*reeb) {
      auto in = parse_instance(read_text_file(reeb_in));
      auto r = compute_reeb(in.complex, in.function(reeb_fn));
      require(verify_reeb_quotient(r.map, r.subdivision.pull(in.function(reeb_fn))), "quotient map");
      const ReebGraph g = reeb_min ? minimalize(*r.graph) : *r.graph;
      emit(reeb_out, write_graph(g));
      if (!reeb_dot.empty()) emit(reeb_dot, graph_dot(g));
      if (!reeb_map.empty()) emit(reeb_map, write_map(r.map));
      std::cerr << summary(g) << "\n";
    } else if (*verify) {
      const std::string text = read_text_file(verify_in);
      switch (document_kind(text)) {
        case DocumentKind::kMap:
          require(verify_reeb_quotient(parse_map(text)), "map");
          break;
        case DocumentKind::kCoupling: {
          auto c = parse_coupling(text);
          require(verify_coupling(c), "coupling");
          std::cout << "bound " << to_string(coupling_bound(c)) << "\n";
          break;
        }
        case DocumentKind::kZigzag:
          certify_zigzag(parse_zigzag(text));
          break;
        case DocumentKind::kGraph:
          std::cout << summary(*parse_graph(text)) << "\n";
          break;
        case DocumentKind::kInstance:
          throw UsageError("instances carry no certificate; use reeb");
      }
      std::cout << "OK\n";
    } else if (*metric) {
      auto g = parse_graph(read_text_file(metric_in));
      if (metric_points.size() == 2) {
        const auto x = parse_graph_point(*g, metric_points[0]), y = parse_graph_point(*g, metric_points[1]);
        emit(metric_csv, to_string(d_f(*g, x, y)) + "\n");
      } else if (metric_points.empty()) {
        std::vector<GraphPoint> nodes;
        for (int i = 0; i < g->node_count(); ++i) nodes.push_back({Cell::node(i), g->value(i)});
        auto d = pairwise_d(*g, nodes);
        std::string csv = "a,b,d_f\n";
        for (int i = 0; i < g->node_count(); ++i) {
          for (int j = i + 1; j < g->node_count(); ++j)
            csv += std::to_string(i) + "," + std::to_string(j) + "," + to_string(d[i][j]) + "\n";
        }
        emit(metric_csv, csv);
      } else {
        throw UsageError("--point takes exactly two points");
      }
    } else if (*dist) {
      auto [phi, psi] = cylinder_distortion_maps(dist_n);
      auto rep = distortion(phi, psi, dist_density);
      std::cout << "distortion " << to_string(rep.distortion) << "\ndefect_phi " << to_string(rep.defect_phi)
                << "\ndefect_psi " << to_string(rep.defect_psi) << "\nbound " << to_string(rep.bound())
                << "\ntight " << (rep.tight ? "yes" : "no") << "\n";
      if (!dist_csv.empty()) emit(dist_csv, correspondence_csv(rep));
    } else if (*bound) {
      if (!bound_graph.empty()) {
        auto g = parse_graph(read_text_file(bound_graph));
        const Scalar c = parse_scalar(bound_point);
        auto prod = product_coupling(g, std::make_shared<const ReebGraph>(point_graph(c)));
        const Scalar b = coupling_bound(prod, bound_certify);
        if (b != point_distance(*g, c)) throw Violation("product coupling disagrees with the point distance");
        if (!bound_witness.empty()) emit(bound_witness, write_coupling(prod));
        std::cout << to_string(b) << "\n";
      } else if (!bound_coupling.empty()) {
        const std::string text = read_text_file(bound_coupling);
        Coupling c = [&] {
          if (document_kind(text) == DocumentKind::kCoupling) return parse_coupling(text);
          auto in = parse_instance(text);
          return reeb_coupling(in.complex, in.function(bound_fn), in.function(bound_gn));
        }();
        if (bound_certify) require(verify_coupling(c), "coupling");
        const Scalar b = coupling_bound(c, bound_certify);
        if (!bound_witness.empty()) emit(bound_witness, write_coupling(c));
        std::cout << to_string(b) << "\n";
      } else {
        throw UsageError("bound needs --coupling or --graph with --point");
      }
    } else if (*zz) {
      const std::string text = read_text_file(zz_in);
      if (zz_certify) {
        certify_zigzag(parse_zigzag(text));
        std::cout << "OK\n";
      } else {
        auto in = parse_instance(text);
        auto c = reeb_coupling(in.complex, in.function(zz_fn), in.function(zz_gn));
        ZigzagWitness w{zigzag_from_coupling(c), std::nullopt, sup_distance(in.function(zz_fn), in.function(zz_gn))};
        w.cost = zigzag_cost(w.diagram);
        const auto cells = chain_limit_cells(w.diagram.legs);
        if (!zz_witness.empty()) emit(zz_witness, write_zigzag(w, &cells));
        std::cout << "cost " << to_string(w.cost->cost) << "\nsup " << to_string(*w.sup_distance) << "\n";
      }
    } else if (*hom) {
      auto p = load_pair(hom_in, hom_fn, hom_gn);
      auto h = build_homotopy_zigzag(p.complex, p.f, p.g);
      ZigzagWitness w{h.diagram, zigzag_cost(h.diagram), h.sup_distance};
      std::cout << "stages " << h.diagram.legs.size() << "\ncost " << to_string(h.cost) << "\nsup "
                << to_string(h.sup_distance) << "\n";
      if (!hom_witness.empty()) emit(hom_witness, write_zigzag(w));
      if (hom_certify) {
        certify_zigzag(w);
        if (h.cost > h.sup_distance) throw Violation("cost exceeds the sup distance");
        std::cout << "cost ≤ ‖f−g‖∞: OK\n";
      }
    } else if (*gen) {
      Instance inst;
      if (gen_kind == "cylinder") {
        if (gen_n < 2) throw UsageError("cylinder needs n >= 2");
        inst = cylinder(gen_n);
      } else if (gen_kind == "circle") {
        if (gen_n < 2) throw UsageError("circle needs n >= 2");
        inst = circle(gen_n);
      } else if (gen_kind == "path") {
        inst = path_instance(gen_n);
      } else if (gen_kind == "point") {
        inst = point_instance(parse_scalar(gen_c));
      } else {
        inst = random_instance(RandomSpec{gen_seed, gen_vertices, gen_range, gen_extra});
      }
      std::vector<std::string> names{"f"};
      std::vector<PLFunction> fns{inst.f};
      if (inst.g) {
        names.push_back("g");
        fns.push_back(*inst.g);
      } else {
        names = {"value"};
      }
      emit(gen_out, write_instance(*inst.complex, names, fns));
    }
  } catch (const Violation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
