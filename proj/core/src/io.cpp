#include "reebkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace reebkit {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column, std::size_t offset)
    : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ", offset " + std::to_string(offset) + ")"),
      line_(line),
      column_(column),
      offset_(offset) {}

ParseError::ParseError(const std::string& what, std::string pointer)
    : std::runtime_error(what + " at " + (pointer.empty() ? std::string("/") : pointer)), pointer_(std::move(pointer)) {}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending byte
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line, column, offset);
  }
}

// Schema access with the JSON pointer in every error.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const json& raw() const { return j_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, path_); }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }
  Node at(const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) fail(std::string("missing key \"") + key + "\"");
    return {*it, path_ + "/" + key};
  }
  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  Node operator[](std::size_t i) const {
    if (!j_.is_array() || i >= j_.size()) fail("expected an array of length > " + std::to_string(i));
    return {j_[i], path_ + "/" + std::to_string(i)};
  }
  long long integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<long long>();
  }
  int index(long long bound) const {
    long long v = integer();
    if (v < 0 || v >= bound) fail("index " + std::to_string(v) + " out of range [0," + std::to_string(bound) + ")");
    return static_cast<int>(v);
  }
  Scalar scalar() const {
    std::string text;
    if (j_.is_string()) {
      text = j_.get<std::string>();
    } else if (j_.is_number()) {
      text = j_.dump();
    } else {
      fail("expected a number or a \"p/q\" string");
    }
    try {
      return parse_scalar(text);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

 private:
  const json& j_;
  std::string path_;
};

json scalar_json(const Scalar& s) { return to_string(s); }

std::string cell_text(const Cell& c) { return (c.is_node() ? "n" : "e") + std::to_string(c.id); }

Cell parse_cell(const Node& n, const ReebGraph& g) {
  const std::string s = n.string();
  if (s.size() < 2 || (s[0] != 'n' && s[0] != 'e')) n.fail("expected a cell like \"n3\" or \"e0\"");
  int id = 0;
  try {
    std::size_t used = 0;
    id = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    n.fail("expected a cell like \"n3\" or \"e0\"");
  }
  const int bound = s[0] == 'n' ? g.node_count() : g.edge_count();
  if (id < 0 || id >= bound) n.fail("cell " + s + " out of range");
  return s[0] == 'n' ? Cell::node(id) : Cell::edge(id);
}

json simplices_json(const SimplicialComplex& k) {
  // maximal simplices only; faces are implied
  std::vector<char> covered(k.simplex_count(), 0);
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    for (SimplexId f : k.faces_of(s)) {
      if (f != s) covered[f] = 1;
    }
  }
  json out = json::array();
  for (SimplexId s = 0; s < k.simplex_count(); ++s) {
    if (covered[s] || k.dimension_of(s) == 0) continue;
    auto vs = k.vertices_of(s);
    out.push_back(std::vector<int>(vs.begin(), vs.end()));
  }
  return out;
}

json complex_json(const SimplicialComplex& k) {
  return {{"vertex_count", k.vertex_count()}, {"simplices", simplices_json(k)}};
}

std::vector<std::vector<VertexId>> parse_simplices(const Node& n, int vertex_count) {
  std::vector<std::vector<VertexId>> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Node s = n[i];
    std::vector<VertexId> vs;
    for (std::size_t j = 0; j < s.size(); ++j) vs.push_back(s[j].index(vertex_count));
    std::sort(vs.begin(), vs.end());
    if (vs.empty() || std::adjacent_find(vs.begin(), vs.end()) != vs.end()) s.fail("simplex needs distinct vertices");
    if (vs.size() > 4) s.fail("simplices above dimension 3 are not supported");
    out.push_back(std::move(vs));
  }
  return out;
}

ComplexPtr build_complex(const Node& n, int vertex_count) {
  auto simplices = parse_simplices(n, vertex_count);
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  try {
    return std::make_shared<const SimplicialComplex>(
        SimplicialComplex::from_simplices(vertex_count, std::move(simplices)));
  } catch (const std::invalid_argument& e) {
    n.fail(e.what());
  }
}

ComplexPtr parse_complex_node(const Node& n) {
  const long long count = n.at("vertex_count").integer();
  if (count < 1) n.at("vertex_count").fail("need at least one vertex");
  return build_complex(n.at("simplices"), static_cast<int>(count));
}

json graph_json(const ReebGraph& g) {
  json nodes = json::array();
  for (int i = 0; i < g.node_count(); ++i) nodes.push_back({{"id", i}, {"value", to_string(g.value(i))}});
  json edges = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    edges.push_back({ed.lower, ed.upper, ed.multiplicity});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

GraphPtr parse_graph_node(const Node& n) {
  Node nodes = n.at("nodes");
  const std::size_t count = nodes.size();
  if (count == 0) nodes.fail("a graph needs a node");
  std::vector<std::optional<Scalar>> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    Node rec = nodes[i];
    const int id = rec.at("id").index(static_cast<long long>(count));
    if (values[id]) rec.at("id").fail("duplicate node id");
    values[id] = rec.at("value").scalar();
  }
  std::vector<Scalar> vals;
  for (auto& v : values) vals.push_back(*v);
  std::vector<GraphEdge> edges;
  Node es = n.at("edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    Node e = es[i];
    const std::size_t len = e.size();
    if (len != 2 && len != 3) e.fail("edge must be [lower, upper] or [lower, upper, multiplicity]");
    GraphEdge ed{e[0].index(static_cast<long long>(count)), e[1].index(static_cast<long long>(count)), 0};
    if (len == 3) ed.multiplicity = static_cast<int>(e[2].integer());
    edges.push_back(ed);
  }
  try {
    return std::make_shared<const ReebGraph>(std::move(vals), std::move(edges));
  } catch (const std::invalid_argument& e) {
    es.fail(e.what());
  }
}

json point_json(const ComplexPoint& p) {
  json bary = json::array();
  for (const auto& b : p.barycentric) bary.push_back(scalar_json(b));
  return {{"simplex", p.simplex}, {"barycentric", bary}};
}

ComplexPoint parse_point(const Node& n, const SimplicialComplex& k) {
  ComplexPoint p;
  p.simplex = n.at("simplex").index(k.simplex_count());
  Node bary = n.at("barycentric");
  if (bary.size() != k.vertices_of(p.simplex).size()) bary.fail("one weight per simplex vertex");
  Scalar sum = 0;
  for (std::size_t i = 0; i < bary.size(); ++i) {
    p.barycentric.push_back(bary[i].scalar());
    if (p.barycentric.back() <= 0) bary[i].fail("weights must be positive");
    sum += p.barycentric.back();
  }
  if (sum != 1) bary.fail("weights must sum to 1");
  return p;
}

json leg_json(const ReebQuotientMap& m) {
  json images = json::array();
  for (const auto& y : m.images) images.push_back({cell_text(y.cell), to_string(y.value)});
  json carriers = json::array();
  for (const auto& c : m.carriers) carriers.push_back(cell_text(c));
  return {{"images", images}, {"carriers", carriers}};
}

ReebQuotientMap parse_leg(const Node& n, const ComplexPtr& k, const GraphPtr& g) {
  ReebQuotientMap m{k, g, {}, {}};
  Node images = n.at("images");
  if (images.size() != static_cast<std::size_t>(k->vertex_count())) images.fail("one image per source vertex");
  for (std::size_t v = 0; v < images.size(); ++v) {
    Node y = images[v];
    if (y.size() != 2) y.fail("image must be [cell, value]");
    const Cell c = parse_cell(y[0], *g);
    const Scalar value = y[1].scalar();
    const bool inside = c.is_node() ? value == g->value(c.id)
                                    : g->lower_value(c.id) <= value && value <= g->upper_value(c.id);
    if (!inside) y.fail("value outside its cell");
    m.images.push_back(g->normalize(c, value));
  }
  if (n.has("carriers")) {
    Node carriers = n.at("carriers");
    if (carriers.size() != static_cast<std::size_t>(k->simplex_count())) carriers.fail("one carrier per simplex");
    for (std::size_t s = 0; s < carriers.size(); ++s) m.carriers.push_back(parse_cell(carriers[s], *g));
  } else {
    try {
      m.carriers = infer_carriers(*k, *g, m.images);
    } catch (const std::exception& e) {
      images.fail(e.what());
    }
  }
  return m;
}

json map_json(const ReebQuotientMap& m) {
  json out = leg_json(m);
  out["source"] = complex_json(*m.source);
  out["target"] = graph_json(*m.target);
  return out;
}

ReebQuotientMap parse_map_node(const Node& n) {
  return parse_leg(n, parse_complex_node(n.at("source")), parse_graph_node(n.at("target")));
}

json limit_json(const ProductCellComplex& cells) {
  json cs = json::array();
  for (const auto& c : cells.cells()) cs.push_back({{"key", c.key}, {"dimension", c.dimension}});
  json vs = json::array();
  for (int v = 0; v < cells.vertex_count(); ++v) {
    json tuple = json::array();
    for (const auto& p : cells.vertex_point(v)) tuple.push_back(point_json(p));
    vs.push_back({{"cell", cells.vertex_cell(v)}, {"points", tuple}});
  }
  return {{"factors", cells.factor_count()}, {"cells", cs}, {"vertices", vs}};
}

template <typename F>
auto with_root(std::string_view text, F&& f) {
  json j = parse_json(text);
  return f(Node(j, ""));
}

}  // namespace

const PLFunction& InstanceFile::function(std::string_view name) const {
  if (name.empty()) {
    if (functions.size() == 1) return functions.front();
    name = "value";
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return functions[i];
  }
  throw std::invalid_argument("instance has no function \"" + std::string(name) + "\"");
}

bool InstanceFile::has(std::string_view name) const { return std::find(names.begin(), names.end(), name) != names.end(); }

InstanceFile parse_instance(std::string_view text) {
  return with_root(text, [](const Node& root) {
    Node verts = root.at("vertices");
    const std::size_t count = verts.size();
    if (count == 0) verts.fail("a complex needs a vertex");
    InstanceFile out;
    std::vector<std::vector<std::optional<Scalar>>> values;
    std::vector<char> seen(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
      Node rec = verts[i];
      if (!rec.raw().is_object()) rec.fail("expected an object");
      const int id = rec.at("id").index(static_cast<long long>(count));
      if (seen[id]) rec.at("id").fail("duplicate vertex id");
      seen[id] = 1;
      for (const auto& [key, _] : rec.raw().items()) {
        if (key == "id") continue;
        auto it = std::find(out.names.begin(), out.names.end(), key);
        if (it == out.names.end()) {
          if (i > 0) rec.fail("function \"" + key + "\" missing on earlier vertices");
          out.names.push_back(key);
          values.emplace_back(count);
          it = out.names.end() - 1;
        }
        values[it - out.names.begin()][id] = rec.at(key.c_str()).scalar();
      }
    }
    if (out.names.empty()) verts.fail("vertices carry no function values");
    for (std::size_t f = 0; f < out.names.size(); ++f) {
      std::vector<Scalar> vals;
      for (std::size_t v = 0; v < count; ++v) {
        if (!values[f][v]) verts.fail("vertex " + std::to_string(v) + " lacks \"" + out.names[f] + "\"");
        vals.push_back(*values[f][v]);
      }
      out.functions.emplace_back(std::move(vals));
    }
    out.complex = build_complex(root.at("simplices"), static_cast<int>(count));
    return out;
  });
}

std::string write_instance(const SimplicialComplex& k, const std::vector<std::string>& names,
                           const std::vector<PLFunction>& functions) {
  if (names.size() != functions.size() || names.empty()) throw std::invalid_argument("one name per function");
  json verts = json::array();
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    json rec = {{"id", v}};
    for (std::size_t f = 0; f < names.size(); ++f) rec[names[f]] = to_string(functions[f][v]);
    verts.push_back(rec);
  }
  json out = {{"vertices", verts}, {"simplices", simplices_json(k)}};
  return out.dump(2) + "\n";
}

GraphPtr parse_graph(std::string_view text) { return with_root(text, parse_graph_node); }

std::string write_graph(const ReebGraph& g) { return graph_json(g).dump(2) + "\n"; }

std::string graph_dot(const ReebGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  rankdir=BT;\n";
  for (int i = 0; i < g.node_count(); ++i) out << "  n" << i << " [label=\"" << to_string(g.value(i)) << "\"];\n";
  for (int e = 0; e < g.edge_count(); ++e) out << "  n" << g.edge(e).lower << " -- n" << g.edge(e).upper << ";\n";
  out << "}\n";
  return out.str();
}

ReebQuotientMap parse_map(std::string_view text) { return with_root(text, parse_map_node); }

std::string write_map(const ReebQuotientMap& m) { return map_json(m).dump(2) + "\n"; }

Coupling parse_coupling(std::string_view text) {
  return with_root(text, [](const Node& root) {
    ComplexPtr k = parse_complex_node(root.at("space"));
    Coupling c{k,
               parse_leg(root.at("p_f"), k, parse_graph_node(root.at("p_f").at("target"))),
               parse_leg(root.at("p_g"), k, parse_graph_node(root.at("p_g").at("target")))};
    return c;
  });
}

std::string write_coupling(const Coupling& c) {
  json pf = leg_json(c.p_f), pg = leg_json(c.p_g);
  pf["target"] = graph_json(*c.rf());
  pg["target"] = graph_json(*c.rg());
  json out = {{"space", complex_json(*c.space)}, {"p_f", pf}, {"p_g", pg}};
  return out.dump(2) + "\n";
}

ZigzagWitness parse_zigzag(std::string_view text) {
  return with_root(text, [](const Node& root) {
    ZigzagWitness w;
    Node graphs = root.at("graphs");
    for (std::size_t i = 0; i < graphs.size(); ++i) w.diagram.graphs.push_back(parse_graph_node(graphs[i]));
    Node spaces = root.at("spaces");
    std::vector<ComplexPtr> ks;
    for (std::size_t i = 0; i < spaces.size(); ++i) ks.push_back(parse_complex_node(spaces[i]));
    Node legs = root.at("legs");
    if (ks.empty() || legs.size() != ks.size() || graphs.size() != ks.size() + 1)
      legs.fail("need n spaces, n leg pairs and n+1 graphs");
    for (std::size_t i = 0; i < ks.size(); ++i) {
      w.diagram.legs.emplace_back(parse_leg(legs[i].at("left"), ks[i], w.diagram.graphs[i]),
                                  parse_leg(legs[i].at("right"), ks[i], w.diagram.graphs[i + 1]));
    }
    if (root.has("sup_distance")) w.sup_distance = root.at("sup_distance").scalar();
    if (root.has("cost")) {
      Node c = root.at("cost");
      ZigzagCost cost;
      cost.cost = c.at("value").scalar();
      Node pts = c.at("maximizer");
      if (pts.size() != ks.size()) pts.fail("one maximizer point per space");
      for (std::size_t i = 0; i < ks.size(); ++i) cost.maximizer.push_back(parse_point(pts[i], *ks[i]));
      Node vals = c.at("values");
      for (std::size_t i = 0; i < vals.size(); ++i) cost.values.push_back(vals[i].scalar());
      w.cost = std::move(cost);
    }
    return w;
  });
}

std::string write_zigzag(const ZigzagWitness& w, const ProductCellComplex* limit) {
  const auto& z = w.diagram;
  json graphs = json::array();
  for (const auto& g : z.graphs) graphs.push_back(graph_json(*g));
  json spaces = json::array(), legs = json::array();
  for (const auto& [a, b] : z.legs) {
    spaces.push_back(complex_json(*a.source));
    legs.push_back({{"left", leg_json(a)}, {"right", leg_json(b)}});
  }
  json out = {{"graphs", graphs}, {"spaces", spaces}, {"legs", legs}};
  if (w.sup_distance) out["sup_distance"] = to_string(*w.sup_distance);
  if (w.cost) {
    json pts = json::array(), vals = json::array();
    for (const auto& p : w.cost->maximizer) pts.push_back(point_json(p));
    for (const auto& v : w.cost->values) vals.push_back(to_string(v));
    out["cost"] = {{"value", to_string(w.cost->cost)}, {"maximizer", pts}, {"values", vals}};
  }
  if (limit) out["limit"] = limit_json(*limit);
  return out.dump(2) + "\n";
}

std::string write_limit(const ProductCellComplex& cells) { return limit_json(cells).dump(2) + "\n"; }

DocumentKind document_kind(std::string_view text) {
  return with_root(text, [](const Node& root) {
    if (root.has("legs")) return DocumentKind::kZigzag;
    if (root.has("space")) return DocumentKind::kCoupling;
    if (root.has("source")) return DocumentKind::kMap;
    if (root.has("nodes")) return DocumentKind::kGraph;
    if (root.has("vertices")) return DocumentKind::kInstance;
    root.fail("unrecognized document");
  });
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace reebkit
