#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reebkit/category.hpp"
#include "reebkit/coupling.hpp"
#include "reebkit/product_cells.hpp"
#include "reebkit/zigzag.hpp"

namespace reebkit {

/// Malformed input. Syntax errors carry a 1-based line and column plus the
/// byte offset; schema errors carry the JSON pointer of the offending value.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column, std::size_t offset);
  ParseError(const std::string& what, std::string pointer);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::size_t offset() const { return offset_; }
  const std::string& pointer() const { return pointer_; }

 private:
  std::size_t line_ = 0, column_ = 0, offset_ = 0;
  std::string pointer_;
};

/// A complex with named vertex functions. Vertex records look like
/// {"id":0,"value":"1/2"} for one function, or {"id":0,"f":"1","g":"-1/3"}.
struct InstanceFile {
  ComplexPtr complex;
  std::vector<std::string> names;
  std::vector<PLFunction> functions;

  /// By name; the empty name picks the only function, or "value".
  const PLFunction& function(std::string_view name = {}) const;
  bool has(std::string_view name) const;
};

InstanceFile parse_instance(std::string_view text);
/// Single function under "value", several under their own names.
std::string write_instance(const SimplicialComplex& k, const std::vector<std::string>& names,
                           const std::vector<PLFunction>& functions);

GraphPtr parse_graph(std::string_view text);
std::string write_graph(const ReebGraph& g);
std::string graph_dot(const ReebGraph& g, std::string_view name = "reeb");

/// Self-contained: source complex, target graph, vertex images, carriers.
ReebQuotientMap parse_map(std::string_view text);
std::string write_map(const ReebQuotientMap& m);

Coupling parse_coupling(std::string_view text);
std::string write_coupling(const Coupling& c);

struct ZigzagWitness {
  ZigzagDiagram diagram;
  std::optional<ZigzagCost> cost;
  std::optional<Scalar> sup_distance;
};

ZigzagWitness parse_zigzag(std::string_view text);
/// Graphs and spaces are listed once; legs refer to them by index. The limit
/// cell complex is embedded when given.
std::string write_zigzag(const ZigzagWitness& w, const ProductCellComplex* limit = nullptr);

/// Cells by factor simplex keys, vertices as tuples of factor points.
std::string write_limit(const ProductCellComplex& cells);

enum class DocumentKind { kInstance, kGraph, kMap, kCoupling, kZigzag };

/// Recognizes a document by its top-level keys.
DocumentKind document_kind(std::string_view text);

/// Throws std::invalid_argument when the file cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace reebkit
