#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "reebkit/category.hpp"
#include "reebkit/quotient_map.hpp"

namespace reebkit {

/// A space with quotient maps onto two graphs.
struct Coupling {
  ComplexPtr space;
  ReebQuotientMap p_f;
  ReebQuotientMap p_g;

  const GraphPtr& rf() const { return p_f.target; }
  const GraphPtr& rg() const { return p_g.target; }
};

/// Both legs certified and sharing the space.
VerifyResult verify_coupling(const Coupling& c);

/// max over the space of |value(p_f) - value(p_g)|, attained at vertices.
/// With certify, throws std::invalid_argument when a leg fails verification.
Scalar coupling_bound(const Coupling& c, bool certify = false);

/// Vertex attaining coupling_bound.
VertexId coupling_maximizer(const Coupling& c);

Coupling identity_coupling(const GraphPtr& g);

/// R_f × R_g with the two projections.
Coupling product_coupling(const GraphPtr& rf, const GraphPtr& rg);

/// max over nodes of |value - c|.
Scalar point_distance(const ReebGraph& g, const Scalar& c);

/// Couplings (X, R_f, R_g) and (Y, R_g, R_h) glued over R_g.
/// Throws std::invalid_argument when the middle graphs differ.
Coupling compose_couplings(const Coupling& c1, const Coupling& c2);

/// The complex itself with its two canonical Reeb maps, on a common subdivision.
Coupling reeb_coupling(const ComplexPtr& k, const PLFunction& f, const PLFunction& g);

/// Best recorded upper bounds per ordered pair of graph names. A bound is
/// filed under its kind and every weaker kind: graph zigzags and couplings
/// also count as PL zigzags.
class BoundRegistry {
 public:
  enum class Kind { kCoupling, kGraphZigzag, kPLZigzag };

  void record(const std::string& a, const std::string& b, Kind kind, const Scalar& bound, std::string witness);
  std::optional<Scalar> best(const std::string& a, const std::string& b, Kind kind) const;
  struct Entry {
    std::string a, b;
    Kind kind;
    Scalar bound;
    std::string witness;
  };
  const std::vector<Entry>& log() const { return log_; }

 private:
  std::map<std::tuple<std::string, std::string, Kind>, Scalar> best_;
  std::vector<Entry> log_;
};

}  // namespace reebkit
