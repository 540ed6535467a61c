#pragma once

// Slow, independent reference implementations used only by the tests.

#include <vector>

#include "reebkit/coupling.hpp"
#include "reebkit/reeb_graph.hpp"

namespace oracle {

using reebkit::ComplexPtr;
using reebkit::GraphPoint;
using reebkit::PLFunction;
using reebkit::ReebGraph;
using reebkit::Scalar;

struct Subdivided {
  ComplexPtr complex;
  PLFunction f;
};

/// Barycentric subdivision; new vertices take the mean of the simplex values.
Subdivided barycentric(const ComplexPtr& k, const PLFunction& f);

/// Reeb graph from level-set components of sd²K, regular nodes contracted.
ReebGraph reeb_graph(const ComplexPtr& k, const PLFunction& f);

/// Contracts nodes with one edge below and one above.
ReebGraph contract_regular(const ReebGraph& g);

/// min over simple paths of (max value - min value), by enumeration.
Scalar d_f(const ReebGraph& g, const GraphPoint& x, const GraphPoint& y);

/// Tries every node permutation.
bool isomorphic(const ReebGraph& a, const ReebGraph& b);

/// max |f~ - g~| over a barycentric grid of the coupling space.
Scalar grid_coupling_cost(const reebkit::Coupling& c, int steps);

/// Random connected graph with integer node values in [-range, range].
ReebGraph random_graph(unsigned seed, int nodes, int extra_edges, int range);

}  // namespace oracle
