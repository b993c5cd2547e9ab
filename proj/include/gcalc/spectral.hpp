#pragma once

#include <cstdint>
#include <vector>

#include "gcalc/graph.hpp"

namespace gcalc {

// det(A(g) − I) over all vertices of g, exact. The empty graph gives 1.
long long char_det(const PointedGraph& g);

// One component of a generalized linear subgraph: either an isolated vertex
// (no edges selected) or a plain directed cycle given as a vertex sequence
// v0 → v1 → … → v0 together with the chosen parallel-edge index for each hop.
struct LinearComponent {
  bool is_cycle = false;
  std::vector<int> vertices;      // cycle order; single entry when isolated
  std::vector<int> edge_choices;  // parallel indices, one per hop; empty when isolated
  int length() const { return is_cycle ? static_cast<int>(vertices.size()) : 0; }
};

// A spanning generalized linear subgraph: components cover every vertex
// exactly once. Sign = Π over components of (−1)^{length+1}, an isolated
// vertex counting as a 0-cycle.
struct LinearSubgraph {
  std::vector<LinearComponent> components;
  int sign() const;
};

// All spanning generalized linear subgraphs, parallel edges kept distinct.
std::vector<LinearSubgraph> enumerate_linear_subgraphs(const PointedGraph& g);

// Σ over spanning generalized linear subgraphs of the sign product, computed
// combinatorially (multiplicities multiply; no determinant involved).
long long linear_subgraph_sum(const PointedGraph& g);

}  // namespace gcalc
