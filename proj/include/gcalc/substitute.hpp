#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcalc/graph.hpp"
#include "gcalc/rational.hpp"
#include "gcalc/report.hpp"

namespace gcalc {

// A subgraph H of a host graph: a vertex subset (always containing every
// marked vertex of the host) plus an edge sub-multiset supported inside the
// subset. Parallel edges are selected by count; instance_count() says how many
// edge-instance subgraphs of the host realize one selection.
struct SubgraphSelection {
  std::vector<int> vertices;                  // sorted host vertex indices
  std::map<std::pair<int, int>, Mult> edges;  // chosen multiplicity per ordered pair

  long long edge_total() const;
};

// The selection as its own pointed graph: the host's marked vertices first (in
// host order), then the selected ordinary vertices in host order.
PointedGraph induced_graph(const PointedGraph& host, const SubgraphSelection& sel);

// Number of edge-instance subgraphs realizing sel: Π over pairs of
// C(host multiplicity, selected multiplicity).
long long instance_count(const PointedGraph& host, const SubgraphSelection& sel);

// Splits the marked vertex of a one-pointed graph in two: f1 keeps the
// outgoing edges, f2 the incoming ones, and loops become f1 -> f2 edges.
// merge_marked() inverts this exactly.
PointedGraph split_marked(const PointedGraph& g);

// Collapses the selection to a new single marked vertex: selected edges
// disappear, all other edges survive with remapped endpoints (unselected
// edges inside the selection span become marked loops).
PointedGraph contract(const PointedGraph& g, const SubgraphSelection& sel);

// Plugs `inner` into marked slot `slot` (0-based) of `outer`: the slot vertex
// disappears and every endpoint of every edge instance formerly attached to it
// reattaches independently to some vertex of inner (marked or ordinary); a
// loop at the slot reattaches both of its endpoints independently. Marked
// order of each result: outer's slots before `slot`, then inner's marked
// vertices, then outer's remaining slots. Returns canonical key -> number of
// endpoint assignments producing that isomorphism class.
std::map<std::string, long long> graft_raw(const PointedGraph& outer, int slot,
                                           const PointedGraph& inner);

// Σ_G α(outer, inner; G)/|Aut(G)| · G for a one-pointed outer, evaluated via
// the assignment counts (the substitution identity makes the two equal;
// substitution_identity_check verifies that with α computed independently).
std::map<std::string, Rational> graft_normalized(const PointedGraph& outer,
                                                 const PointedGraph& inner);

// Number of subgraphs H' of host with H' isomorphic to inner (as pointed
// graphs) and host/H' isomorphic to outer, edge instances counted as distinct.
long long alpha(const PointedGraph& outer, const PointedGraph& inner, const PointedGraph& host);

// All selections whose induced graph is strongly connected and whose ordinary
// part is, respectively, a disjoint union of plain cycles and cycle-free
// vertices (bt_subgraphs) or acyclic (s_subgraphs). The host must be
// one-pointed and strongly connected. The bare marked-point selection is
// always present.
std::vector<SubgraphSelection> bt_subgraphs(const PointedGraph& g);
std::vector<SubgraphSelection> s_subgraphs(const PointedGraph& g);

// Σ over H in bt_subgraphs(g), edge instances distinct, of
// (−1)^{|E(H)|} · det(A((g/H)₋) − I). The inversion theorem makes this zero
// for every nontrivial strongly connected one-pointed g.
long long inversion_identity_check(const PointedGraph& g);

// Σ over H in s_subgraphs(g), edge instances distinct, of (−1)^{w(H)}.
// Zero for every nontrivial strongly connected one-pointed g.
long long acyclic_sum_check(const PointedGraph& g);

// Verifies, coefficient by coefficient, that the raw assignment counts divided
// by |Aut(outer)| |Aut(inner)| equal α(outer, inner; G)/|Aut(G)| with α
// computed independently by subgraph search.
VerificationReport substitution_identity_check(const PointedGraph& outer,
                                               const PointedGraph& inner);

}  // namespace gcalc
