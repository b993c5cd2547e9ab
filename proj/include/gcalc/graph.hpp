#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gcalc {

using Mult = int;  // edge multiplicity of an ordered vertex pair

// Stability filter for enumeration and series generation.
//   kScon       — only strong connectivity is required (needs an explicit
//                 ordinary-vertex bound; there are infinitely many per weight)
//   kSemistable — every ordinary vertex has in ≥ 1, out ≥ 1, in + out ≥ 3
//   kStable     — every ordinary vertex has in ≥ 2 and out ≥ 2
enum class Stability { kScon, kSemistable, kStable };

// Graph families on one-pointed strongly connected graphs, keyed by the shape
// of the ordinary part (the graph with the marked vertex deleted).
//   kAll — no condition
//   kB   — det(A(ordinary part) − I) ≠ 0
//   kBT  — every SCC of the ordinary part is a single loop-free vertex or a
//          plain directed cycle (a loop counts as a 1-cycle)
//   kS   — the ordinary part is acyclic (no directed cycle, no loop)
enum class Family { kAll, kB, kBT, kS };

struct Degree {
  long long in = 0;
  long long out = 0;
};

// A pointed directed multigraph: `marked` labelled external vertices
// (f1..fm, order significant, never permuted) followed by `ordinary`
// interchangeable vertices, with a dense matrix of edge multiplicities.
// A diagonal entry counts loops; a loop adds 1 to in-degree and 1 to
// out-degree of its vertex.
class PointedGraph {
 public:
  PointedGraph() = default;
  PointedGraph(int marked, int ordinary);

  // Parses the text form produced by canonical_key(); accepts any valid
  // matrix, not only canonical ones.
  static PointedGraph from_key(const std::string& key);

  int marked_count() const { return marked_; }
  int ordinary_count() const { return ordinary_; }
  int total_vertices() const { return marked_ + ordinary_; }
  bool is_marked(int v) const { return v < marked_; }

  Mult multiplicity(int from, int to) const { return adj_[idx(from, to)]; }
  void set_multiplicity(int from, int to, Mult m);
  void add_edge(int from, int to, Mult count = 1);

  long long edge_count() const;
  // weight = |E| − #ordinary vertices (marked vertices don't count)
  long long weight() const { return edge_count() - ordinary_; }

  Degree degrees(int v) const;
  bool vertex_semistable(int v) const;
  bool vertex_stable(int v) const;
  bool is_semistable() const;  // over ordinary vertices only
  bool is_stable() const;

  // For two or more marked vertices strong connectivity is evaluated on the
  // merged graph (all marked vertices identified). A single-vertex graph is
  // strongly connected.
  bool strongly_connected() const;

  // Strongly connected components, each a sorted list of vertex indices of
  // this graph. ordinary_only restricts to the ordinary part.
  std::vector<std::vector<int>> scc_decompose(bool ordinary_only = false) const;

  PointedGraph ordinary_part() const;  // zero-pointed induced subgraph
  PointedGraph merge_marked() const;   // one-pointed; requires marked ≥ 1

  // Replaces one parallel edge instance (from, to, parallel_index) by a path
  // from → w → to through a fresh ordinary vertex.
  PointedGraph subdivide_edge(int from, int to, int parallel_index) const;

  // Lexicographically minimal row-major adjacency matrix over all
  // permutations of ordinary vertices (marked vertices stay pinned).
  PointedGraph canonical_form() const;
  std::string canonical_key() const;
  std::string key_of_this() const;  // text form of this matrix as-is

  // |Aut| = #(ordinary-vertex permutations fixing the matrix) × Π (a_ij)!
  // over all ordered pairs, diagonal included.
  long long aut_order() const;

  // Isomorphism as pointed graphs (marked labels respected).
  bool operator==(const PointedGraph& other) const;

 private:
  int idx(int from, int to) const { return from * total_vertices() + to; }
  void check_vertex(int v) const;
  // Calls fn(perm) for every ordinary permutation compatible with the forced
  // marked-row cell partition; perm maps canonical position -> original vertex.
  template <typename Fn>
  void for_each_cell_permutation(Fn&& fn) const;

  int marked_ = 0;
  int ordinary_ = 0;
  std::vector<Mult> adj_;
};

// Family membership of a one-pointed strongly connected graph. Throws
// std::invalid_argument if g is not one-pointed or not strongly connected.
std::set<Family> classify_family(const PointedGraph& g);
bool in_family(const PointedGraph& g, Family f);

}  // namespace gcalc
