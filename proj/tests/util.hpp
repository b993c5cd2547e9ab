#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "gcalc/graph.hpp"

namespace gcalc::testutil {

struct Edge {
  int from;
  int to;
  Mult mult;
};

inline PointedGraph make(int marked, int ordinary, std::initializer_list<Edge> edges) {
  PointedGraph g(marked, ordinary);
  for (const auto& e : edges) g.add_edge(e.from, e.to, e.mult);
  return g;
}

// Relabels ordinary vertices: slot i of the result carries the rows/columns of
// ordinary vertex perm[i] of g. Marked vertices stay pinned.
inline PointedGraph permute_ordinary(const PointedGraph& g, const std::vector<int>& perm) {
  int m = g.marked_count(), n = g.ordinary_count();
  PointedGraph h(m, n);
  auto map = [&](int v) { return v < m ? v : m + perm[v - m]; };
  for (int i = 0; i < m + n; ++i)
    for (int j = 0; j < m + n; ++j) h.set_multiplicity(i, j, g.multiplicity(map(i), map(j)));
  return h;
}

// Independent oracle for aut_order(): tries every ordinary permutation.
inline long long brute_aut(const PointedGraph& g) {
  int m = g.marked_count(), n = g.ordinary_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long fixing = 0;
  do {
    auto map = [&](int v) { return v < m ? v : m + perm[v - m]; };
    bool ok = true;
    for (int i = 0; ok && i < m + n; ++i)
      for (int j = 0; j < m + n; ++j)
        if (g.multiplicity(map(i), map(j)) != g.multiplicity(i, j)) {
          ok = false;
          break;
        }
    if (ok) ++fixing;
  } while (std::next_permutation(perm.begin(), perm.end()));
  long long factor = 1;
  for (int i = 0; i < m + n; ++i)
    for (int j = 0; j < m + n; ++j)
      for (Mult k = 2; k <= g.multiplicity(i, j); ++k) factor *= k;
  return fixing * factor;
}

// Independent oracle for canonical_form(): minimum over every ordinary
// permutation, not only the cell-compatible ones. Compares matrices
// numerically in row-major order.
inline PointedGraph brute_canonical(const PointedGraph& g) {
  int m = g.marked_count(), n = g.ordinary_count();
  auto flat = [&](const PointedGraph& h) {
    std::vector<Mult> v;
    for (int i = 0; i < m + n; ++i)
      for (int j = 0; j < m + n; ++j) v.push_back(h.multiplicity(i, j));
    return v;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PointedGraph best = permute_ordinary(g, perm);
  std::vector<Mult> best_flat = flat(best);
  while (std::next_permutation(perm.begin(), perm.end())) {
    PointedGraph cand = permute_ordinary(g, perm);
    std::vector<Mult> cand_flat = flat(cand);
    if (cand_flat < best_flat) {
      best_flat = std::move(cand_flat);
      best = std::move(cand);
    }
  }
  return best;
}

}  // namespace gcalc::testutil
