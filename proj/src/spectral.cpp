#include "gcalc/spectral.hpp"

#include <stdexcept>

namespace gcalc {

long long char_det(const PointedGraph& g) {
  int n = g.total_vertices();
  if (n == 0) return 1;
  if (n > 20) throw std::invalid_argument("char_det: matrix too large");
  // Bareiss fraction-free elimination in __int128; intermediate entries are
  // minors of A − I and stay far below the 128-bit range at our sizes.
  std::vector<__int128> m(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i * n + j] = static_cast<__int128>(g.multiplicity(i, j)) - (i == j ? 1 : 0);

  __int128 sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i * n + k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return 0;
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap_row * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      m[i * n + k] = 0;
    }
    prev = m[k * n + k];
  }
  __int128 det = sign * m[(n - 1) * n + (n - 1)];
  if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("char_det: overflow");
  return static_cast<long long>(det);
}

int LinearSubgraph::sign() const {
  int s = 1;
  for (const auto& c : components)
    if ((c.length() + 1) % 2 != 0) s = -s;
  return s;
}

namespace {

// Shared recursion: picks the lowest uncovered vertex, covers it either as an
// isolated vertex or as the anchor of a directed cycle through uncovered
// vertices. `CycleSink` receives (vertex sequence, multiplicity product) per
// cycle when materializing, or just multiplies counts when summing.
struct LinearWalker {
  const PointedGraph& g;
  int n;
  std::vector<bool> covered;

  // Materializing enumeration
  std::vector<LinearSubgraph>* out = nullptr;
  LinearSubgraph current;

  // Counting
  long long total = 0;

  explicit LinearWalker(const PointedGraph& graph)
      : g(graph), n(graph.total_vertices()), covered(n, false) {}

  void run_sum(long long acc) {
    int v = first_uncovered();
    if (v == -1) {
      total += acc;
      return;
    }
    covered[v] = true;
    run_sum(-acc);  // isolated vertex: factor (−1)^{0+1}
    // cycles anchored at v
    std::vector<int> path{v};
    extend_sum(v, v, acc, path);
    covered[v] = false;
  }

  void extend_sum(int anchor, int at, long long acc, std::vector<int>& path) {
    // close the cycle
    Mult back = g.multiplicity(at, anchor);
    if (back > 0) {
      int len = static_cast<int>(path.size());
      long long factor = back * ((len + 1) % 2 == 0 ? 1LL : -1LL);
      run_sum(acc * factor);
    }
    for (int w = 0; w < n; ++w) {
      if (covered[w]) continue;
      Mult m = g.multiplicity(at, w);
      if (m <= 0) continue;
      covered[w] = true;
      path.push_back(w);
      extend_sum(anchor, w, acc * m, path);
      path.pop_back();
      covered[w] = false;
    }
  }

  void run_enum() {
    int v = first_uncovered();
    if (v == -1) {
      out->push_back(current);
      return;
    }
    covered[v] = true;
    LinearComponent isolated;
    isolated.is_cycle = false;
    isolated.vertices = {v};
    current.components.push_back(isolated);
    run_enum();
    current.components.pop_back();

    std::vector<int> path{v};
    std::vector<int> choices;
    extend_enum(v, v, path, choices);
    covered[v] = false;
  }

  void extend_enum(int anchor, int at, std::vector<int>& path, std::vector<int>& choices) {
    Mult back = g.multiplicity(at, anchor);
    for (int pick = 0; pick < back; ++pick) {
      LinearComponent cyc;
      cyc.is_cycle = true;
      cyc.vertices = path;
      cyc.edge_choices = choices;
      cyc.edge_choices.push_back(pick);
      current.components.push_back(std::move(cyc));
      run_enum();
      current.components.pop_back();
    }
    for (int w = 0; w < n; ++w) {
      if (covered[w]) continue;
      Mult m = g.multiplicity(at, w);
      for (int pick = 0; pick < m; ++pick) {
        covered[w] = true;
        path.push_back(w);
        choices.push_back(pick);
        extend_enum(anchor, w, path, choices);
        choices.pop_back();
        path.pop_back();
        covered[w] = false;
      }
    }
  }

  int first_uncovered() const {
    for (int v = 0; v < n; ++v)
      if (!covered[v]) return v;
    return -1;
  }
};

}  // namespace

std::vector<LinearSubgraph> enumerate_linear_subgraphs(const PointedGraph& g) {
  LinearWalker walker(g);
  std::vector<LinearSubgraph> out;
  walker.out = &out;
  walker.run_enum();
  return out;
}

long long linear_subgraph_sum(const PointedGraph& g) {
  LinearWalker walker(g);
  walker.run_sum(1);
  return walker.total;
}

}  // namespace gcalc
