#pragma once

// Frozen reference data: the published count table, the two full series
// layers, and the displayed low-order expansions, transcribed by hand as
// explicit adjacency lists. Tests compare library-computed series against
// these maps, so the regression surface is independent of the enumeration
// and coefficient code.

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcalc/graph.hpp"
#include "gcalc/rational.hpp"

namespace gcalc::golden {

struct GoldenTerm {
  PointedGraph graph;
  Rational coefficient;
};

struct EdgeSpec {
  int from;
  int to;
  Mult mult;
};

inline PointedGraph make_graph(int marked, int ordinary, std::initializer_list<EdgeSpec> edges) {
  PointedGraph g(marked, ordinary);
  for (const EdgeSpec& e : edges) g.add_edge(e.from, e.to, e.mult);
  return g;
}

// Counts of strongly connected stable one-pointed graphs by weight 0..6,
// with the family-restricted rows.
struct StableCounts {
  std::vector<long long> all, b, bt, s;
};

inline const StableCounts& stable_counts() {
  static const StableCounts counts{
      {1, 1, 2, 9, 61, 538, 5906},
      {1, 1, 1, 5, 36, 331, 3704},
      {1, 1, 2, 6, 24, 112, 620},
      {1, 1, 1, 2, 5, 15, 54},
  };
  return counts;
}

inline std::map<std::string, Rational> as_coefficient_map(const std::vector<GoldenTerm>& terms) {
  std::map<std::string, Rational> out;
  for (const GoldenTerm& t : terms) out.emplace(t.graph.canonical_key(), t.coefficient);
  return out;
}

// The full weight-4 layer of the inverse transform series over the BT family
// (24 stable graphs).
inline std::vector<GoldenTerm> bt_inverse_weight4() {
  return {
      {make_graph(1, 0, {{0, 0, 4}}), {1, 24}},
      {make_graph(1, 1, {{1, 0, 2}, {0, 1, 2}, {0, 0, 1}}), {-1, 4}},
      {make_graph(1, 1, {{1, 0, 2}, {0, 1, 3}}), {-1, 12}},
      {make_graph(1, 1, {{1, 0, 3}, {0, 1, 2}}), {-1, 12}},
      {make_graph(1, 1, {{1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}}), {-1, 2}},
      {make_graph(1, 1, {{1, 1, 1}, {1, 0, 1}, {0, 1, 2}, {0, 0, 1}}), {-1, 2}},
      {make_graph(1, 1, {{1, 1, 1}, {1, 0, 1}, {0, 1, 3}}), {-1, 6}},
      {make_graph(1, 1, {{1, 1, 1}, {1, 0, 2}, {0, 1, 1}, {0, 0, 1}}), {-1, 2}},
      {make_graph(1, 1, {{1, 1, 1}, {1, 0, 2}, {0, 1, 2}}), {-1, 4}},
      {make_graph(1, 1, {{1, 1, 1}, {1, 0, 3}, {0, 1, 1}}), {-1, 6}},
      {make_graph(1, 2, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 0, 2}, {1, 1, 1}}), {1, 2}},
      {make_graph(1, 2, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}}), {1, 8}},
      {make_graph(1, 2, {{0, 1, 1}, {1, 1, 1}, {1, 2, 2}, {2, 0, 2}}), {1, 4}},
      {make_graph(1, 2, {{0, 2, 2}, {1, 0, 1}, {2, 0, 1}, {2, 1, 1}, {1, 1, 1}}), {1, 2}},
      {make_graph(1, 2, {{0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}, {2, 0, 1}}),
       {1, 2}},
      {make_graph(1, 2, {{0, 2, 2}, {1, 0, 1}, {2, 1, 2}, {1, 1, 1}}), {1, 4}},
      {make_graph(1, 2, {{0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {2, 0, 1}, {1, 1, 1}, {2, 2, 1}}),
       {1, 2}},
      {make_graph(1, 2, {{0, 0, 1}, {0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {1, 1, 1}, {2, 2, 1}}),
       {1, 1}},
      {make_graph(1, 2, {{0, 1, 2}, {1, 2, 1}, {2, 0, 1}, {1, 1, 1}, {2, 2, 1}}), {1, 2}},
      {make_graph(1, 2, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 0, 1}, {1, 1, 1}, {2, 2, 1}}),
       {1, 1}},
      {make_graph(1, 2, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 0, 1}, {1, 1, 1}, {2, 2, 1}}),
       {1, 1}},
      {make_graph(1, 2, {{0, 1, 1}, {1, 2, 2}, {2, 0, 1}, {1, 1, 1}, {2, 2, 1}}), {1, 2}},
      {make_graph(1, 2, {{0, 1, 1}, {1, 2, 1}, {2, 0, 2}, {1, 1, 1}, {2, 2, 1}}), {1, 2}},
      {make_graph(1, 3,
                  {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}}),
       {-1, 1}},
  };
}

// The full weight-5 layer of the series over acyclic-ordinary-part graphs
// (15 stable graphs).
inline std::vector<GoldenTerm> kbw_weight5() {
  return {
      {make_graph(1, 0, {{0, 0, 5}}), {1, 120}},
      {make_graph(1, 1, {{1, 0, 2}, {0, 1, 2}, {0, 0, 2}}), {-1, 8}},
      {make_graph(1, 1, {{1, 0, 2}, {0, 1, 3}, {0, 0, 1}}), {-1, 12}},
      {make_graph(1, 1, {{1, 0, 2}, {0, 1, 4}}), {-1, 48}},
      {make_graph(1, 1, {{1, 0, 3}, {0, 1, 2}, {0, 0, 1}}), {-1, 12}},
      {make_graph(1, 1, {{1, 0, 3}, {0, 1, 3}}), {-1, 36}},
      {make_graph(1, 1, {{1, 0, 4}, {0, 1, 2}}), {-1, 48}},
      {make_graph(1, 2, {{0, 1, 2}, {0, 2, 1}, {1, 0, 1}, {1, 2, 1}, {2, 0, 2}}), {1, 4}},
      {make_graph(1, 2, {{0, 0, 1}, {0, 1, 2}, {1, 2, 2}, {2, 0, 2}}), {1, 8}},
      {make_graph(1, 2, {{0, 1, 3}, {1, 2, 2}, {2, 0, 2}}), {1, 24}},
      {make_graph(1, 2, {{0, 1, 2}, {0, 2, 1}, {1, 2, 2}, {2, 0, 2}}), {1, 8}},
      {make_graph(1, 2, {{0, 1, 2}, {1, 0, 1}, {1, 2, 2}, {2, 0, 2}}), {1, 8}},
      {make_graph(1, 2, {{0, 1, 2}, {1, 2, 3}, {2, 0, 2}}), {1, 24}},
      {make_graph(1, 2, {{0, 1, 2}, {1, 2, 2}, {2, 0, 3}}), {1, 24}},
      {make_graph(1, 3, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}}), {-1, 16}},
  };
}

namespace detail {
inline PointedGraph bare_point() { return PointedGraph(1, 0); }
inline PointedGraph marked_loops(Mult k) { return make_graph(1, 0, {{0, 0, k}}); }
}  // namespace detail

// Displayed low-order layers of the four one-pointed series, weight -> terms.

inline std::map<int, std::vector<GoldenTerm>> berezin_low_order() {
  using detail::bare_point;
  using detail::marked_loops;
  return {
      {0, {{bare_point(), {1, 1}}}},
      {1, {{marked_loops(1), {1, 1}}}},
      {2, {{marked_loops(2), {1, 2}}}},
      {3,
       {
           {marked_loops(3), {1, 6}},
           {make_graph(1, 1, {{1, 0, 2}, {0, 1, 2}}), {-1, 4}},
           {make_graph(1, 2, {{1, 0, 1}, {0, 2, 1}, {1, 2, 1}, {2, 1, 2}}), {-1, 2}},
           {make_graph(1, 2, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}}), {-1, 1}},
           {make_graph(1, 1, {{1, 1, 2}, {1, 0, 1}, {0, 1, 1}}), {1, 2}},
       }},
  };
}

inline std::map<int, std::vector<GoldenTerm>> bt_inverse_low_order() {
  using detail::bare_point;
  using detail::marked_loops;
  return {
      {0, {{bare_point(), {1, 1}}}},
      {1, {{marked_loops(1), {-1, 1}}}},
      {2,
       {
           {marked_loops(2), {1, 2}},
           {make_graph(1, 1, {{1, 1, 1}, {1, 0, 1}, {0, 1, 1}}), {-1, 1}},
       }},
      {3,
       {
           {marked_loops(3), {-1, 6}},
           {make_graph(1, 1, {{1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}}), {1, 1}},
           {make_graph(1, 1, {{1, 0, 2}, {0, 1, 2}}), {1, 4}},
           {make_graph(1, 1, {{1, 1, 1}, {1, 0, 1}, {0, 1, 2}}), {1, 2}},
           {make_graph(1, 1, {{1, 1, 1}, {1, 0, 2}, {0, 1, 1}}), {1, 2}},
           {make_graph(1, 2, {{1, 0, 1}, {0, 2, 1}, {2, 1, 1}, {1, 1, 1}, {2, 2, 1}}), {-1, 1}},
       }},
  };
}

inline std::map<int, std::vector<GoldenTerm>> kbw_low_order() {
  using detail::bare_point;
  using detail::marked_loops;
  return {
      {0, {{bare_point(), {1, 1}}}},
      {1, {{marked_loops(1), {1, 1}}}},
      {2, {{marked_loops(2), {1, 2}}}},
      {3,
       {
           {marked_loops(3), {1, 6}},
           {make_graph(1, 1, {{1, 0, 2}, {0, 1, 2}}), {-1, 4}},
       }},
      {4,
       {
           {marked_loops(4), {1, 24}},
           {make_graph(1, 1, {{1, 0, 2}, {0, 1, 2}, {0, 0, 1}}), {-1, 4}},
           {make_graph(1, 1, {{1, 0, 2}, {0, 1, 3}}), {-1, 12}},
           {make_graph(1, 1, {{1, 0, 3}, {0, 1, 2}}), {-1, 12}},
           {make_graph(1, 2, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}}), {1, 8}},
       }},
  };
}

inline std::map<int, std::vector<GoldenTerm>> kbw_inverse_low_order() {
  using detail::bare_point;
  using detail::marked_loops;
  return {
      {0, {{bare_point(), {1, 1}}}},
      {1, {{marked_loops(1), {-1, 1}}}},
      {2,
       {
           {marked_loops(2), {1, 2}},
           {make_graph(1, 1, {{1, 1, 1}, {1, 0, 1}, {0, 1, 1}}), {-1, 1}},
       }},
      {3,
       {
           {marked_loops(3), {-1, 6}},
           {make_graph(1, 1, {{1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}}), {1, 1}},
           {make_graph(1, 1, {{1, 0, 2}, {0, 1, 2}}), {1, 4}},
           {make_graph(1, 1, {{1, 1, 1}, {1, 0, 1}, {0, 1, 2}}), {1, 2}},
           {make_graph(1, 1, {{1, 1, 1}, {1, 0, 2}, {0, 1, 1}}), {1, 2}},
           {make_graph(1, 1, {{1, 1, 2}, {1, 0, 1}, {0, 1, 1}}), {1, 2}},
           {make_graph(1, 2, {{1, 0, 1}, {0, 2, 1}, {1, 2, 1}, {2, 1, 2}}), {-1, 2}},
           {make_graph(1, 2, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}}), {-1, 1}},
           {make_graph(1, 2, {{1, 0, 1}, {0, 2, 1}, {2, 1, 1}, {1, 1, 1}, {2, 2, 1}}), {-1, 1}},
       }},
  };
}

// Weight-1 layer of the zero-pointed log-kernel series.
inline std::vector<GoldenTerm> bergman_log_weight1() {
  return {
      {make_graph(0, 1, {{0, 0, 2}}), {-1, 2}},
      {make_graph(0, 2, {{0, 1, 2}, {1, 0, 1}}), {1, 2}},
  };
}

}  // namespace gcalc::golden
