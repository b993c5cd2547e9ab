#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcalc/substitute.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcalc/enumerate.hpp"
#include "gcalc/graph.hpp"
#include "gcalc/rational.hpp"
#include "gcalc/spectral.hpp"
#include "util.hpp"

using gcalc::PointedGraph;
using gcalc::Rational;
using gcalc::SubgraphSelection;
using gcalc::testutil::make;

namespace {

std::vector<PointedGraph> one_pointed_ss_through(int max_weight) {
  std::vector<PointedGraph> out;
  for (int k = 0; k <= max_weight; ++k) {
    gcalc::EnumSpec spec;
    spec.weight = k;
    spec.stability = gcalc::Stability::kSemistable;
    auto batch = gcalc::enumerate_graphs(spec);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// One-pointed strongly connected graphs with |E| <= max_edges
// (|E| = weight + #ordinary bounds the ordinary count per weight).
std::vector<PointedGraph> scon_through_edges(int max_edges) {
  std::vector<PointedGraph> out;
  for (int w = 0; w <= max_edges; ++w) {
    gcalc::EnumSpec spec;
    spec.weight = w;
    spec.stability = gcalc::Stability::kScon;
    spec.max_ordinary = max_edges - w;
    auto batch = gcalc::enumerate_graphs(spec);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace

TEST_CASE("split_marked sends out-edges to f1, in-edges to f2, loops to f1->f2") {
  // Marked loop -> bare two-pointed connector f1 -> f2.
  PointedGraph loop = make(1, 0, {{0, 0, 1}});
  CHECK(gcalc::split_marked(loop).canonical_key() ==
        make(2, 0, {{0, 1, 1}}).canonical_key());

  // 2-cycle -> path f1 -> v -> f2.
  PointedGraph cycle = make(1, 1, {{0, 1, 1}, {1, 0, 1}});
  CHECK(gcalc::split_marked(cycle).canonical_key() ==
        make(2, 1, {{0, 2, 1}, {2, 1, 1}}).canonical_key());

  // Double marked loop -> doubled connector.
  PointedGraph loops2 = make(1, 0, {{0, 0, 2}});
  CHECK(gcalc::split_marked(loops2).canonical_key() ==
        make(2, 0, {{0, 1, 2}}).canonical_key());
}

TEST_CASE("merge_marked inverts split_marked on every small semistable graph") {
  for (const PointedGraph& g : one_pointed_ss_through(3)) {
    PointedGraph split = gcalc::split_marked(g);
    CHECK(split.marked_count() == 2);
    CHECK(split.edge_count() == g.edge_count());
    CHECK(split.merge_marked().canonical_key() == g.canonical_key());
  }
}

TEST_CASE("selection validation rejects malformed selections") {
  PointedGraph host = make(1, 1, {{0, 1, 2}, {1, 0, 1}});

  SubgraphSelection no_marked;
  no_marked.vertices = {1};
  CHECK_THROWS_AS(gcalc::induced_graph(host, no_marked), std::invalid_argument);

  SubgraphSelection dangling;
  dangling.vertices = {0};
  dangling.edges[{0, 1}] = 1;  // endpoint outside the subset
  CHECK_THROWS_AS(gcalc::induced_graph(host, dangling), std::invalid_argument);

  SubgraphSelection too_many;
  too_many.vertices = {0, 1};
  too_many.edges[{1, 0}] = 2;  // host only has one v->marked edge
  CHECK_THROWS_AS(gcalc::induced_graph(host, too_many), std::invalid_argument);

  SubgraphSelection zero_mult;
  zero_mult.vertices = {0, 1};
  zero_mult.edges[{0, 1}] = 0;  // chosen multiplicities must be >= 1
  CHECK_THROWS_AS(gcalc::induced_graph(host, zero_mult), std::invalid_argument);
}

TEST_CASE("induced_graph and instance_count on parallel edges") {
  // Host: marked -> v with multiplicity 3, v -> marked once.
  PointedGraph host = make(1, 1, {{0, 1, 3}, {1, 0, 1}});

  SubgraphSelection sel;
  sel.vertices = {0, 1};
  sel.edges[{0, 1}] = 2;
  sel.edges[{1, 0}] = 1;
  CHECK(sel.edge_total() == 3);
  CHECK(gcalc::induced_graph(host, sel).canonical_key() ==
        make(1, 1, {{0, 1, 2}, {1, 0, 1}}).canonical_key());
  CHECK(gcalc::instance_count(host, sel) == 3);  // C(3,2) * C(1,1)

  SubgraphSelection bare;
  bare.vertices = {0};
  CHECK(bare.edge_total() == 0);
  CHECK(gcalc::induced_graph(host, bare).canonical_key() == PointedGraph(1, 0).canonical_key());
  CHECK(gcalc::instance_count(host, bare) == 1);
}

TEST_CASE("contract bookkeeping: edges drop by the selection, vertices merge") {
  for (const PointedGraph& g : one_pointed_ss_through(3)) {
    for (const SubgraphSelection& sel : gcalc::bt_subgraphs(g)) {
      PointedGraph contracted = gcalc::contract(g, sel);
      CHECK(contracted.marked_count() == 1);
      CHECK(contracted.edge_count() == g.edge_count() - sel.edge_total());
      CHECK(contracted.ordinary_count() ==
            g.ordinary_count() - (static_cast<long long>(sel.vertices.size()) - 1));
    }
  }
}

TEST_CASE("contract keeps unselected edges inside the selection as marked loops") {
  // Host: 2-cycle with a doubled marked->v edge. Select the plain 2-cycle
  // (one of the two parallel instances); the remaining parallel edge has both
  // endpoints inside the selection span, so it becomes a marked loop.
  PointedGraph host = make(1, 1, {{0, 1, 2}, {1, 0, 1}});
  SubgraphSelection sel;
  sel.vertices = {0, 1};
  sel.edges[{0, 1}] = 1;
  sel.edges[{1, 0}] = 1;
  CHECK(gcalc::contract(host, sel).canonical_key() == make(1, 0, {{0, 0, 1}}).canonical_key());
}

TEST_CASE("subgraph family enumerations on the doubled marked loop") {
  PointedGraph g = make(1, 0, {{0, 0, 2}});
  auto bt = gcalc::bt_subgraphs(g);
  auto s = gcalc::s_subgraphs(g);
  // Selections: 0, 1, or 2 loops at the marked vertex. The ordinary part is
  // empty in every case, so all qualify for both families.
  CHECK(bt.size() == 3);
  CHECK(s.size() == 3);
}

TEST_CASE("s-family selections avoid ordinary cycles, bt-family keeps plain ones") {
  // Marked <-> v with a loop at v.
  PointedGraph g = make(1, 1, {{0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  auto bt = gcalc::bt_subgraphs(g);
  auto s = gcalc::s_subgraphs(g);

  std::set<std::string> bt_keys, s_keys;
  for (const auto& sel : bt) bt_keys.insert(gcalc::induced_graph(g, sel).canonical_key());
  for (const auto& sel : s) s_keys.insert(gcalc::induced_graph(g, sel).canonical_key());

  std::string with_loop = make(1, 1, {{0, 1, 1}, {1, 0, 1}, {1, 1, 1}}).canonical_key();
  std::string plain_cycle = make(1, 1, {{0, 1, 1}, {1, 0, 1}}).canonical_key();
  CHECK(bt_keys.count(with_loop) == 1);   // loop at v = 1-cycle SCC, allowed in BT
  CHECK(s_keys.count(with_loop) == 0);    // the loop is an ordinary cycle, not acyclic
  CHECK(bt_keys.count(plain_cycle) == 1);
  CHECK(s_keys.count(plain_cycle) == 1);

  // Every s-selection is also a bt-selection (acyclic ordinary parts have only
  // loop-free single-vertex SCCs).
  std::set<std::string> bt_signatures;
  for (const auto& sel : bt) {
    std::string sig;
    for (int v : sel.vertices) sig += std::to_string(v) + ";";
    for (const auto& [pair, mult] : sel.edges) {
      sig += std::to_string(pair.first) + ">" + std::to_string(pair.second) + "x" +
             std::to_string(mult) + ";";
    }
    bt_signatures.insert(sig);
  }
  for (const auto& sel : s) {
    std::string sig;
    for (int v : sel.vertices) sig += std::to_string(v) + ";";
    for (const auto& [pair, mult] : sel.edges) {
      sig += std::to_string(pair.first) + ">" + std::to_string(pair.second) + "x" +
             std::to_string(mult) + ";";
    }
    CHECK(bt_signatures.count(sig) == 1);
  }
}

TEST_CASE("worked inversion sum on the doubled marked loop") {
  // Three bt-selections: 0 loops (+1, contract = the graph itself, det of the
  // empty ordinary part = 1), 1 loop (-1, two instances), 2 loops (+1).
  PointedGraph g = make(1, 0, {{0, 0, 2}});
  CHECK(gcalc::inversion_identity_check(g) == 0);
  CHECK(gcalc::acyclic_sum_check(g) == 0);
}

TEST_CASE("identity checks reject unusable inputs") {
  // Bare point: no edges.
  CHECK_THROWS_AS(gcalc::inversion_identity_check(PointedGraph(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(gcalc::acyclic_sum_check(PointedGraph(1, 0)), std::invalid_argument);
  // Not strongly connected.
  PointedGraph dangling = make(1, 1, {{0, 1, 1}});
  CHECK_THROWS_AS(gcalc::inversion_identity_check(dangling), std::invalid_argument);
  // Not one-pointed.
  PointedGraph two = make(2, 0, {{0, 1, 1}, {1, 0, 1}});
  CHECK_THROWS_AS(gcalc::inversion_identity_check(two), std::invalid_argument);
  CHECK_THROWS_AS(gcalc::acyclic_sum_check(two), std::invalid_argument);
}

TEST_CASE("inversion and acyclic sums vanish on every semistable graph of weight <= 2") {
  for (const PointedGraph& g : one_pointed_ss_through(2)) {
    if (g.edge_count() == 0) continue;
    CAPTURE(g.canonical_key());
    CHECK(gcalc::inversion_identity_check(g) == 0);
    CHECK(gcalc::acyclic_sum_check(g) == 0);
  }
}

TEST_CASE("inversion and acyclic sums vanish on seeded random strongly connected graphs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    PointedGraph g = gcalc::random_scon_one_pointed(rng, 4, 6);
    CAPTURE(g.canonical_key());
    CHECK(gcalc::inversion_identity_check(g) == 0);
    CHECK(gcalc::acyclic_sum_check(g) == 0);
  }
}

TEST_CASE("graft into the bare point reproduces the inner graph once") {
  for (const PointedGraph& inner : one_pointed_ss_through(2)) {
    auto raw = gcalc::graft_raw(PointedGraph(1, 0), 0, inner);
    REQUIRE(raw.size() == 1);
    CHECK(raw.begin()->first == inner.canonical_key());
    CHECK(raw.begin()->second == 1);
  }
}

TEST_CASE("grafting the bare point into anything reproduces the outer graph once") {
  for (const PointedGraph& outer : one_pointed_ss_through(2)) {
    auto raw = gcalc::graft_raw(outer, 0, PointedGraph(1, 0));
    REQUIRE(raw.size() == 1);
    CHECK(raw.begin()->first == outer.canonical_key());
    CHECK(raw.begin()->second == 1);
  }
}

TEST_CASE("worked graft: marked loop into marked loop gives the doubled loop") {
  PointedGraph loop = make(1, 0, {{0, 0, 1}});
  auto raw = gcalc::graft_raw(loop, 0, loop);
  REQUIRE(raw.size() == 1);
  CHECK(raw.begin()->first == make(1, 0, {{0, 0, 2}}).canonical_key());
  CHECK(raw.begin()->second == 1);
}

TEST_CASE("raw graft counts total the endpoint assignment space") {
  // Every edge endpoint at the outer marked vertex reattaches independently to
  // one of the inner vertices, so the counts over all result classes must sum
  // to (inner vertices)^(marked in-degree + marked out-degree).
  std::vector<PointedGraph> graphs = scon_through_edges(2);
  for (const PointedGraph& outer : graphs) {
    for (const PointedGraph& inner : graphs) {
      gcalc::Degree deg = outer.degrees(0);
      long long expected = 1;
      for (long long i = 0; i < deg.in + deg.out; ++i) expected *= inner.total_vertices();
      long long total = 0;
      for (const auto& [key, count] : gcalc::graft_raw(outer, 0, inner)) total += count;
      CAPTURE(outer.canonical_key());
      CAPTURE(inner.canonical_key());
      CHECK(total == expected);
    }
  }
}

TEST_CASE("graft results keep both weight and ordinary count additive") {
  std::vector<PointedGraph> graphs = scon_through_edges(2);
  for (const PointedGraph& outer : graphs) {
    for (const PointedGraph& inner : graphs) {
      for (const auto& [key, count] : gcalc::graft_raw(outer, 0, inner)) {
        PointedGraph result = PointedGraph::from_key(key);
        CHECK(result.weight() == outer.weight() + inner.weight());
        CHECK(result.ordinary_count() == outer.ordinary_count() + inner.ordinary_count());
      }
    }
  }
}

TEST_CASE("worked alpha: doubled loop hosts the loop-in-loop substitution twice") {
  PointedGraph loop = make(1, 0, {{0, 0, 1}});
  PointedGraph loops2 = make(1, 0, {{0, 0, 2}});
  CHECK(gcalc::alpha(loop, loop, loops2) == 2);
  // Normalized: raw/(|Aut outer||Aut inner|) = 1, alpha/|Aut host| = 2/2 = 1.
  auto normalized = gcalc::graft_normalized(loop, loop);
  REQUIRE(normalized.size() == 1);
  CHECK(normalized.begin()->second == Rational(1));
}

TEST_CASE("alpha is zero when the invariants cannot match") {
  PointedGraph loop = make(1, 0, {{0, 0, 1}});
  PointedGraph loops2 = make(1, 0, {{0, 0, 2}});
  PointedGraph cycle = make(1, 1, {{0, 1, 1}, {1, 0, 1}});
  CHECK(gcalc::alpha(loop, loop, cycle) == 0);    // edge counts cannot split as 1+1=2
  CHECK(gcalc::alpha(loops2, loop, loops2) == 0); // 2+1 != 2
}

TEST_CASE("substitution identity holds for every pair with at most 3 edges") {
  std::vector<PointedGraph> graphs = scon_through_edges(3);
  long long instances = 0;
  for (const PointedGraph& outer : graphs) {
    for (const PointedGraph& inner : graphs) {
      gcalc::VerificationReport rep = gcalc::substitution_identity_check(outer, inner);
      CAPTURE(rep.config);
      CHECK(rep.pass());
      if (!rep.pass() && !rep.failures.empty()) {
        CAPTURE(rep.failures[0].key);
        CAPTURE(rep.failures[0].expected);
        CAPTURE(rep.failures[0].actual);
      }
      instances += rep.instance_count;
    }
  }
  CHECK(instances > 0);
}
