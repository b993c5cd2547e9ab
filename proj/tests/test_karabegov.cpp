#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcalc/karabegov.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gcalc/enumerate.hpp"
#include "gcalc/graph.hpp"
#include "gcalc/rational.hpp"
#include "gcalc/series.hpp"
#include "util.hpp"

using gcalc::LeggedGraph;
using gcalc::ObstructionCase;
using gcalc::PointedGraph;
using gcalc::Rational;
using gcalc::testutil::make;

namespace {

std::vector<PointedGraph> zero_pointed_blocks(int max_weight, int max_ordinary) {
  std::vector<PointedGraph> out;
  for (int w = 0; w <= max_weight; ++w) {
    gcalc::EnumSpec spec;
    spec.marked = 0;
    spec.weight = w;
    spec.stability = gcalc::Stability::kScon;
    spec.max_ordinary = max_ordinary;
    for (const PointedGraph& g : gcalc::enumerate_graphs(spec)) {
      if (g.total_vertices() >= 1) out.push_back(g);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("gluing the bare connector closes into the marked loop") {
  PointedGraph glued = gcalc::glue_legs(LeggedGraph{});
  CHECK(glued.canonical_key() == make(1, 0, {{0, 0, 1}}).canonical_key());
}

TEST_CASE("worked gluings: loop body and loop-free body") {
  // Single body vertex with one loop, both legs anchored there.
  LeggedGraph loop_body{make(0, 1, {{0, 0, 1}}), 0, 0};
  CHECK(gcalc::glue_legs(loop_body).canonical_key() ==
        make(1, 1, {{0, 1, 1}, {1, 0, 1}, {1, 1, 1}}).canonical_key());

  // Single loop-free body vertex: the legs close into a plain 2-cycle.
  LeggedGraph plain_body{PointedGraph(0, 1), 0, 0};
  CHECK(gcalc::glue_legs(plain_body).canonical_key() ==
        make(1, 1, {{0, 1, 1}, {1, 0, 1}}).canonical_key());

  // Two-vertex path body with legs at opposite ends: a 3-cycle.
  LeggedGraph path_body{make(0, 2, {{0, 1, 1}}), 1, 0};
  CHECK(gcalc::glue_legs(path_body).canonical_key() ==
        make(1, 2, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}).canonical_key());
}

TEST_CASE("gluing a real-anchored body always adds exactly two edges") {
  for (const PointedGraph& body : zero_pointed_blocks(2, 3)) {
    for (int out = 0; out < body.total_vertices(); ++out) {
      for (int in = 0; in < body.total_vertices(); ++in) {
        LeggedGraph h{body, out, in};
        PointedGraph glued = gcalc::glue_legs(h);
        CHECK(glued.marked_count() == 1);
        CHECK(glued.edge_count() == body.edge_count() + 2);
        gcalc::Degree deg = glued.degrees(0);
        CHECK(deg.in == 1);
        CHECK(deg.out == 1);
      }
    }
  }
}

TEST_CASE("unglue inverts glue_legs exactly") {
  // Bare connector round-trip.
  LeggedGraph bare = gcalc::unglue(gcalc::glue_legs(LeggedGraph{}));
  CHECK(bare.body.total_vertices() == 0);
  CHECK(bare.out_anchor == -1);
  CHECK(bare.in_anchor == -1);

  for (const PointedGraph& body : zero_pointed_blocks(2, 3)) {
    for (int out = 0; out < body.total_vertices(); ++out) {
      for (int in = 0; in < body.total_vertices(); ++in) {
        LeggedGraph h{body, out, in};
        LeggedGraph back = gcalc::unglue(gcalc::glue_legs(h));
        CHECK(back.body == body);
        CHECK(back.out_anchor == out);
        CHECK(back.in_anchor == in);
      }
    }
  }
}

TEST_CASE("glue and unglue reject malformed inputs") {
  // Anchors must point into the body.
  CHECK_THROWS_AS(gcalc::glue_legs(LeggedGraph{PointedGraph(0, 1), 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gcalc::glue_legs(LeggedGraph{PointedGraph(0, 0), 0, 0}),
                  std::invalid_argument);
  // Ungluing needs marked degree exactly (1, 1).
  CHECK_THROWS_AS(gcalc::unglue(make(1, 0, {{0, 0, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(gcalc::unglue(PointedGraph(1, 0)), std::invalid_argument);
  // Marked loop plus leftover ordinary vertices is not a glued legged graph.
  CHECK_THROWS_AS(gcalc::unglue(make(1, 1, {{0, 0, 1}, {1, 1, 2}})), std::invalid_argument);
}

TEST_CASE("determinant factorization: worked and trivial instances") {
  // Empty first block: det(combined) = 1 * det(second).
  for (const PointedGraph& block : zero_pointed_blocks(2, 3)) {
    gcalc::VerificationReport rep = gcalc::det_factorization_check(PointedGraph(0, 0), block, {});
    CHECK(rep.pass());
  }
  // One loop-free vertex feeding a 2-loop vertex: triangular determinant -1.
  PointedGraph single(0, 1);
  PointedGraph two_loops = make(0, 1, {{0, 0, 2}});
  gcalc::VerificationReport rep =
      gcalc::det_factorization_check(single, two_loops, {{0, 0, 1}});
  CHECK(rep.pass());
  REQUIRE(rep.failures.empty());
  CHECK(rep.instance_count == 1);
}

TEST_CASE("determinant factorization sweeps all small cross patterns") {
  std::vector<PointedGraph> blocks = zero_pointed_blocks(1, 2);
  for (const PointedGraph& first : blocks) {
    for (const PointedGraph& second : blocks) {
      int n1 = first.total_vertices();
      int n2 = second.total_vertices();
      for (int u = 0; u < n1; ++u) {
        for (int v = 0; v < n2; ++v) {
          for (int mult = 1; mult <= 2; ++mult) {
            gcalc::VerificationReport rep =
                gcalc::det_factorization_check(first, second, {{u, v, mult}});
            CAPTURE(first.canonical_key());
            CAPTURE(second.canonical_key());
            CHECK(rep.pass());
          }
        }
      }
    }
  }
}

TEST_CASE("determinant factorization survives random blocks") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    int n1 = 1 + static_cast<int>(rng() % 4);
    int n2 = 1 + static_cast<int>(rng() % 4);
    PointedGraph first = gcalc::random_digraph(rng, n1, 3);
    PointedGraph second = gcalc::random_digraph(rng, n2, 3);
    std::vector<std::tuple<int, int, gcalc::Mult>> cross;
    for (int u = 0; u < n1; ++u) {
      for (int v = 0; v < n2; ++v) {
        int m = static_cast<int>(rng() % 3);
        if (m > 0) cross.emplace_back(u, v, m);
      }
    }
    CHECK(gcalc::det_factorization_check(first, second, cross).pass());
  }
}

TEST_CASE("determinant factorization rejects marked blocks and bad cross edges") {
  PointedGraph block(0, 1);
  CHECK_THROWS_AS(gcalc::det_factorization_check(PointedGraph(1, 0), block, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gcalc::det_factorization_check(block, PointedGraph(1, 0), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gcalc::det_factorization_check(block, block, {{1, 0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gcalc::det_factorization_check(block, block, {{0, 1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gcalc::det_factorization_check(block, block, {{0, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("ric extension rebuilds the canceling partner of the marked loop") {
  PointedGraph loop = make(1, 0, {{0, 0, 1}});
  PointedGraph hdot = gcalc::ric_extension(loop);
  CHECK(hdot.canonical_key() ==
        make(1, 1, {{0, 1, 1}, {1, 0, 1}, {1, 1, 1}}).canonical_key());
  CHECK(hdot.edge_count() == loop.edge_count() + 2);
  CHECK(gcalc::edge_sign_relation_check(loop, hdot).pass());
}

TEST_CASE("ric extension on the loop-augmented 2-cycle matches the worked partner") {
  PointedGraph gamma = make(1, 1, {{0, 1, 1}, {1, 0, 1}, {1, 1, 1}});  // |E| = 3
  PointedGraph hdot = gcalc::ric_extension(gamma);
  CHECK(hdot.edge_count() == 5);
  CHECK(hdot.canonical_key() ==
        make(1, 2, {{0, 1, 1}, {1, 1, 1}, {1, 2, 1}, {2, 2, 1}, {2, 0, 1}}).canonical_key());
  CHECK(hdot.is_stable() == gamma.is_stable());
  gcalc::Degree deg = hdot.degrees(0);
  CHECK(deg.in == 1);
  CHECK(deg.out == 1);
  CHECK(gcalc::edge_sign_relation_check(gamma, hdot).pass());
}

TEST_CASE("ric extension requires marked in-degree exactly one") {
  CHECK_THROWS_AS(gcalc::ric_extension(make(1, 0, {{0, 0, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(gcalc::ric_extension(PointedGraph(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(gcalc::ric_extension(make(2, 0, {{0, 1, 1}, {1, 0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("scon extension edge count: |E| grows by the block size plus one") {
  PointedGraph loop = make(1, 0, {{0, 0, 1}});
  for (const PointedGraph& block : zero_pointed_blocks(1, 2)) {
    for (int v_k = 0; v_k < block.total_vertices(); ++v_k) {
      for (int v_in = 0; v_in < block.total_vertices(); ++v_in) {
        PointedGraph hdot = gcalc::scon_extension(loop, block, v_k, v_in);
        CHECK(hdot.edge_count() == loop.edge_count() + block.edge_count() + 1);
        CHECK(gcalc::edge_sign_relation_check(loop, block, hdot).pass());
      }
    }
  }
}

TEST_CASE("worked scon extension: loop through a 1-loop block gives the glued triangle") {
  PointedGraph loop = make(1, 0, {{0, 0, 1}});
  PointedGraph block = make(0, 1, {{0, 0, 1}});
  PointedGraph hdot = gcalc::scon_extension(loop, block, 0, 0);
  CHECK(hdot.canonical_key() ==
        make(1, 1, {{0, 1, 1}, {1, 0, 1}, {1, 1, 1}}).canonical_key());
  CHECK(hdot.edge_count() == 3);
}

TEST_CASE("scon extension validates its block and anchors") {
  PointedGraph loop = make(1, 0, {{0, 0, 1}});
  PointedGraph block = make(0, 1, {{0, 0, 1}});
  CHECK_THROWS_AS(gcalc::scon_extension(loop, PointedGraph(0, 0), 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gcalc::scon_extension(loop, block, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gcalc::scon_extension(loop, block, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(gcalc::scon_extension(make(1, 0, {{0, 0, 2}}), block, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("edge-sign relation sweep over the weight-bounded pipeline instances") {
  gcalc::GraphSeries bt = gcalc::bt_inverse_series(3);
  std::vector<PointedGraph> gammas;
  for (const auto& [key, coeff] : bt.terms()) {
    PointedGraph g = PointedGraph::from_key(key);
    if (g.degrees(0).in == 1) gammas.push_back(g);
  }
  CHECK(!gammas.empty());
  std::vector<PointedGraph> blocks = zero_pointed_blocks(1, 2);
  for (const PointedGraph& gamma : gammas) {
    CHECK(gcalc::edge_sign_relation_check(gamma, gcalc::ric_extension(gamma)).pass());
    for (const PointedGraph& block : blocks) {
      for (int v_k = 0; v_k < block.total_vertices(); ++v_k) {
        for (int v_in = 0; v_in < block.total_vertices(); ++v_in) {
          CHECK(gcalc::edge_sign_relation_check(
                    gamma, block, gcalc::scon_extension(gamma, block, v_k, v_in))
                    .pass());
        }
      }
    }
  }
}

TEST_CASE("order-0 obstruction is the bare connector with coefficient 1") {
  std::string connector = gcalc::glue_legs(LeggedGraph{}).canonical_key();
  for (ObstructionCase which :
       {ObstructionCase::kBT, ObstructionCase::kBerezin, ObstructionCase::kDualKbw}) {
    auto contributions = gcalc::obstruction_contributions(which, 0);
    REQUIRE(contributions.size() == 1);
    CHECK(contributions.begin()->first == connector);
    CHECK(contributions.begin()->second == Rational(1));
    CHECK(gcalc::low_order_obstruction_check(which, 0).pass());
  }
}

TEST_CASE("order-1 and order-2 obstructions vanish for all three cases") {
  for (ObstructionCase which :
       {ObstructionCase::kBT, ObstructionCase::kBerezin, ObstructionCase::kDualKbw}) {
    for (int order : {1, 2}) {
      CAPTURE(order);
      CHECK(gcalc::obstruction_contributions(which, order).empty());
      gcalc::VerificationReport rep = gcalc::low_order_obstruction_check(which, order);
      CHECK(rep.pass());
      CHECK(rep.instance_count >= 1);
    }
  }
}

TEST_CASE("the order-1 cancellation pairs the raw series term with its ric partner") {
  // The two contributions land on the same glued graph with coefficients +1
  // and -1: the weight-2 connector-shaped series term on one side, the ric
  // extension of the weight-1 loop term on the other.
  PointedGraph loop = make(1, 0, {{0, 0, 1}});
  PointedGraph triangle = make(1, 1, {{0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  gcalc::GraphSeries bt = gcalc::bt_inverse_series(2);
  CHECK(bt.coefficient(loop.canonical_key()) == Rational(-1));
  CHECK(bt.coefficient(triangle.canonical_key()) == Rational(-1));
  CHECK(gcalc::ric_extension(loop).canonical_key() == triangle.canonical_key());
}

TEST_CASE("obstruction orders beyond the calibrated range are rejected") {
  CHECK_THROWS_AS(gcalc::obstruction_contributions(ObstructionCase::kBT, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(gcalc::low_order_obstruction_check(ObstructionCase::kBerezin, -1),
                  std::invalid_argument);
}
