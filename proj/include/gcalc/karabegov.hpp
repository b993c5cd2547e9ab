#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "gcalc/graph.hpp"
#include "gcalc/rational.hpp"
#include "gcalc/report.hpp"

namespace gcalc {

// A zero-pointed body carrying two external half-edges: an outgoing leg
// rooted at out_anchor and an incoming leg ending at in_anchor. The one
// degenerate shape — empty body, both anchors -1 — is the bare connector,
// whose two legs are joined to each other.
struct LeggedGraph {
  PointedGraph body;    // zero-pointed
  int out_anchor = -1;  // body vertex emitting the outgoing leg
  int in_anchor = -1;   // body vertex receiving the incoming leg
};

// Joins the outgoing leg's head to the incoming leg's tail at a fresh marked
// vertex: edges (out_anchor -> •) and (• -> in_anchor) are added, so
// |E(glued)| = |E(body)| + 2. The bare connector glues to the single marked
// loop (its joined legs close into one edge).
PointedGraph glue_legs(const LeggedGraph& h);

// Inverse of glue_legs on its image: requires a one-pointed graph whose
// marked vertex has in-degree 1 and out-degree 1.
LeggedGraph unglue(const PointedGraph& g);

// Builds the block-triangular union of the two zero-pointed parts (cross
// edges run gamma -> g only, given as (gamma vertex, g vertex, multiplicity))
// and verifies det(A − I) of the union equals the product of the parts'
// determinants.
VerificationReport det_factorization_check(
    const PointedGraph& gamma_part, const PointedGraph& g_part,
    const std::vector<std::tuple<int, int, Mult>>& cross_edges);

// Verifies |E(hdot)| = |E(gamma)| + 2 and the sign cancellation
// −(−1)^{|E(hdot)|} + (−1)^{|E(gamma)|} = 0 it implies.
VerificationReport edge_sign_relation_check(const PointedGraph& gamma, const PointedGraph& hdot);

// Three-factor variant with a designated sink block:
// |E(hdot)| = |E(gamma)| + |E(block)| + 1, hence
// −(−1)^{|E(hdot)|} + (−1)^{|E(gamma)|}(−1)^{|E(block)|+1} = 0.
VerificationReport edge_sign_relation_check(const PointedGraph& gamma, const PointedGraph& block,
                                            const PointedGraph& hdot);

// Re-targets the unique marked in-edge (b -> •) of gamma onto a fresh
// ordinary vertex R and closes it back: adds b -> R, a loop at R, and R -> •.
// Requires marked in-degree exactly 1; adds exactly 2 edges.
PointedGraph ric_extension(const PointedGraph& gamma);

// Re-targets the unique marked in-edge (b -> •) of gamma into an appended
// zero-pointed block: adds b -> v_in and v_k -> • (vertex indices within the
// block), plus the block's own edges; adds exactly |E(block)| + 1 edges.
PointedGraph scon_extension(const PointedGraph& gamma, const PointedGraph& block, int v_k,
                            int v_in);

// Which star product's flatness obstruction is assembled.
enum class ObstructionCase { kBT, kBerezin, kDualKbw };

// The order-d obstruction coefficient as a formal sum over glued targets
// (canonical key -> exact coefficient), stable targets only, zero
// coefficients dropped. Order 0 is the single bare-connector term with
// coefficient 1; orders 1 and 2 cancel to the empty sum. Orders above 2 are
// outside the calibrated fixtures and throw.
std::map<std::string, Rational> obstruction_contributions(ObstructionCase which, int order);

VerificationReport low_order_obstruction_check(ObstructionCase which, int order);

}  // namespace gcalc
