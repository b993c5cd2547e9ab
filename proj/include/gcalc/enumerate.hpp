#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gcalc/graph.hpp"

namespace gcalc {

// What to enumerate: all isomorphism classes of pointed directed multigraphs
// with `marked` marked vertices and the given weight, subject to the
// stability filter, strong connectivity (merged view for marked ≥ 2), and —
// for one-pointed graphs — an optional family filter.
//
// max_ordinary is mandatory for Stability::kScon (the class is infinite per
// weight otherwise) and optional elsewhere (tightens the built-in bound).
struct EnumSpec {
  int marked = 1;
  int weight = 0;
  Stability stability = Stability::kStable;
  Family family = Family::kAll;
  std::optional<int> max_ordinary;
};

// Canonical representatives, sorted by canonical key. Throws
// std::invalid_argument for marked ∉ {0,1,2,3}, negative weight, kScon
// without max_ordinary, or a family filter on a non-one-pointed spec.
std::vector<PointedGraph> enumerate_graphs(const EnumSpec& spec);
std::vector<std::string> enumerate_keys(const EnumSpec& spec);

// Counts of stable one-pointed strongly connected graphs by weight 0..max_k,
// one row per family.
struct CountTable {
  std::vector<long long> all, b, bt, s;
};
CountTable count_table(int max_weight);

// Seeded fuzz helpers (deterministic for a fixed seed).
// A plain random digraph on `vertices` vertices with multiplicities in
// [0, max_mult] chosen uniformly.
PointedGraph random_digraph(std::mt19937_64& rng, int vertices, int max_mult);
// A random nontrivial strongly connected one-pointed graph with at most
// max_ordinary ordinary vertices and at most max_edges edges (rejection
// sampled; loops allowed).
PointedGraph random_scon_one_pointed(std::mt19937_64& rng, int max_ordinary, int max_edges);

}  // namespace gcalc
