#pragma once

#include "gcalc/report.hpp"

namespace gcalc::suites {

// Ready-made verification suites shared by the command-line surface and the
// acceptance gate. Every suite is deterministic for a fixed configuration
// (randomized ones take an explicit seed) and returns a VerificationReport
// whose config string echoes the effective parameters.

// inversion_identity_check == 0 on every one-pointed semistable graph of
// weight <= max_weight with at least one edge, plus `trials` seeded random
// strongly connected graphs (<= 5 ordinary vertices, <= 8 edges).
VerificationReport run_inversion_suite(int max_weight, long long trials,
                                       unsigned long long seed);

// Same sweep for acyclic_sum_check == 0.
VerificationReport run_acyclic_sum_suite(int max_weight, long long trials,
                                         unsigned long long seed);

// Raw-graft counts against independently counted substitution instances for
// every ordered pair of strongly connected one-pointed graphs with at most
// max_edges edges each.
VerificationReport run_substitution_suite(int max_edges);

// Subdividing any edge flips det(A - I): exhaustive over one-pointed
// semistable graphs of weight <= max_weight and zero-pointed semistable graphs
// of weight <= min(max_weight, 2), every edge slot.
VerificationReport run_subdivision_suite(int max_weight);

// det(A - I) equals the signed generalized-linear-subgraph sum on the same
// enumerated sets plus `trials` random digraphs (<= 7 vertices, mult <= 3).
VerificationReport run_coefficient_theorem_suite(int max_weight, long long trials,
                                                 unsigned long long seed);

// Both inverse pairs compose to the identity series in both orders, built in
// scon mode at (max_weight, max_ordinary).
VerificationReport run_compose_inverse_suite(int max_weight, int max_ordinary);

// Slot-1 and slot-2 star compositions agree for both star products on every
// retained three-pointed target (weight <= max_weight, <= max_ordinary
// ordinary vertices).
VerificationReport run_associativity_suite(int max_weight, int max_ordinary);

// Block-triangular determinant factorization over the enumerated small blocks
// with every one-way cross pattern of <= 3 edges, and over seeded random
// block pairs (<= 4 vertices per block).
VerificationReport run_det_factorization_enumerated();
VerificationReport run_det_factorization_fuzz(long long trials, unsigned long long seed);

// Edge-count sign relations on pipeline-constructed partners of every
// weight <= 3 series graph with marked in-degree 1.
VerificationReport run_edge_sign_sweep();

// All nine low-order obstruction fixtures (three cases, orders 0-2).
VerificationReport run_obstruction_fixtures();

// The four checks above folded into one report.
VerificationReport run_karabegov_suite(long long trials, unsigned long long seed);

// Counts and series layers against the frozen reference data: the per-family
// count table (weights 0..min(max_weight, 6)), the weight-4 and weight-5
// layers, the four displayed low-order expansions, and the weight-1 log
// layer.
VerificationReport run_tables_suite(int max_weight);

}  // namespace gcalc::suites
