#include "gcalc/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gcalc/enumerate.hpp"
#include "gcalc/golden.hpp"
#include "gcalc/graph.hpp"
#include "gcalc/karabegov.hpp"
#include "gcalc/rational.hpp"
#include "gcalc/series.hpp"
#include "gcalc/spectral.hpp"
#include "gcalc/substitute.hpp"

namespace gcalc::suites {

namespace {

std::vector<PointedGraph> enumerate_range(int marked, int max_weight, Stability stability,
                                          std::optional<int> max_ordinary = std::nullopt) {
  std::vector<PointedGraph> out;
  for (int k = 0; k <= max_weight; ++k) {
    EnumSpec spec;
    spec.marked = marked;
    spec.weight = k;
    spec.stability = stability;
    spec.max_ordinary = max_ordinary;
    auto batch = enumerate_graphs(spec);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// One-pointed strongly connected graphs with at most max_edges edges; since
// |E| = weight + #ordinary, weight w admits at most max_edges - w ordinary.
std::vector<PointedGraph> scon_graphs_with_edges_at_most(int max_edges) {
  std::vector<PointedGraph> out;
  for (int w = 0; w <= max_edges; ++w) {
    EnumSpec spec;
    spec.marked = 1;
    spec.weight = w;
    spec.stability = Stability::kScon;
    spec.max_ordinary = max_edges - w;
    auto batch = enumerate_graphs(spec);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::string describe_terms(const std::map<std::string, Rational>& terms, size_t limit = 4) {
  if (terms.empty()) return "0";
  std::string out;
  size_t shown = 0;
  for (const auto& [key, coeff] : terms) {
    if (shown == limit) {
      out += " + ... (" + std::to_string(terms.size()) + " terms)";
      break;
    }
    if (shown) out += " + ";
    out += coeff.to_string() + "*" + key;
    ++shown;
  }
  return out;
}

// Per-key comparison of two coefficient maps, one report record per key.
void compare_term_maps(VerificationReport& rep, const std::string& label,
                       const std::map<std::string, Rational>& expected,
                       const std::map<std::string, Rational>& actual) {
  std::set<std::string> keys;
  for (const auto& [k, v] : expected) keys.insert(k);
  for (const auto& [k, v] : actual) keys.insert(k);
  if (keys.empty()) {
    rep.record(true, label + " (empty)", "0", "0");
    return;
  }
  for (const auto& key : keys) {
    auto e = expected.find(key);
    auto a = actual.find(key);
    Rational ev = e == expected.end() ? Rational(0) : e->second;
    Rational av = a == actual.end() ? Rational(0) : a->second;
    rep.record(ev == av, label + " " + key, ev.to_string(), av.to_string());
  }
}

VerificationReport run_vanishing_sum_suite(bool acyclic, int max_weight, long long trials,
                                           unsigned long long seed) {
  VerificationReport rep;
  rep.suite = acyclic ? "acyclic-sum" : "inversion";
  rep.config = "max-weight=" + std::to_string(max_weight) + " trials=" + std::to_string(trials) +
               " seed=" + std::to_string(seed) + " random-max-ordinary=5 random-max-edges=8";
  auto check = [&](const PointedGraph& g) {
    if (g.edge_count() == 0) return;  // the bare point has no subgraph sums
    long long sum = acyclic ? acyclic_sum_check(g) : inversion_identity_check(g);
    rep.record(sum == 0, g.canonical_key(), "0", std::to_string(sum));
  };
  for (const PointedGraph& g : enumerate_range(1, max_weight, Stability::kSemistable)) check(g);
  std::mt19937_64 rng(seed);
  for (long long t = 0; t < trials; ++t) check(random_scon_one_pointed(rng, 5, 8));
  return rep;
}

// All one-way cross-edge patterns (multisets over ordered block-vertex pairs)
// with at most max_edges total edges.
void for_each_cross_pattern(
    int n_from, int n_to, int max_edges,
    const std::function<void(const std::vector<std::tuple<int, int, Mult>>&)>& fn) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n_from; ++u) {
    for (int v = 0; v < n_to; ++v) slots.emplace_back(u, v);
  }
  std::vector<std::tuple<int, int, Mult>> current;
  std::function<void(size_t, int)> rec = [&](size_t slot, int budget) {
    if (slot == slots.size()) {
      fn(current);
      return;
    }
    rec(slot + 1, budget);
    for (int m = 1; m <= budget; ++m) {
      current.emplace_back(slots[slot].first, slots[slot].second, m);
      rec(slot + 1, budget - m);
      current.pop_back();
    }
  };
  rec(0, max_edges);
}

}  // namespace

VerificationReport run_inversion_suite(int max_weight, long long trials,
                                       unsigned long long seed) {
  return run_vanishing_sum_suite(false, max_weight, trials, seed);
}

VerificationReport run_acyclic_sum_suite(int max_weight, long long trials,
                                         unsigned long long seed) {
  return run_vanishing_sum_suite(true, max_weight, trials, seed);
}

VerificationReport run_substitution_suite(int max_edges) {
  VerificationReport rep;
  rep.suite = "substitution";
  rep.config = "max-edges-per-factor=" + std::to_string(max_edges);
  auto graphs = scon_graphs_with_edges_at_most(max_edges);
  for (const PointedGraph& outer : graphs) {
    for (const PointedGraph& inner : graphs) {
      rep.absorb(substitution_identity_check(outer, inner));
    }
  }
  return rep;
}

VerificationReport run_subdivision_suite(int max_weight) {
  VerificationReport rep;
  rep.suite = "subdivision-sign";
  rep.config = "max-weight=" + std::to_string(max_weight) +
               " sets=one-pointed-ss,zero-pointed-ss(min(max-weight,2))";
  auto sweep = [&](const PointedGraph& g) {
    long long base = char_det(g);
    int n = g.total_vertices();
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (g.multiplicity(u, v) == 0) continue;
        long long divided = char_det(g.subdivide_edge(u, v, 0));
        rep.record(divided == -base,
                   g.canonical_key() + " edge(" + std::to_string(u) + "," + std::to_string(v) +
                       ")",
                   std::to_string(-base), std::to_string(divided));
      }
    }
  };
  for (const PointedGraph& g : enumerate_range(1, max_weight, Stability::kSemistable)) sweep(g);
  for (const PointedGraph& g :
       enumerate_range(0, std::min(max_weight, 2), Stability::kSemistable)) {
    sweep(g);
  }
  return rep;
}

VerificationReport run_coefficient_theorem_suite(int max_weight, long long trials,
                                                 unsigned long long seed) {
  VerificationReport rep;
  rep.suite = "coefficient-theorem";
  rep.config = "max-weight=" + std::to_string(max_weight) + " trials=" + std::to_string(trials) +
               " seed=" + std::to_string(seed) + " random-max-vertices=7 random-max-mult=3";
  auto check = [&](const PointedGraph& g, const std::string& label) {
    long long det = char_det(g);
    long long sum = linear_subgraph_sum(g);
    rep.record(det == sum, label, std::to_string(det), std::to_string(sum));
  };
  for (const PointedGraph& g : enumerate_range(1, max_weight, Stability::kSemistable)) {
    check(g, g.canonical_key());
  }
  for (const PointedGraph& g :
       enumerate_range(0, std::min(max_weight, 2), Stability::kSemistable)) {
    check(g, g.canonical_key());
  }
  std::mt19937_64 rng(seed);
  for (long long t = 0; t < trials; ++t) {
    int vertices = 1 + static_cast<int>(rng() % 7);
    PointedGraph g = random_digraph(rng, vertices, 3);
    check(g, "random#" + std::to_string(t));
  }
  return rep;
}

VerificationReport run_compose_inverse_suite(int max_weight, int max_ordinary) {
  VerificationReport rep;
  rep.suite = "compose-inverse";
  rep.config =
      "max-weight=" + std::to_string(max_weight) + " max-ordinary=" + std::to_string(max_ordinary);
  GraphSeries berezin = berezin_series(max_weight, Stability::kScon, max_ordinary);
  GraphSeries bt_inv = bt_inverse_series(max_weight, Stability::kScon, max_ordinary);
  GraphSeries kbw = kbw_series(max_weight, Stability::kScon, max_ordinary);
  GraphSeries kbw_inv = kbw_inverse_series(max_weight, Stability::kScon, max_ordinary);
  const std::map<std::string, Rational> identity = identity_series(1).terms();
  auto expect_identity = [&](const std::string& label, const GraphSeries& outer,
                             const GraphSeries& inner) {
    GraphSeries result = compose(outer, inner, max_ordinary);
    rep.record(result.terms() == identity, label, describe_terms(identity),
               describe_terms(result.terms()));
  };
  expect_identity("bt-inverse∘berezin", bt_inv, berezin);
  expect_identity("berezin∘bt-inverse", berezin, bt_inv);
  expect_identity("kbw-inverse∘kbw", kbw_inv, kbw);
  expect_identity("kbw∘kbw-inverse", kbw, kbw_inv);
  return rep;
}

VerificationReport run_associativity_suite(int max_weight, int max_ordinary) {
  VerificationReport rep;
  rep.suite = "associativity";
  rep.config =
      "max-weight=" + std::to_string(max_weight) + " max-ordinary=" + std::to_string(max_ordinary);
  auto check_product = [&](const std::string& label, const GraphSeries& one_pointed) {
    GraphSeries star = to_star(one_pointed);
    GraphSeries left = star_compose(star, star, 1, max_ordinary);
    GraphSeries right = star_compose(star, star, 2, max_ordinary);
    compare_term_maps(rep, label, left.terms(), right.terms());
  };
  check_product("bt-star", bt_inverse_series(max_weight, Stability::kScon, max_ordinary));
  check_product("kbw-star", kbw_series(max_weight, Stability::kScon, max_ordinary));
  return rep;
}

VerificationReport run_det_factorization_enumerated() {
  VerificationReport rep;
  rep.suite = "det-factorization";
  rep.config = "blocks=zero-pointed-ss(k<=2) gamma=b-family-ordinary-parts(k<=2) cross<=3";
  std::vector<PointedGraph> gamma_blocks;
  for (int k = 0; k <= 2; ++k) {
    EnumSpec spec;
    spec.marked = 1;
    spec.weight = k;
    spec.stability = Stability::kStable;
    spec.family = Family::kB;
    for (const PointedGraph& g : enumerate_graphs(spec)) {
      gamma_blocks.push_back(g.ordinary_part());
    }
  }
  std::vector<PointedGraph> blocks = enumerate_range(0, 2, Stability::kSemistable);
  for (const PointedGraph& gamma : gamma_blocks) {
    for (const PointedGraph& block : blocks) {
      rep.absorb(det_factorization_check(gamma, block, {}));
    }
  }
  for (const PointedGraph& first : blocks) {
    for (const PointedGraph& second : blocks) {
      for_each_cross_pattern(first.total_vertices(), second.total_vertices(), 3,
                             [&](const std::vector<std::tuple<int, int, Mult>>& cross) {
                               rep.absorb(det_factorization_check(first, second, cross));
                             });
    }
  }
  return rep;
}

VerificationReport run_det_factorization_fuzz(long long trials, unsigned long long seed) {
  VerificationReport rep;
  rep.suite = "det-factorization-fuzz";
  rep.config = "trials=" + std::to_string(trials) + " seed=" + std::to_string(seed) +
               " max-vertices-per-block=4 max-mult=3";
  std::mt19937_64 rng(seed);
  for (long long t = 0; t < trials; ++t) {
    int n1 = 1 + static_cast<int>(rng() % 4);
    int n2 = 1 + static_cast<int>(rng() % 4);
    PointedGraph first = random_digraph(rng, n1, 3);
    PointedGraph second = random_digraph(rng, n2, 3);
    std::vector<std::tuple<int, int, Mult>> cross;
    for (int u = 0; u < n1; ++u) {
      for (int v = 0; v < n2; ++v) {
        int m = static_cast<int>(rng() % 4);
        if (m == 3) m = static_cast<int>(rng() % 3);  // bias toward sparse patterns
        if (m > 0) cross.emplace_back(u, v, m);
      }
    }
    rep.absorb(det_factorization_check(first, second, cross));
  }
  return rep;
}

VerificationReport run_edge_sign_sweep() {
  VerificationReport rep;
  rep.suite = "edge-sign-relations";
  rep.config = "gamma=bt-stable(k<=3,marked-in-degree=1) blocks=zero-pointed-scon(k<=1,n<=2)";
  GraphSeries bt = bt_inverse_series(3);
  std::vector<PointedGraph> gammas;
  for (const auto& [key, coeff] : bt.terms()) {
    PointedGraph g = PointedGraph::from_key(key);
    if (g.degrees(0).in == 1) gammas.push_back(g);
  }
  for (const PointedGraph& gamma : gammas) {
    rep.absorb(edge_sign_relation_check(gamma, ric_extension(gamma)));
  }
  std::vector<PointedGraph> blocks;
  for (const PointedGraph& b : enumerate_range(0, 1, Stability::kScon, 2)) {
    if (b.total_vertices() >= 1) blocks.push_back(b);
  }
  for (const PointedGraph& gamma : gammas) {
    for (const PointedGraph& block : blocks) {
      for (int v_k = 0; v_k < block.total_vertices(); ++v_k) {
        for (int v_in = 0; v_in < block.total_vertices(); ++v_in) {
          rep.absorb(edge_sign_relation_check(gamma, block,
                                              scon_extension(gamma, block, v_k, v_in)));
        }
      }
    }
  }
  return rep;
}

VerificationReport run_obstruction_fixtures() {
  VerificationReport rep;
  rep.suite = "karabegov-obstructions";
  rep.config = "cases=bt,berezin,dual-kbw orders=0,1,2";
  for (ObstructionCase which :
       {ObstructionCase::kBT, ObstructionCase::kBerezin, ObstructionCase::kDualKbw}) {
    for (int order = 0; order <= 2; ++order) {
      rep.absorb(low_order_obstruction_check(which, order));
    }
  }
  return rep;
}

VerificationReport run_karabegov_suite(long long trials, unsigned long long seed) {
  VerificationReport rep;
  rep.suite = "karabegov";
  rep.config = "det-enumerated + det-fuzz(trials=" + std::to_string(trials) +
               ",seed=" + std::to_string(seed) + ") + edge-sign + obstructions(d<=2)";
  rep.absorb(run_det_factorization_enumerated());
  rep.absorb(run_det_factorization_fuzz(trials, seed));
  rep.absorb(run_edge_sign_sweep());
  rep.absorb(run_obstruction_fixtures());
  return rep;
}

VerificationReport run_tables_suite(int max_weight) {
  VerificationReport rep;
  rep.suite = "tables";
  int limit = std::min(max_weight, 6);
  rep.config = "max-weight=" + std::to_string(limit);
  CountTable counts = count_table(limit);
  const golden::StableCounts& want = golden::stable_counts();
  auto check_row = [&](const std::string& name, const std::vector<long long>& got,
                       const std::vector<long long>& expected) {
    for (int k = 0; k <= limit; ++k) {
      rep.record(got[k] == expected[k], "count[" + name + "][weight=" + std::to_string(k) + "]",
                 std::to_string(expected[k]), std::to_string(got[k]));
    }
  };
  check_row("all", counts.all, want.all);
  check_row("b", counts.b, want.b);
  check_row("bt", counts.bt, want.bt);
  check_row("s", counts.s, want.s);

  compare_term_maps(rep, "bt-inverse[w=4]",
                    golden::as_coefficient_map(golden::bt_inverse_weight4()),
                    bt_inverse_series(4).weight_slice(4));
  compare_term_maps(rep, "kbw[w=5]", golden::as_coefficient_map(golden::kbw_weight5()),
                    kbw_series(5).weight_slice(5));
  auto check_low_order = [&](const std::string& label, const GraphSeries& series,
                             const std::map<int, std::vector<golden::GoldenTerm>>& expected) {
    std::map<std::string, Rational> want_terms;
    for (const auto& [weight, terms] : expected) {
      for (const auto& term : terms) {
        want_terms[term.graph.canonical_key()] = term.coefficient;
      }
    }
    compare_term_maps(rep, label, want_terms, series.terms());
  };
  check_low_order("berezin[w<=3]", berezin_series(3), golden::berezin_low_order());
  check_low_order("bt-inverse[w<=3]", bt_inverse_series(3), golden::bt_inverse_low_order());
  check_low_order("kbw[w<=4]", kbw_series(4), golden::kbw_low_order());
  check_low_order("kbw-inverse[w<=3]", kbw_inverse_series(3), golden::kbw_inverse_low_order());
  compare_term_maps(rep, "bergman-log[w=1]",
                    golden::as_coefficient_map(golden::bergman_log_weight1()),
                    bergman_log_series(1).weight_slice(1));
  return rep;
}

}  // namespace gcalc::suites
