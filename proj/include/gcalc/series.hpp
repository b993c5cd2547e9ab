#pragma once

#include <map>
#include <string>

#include "gcalc/graph.hpp"
#include "gcalc/rational.hpp"

namespace gcalc {

// Generation bounds a series was built with. In kScon mode the graph class is
// infinite per weight, so an explicit ordinary-vertex cap is mandatory; in the
// other modes vmax = -1 means the intrinsic per-weight bound of the mode.
struct SeriesBounds {
  int kmax = 0;
  Stability mode = Stability::kStable;
  int vmax = -1;
};

// A weight-graded formal series Σ c_Γ ν^{w(Γ)} Γ with exact rational
// coefficients, indexed by canonical keys. Zero coefficients are never
// stored; every key has the same marked-vertex count.
class GraphSeries {
 public:
  GraphSeries(int points, SeriesBounds bounds);

  int points() const { return points_; }
  const SeriesBounds& bounds() const { return bounds_; }
  const std::map<std::string, Rational>& terms() const { return terms_; }

  Rational coefficient(const std::string& key) const;
  void set_coefficient(const std::string& key, const Rational& value);
  void add_coefficient(const std::string& key, const Rational& value);

  // Terms of one weight, and how many there are.
  std::map<std::string, Rational> weight_slice(int weight) const;
  long long support_size(int weight) const;

 private:
  int points_ = 1;
  SeriesBounds bounds_;
  std::map<std::string, Rational> terms_;
};

// Named series builders. Each enumerates its graph class through weight kmax
// under the given stability mode and stores the stated coefficient, 1/|Aut|
// factor included. kScon mode requires vmax >= 0 (throws otherwise).
//
//   berezin      — one-pointed, all families, coefficient det(A(Γ₋)−I)/|Aut|
//                  (zero determinants prune themselves out of the support)
//   bt_inverse   — one-pointed BT family, coefficient (−1)^{|E|}/|Aut|
//   kbw          — one-pointed S family, coefficient (−1)^{#ordinary}/|Aut|
//   kbw_inverse  — one-pointed, all families, coefficient (−1)^{|E|}/|Aut|
//   bergman_log  — zero-pointed semistable, coefficient −det(A(G)−I)/|Aut|,
//                  kmax ≥ 1 (the series has no weight-0 layer)
GraphSeries berezin_series(int kmax, Stability mode = Stability::kStable, int vmax = -1);
GraphSeries bt_inverse_series(int kmax, Stability mode = Stability::kStable, int vmax = -1);
GraphSeries kbw_series(int kmax, Stability mode = Stability::kStable, int vmax = -1);
GraphSeries kbw_inverse_series(int kmax, Stability mode = Stability::kStable, int vmax = -1);
GraphSeries bergman_log_series(int kmax);

// The substitution identity: the bare m-pointed graph with coefficient 1.
// Complete at every weight and vertex count, so it composes with anything.
GraphSeries identity_series(int points = 1);

// Splits every term's marked vertex into an (outgoing f1, incoming f2) pair,
// coefficients preserved; merge_marked inverts it term by term.
GraphSeries to_star(const GraphSeries& series);
GraphSeries merge_marked(const GraphSeries& series);

// Substitutes `inner` into the marked vertex of every `outer` term:
// Σ c_outer(Γ) c_inner(H) · (endpoint-assignment count of Γ∘H on the target)
// per target, truncated to targets with at most Vmax ordinary vertices and
// weight ≤ min of the two kmax bounds. Both series must be complete for every
// retained target, i.e. generated in kScon mode with vmax ≥ Vmax (the
// identity series qualifies); otherwise throws std::invalid_argument
// ("insufficient generation bounds").
GraphSeries compose(const GraphSeries& outer, const GraphSeries& inner, int target_vmax);

// Same substitution for two-pointed series: plugs `inner` into argument slot
// 1 or 2 of each outer term, producing a three-pointed series. Slot 1 models
// (f⋆g)⋆h, slot 2 models f⋆(g⋆h); for an associative product the two agree.
GraphSeries star_compose(const GraphSeries& outer, const GraphSeries& inner, int slot,
                         int target_vmax);

// Multiplies every weight-k layer by (−1)^k. An involution.
GraphSeries parity_flip(const GraphSeries& series);

}  // namespace gcalc
