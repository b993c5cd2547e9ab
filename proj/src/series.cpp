#include "gcalc/series.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include "gcalc/enumerate.hpp"
#include "gcalc/spectral.hpp"
#include "gcalc/substitute.hpp"

namespace gcalc {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;

int points_of_key(const std::string& key) {
  if (key.empty() || key[0] != 'P') throw std::invalid_argument("malformed canonical key");
  size_t pos = 1;
  int m = 0;
  while (pos < key.size() && key[pos] >= '0' && key[pos] <= '9') {
    m = m * 10 + (key[pos] - '0');
    ++pos;
  }
  if (pos == 1 || pos >= key.size() || key[pos] != 'V') {
    throw std::invalid_argument("malformed canonical key");
  }
  return m;
}

long long parity_sign(long long k) { return k % 2 != 0 ? -1 : 1; }

// One coefficient rule per named series.
enum class CoeffRule { kDet, kEdgeSign, kVertexSign, kNegDet };

Rational term_coefficient(CoeffRule rule, const PointedGraph& g) {
  switch (rule) {
    case CoeffRule::kDet:
      return {char_det(g.ordinary_part()), g.aut_order()};
    case CoeffRule::kEdgeSign:
      return {parity_sign(g.edge_count()), g.aut_order()};
    case CoeffRule::kVertexSign:
      return {parity_sign(g.ordinary_count()), g.aut_order()};
    case CoeffRule::kNegDet:
      return {-char_det(g.ordinary_part()), g.aut_order()};
  }
  throw std::logic_error("unreachable");
}

GraphSeries build_series(int points, int kmax, Stability mode, int vmax, Family family,
                         CoeffRule rule, int min_weight) {
  if (kmax < 0) throw std::invalid_argument("series weight bound must be nonnegative");
  if (mode == Stability::kScon && vmax < 0) {
    throw std::invalid_argument("kScon series generation requires an ordinary-vertex bound");
  }
  GraphSeries series(points, SeriesBounds{kmax, mode, vmax});
  for (int w = min_weight; w <= kmax; ++w) {
    EnumSpec spec;
    spec.marked = points;
    spec.weight = w;
    spec.stability = mode;
    spec.family = family;
    if (vmax >= 0) spec.max_ordinary = vmax;
    for (const PointedGraph& g : enumerate_graphs(spec)) {
      series.set_coefficient(g.canonical_key(), term_coefficient(rule, g));
    }
  }
  return series;
}

struct ParsedTerm {
  PointedGraph graph;
  Rational coeff;
  long long weight;
  int ordinary;
};

std::vector<ParsedTerm> parse_terms(const GraphSeries& series) {
  std::vector<ParsedTerm> out;
  out.reserve(series.terms().size());
  for (const auto& [key, coeff] : series.terms()) {
    PointedGraph g = PointedGraph::from_key(key);
    out.push_back({g, coeff, g.weight(), g.ordinary_count()});
  }
  return out;
}

void require_composable(const GraphSeries& series, int target_vmax, const char* role) {
  if (series.bounds().mode != Stability::kScon || series.bounds().vmax < target_vmax) {
    throw std::invalid_argument(std::string("insufficient generation bounds: the ") + role +
                                " series must be generated in kScon mode with an "
                                "ordinary-vertex bound covering the composition");
  }
}

GraphSeries compose_impl(const GraphSeries& outer, const GraphSeries& inner, int slot,
                         int result_points, int target_vmax) {
  if (target_vmax < 0) throw std::invalid_argument("composition vertex bound must be nonnegative");
  require_composable(outer, target_vmax, "outer");
  require_composable(inner, target_vmax, "inner");

  int kmax = std::min(outer.bounds().kmax, inner.bounds().kmax);
  GraphSeries result(result_points, SeriesBounds{kmax, Stability::kScon, target_vmax});
  const std::vector<ParsedTerm> outer_terms = parse_terms(outer);
  const std::vector<ParsedTerm> inner_terms = parse_terms(inner);
  // Grafting adds weights and ordinary-vertex counts, so a term pair is
  // discarded outright when every target it could produce is out of bounds.
  for (const ParsedTerm& o : outer_terms) {
    for (const ParsedTerm& i : inner_terms) {
      if (o.weight + i.weight > kmax) continue;
      if (o.ordinary + i.ordinary > target_vmax) continue;
      Rational pair_coeff = o.coeff * i.coeff;
      for (const auto& [key, count] : graft_raw(o.graph, slot, i.graph)) {
        result.add_coefficient(key, pair_coeff * Rational(count));
      }
    }
  }
  return result;
}

}  // namespace

GraphSeries::GraphSeries(int points, SeriesBounds bounds) : points_(points), bounds_(bounds) {
  if (points < 0) throw std::invalid_argument("negative marked-vertex count");
}

Rational GraphSeries::coefficient(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GraphSeries::set_coefficient(const std::string& key, const Rational& value) {
  if (points_of_key(key) != points_) {
    throw std::invalid_argument("series term has the wrong marked-vertex count");
  }
  if (value.is_zero()) {
    terms_.erase(key);
  } else {
    terms_[key] = value;
  }
}

void GraphSeries::add_coefficient(const std::string& key, const Rational& value) {
  set_coefficient(key, coefficient(key) + value);
}

std::map<std::string, Rational> GraphSeries::weight_slice(int weight) const {
  std::map<std::string, Rational> out;
  for (const auto& [key, coeff] : terms_) {
    if (PointedGraph::from_key(key).weight() == weight) out.emplace(key, coeff);
  }
  return out;
}

long long GraphSeries::support_size(int weight) const {
  long long n = 0;
  for (const auto& [key, coeff] : terms_) {
    (void)coeff;
    if (PointedGraph::from_key(key).weight() == weight) ++n;
  }
  return n;
}

GraphSeries berezin_series(int kmax, Stability mode, int vmax) {
  return build_series(1, kmax, mode, vmax, Family::kAll, CoeffRule::kDet, 0);
}

GraphSeries bt_inverse_series(int kmax, Stability mode, int vmax) {
  return build_series(1, kmax, mode, vmax, Family::kBT, CoeffRule::kEdgeSign, 0);
}

GraphSeries kbw_series(int kmax, Stability mode, int vmax) {
  return build_series(1, kmax, mode, vmax, Family::kS, CoeffRule::kVertexSign, 0);
}

GraphSeries kbw_inverse_series(int kmax, Stability mode, int vmax) {
  return build_series(1, kmax, mode, vmax, Family::kAll, CoeffRule::kEdgeSign, 0);
}

GraphSeries bergman_log_series(int kmax) {
  if (kmax < 1) throw std::invalid_argument("the log Bergman series starts at weight 1");
  return build_series(0, kmax, Stability::kSemistable, -1, Family::kAll, CoeffRule::kNegDet, 1);
}

GraphSeries identity_series(int points) {
  GraphSeries series(points, SeriesBounds{kUnbounded, Stability::kScon, kUnbounded});
  series.set_coefficient(PointedGraph(points, 0).canonical_key(), Rational(1));
  return series;
}

GraphSeries to_star(const GraphSeries& series) {
  if (series.points() != 1) throw std::invalid_argument("to_star requires a one-pointed series");
  GraphSeries out(2, series.bounds());
  for (const auto& [key, coeff] : series.terms()) {
    out.set_coefficient(split_marked(PointedGraph::from_key(key)).canonical_key(), coeff);
  }
  return out;
}

GraphSeries merge_marked(const GraphSeries& series) {
  if (series.points() < 1) {
    throw std::invalid_argument("merging needs at least one marked vertex");
  }
  GraphSeries out(1, series.bounds());
  for (const auto& [key, coeff] : series.terms()) {
    out.add_coefficient(PointedGraph::from_key(key).merge_marked().canonical_key(), coeff);
  }
  return out;
}

GraphSeries compose(const GraphSeries& outer, const GraphSeries& inner, int target_vmax) {
  if (outer.points() != 1) throw std::invalid_argument("compose requires a one-pointed outer series");
  return compose_impl(outer, inner, 0, inner.points(), target_vmax);
}

GraphSeries star_compose(const GraphSeries& outer, const GraphSeries& inner, int slot,
                         int target_vmax) {
  if (outer.points() != 2 || inner.points() != 2) {
    throw std::invalid_argument("star_compose requires two-pointed series");
  }
  if (slot != 1 && slot != 2) throw std::invalid_argument("star_compose slot must be 1 or 2");
  return compose_impl(outer, inner, slot - 1, 3, target_vmax);
}

GraphSeries parity_flip(const GraphSeries& series) {
  GraphSeries out(series.points(), series.bounds());
  for (const auto& [key, coeff] : series.terms()) {
    out.set_coefficient(key, PointedGraph::from_key(key).weight() % 2 != 0 ? -coeff : coeff);
  }
  return out;
}

}  // namespace gcalc
