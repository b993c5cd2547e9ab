#include "gcalc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gcalc {

namespace {

struct Profile {
  std::vector<int> out;  // per vertex, marked first
  std::vector<int> in;
};

// Enumerates per-vertex (out, in) degree pairs compatible with the stability
// filter; ordinary pairs are non-increasing in lexicographic order to cut
// permutation duplicates (safe: every isomorphism class has at least one
// representative whose ordinary degree pairs are sorted).
class ProfileGen {
 public:
  ProfileGen(int marked, int ordinary, int edges, Stability stability)
      : m_(marked), n_(ordinary), e_(edges), stability_(stability) {}

  template <typename Fn>
  void run(Fn&& fn) {
    Profile p;
    p.out.assign(m_ + n_, 0);
    p.in.assign(m_ + n_, 0);
    gen_marked(0, 0, 0, p, fn);
  }

 private:
  int min_out() const { return stability_ == Stability::kStable ? 2 : 1; }
  int min_in() const { return stability_ == Stability::kStable ? 2 : 1; }

  bool ordinary_pair_ok(int o, int i) const {
    switch (stability_) {
      case Stability::kStable:
        return o >= 2 && i >= 2;
      case Stability::kSemistable:
        return o >= 1 && i >= 1 && o + i >= 3;
      case Stability::kScon:
        return o >= 1 && i >= 1;
    }
    return false;
  }

  template <typename Fn>
  void gen_marked(int v, int out_used, int in_used, Profile& p, Fn&& fn) {
    if (v == m_) {
      gen_ordinary(0, out_used, in_used, e_, e_, p, fn);
      return;
    }
    // A nontrivial strongly connected one-pointed graph forces the marked
    // vertex onto a cycle; with several marked vertices only the merged graph
    // is constrained, so individual marked degrees may be zero.
    int lo = (m_ == 1 && e_ > 0) ? 1 : 0;
    int reserve_out = n_ * min_out();  // ordinary vertices still need this much
    int reserve_in = n_ * min_in();
    for (int o = lo; out_used + o + reserve_out <= e_; ++o)
      for (int i = lo; in_used + i + reserve_in <= e_; ++i) {
        p.out[v] = o;
        p.in[v] = i;
        gen_marked(v + 1, out_used + o, in_used + i, p, fn);
      }
    p.out[v] = 0;
    p.in[v] = 0;
  }

  template <typename Fn>
  void gen_ordinary(int k, int out_used, int in_used, int max_o, int max_i, Profile& p, Fn&& fn) {
    if (k == n_) {
      if (out_used == e_ && in_used == e_) fn(const_cast<const Profile&>(p));
      return;
    }
    int remaining = n_ - k;
    for (int o = min_out(); o <= max_o; ++o) {
      if (out_used + o + (remaining - 1) * min_out() > e_) break;
      for (int i = min_in(); in_used + i + (remaining - 1) * min_in() <= e_; ++i) {
        if (!ordinary_pair_ok(o, i)) continue;
        if (o == max_o && i > max_i) continue;  // keep (o, i) pairs non-increasing
        p.out[m_ + k] = o;
        p.in[m_ + k] = i;
        gen_ordinary(k + 1, out_used + o, in_used + i, o, i, p, fn);
      }
    }
  }

  int m_, n_, e_;
  Stability stability_;
};

// Fills adjacency matrices row by row so every row consumes exactly its
// out-degree and every column exactly its in-degree.
class MatrixFiller {
 public:
  MatrixFiller(const Profile& p, int total) : p_(p), total_(total) {}

  template <typename Fn>
  void run(Fn&& fn) {
    if (total_ == 0) return;
    cells_.assign(static_cast<size_t>(total_) * total_, 0);
    col_rem_ = p_.in;
    fill(0, 0, p_.out[0], fn);
  }

 private:
  template <typename Fn>
  void fill(int r, int c, int row_rem, Fn&& fn) {
    if (c == total_) {
      if (row_rem != 0) return;
      if (r + 1 == total_) {
        fn(const_cast<const std::vector<Mult>&>(cells_));
      } else {
        fill(r + 1, 0, p_.out[r + 1], fn);
      }
      return;
    }
    int cap = std::min(row_rem, col_rem_[c]);
    int tail = tail_capacity(c + 1);
    for (int v = 0; v <= cap; ++v) {
      if (tail < row_rem - v) continue;  // rest of the row cannot absorb it
      cells_[r * total_ + c] = v;
      col_rem_[c] -= v;
      fill(r, c + 1, row_rem - v, fn);
      col_rem_[c] += v;
    }
    cells_[r * total_ + c] = 0;
  }

  int tail_capacity(int c) const {
    int s = 0;
    for (int j = c; j < total_; ++j) s += col_rem_[j];
    return s;
  }

  const Profile& p_;
  int total_;
  std::vector<Mult> cells_;
  std::vector<int> col_rem_;
};

// Largest possible number of ordinary vertices at the given weight. With
// e = n + weight edges, ordinary out-degrees alone consume 2n (stable) or, by
// the in + out ≥ 3 count, 2e ≥ 3n (semistable); a marked vertex on a
// nontrivial graph consumes one more of each side since the (merged) graph is
// strongly connected.
int ordinary_bound(const EnumSpec& spec) {
  int bound;
  int k = spec.weight;
  switch (spec.stability) {
    case Stability::kStable:
      bound = spec.marked >= 1 ? std::max(0, k - 1) : k;
      break;
    case Stability::kSemistable:
      bound = spec.marked >= 1 ? std::max(0, 2 * k - 2) : 2 * k;
      break;
    case Stability::kScon:
    default:
      bound = *spec.max_ordinary;
      break;
  }
  if (spec.max_ordinary) bound = std::min(bound, *spec.max_ordinary);
  return bound;
}

}  // namespace

std::vector<PointedGraph> enumerate_graphs(const EnumSpec& spec) {
  if (spec.marked < 0 || spec.marked > 3)
    throw std::invalid_argument("enumerate_graphs: marked count must be 0..3");
  if (spec.weight < 0) throw std::invalid_argument("enumerate_graphs: negative weight");
  if (spec.stability == Stability::kScon && !spec.max_ordinary)
    throw std::invalid_argument("enumerate_graphs: connectivity-only enumeration requires max_ordinary");
  if (spec.family != Family::kAll && spec.marked != 1)
    throw std::invalid_argument("enumerate_graphs: family filter needs a one-pointed spec");

  std::map<std::string, PointedGraph> found;
  int bound = ordinary_bound(spec);
  for (int n = 0; n <= bound; ++n) {
    int edges = n + spec.weight;
    int total = spec.marked + n;
    if (total == 0) continue;  // the empty graph is excluded everywhere
    if (edges == 0) {
      if (n == 0 && spec.marked >= 1) {
        PointedGraph g(spec.marked, 0);
        found.emplace(g.canonical_key(), g);
      }
      continue;
    }
    ProfileGen profiles(spec.marked, n, edges, spec.stability);
    profiles.run([&](const Profile& p) {
      MatrixFiller filler(p, total);
      filler.run([&](const std::vector<Mult>& flat) {
        PointedGraph g(spec.marked, n);
        for (int i = 0; i < total; ++i)
          for (int j = 0; j < total; ++j)
            if (flat[i * total + j]) g.set_multiplicity(i, j, flat[i * total + j]);
        if (!g.strongly_connected()) return;
        if (spec.stability == Stability::kStable && !g.is_stable()) return;
        if (spec.stability == Stability::kSemistable && !g.is_semistable()) return;
        if (spec.family != Family::kAll && !in_family(g, spec.family)) return;
        PointedGraph canon = g.canonical_form();
        found.emplace(canon.key_of_this(), std::move(canon));
      });
    });
  }
  std::vector<PointedGraph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<std::string> enumerate_keys(const EnumSpec& spec) {
  std::vector<std::string> keys;
  for (const auto& g : enumerate_graphs(spec)) keys.push_back(g.key_of_this());
  return keys;
}

CountTable count_table(int max_weight) {
  CountTable t;
  for (int k = 0; k <= max_weight; ++k) {
    EnumSpec spec;
    spec.marked = 1;
    spec.weight = k;
    spec.stability = Stability::kStable;
    auto graphs = enumerate_graphs(spec);
    long long b = 0, bt = 0, s = 0;
    for (const auto& g : graphs) {
      auto fams = classify_family(g);
      if (fams.count(Family::kB)) ++b;
      if (fams.count(Family::kBT)) ++bt;
      if (fams.count(Family::kS)) ++s;
    }
    t.all.push_back(static_cast<long long>(graphs.size()));
    t.b.push_back(b);
    t.bt.push_back(bt);
    t.s.push_back(s);
  }
  return t;
}

PointedGraph random_digraph(std::mt19937_64& rng, int vertices, int max_mult) {
  PointedGraph g(0, vertices);
  std::uniform_int_distribution<int> mult(0, max_mult);
  for (int i = 0; i < vertices; ++i)
    for (int j = 0; j < vertices; ++j) {
      int m = mult(rng);
      if (m) g.set_multiplicity(i, j, m);
    }
  return g;
}

PointedGraph random_scon_one_pointed(std::mt19937_64& rng, int max_ordinary, int max_edges) {
  // A strongly connected graph on n+1 vertices needs at least n+1 edges.
  int cap = std::min(max_ordinary, max_edges - 1);
  if (cap < 1) throw std::invalid_argument("random_scon_one_pointed: bounds leave no room");
  std::uniform_int_distribution<int> nv(1, cap);
  while (true) {
    int n = nv(rng);
    PointedGraph g(1, n);
    // Sprinkle edges, then accept or reject; rejection keeps the generator
    // simple and deterministic per seed.
    std::uniform_int_distribution<int> ecount(n + 1, max_edges);
    std::uniform_int_distribution<int> vpick(0, n);
    int edges = ecount(rng);
    for (int e = 0; e < edges; ++e) g.add_edge(vpick(rng), vpick(rng), 1);
    if (!g.strongly_connected()) continue;
    return g;
  }
}

}  // namespace gcalc
