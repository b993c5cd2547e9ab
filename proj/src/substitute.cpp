#include "gcalc/substitute.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gcalc/spectral.hpp"

namespace gcalc {

namespace {

long long binomial(Mult n, Mult k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (Mult i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void validate_selection(const PointedGraph& host, const SubgraphSelection& sel) {
  int m = host.marked_count();
  int total = host.total_vertices();
  if (static_cast<int>(sel.vertices.size()) < m) {
    throw std::invalid_argument("selection must contain every marked vertex");
  }
  for (int i = 0; i < static_cast<int>(sel.vertices.size()); ++i) {
    int v = sel.vertices[i];
    if (v < 0 || v >= total) throw std::invalid_argument("selection vertex out of range");
    if (i < m && v != i) throw std::invalid_argument("selection must contain every marked vertex");
    if (i > 0 && sel.vertices[i - 1] >= v) {
      throw std::invalid_argument("selection vertices must be strictly increasing");
    }
  }
  for (const auto& [pair, mult] : sel.edges) {
    bool from_in = std::binary_search(sel.vertices.begin(), sel.vertices.end(), pair.first);
    bool to_in = std::binary_search(sel.vertices.begin(), sel.vertices.end(), pair.second);
    if (!from_in || !to_in) {
      throw std::invalid_argument("selected edge endpoint outside selected vertices");
    }
    if (mult < 1 || mult > host.multiplicity(pair.first, pair.second)) {
      throw std::invalid_argument("selected multiplicity exceeds host multiplicity");
    }
  }
}

// Enumerates selections over one vertex subset (marked vertices plus the
// ordinary vertices flagged in `mask`), invoking fn on each; the per-pair
// multiplicities range over 0..host multiplicity independently.
template <typename Fn>
void for_each_selection_on(const PointedGraph& host, unsigned mask, Fn&& fn) {
  int m = host.marked_count();
  SubgraphSelection sel;
  for (int i = 0; i < m; ++i) sel.vertices.push_back(i);
  for (int j = 0; j < host.ordinary_count(); ++j) {
    if (mask & (1u << j)) sel.vertices.push_back(m + j);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u : sel.vertices) {
    for (int v : sel.vertices) {
      if (host.multiplicity(u, v) > 0) pairs.push_back({u, v});
    }
  }
  std::vector<Mult> choice(pairs.size(), 0);
  while (true) {
    sel.edges.clear();
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (choice[i] > 0) sel.edges[pairs[i]] = choice[i];
    }
    fn(sel);
    size_t i = 0;
    while (i < pairs.size() &&
           choice[i] == host.multiplicity(pairs[i].first, pairs[i].second)) {
      choice[i++] = 0;
    }
    if (i == pairs.size()) break;
    ++choice[i];
  }
}

std::vector<SubgraphSelection> family_subgraphs(const PointedGraph& g, Family family) {
  if (g.marked_count() != 1) {
    throw std::invalid_argument("subgraph families are defined for one-pointed graphs");
  }
  std::vector<SubgraphSelection> out;
  for (unsigned mask = 0; mask < (1u << g.ordinary_count()); ++mask) {
    for_each_selection_on(g, mask, [&](const SubgraphSelection& sel) {
      PointedGraph h = induced_graph(g, sel);
      if (h.strongly_connected() && in_family(h, family)) out.push_back(sel);
    });
  }
  return out;
}

void require_nontrivial_scon(const PointedGraph& g, const char* what) {
  if (g.marked_count() != 1 || !g.strongly_connected()) {
    throw std::invalid_argument(std::string(what) +
                                " requires a one-pointed strongly connected graph");
  }
  if (g.edge_count() == 0) {
    throw std::invalid_argument(std::string(what) + " requires at least one edge");
  }
}

}  // namespace

long long SubgraphSelection::edge_total() const {
  long long t = 0;
  for (const auto& [pair, mult] : edges) t += mult;
  return t;
}

PointedGraph induced_graph(const PointedGraph& host, const SubgraphSelection& sel) {
  validate_selection(host, sel);
  std::vector<int> remap(host.total_vertices(), -1);
  int next = 0;
  for (int v : sel.vertices) remap[v] = next++;
  PointedGraph out(host.marked_count(),
                   static_cast<int>(sel.vertices.size()) - host.marked_count());
  for (const auto& [pair, mult] : sel.edges) {
    out.add_edge(remap[pair.first], remap[pair.second], mult);
  }
  return out;
}

long long instance_count(const PointedGraph& host, const SubgraphSelection& sel) {
  validate_selection(host, sel);
  long long count = 1;
  for (const auto& [pair, mult] : sel.edges) {
    count *= binomial(host.multiplicity(pair.first, pair.second), mult);
  }
  return count;
}

PointedGraph split_marked(const PointedGraph& g) {
  if (g.marked_count() != 1) {
    throw std::invalid_argument("split_marked requires a one-pointed graph");
  }
  int n = g.ordinary_count();
  PointedGraph out(2, n);
  if (g.multiplicity(0, 0) > 0) out.add_edge(0, 1, g.multiplicity(0, 0));
  for (int j = 0; j < n; ++j) {
    if (g.multiplicity(0, 1 + j) > 0) out.add_edge(0, 2 + j, g.multiplicity(0, 1 + j));
    if (g.multiplicity(1 + j, 0) > 0) out.add_edge(2 + j, 1, g.multiplicity(1 + j, 0));
    for (int k = 0; k < n; ++k) {
      if (g.multiplicity(1 + j, 1 + k) > 0) {
        out.add_edge(2 + j, 2 + k, g.multiplicity(1 + j, 1 + k));
      }
    }
  }
  return out;
}

PointedGraph contract(const PointedGraph& g, const SubgraphSelection& sel) {
  validate_selection(g, sel);
  int total = g.total_vertices();
  std::vector<bool> in_sel(total, false);
  for (int v : sel.vertices) in_sel[v] = true;
  std::vector<int> remap(total, 0);
  int next = 1;
  for (int v = 0; v < total; ++v) {
    if (!in_sel[v]) remap[v] = next++;
  }
  PointedGraph out(1, next - 1);
  for (int u = 0; u < total; ++u) {
    for (int v = 0; v < total; ++v) {
      Mult mult = g.multiplicity(u, v);
      if (mult == 0) continue;
      if (in_sel[u] && in_sel[v]) {
        auto it = sel.edges.find({u, v});
        if (it != sel.edges.end()) mult -= it->second;
      }
      if (mult > 0) out.add_edge(remap[u], remap[v], mult);
    }
  }
  return out;
}

std::map<std::string, long long> graft_raw(const PointedGraph& outer, int slot,
                                           const PointedGraph& inner) {
  int p = outer.marked_count();
  if (slot < 0 || slot >= p) throw std::invalid_argument("graft slot out of range");
  int q = inner.marked_count();
  int outer_ordinary = outer.ordinary_count();
  int inner_total = inner.total_vertices();
  int result_marked = p - 1 + q;

  auto map_outer = [&](int v) {
    if (v < p) return v < slot ? v : v - 1 + q;
    return result_marked + (v - p);
  };
  auto map_inner = [&](int u) {
    return u < q ? slot + u : result_marked + outer_ordinary + (u - q);
  };

  PointedGraph base(result_marked, outer_ordinary + inner.ordinary_count());
  for (int u = 0; u < outer.total_vertices(); ++u) {
    if (u == slot) continue;
    for (int v = 0; v < outer.total_vertices(); ++v) {
      if (v == slot) continue;
      if (outer.multiplicity(u, v) > 0) {
        base.add_edge(map_outer(u), map_outer(v), outer.multiplicity(u, v));
      }
    }
  }
  for (int u = 0; u < inner_total; ++u) {
    for (int v = 0; v < inner_total; ++v) {
      if (inner.multiplicity(u, v) > 0) {
        base.add_edge(map_inner(u), map_inner(v), inner.multiplicity(u, v));
      }
    }
  }

  // Edge instances formerly attached to the slot, with -1 marking the ends to
  // be reattached; a loop instance at the slot leaves both ends free.
  struct Pending {
    int tail;
    int head;
  };
  std::vector<Pending> pending;
  for (int v = 0; v < outer.total_vertices(); ++v) {
    if (v == slot) continue;
    for (Mult i = 0; i < outer.multiplicity(slot, v); ++i) pending.push_back({-1, map_outer(v)});
    for (Mult i = 0; i < outer.multiplicity(v, slot); ++i) pending.push_back({map_outer(v), -1});
  }
  for (Mult i = 0; i < outer.multiplicity(slot, slot); ++i) pending.push_back({-1, -1});

  int free_ends = 0;
  for (const Pending& pe : pending) free_ends += (pe.tail < 0) + (pe.head < 0);

  std::map<std::string, long long> counts;
  if (inner_total == 0 && free_ends > 0) return counts;

  std::vector<int> choice(free_ends, 0);
  while (true) {
    PointedGraph result = base;
    int c = 0;
    for (const Pending& pe : pending) {
      int tail = pe.tail < 0 ? map_inner(choice[c++]) : pe.tail;
      int head = pe.head < 0 ? map_inner(choice[c++]) : pe.head;
      result.add_edge(tail, head);
    }
    ++counts[result.canonical_key()];
    int k = free_ends - 1;
    while (k >= 0 && choice[k] == inner_total - 1) choice[k--] = 0;
    if (k < 0) break;
    ++choice[k];
  }
  return counts;
}

std::map<std::string, Rational> graft_normalized(const PointedGraph& outer,
                                                 const PointedGraph& inner) {
  if (outer.marked_count() != 1 || inner.marked_count() != 1) {
    throw std::invalid_argument("graft_normalized requires one-pointed graphs");
  }
  long long denom = outer.aut_order() * inner.aut_order();
  std::map<std::string, Rational> out;
  for (const auto& [key, count] : graft_raw(outer, 0, inner)) {
    out.emplace(key, Rational(count, denom));
  }
  return out;
}

long long alpha(const PointedGraph& outer, const PointedGraph& inner,
                const PointedGraph& host) {
  if (outer.marked_count() != 1) return 0;
  if (inner.marked_count() != host.marked_count()) return 0;
  int k = inner.ordinary_count();
  if (host.ordinary_count() - k != outer.ordinary_count()) return 0;
  if (host.edge_count() != outer.edge_count() + inner.edge_count()) return 0;

  const std::string inner_key = inner.canonical_key();
  const std::string outer_key = outer.canonical_key();
  const long long target_edges = inner.edge_count();

  long long total = 0;
  int n = host.ordinary_count();
  std::vector<int> chosen;
  std::function<void(int)> pick = [&](int start) {
    if (static_cast<int>(chosen.size()) == k) {
      unsigned mask = 0;
      for (int j : chosen) mask |= 1u << j;
      for_each_selection_on(host, mask, [&](const SubgraphSelection& sel) {
        if (sel.edge_total() != target_edges) return;
        if (induced_graph(host, sel).canonical_key() != inner_key) return;
        if (contract(host, sel).canonical_key() != outer_key) return;
        total += instance_count(host, sel);
      });
      return;
    }
    for (int j = start; j < n; ++j) {
      chosen.push_back(j);
      pick(j + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return total;
}

std::vector<SubgraphSelection> bt_subgraphs(const PointedGraph& g) {
  return family_subgraphs(g, Family::kBT);
}

std::vector<SubgraphSelection> s_subgraphs(const PointedGraph& g) {
  return family_subgraphs(g, Family::kS);
}

long long inversion_identity_check(const PointedGraph& g) {
  require_nontrivial_scon(g, "inversion identity");
  long long sum = 0;
  for (const SubgraphSelection& sel : bt_subgraphs(g)) {
    long long sign = sel.edge_total() % 2 == 0 ? 1 : -1;
    sum += sign * char_det(contract(g, sel).ordinary_part()) * instance_count(g, sel);
  }
  return sum;
}

long long acyclic_sum_check(const PointedGraph& g) {
  require_nontrivial_scon(g, "acyclic subgraph sum");
  long long sum = 0;
  for (const SubgraphSelection& sel : s_subgraphs(g)) {
    long long w = sel.edge_total() - (static_cast<long long>(sel.vertices.size()) - 1);
    sum += (w % 2 != 0 ? -1 : 1) * instance_count(g, sel);
  }
  return sum;
}

VerificationReport substitution_identity_check(const PointedGraph& outer,
                                               const PointedGraph& inner) {
  if (outer.marked_count() != 1 || inner.marked_count() != 1) {
    throw std::invalid_argument("substitution identity requires one-pointed graphs");
  }
  VerificationReport report;
  report.suite = "substitution";
  report.config = "outer=" + outer.canonical_key() + " inner=" + inner.canonical_key();
  const Rational denom(outer.aut_order() * inner.aut_order());
  for (const auto& [key, count] : graft_raw(outer, 0, inner)) {
    PointedGraph g = PointedGraph::from_key(key);
    Rational lhs = Rational(count) / denom;
    Rational rhs(alpha(outer, inner, g), g.aut_order());
    report.record(lhs == rhs, key, rhs.to_string(), lhs.to_string());
  }
  return report;
}

}  // namespace gcalc
