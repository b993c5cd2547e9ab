#include "gcalc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gcalc/spectral.hpp"

namespace gcalc {

PointedGraph::PointedGraph(int marked, int ordinary)
    : marked_(marked), ordinary_(ordinary) {
  if (marked < 0 || ordinary < 0) throw std::invalid_argument("PointedGraph: negative vertex count");
  adj_.assign(static_cast<size_t>(total_vertices()) * total_vertices(), 0);
}

void PointedGraph::check_vertex(int v) const {
  if (v < 0 || v >= total_vertices()) throw std::out_of_range("PointedGraph: vertex out of range");
}

void PointedGraph::set_multiplicity(int from, int to, Mult m) {
  check_vertex(from);
  check_vertex(to);
  if (m < 0) throw std::invalid_argument("PointedGraph: negative multiplicity");
  adj_[idx(from, to)] = m;
}

void PointedGraph::add_edge(int from, int to, Mult count) {
  check_vertex(from);
  check_vertex(to);
  if (count < 0) throw std::invalid_argument("PointedGraph: negative multiplicity");
  adj_[idx(from, to)] += count;
}

long long PointedGraph::edge_count() const {
  long long s = 0;
  for (Mult m : adj_) s += m;
  return s;
}

Degree PointedGraph::degrees(int v) const {
  check_vertex(v);
  Degree d;
  int n = total_vertices();
  for (int u = 0; u < n; ++u) {
    d.out += adj_[idx(v, u)];
    d.in += adj_[idx(u, v)];
  }
  return d;
}

bool PointedGraph::vertex_semistable(int v) const {
  Degree d = degrees(v);
  return d.in >= 1 && d.out >= 1 && d.in + d.out >= 3;
}

bool PointedGraph::vertex_stable(int v) const {
  Degree d = degrees(v);
  return d.in >= 2 && d.out >= 2;
}

bool PointedGraph::is_semistable() const {
  for (int v = marked_; v < total_vertices(); ++v)
    if (!vertex_semistable(v)) return false;
  return true;
}

bool PointedGraph::is_stable() const {
  for (int v = marked_; v < total_vertices(); ++v)
    if (!vertex_stable(v)) return false;
  return true;
}

namespace {

// Iterative Tarjan SCC over a dense multiplicity matrix.
std::vector<std::vector<int>> tarjan_sccs(const std::vector<Mult>& adj, int n) {
  std::vector<std::vector<int>> sccs;
  if (n == 0) return sccs;
  std::vector<int> index(n, -1), low(n, 0), stack_pos(n, -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0;

  struct Frame {
    int v;
    int next_child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      bool descended = false;
      while (f.next_child < n) {
        int w = f.next_child++;
        if (adj[f.v * n + w] <= 0 || w == f.v) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended) continue;
      int v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<int> comp;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
          if (w == v) break;
        }
        std::sort(comp.begin(), comp.end());
        sccs.push_back(std::move(comp));
      }
    }
  }
  return sccs;
}

}  // namespace

bool PointedGraph::strongly_connected() const {
  if (marked_ >= 2) return merge_marked().strongly_connected();
  int n = total_vertices();
  if (n == 0) return true;  // vacuous; never produced by enumeration
  if (n == 1) return true;
  return tarjan_sccs(adj_, n).size() == 1;
}

std::vector<std::vector<int>> PointedGraph::scc_decompose(bool ordinary_only) const {
  if (!ordinary_only) return tarjan_sccs(adj_, total_vertices());
  PointedGraph part = ordinary_part();
  auto sccs = tarjan_sccs(part.adj_, part.total_vertices());
  for (auto& comp : sccs)
    for (int& v : comp) v += marked_;
  return sccs;
}

PointedGraph PointedGraph::ordinary_part() const {
  PointedGraph out(0, ordinary_);
  for (int i = 0; i < ordinary_; ++i)
    for (int j = 0; j < ordinary_; ++j)
      out.adj_[i * ordinary_ + j] = adj_[idx(marked_ + i, marked_ + j)];
  return out;
}

PointedGraph PointedGraph::merge_marked() const {
  if (marked_ < 1) throw std::invalid_argument("merge_marked: no marked vertices");
  PointedGraph out(1, ordinary_);
  int n = total_vertices();
  auto squash = [&](int v) { return v < marked_ ? 0 : v - marked_ + 1; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.adj_[out.idx(squash(i), squash(j))] += adj_[idx(i, j)];
  return out;
}

PointedGraph PointedGraph::subdivide_edge(int from, int to, int parallel_index) const {
  check_vertex(from);
  check_vertex(to);
  Mult m = multiplicity(from, to);
  if (parallel_index < 0 || parallel_index >= m)
    throw std::out_of_range("subdivide_edge: parallel index out of range");
  PointedGraph out(marked_, ordinary_ + 1);
  int n = total_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.adj_[out.idx(i, j)] = adj_[idx(i, j)];
  int w = n;  // the fresh vertex sits last
  out.adj_[out.idx(from, to)] -= 1;
  out.adj_[out.idx(from, w)] += 1;
  out.adj_[out.idx(w, to)] += 1;
  return out;
}

template <typename Fn>
void PointedGraph::for_each_cell_permutation(Fn&& fn) const {
  int n = total_vertices();
  // Partition ordinary vertices by their marked-row column vector; the
  // lexicographic row-major minimum must list cells in ascending vector order,
  // so only within-cell orderings remain free.
  std::vector<std::pair<std::vector<Mult>, int>> keyed;
  keyed.reserve(ordinary_);
  for (int v = marked_; v < n; ++v) {
    std::vector<Mult> key(marked_);
    for (int r = 0; r < marked_; ++r) key[r] = adj_[idx(r, v)];
    keyed.emplace_back(std::move(key), v);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::pair<int, int>> cells;  // [begin, end) into keyed
  for (int i = 0; i < static_cast<int>(keyed.size());) {
    int j = i;
    while (j < static_cast<int>(keyed.size()) && keyed[j].first == keyed[i].first) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (size_t i = 0; i < keyed.size(); ++i) perm[marked_ + i] = keyed[i].second;

  // Odometer of per-cell permutations (std::next_permutation needs sorted
  // starting blocks).
  for (auto [b, e] : cells) std::sort(perm.begin() + marked_ + b, perm.begin() + marked_ + e);
  size_t cell = 0;
  while (true) {
    fn(const_cast<const std::vector<int>&>(perm));
    for (cell = 0; cell < cells.size(); ++cell) {
      auto [b, e] = cells[cell];
      if (std::next_permutation(perm.begin() + marked_ + b, perm.begin() + marked_ + e)) break;
    }
    if (cell == cells.size()) break;
  }
}

PointedGraph PointedGraph::canonical_form() const {
  int n = total_vertices();
  if (ordinary_ <= 1) return *this;
  std::vector<Mult> best;
  std::vector<Mult> cur(adj_.size());
  for_each_cell_permutation([&](const std::vector<int>& perm) {
    if (best.empty()) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cur[i * n + j] = adj_[idx(perm[i], perm[j])];
      best = cur;
      return;
    }
    // Lazy row-major comparison with early exit.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Mult v = adj_[idx(perm[i], perm[j])];
        Mult b = best[i * n + j];
        if (v > b) return;
        if (v < b) {
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) cur[p * n + q] = adj_[idx(perm[p], perm[q])];
          best = cur;
          return;
        }
      }
    }
  });
  PointedGraph out(marked_, ordinary_);
  out.adj_ = std::move(best);
  return out;
}

std::string PointedGraph::key_of_this() const {
  std::string key = "P" + std::to_string(marked_) + "V" + std::to_string(ordinary_) + ":";
  int n = total_vertices();
  for (int i = 0; i < n; ++i) {
    if (i) key += '|';
    for (int j = 0; j < n; ++j) {
      if (j) key += ',';
      key += std::to_string(adj_[idx(i, j)]);
    }
  }
  return key;
}

std::string PointedGraph::canonical_key() const { return canonical_form().key_of_this(); }

PointedGraph PointedGraph::from_key(const std::string& key) {
  size_t p = 0;
  auto expect = [&](char c) {
    if (p >= key.size() || key[p] != c) throw std::invalid_argument("from_key: malformed key");
    ++p;
  };
  auto read_int = [&]() {
    size_t start = p;
    while (p < key.size() && isdigit(static_cast<unsigned char>(key[p]))) ++p;
    if (p == start) throw std::invalid_argument("from_key: malformed key");
    return std::stoi(key.substr(start, p - start));
  };
  expect('P');
  int m = read_int();
  expect('V');
  int n = read_int();
  expect(':');
  PointedGraph g(m, n);
  int total = m + n;
  if (total == 0) {
    if (p != key.size()) throw std::invalid_argument("from_key: trailing data");
    return g;
  }
  for (int i = 0; i < total; ++i) {
    if (i) expect('|');
    for (int j = 0; j < total; ++j) {
      if (j) expect(',');
      g.adj_[g.idx(i, j)] = read_int();
    }
  }
  if (p != key.size()) throw std::invalid_argument("from_key: trailing data");
  return g;
}

long long PointedGraph::aut_order() const {
  int n = total_vertices();
  // Vertex automorphisms fix marked vertices pointwise and therefore permute
  // ordinary vertices only within groups sharing the same marked-row column
  // vector. Iterate an odometer of per-group permutations as genuine
  // vertex-to-vertex maps.
  std::map<std::vector<Mult>, std::vector<int>> groups;
  for (int v = marked_; v < n; ++v) {
    std::vector<Mult> key(marked_);
    for (int r = 0; r < marked_; ++r) key[r] = adj_[idx(r, v)];
    groups[key].push_back(v);
  }
  std::vector<std::vector<int>> domain, image;
  for (auto& [key, vs] : groups) {
    domain.push_back(vs);
    image.push_back(vs);
  }
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  long long fixing = 0;
  while (true) {
    for (size_t c = 0; c < domain.size(); ++c)
      for (size_t i = 0; i < domain[c].size(); ++i) pi[domain[c][i]] = image[c][i];
    bool ok = true;
    for (int i = 0; ok && i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (adj_[idx(pi[i], pi[j])] != adj_[idx(i, j)]) {
          ok = false;
          break;
        }
    if (ok) ++fixing;
    size_t c = 0;
    while (c < image.size() && !std::next_permutation(image[c].begin(), image[c].end())) ++c;
    if (c == image.size()) break;
  }
  long long factor = 1;
  for (Mult m : adj_) {
    for (Mult k = 2; k <= m; ++k) factor *= k;
  }
  return fixing * factor;
}

bool PointedGraph::operator==(const PointedGraph& other) const {
  if (marked_ != other.marked_ || ordinary_ != other.ordinary_) return false;
  return canonical_key() == other.canonical_key();
}

std::set<Family> classify_family(const PointedGraph& g) {
  if (g.marked_count() != 1) throw std::invalid_argument("classify_family: graph must be one-pointed");
  if (!g.strongly_connected())
    throw std::invalid_argument("classify_family: graph must be strongly connected");
  std::set<Family> fams{Family::kAll};

  PointedGraph part = g.ordinary_part();
  if (char_det(part) != 0) fams.insert(Family::kB);

  auto sccs = part.scc_decompose();
  bool bt = true;
  bool acyclic = true;
  for (const auto& comp : sccs) {
    if (comp.size() == 1) {
      int v = comp[0];
      Mult loops = part.multiplicity(v, v);
      if (loops == 0) continue;  // bare vertex: fine for BT, fine for S
      acyclic = false;
      if (loops != 1) bt = false;
      // A single loop is a 1-cycle, but the cycle must be the whole induced
      // component, which it is for a singleton.
      continue;
    }
    acyclic = false;
    // The induced subgraph on comp must be exactly a plain directed cycle:
    // every vertex has in = out = 1 inside the component, all multiplicities 1.
    for (int v : comp) {
      long long in = 0, out = 0;
      for (int u : comp) {
        Mult muv = part.multiplicity(v, u), mvu = part.multiplicity(u, v);
        if (muv > 1 || mvu > 1) {
          bt = false;
          break;
        }
        out += muv;
        in += mvu;
      }
      if (!bt || in != 1 || out != 1) {
        bt = false;
        break;
      }
    }
  }
  if (bt) fams.insert(Family::kBT);
  if (acyclic) fams.insert(Family::kS);
  return fams;
}

bool in_family(const PointedGraph& g, Family f) {
  if (f == Family::kAll) return true;
  return classify_family(g).count(f) > 0;
}

}  // namespace gcalc
