#pragma once

// Independent reference implementations used only by tests. Everything here
// is written the slow, obvious way so it can disagree with the library when
// the library is wrong.

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hz/hypergraph.hpp"
#include "hz/indices.hpp"

namespace hz::test {

// Degrees recomputed from scratch by scanning the whole edge list per
// vertex, then the two index sums evaluated term by term.
inline std::pair<IndexValue, IndexValue> naive_hm(const Hypergraph& h) {
  std::vector<long long> deg(static_cast<size_t>(h.n()), 0);
  for (int v = 0; v < h.n(); ++v) {
    for (const Edge& e : h.edges()) {
      if (std::find(e.members.begin(), e.members.end(), v) != e.members.end()) {
        ++deg[static_cast<size_t>(v)];
      }
    }
  }
  IndexValue s1 = 0, s2 = 0;
  for (const Edge& e : h.edges()) {
    IndexValue sum = 0, prod = 1;
    for (int v : e.members) {
      sum += deg[static_cast<size_t>(v)];
      prod *= deg[static_cast<size_t>(v)];
    }
    s1 += sum * sum;
    s2 += prod * prod;
  }
  return {s1, s2};
}

// Breadth-first search over the bipartite vertex/edge incidence structure.
inline bool oracle_connected(const Hypergraph& h) {
  if (h.n() == 1) return h.edge_count() == 0 || h.degree(0) > 0;
  std::vector<bool> seen(static_cast<size_t>(h.n()), false);
  std::vector<bool> used(static_cast<size_t>(h.edge_count()), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int i = 0; i < h.edge_count(); ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      const Edge& e = h.edge(i);
      if (!e.contains(v)) continue;
      used[static_cast<size_t>(i)] = true;
      for (int u : e.members) {
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = true;
          q.push(u);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Number of connected hypergraphs on r labeled vertices, via the standard
// decomposition on the component containing vertex 0: with t(r) = 2^(2^r -
// r - 1) counting all hypergraphs, f(r) = t(r) - sum over proper component
// sizes s of C(r-1, s-1) f(s) t(r-s), seeded with f(1) = 1.
inline IndexValue connected_count(int n) {
  auto total = [](int r) {
    IndexValue t = 1;
    t <<= (1ull << r) - static_cast<unsigned long long>(r) - 1;
    return t;
  };
  auto binom = [](long long a, long long b) {
    IndexValue r = 1;
    for (long long i = 1; i <= b; ++i) {
      r *= a - b + i;
      r /= i;
    }
    return r;
  };
  std::vector<IndexValue> f(static_cast<size_t>(n) + 1);
  f[1] = 1;
  for (int r = 2; r <= n; ++r) {
    IndexValue val = total(r);
    for (int s = 1; s < r; ++s) {
      val -= binom(r - 1, s - 1) * f[static_cast<size_t>(s)] * total(r - s);
    }
    f[static_cast<size_t>(r)] = val;
  }
  return f[static_cast<size_t>(n)];
}

// Uniformly random edge set: n in [min_n, max_n], up to max_edges distinct
// edges with sizes in [2, n]. May be disconnected or edgeless.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int min_n, int max_n,
                                    int max_edges) {
  std::uniform_int_distribution<int> pick_n(min_n, max_n);
  int n = pick_n(rng);
  int want = std::uniform_int_distribution<int>(0, max_edges)(rng);
  std::set<std::vector<int>> edges;
  std::vector<int> verts(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) verts[static_cast<size_t>(v)] = v;
  for (int attempt = 0; attempt < 8 * want + 8; ++attempt) {
    if (static_cast<int>(edges.size()) >= want || n < 2) break;
    int size = std::uniform_int_distribution<int>(2, n)(rng);
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<int> e(verts.begin(), verts.begin() + size);
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  return Hypergraph::build(
      n, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

// Random connected ordinary graph: a random spanning tree plus extra edges.
inline Hypergraph random_connected_graph(std::mt19937_64& rng, int n,
                                         int extra_edges) {
  std::set<std::vector<int>> edges;
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  for (int t = 0; t < extra_edges; ++t) {
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  return Hypergraph::build(
      n, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

// Ordinary-graph Hyper-Zagreb values from an adjacency matrix, no shared
// code with the hypergraph path.
inline std::pair<IndexValue, IndexValue> graph_hm(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n)));
  for (auto [u, v] : edges) {
    adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
    adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
  }
  std::vector<long long> deg(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
        ++deg[static_cast<size_t>(u)];
      }
    }
  }
  IndexValue s1 = 0, s2 = 0;
  for (auto [u, v] : edges) {
    IndexValue sum = deg[static_cast<size_t>(u)] + deg[static_cast<size_t>(v)];
    IndexValue prod = IndexValue(deg[static_cast<size_t>(u)]) *
                      deg[static_cast<size_t>(v)];
    s1 += sum * sum;
    s2 += prod * prod;
  }
  return {s1, s2};
}

}  // namespace hz::test
