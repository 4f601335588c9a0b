#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hz/error.hpp"

namespace hz {

// A hyperedge: a set of at least two vertices, stored sorted ascending.
// For hypergraphs with n <= 64, `vmask` mirrors `members` as a bit set and
// is the fast path for intersection, coverage and containment tests.
struct Edge {
  std::vector<int> members;
  std::uint64_t vmask = 0;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int v) const;
};

bool operator==(const Edge& a, const Edge& b);
bool operator!=(const Edge& a, const Edge& b);

// Canonical edge order: smaller edges first, ties broken lexicographically
// on the sorted member lists.
bool edge_less(const Edge& a, const Edge& b);

// A split of [0, n) into two disjoint non-empty sides.
struct Bipartition {
  std::vector<int> side1;
  std::vector<int> side2;
};

// Immutable-after-build hypergraph: n vertices 0..n-1 plus a duplicate-free
// edge list held in canonical order. Degrees are computed once at build
// time. Values are safe to share across threads.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates and canonicalizes. Member lists may arrive in any order and
  // are sorted; everything else is rejected rather than repaired:
  // n == 0 (EmptyVertexSet), vertices outside [0, n) (VertexOutOfRange),
  // a vertex repeated inside one edge (DuplicateVertex), edges with fewer
  // than two vertices (EdgeTooSmall), two edges equal as sets
  // (DuplicateEdge).
  static Hypergraph build(int n, const std::vector<std::vector<int>>& edge_lists);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  // Number of edges containing v; 0 for isolated vertices.
  long long degree(int v) const;
  const std::vector<long long>& degrees() const { return degrees_; }

  // Bit set of all n vertices; only meaningful for n <= 64.
  std::uint64_t full_vertex_mask() const;

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<long long> degrees_ = {0};
};

bool operator==(const Hypergraph& a, const Hypergraph& b);
bool operator!=(const Hypergraph& a, const Hypergraph& b);

// Total order matching the canonical serialization: by n, then by the
// canonical edge lists compared lexicographically with edge_less. Used as
// the deterministic tie-break wherever one witness must be chosen.
int compare(const Hypergraph& a, const Hypergraph& b);
bool hypergraph_less(const Hypergraph& a, const Hypergraph& b);

// True iff every pair of vertices is joined by a path. A hypergraph with an
// isolated vertex and n >= 2 is disconnected; n == 1 with no edges counts
// as connected.
bool is_connected(const Hypergraph& h);

// Common edge size k if all edges agree, absent for mixed sizes.
// Requires at least one edge (NoEdges).
std::optional<int> uniformity(const Hypergraph& h);

// True iff every pair of distinct edges shares at most one vertex.
bool is_linear(const Hypergraph& h);

// True iff every edge meets both sides of b. Rejects partitions that are
// not a disjoint non-empty cover of [0, n) (InvalidPartition).
bool is_weak_bipartite_with(const Hypergraph& h, const Bipartition& b);

// Some bipartition for which h is weak bipartite, or absent. Brute force
// over the 2^(n-1) - 1 splits; deterministic tie-break: the returned side1
// is the lexicographically smallest vertex set containing vertex 0 that
// works. Requires n >= 2 (TooFewVertices) and n <= 64 (UnsupportedN).
std::optional<Bipartition> find_weak_bipartition(const Hypergraph& h);

// True iff h is connected and removing any single edge disconnects it.
bool is_hypertree(const Hypergraph& h);

struct Pendents {
  std::vector<int> vertices;      // vertices of degree exactly 1
  std::vector<int> edge_indices;  // edges containing exactly |e|-1 pendent vertices
};

Pendents pendents(const Hypergraph& h);

// Rebuilds h with vertex v renamed to perm[v]. perm must be a permutation
// of [0, n).
Hypergraph relabeled(const Hypergraph& h, const std::vector<int>& perm);

}  // namespace hz
