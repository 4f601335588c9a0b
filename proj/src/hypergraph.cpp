#include "hz/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace hz {

const char* errc_name(errc code) {
  switch (code) {
    case errc::edge_too_small: return "EdgeTooSmall";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::duplicate_vertex: return "DuplicateVertex";
    case errc::empty_vertex_set: return "EmptyVertexSet";
    case errc::no_edges: return "NoEdges";
    case errc::invalid_partition: return "InvalidPartition";
    case errc::too_few_vertices: return "TooFewVertices";
    case errc::invalid_family_params: return "InvalidFamilyParams";
    case errc::space_too_large: return "SpaceTooLarge";
    case errc::unsupported_n: return "UnsupportedN";
    case errc::unknown_claim: return "UnknownClaim";
    case errc::invalid_claim_params: return "InvalidClaimParams";
    case errc::duplicate_name: return "DuplicateName";
    case errc::too_few_rows: return "TooFewRows";
    case errc::missing_activity: return "MissingActivity";
    case errc::fit_error: return "FitError";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

namespace {

std::string edge_to_string(const std::vector<int>& members) {
  std::string s = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(members[i]);
  }
  return s + "}";
}

// Union-find over vertex indices, path halving and union by size.
struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;
  int components;

  explicit UnionFind(int n) : parent(n), size(n, 1), components(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    --components;
  }
};

}  // namespace

bool Edge::contains(int v) const {
  if (vmask != 0) return v < 64 && ((vmask >> v) & 1u);
  return std::binary_search(members.begin(), members.end(), v);
}

bool operator==(const Edge& a, const Edge& b) { return a.members == b.members; }
bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }

bool edge_less(const Edge& a, const Edge& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members < b.members;
}

Hypergraph Hypergraph::build(int n, const std::vector<std::vector<int>>& edge_lists) {
  if (n <= 0) fail(errc::empty_vertex_set, "vertex count must be positive, got " + std::to_string(n));

  Hypergraph h;
  h.n_ = n;
  h.edges_.reserve(edge_lists.size());
  for (const auto& raw : edge_lists) {
    Edge e;
    e.members = raw;
    std::sort(e.members.begin(), e.members.end());
    if (e.members.size() < 2) {
      fail(errc::edge_too_small,
           "edge " + edge_to_string(e.members) + " has " + std::to_string(e.members.size()) +
               " vertices; hyperedges need at least 2");
    }
    for (size_t i = 0; i < e.members.size(); ++i) {
      int v = e.members[i];
      if (v < 0 || v >= n) {
        fail(errc::vertex_out_of_range,
             "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ") in edge " +
                 edge_to_string(e.members));
      }
      if (i > 0 && e.members[i - 1] == v) {
        fail(errc::duplicate_vertex,
             "vertex " + std::to_string(v) + " repeated in edge " + edge_to_string(e.members));
      }
    }
    if (n <= 64) {
      for (int v : e.members) e.vmask |= 1ull << v;
    }
    h.edges_.push_back(std::move(e));
  }

  std::sort(h.edges_.begin(), h.edges_.end(), edge_less);
  for (size_t i = 1; i < h.edges_.size(); ++i) {
    if (h.edges_[i - 1] == h.edges_[i]) {
      fail(errc::duplicate_edge, "edge " + edge_to_string(h.edges_[i].members) + " appears twice");
    }
  }

  h.degrees_.assign(n, 0);
  for (const Edge& e : h.edges_) {
    for (int v : e.members) ++h.degrees_[v];
  }
  return h;
}

long long Hypergraph::degree(int v) const {
  if (v < 0 || v >= n_) {
    fail(errc::vertex_out_of_range,
         "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
  }
  return degrees_[v];
}

std::uint64_t Hypergraph::full_vertex_mask() const {
  return n_ >= 64 ? ~0ull : (1ull << n_) - 1;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  return a.n() == b.n() && a.edges() == b.edges();
}
bool operator!=(const Hypergraph& a, const Hypergraph& b) { return !(a == b); }

int compare(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n()) return a.n() < b.n() ? -1 : 1;
  size_t common = std::min(a.edges().size(), b.edges().size());
  for (size_t i = 0; i < common; ++i) {
    if (edge_less(a.edge(i), b.edge(i))) return -1;
    if (edge_less(b.edge(i), a.edge(i))) return 1;
  }
  if (a.edges().size() != b.edges().size()) return a.edges().size() < b.edges().size() ? -1 : 1;
  return 0;
}

bool hypergraph_less(const Hypergraph& a, const Hypergraph& b) { return compare(a, b) < 0; }

bool is_connected(const Hypergraph& h) {
  if (h.n() == 1) return true;
  UnionFind uf(h.n());
  for (const Edge& e : h.edges()) {
    for (size_t i = 1; i < e.members.size(); ++i) uf.unite(e.members[0], e.members[i]);
  }
  // An isolated vertex stays its own component, so this also covers the
  // degree-0 case.
  return uf.components == 1;
}

std::optional<int> uniformity(const Hypergraph& h) {
  if (h.edge_count() == 0) fail(errc::no_edges, "uniformity needs at least one edge");
  int k = h.edge(0).size();
  for (const Edge& e : h.edges()) {
    if (e.size() != k) return std::nullopt;
  }
  return k;
}

bool is_linear(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      int shared;
      if (h.n() <= 64) {
        shared = __builtin_popcountll(edges[i].vmask & edges[j].vmask);
      } else {
        std::vector<int> tmp;
        std::set_intersection(edges[i].members.begin(), edges[i].members.end(),
                              edges[j].members.begin(), edges[j].members.end(),
                              std::back_inserter(tmp));
        shared = static_cast<int>(tmp.size());
      }
      if (shared > 1) return false;
    }
  }
  return true;
}

namespace {

void check_partition(const Hypergraph& h, const Bipartition& b) {
  std::vector<int> seen(h.n(), 0);
  auto mark = [&](const std::vector<int>& side) {
    for (int v : side) {
      if (v < 0 || v >= h.n()) {
        fail(errc::invalid_partition,
             "partition vertex " + std::to_string(v) + " outside [0, " + std::to_string(h.n()) + ")");
      }
      if (seen[v]++) fail(errc::invalid_partition, "vertex " + std::to_string(v) + " assigned twice");
    }
  };
  mark(b.side1);
  mark(b.side2);
  if (b.side1.empty() || b.side2.empty()) fail(errc::invalid_partition, "both sides must be non-empty");
  for (int v = 0; v < h.n(); ++v) {
    if (!seen[v]) fail(errc::invalid_partition, "vertex " + std::to_string(v) + " not assigned to a side");
  }
}

}  // namespace

bool is_weak_bipartite_with(const Hypergraph& h, const Bipartition& b) {
  check_partition(h, b);
  if (h.n() <= 64) {
    std::uint64_t side1 = 0;
    for (int v : b.side1) side1 |= 1ull << v;
    for (const Edge& e : h.edges()) {
      if ((e.vmask & side1) == 0 || (e.vmask & ~side1) == 0) return false;
    }
    return true;
  }
  std::vector<char> in1(h.n(), 0);
  for (int v : b.side1) in1[v] = 1;
  for (const Edge& e : h.edges()) {
    bool hit1 = false, hit2 = false;
    for (int v : e.members) (in1[v] ? hit1 : hit2) = true;
    if (!hit1 || !hit2) return false;
  }
  return true;
}

namespace {

// Pre-order walk over vertex sets containing 0, children extended by each
// larger vertex in ascending order. This visits candidate side1 sets in
// lexicographic order of their sorted sequences: {0}, {0,1}, {0,1,2}, ...
bool bipartition_dfs(const Hypergraph& h, std::uint64_t full, std::uint64_t side1, int next,
                     std::uint64_t* found) {
  if (side1 != full) {  // side2 must be non-empty
    bool ok = true;
    for (const Edge& e : h.edges()) {
      if ((e.vmask & side1) == 0 || (e.vmask & ~side1 & full) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      *found = side1;
      return true;
    }
  }
  for (int v = next; v < h.n(); ++v) {
    if (bipartition_dfs(h, full, side1 | (1ull << v), v + 1, found)) return true;
  }
  return false;
}

}  // namespace

std::optional<Bipartition> find_weak_bipartition(const Hypergraph& h) {
  if (h.n() < 2) fail(errc::too_few_vertices, "a bipartition needs at least 2 vertices");
  if (h.n() > 64) fail(errc::unsupported_n, "bipartition search supports at most 64 vertices");
  std::uint64_t full = h.full_vertex_mask();
  std::uint64_t side1 = 0;
  if (!bipartition_dfs(h, full, 1ull, 1, &side1)) return std::nullopt;
  Bipartition b;
  for (int v = 0; v < h.n(); ++v) {
    ((side1 >> v) & 1u ? b.side1 : b.side2).push_back(v);
  }
  return b;
}

bool is_hypertree(const Hypergraph& h) {
  if (!is_connected(h)) return false;
  for (int skip = 0; skip < h.edge_count(); ++skip) {
    UnionFind uf(h.n());
    for (int i = 0; i < h.edge_count(); ++i) {
      if (i == skip) continue;
      const Edge& e = h.edge(i);
      for (size_t j = 1; j < e.members.size(); ++j) uf.unite(e.members[0], e.members[j]);
    }
    if (uf.components == 1) return false;  // the edge is not a bridge
  }
  return true;
}

Pendents pendents(const Hypergraph& h) {
  Pendents out;
  for (int v = 0; v < h.n(); ++v) {
    if (h.degrees()[v] == 1) out.vertices.push_back(v);
  }
  for (int i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    int pendent_members = 0;
    for (int v : e.members) {
      if (h.degrees()[v] == 1) ++pendent_members;
    }
    // Exactly |e| - 1 by definition: a lone edge whose members are all
    // pendent does not qualify.
    if (pendent_members == e.size() - 1) out.edge_indices.push_back(i);
  }
  return out;
}

Hypergraph relabeled(const Hypergraph& h, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != h.n()) {
    fail(errc::vertex_out_of_range, "permutation has " + std::to_string(perm.size()) +
                                        " entries for " + std::to_string(h.n()) + " vertices");
  }
  std::vector<char> seen(h.n(), 0);
  for (int v : perm) {
    if (v < 0 || v >= h.n()) {
      fail(errc::vertex_out_of_range, "permutation value " + std::to_string(v) + " outside [0, " +
                                          std::to_string(h.n()) + ")");
    }
    if (seen[v]++) fail(errc::duplicate_vertex, "permutation repeats " + std::to_string(v));
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    std::vector<int> mapped;
    mapped.reserve(e.members.size());
    for (int v : e.members) mapped.push_back(perm[v]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::build(h.n(), edges);
}

}  // namespace hz
