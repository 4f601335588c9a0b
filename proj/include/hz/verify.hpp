#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hz/families.hpp"
#include "hz/hypergraph.hpp"
#include "hz/indices.hpp"

namespace hz {

// Exhaustively enumerable classes of labeled hypergraphs. Each space is a
// union of strata, one per vertex count n; within a stratum a candidate
// edge table is materialized and edge subsets are filtered by the space's
// predicate (connected covering all vertices; for the hypertree spaces,
// additionally every edge a bridge).
enum class SpaceKind {
  AllConnected,       // all connected hypergraphs on exactly n vertices
  UniformConnected,   // connected k-uniform hypergraphs on n vertices
  WeakBipartite,      // connected, side1 = {0..p-1}, every edge meets both sides
  Hypertrees,         // hypertrees with exactly m edges, n ranging 2..n_max
  UniformHypertrees,  // k-uniform hypertrees with m edges, n ranging k..m(k-1)+1
};

struct SearchSpace {
  SpaceKind kind = SpaceKind::AllConnected;
  int n = 0;      // AllConnected, UniformConnected
  int k = 0;      // UniformConnected, UniformHypertrees
  int p = 0;      // WeakBipartite
  int q = 0;      // WeakBipartite
  int m = 0;      // Hypertrees, UniformHypertrees
  int n_max = 0;  // Hypertrees
  bool exact_n = false;  // Hypertrees: single stratum n = n_max

  static SearchSpace all_connected(int n);
  static SearchSpace uniform_connected(int n, int k);
  static SearchSpace weak_bipartite(int p, int q);
  static SearchSpace hypertrees(int n_max, int m);
  static SearchSpace hypertrees_exact(int n, int m);
  static SearchSpace uniform_hypertrees(int k, int m);
};

bool operator==(const SearchSpace& a, const SearchSpace& b);
bool operator!=(const SearchSpace& a, const SearchSpace& b);

// Text syntax: allconnected:n=4, uniformconnected:n=5,k=3,
// weakbipartite:p=2,q=2, hypertrees:nmax=5,m=3 (union over n),
// hypertrees:n=5,m=3 (single stratum), uniformhypertrees:k=3,m=3.
SearchSpace parse_space(const std::string& text);
std::string to_text(const SearchSpace& space);

// Number of candidate edge subsets the scan would examine, summed over
// strata (2^|candidates| for the connected spaces, C(|candidates|, m) for
// the hypertree spaces). This is what the cap limits; it counts raw
// subsets, before any predicate filtering.
IndexValue subset_count(const SearchSpace& space);

// Default cap on examined subsets: 2^26, sized so that AllConnected(5)
// (exactly 2^26) is the largest default desk run.
inline constexpr std::uint64_t kDefaultSubsetCap = 1ull << 26;

struct ScanOptions {
  int threads = 0;  // 0 = hardware concurrency
  std::uint64_t cap = kDefaultSubsetCap;
  int witness_limit = 3;
};

enum class WhichIndex { Hm1, Hm2 };
const char* index_name(WhichIndex index);        // "hm1" / "hm2"
WhichIndex parse_index(const std::string& text);

// One extremum: the value, how many labeled objects attain it, and the
// canonically smallest attainers (up to witness_limit of them).
struct ExtremalSide {
  IndexValue value;
  std::uint64_t attainers = 0;
  std::vector<Hypergraph> witnesses;
};

// Both indices' extrema from a single enumeration pass.
struct ScanResult {
  SearchSpace space;
  std::uint64_t population = 0;  // objects passing the space predicate
  ExtremalSide hm1_min, hm1_max, hm2_min, hm2_max;
  double elapsed_seconds = 0.0;
};

struct ExtremalResult {
  SearchSpace space;
  WhichIndex index = WhichIndex::Hm1;
  ExtremalSide min, max;
  std::uint64_t population = 0;
  double elapsed_seconds = 0.0;
};

// Exhaustive scan. Deterministic: results and witness sets are identical
// for any thread count, because per-chunk partial results merge by value
// with a canonical-order witness tie-break.
ScanResult scan_all(const SearchSpace& space, const ScanOptions& options = {});
ExtremalResult extremal_scan(const SearchSpace& space, WhichIndex index,
                             const ScanOptions& options = {});

// Sequential enumeration in the documented order: strata by ascending n;
// within a stratum, edge subsets by increasing cardinality, then ascending
// candidate-index bitmask.
void for_each_hypergraph(const SearchSpace& space,
                         const std::function<void(const Hypergraph&)>& fn,
                         std::uint64_t cap = kDefaultSubsetCap);
std::vector<Hypergraph> collect(const SearchSpace& space,
                                std::uint64_t cap = kDefaultSubsetCap);

enum class BoundSide { Lower, Upper };
const char* side_name(BoundSide side);  // "lower" / "upper"

enum class ClaimStatus { HoldsTight, HoldsSlack, Violated };
const char* status_name(ClaimStatus status);  // "holds-tight" etc.

// Claim parameters are named integers, e.g. {n:4} or {k:3, m:3}.
struct ClaimParams {
  std::map<std::string, long long> values;

  long long get(const std::string& name) const;  // InvalidClaimParams if absent
};

ClaimParams parse_claim_params(const std::string& text);  // "n=4,k=3"

struct ClaimInfo {
  std::string id;
  std::vector<std::string> param_names;
  std::string description;
};

// Every registered bound claim, in registry order.
std::vector<ClaimInfo> claim_registry();

struct VerificationReport {
  std::string claim_id;
  ClaimParams params;
  SearchSpace space;
  WhichIndex index = WhichIndex::Hm1;
  BoundSide side = BoundSide::Upper;
  IndexValue claimed_bound;
  IndexValue observed_extremum;
  ClaimStatus status = ClaimStatus::HoldsTight;
  std::uint64_t population = 0;
  std::uint64_t attainers = 0;  // objects attaining the observed extremum
  std::vector<Hypergraph> witnesses;
  bool uniqueness_claimed = false;
  bool uniqueness_observed = false;
  FamilySpec expected_witness;  // the family instance said to attain the bound
  IndexValue expected_witness_value;
  bool expected_witness_attains = false;
  double elapsed_seconds = 0.0;
};

// Evaluates the claimed bound exactly, scans the matching space, and
// classifies: holds-tight (bound equals the observed extremum),
// holds-slack (bound is strictly outside the observed range), or violated
// (some enumerated object beats the bound).
VerificationReport check_claim(const std::string& claim_id,
                               const ClaimParams& params,
                               const ScanOptions& options = {});

// Serialization. Text is stable key=value lines with witnesses in inline
// .hg form and no timing, so byte-identical output across runs and thread
// counts; JSON additionally carries elapsed_seconds.
std::string to_text(const ExtremalResult& result);
std::string to_text(const VerificationReport& report);
std::string to_json(const ExtremalResult& result);
std::string to_json(const VerificationReport& report);

}  // namespace hz
