#include "hz/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "hz/bigmath.hpp"
#include "hz/error.hpp"
#include "hz/hg_io.hpp"

namespace hz {

namespace {

// Candidate tables larger than this are refused outright; the subset cap
// is the primary guard, this one bounds per-stratum memory.
constexpr std::uint64_t kMaxCandidates = 1ull << 20;

// Fixed chunk sizes, independent of the worker count, so the partition of
// the subset space never depends on parallelism.
constexpr std::uint64_t kMaskChunk = 1ull << 16;
constexpr std::uint64_t kComboChunk = 4096;

[[noreturn]] void bad_space(const std::string& detail) {
  fail(errc::unsupported_n, detail);
}

[[noreturn]] void too_large(const std::string& detail) {
  fail(errc::space_too_large, detail);
}

}  // namespace

SearchSpace SearchSpace::all_connected(int n) {
  if (n < 1 || n > 64) bad_space("allconnected requires 1 <= n <= 64");
  SearchSpace s;
  s.kind = SpaceKind::AllConnected;
  s.n = n;
  return s;
}

SearchSpace SearchSpace::uniform_connected(int n, int k) {
  if (n < 2 || n > 64) bad_space("uniformconnected requires 2 <= n <= 64");
  if (k < 2 || k > n) bad_space("uniformconnected requires 2 <= k <= n");
  SearchSpace s;
  s.kind = SpaceKind::UniformConnected;
  s.n = n;
  s.k = k;
  return s;
}

SearchSpace SearchSpace::weak_bipartite(int p, int q) {
  if (p < 1 || q < 1) bad_space("weakbipartite requires p >= 1 and q >= 1");
  if (p + q > 64) bad_space("weakbipartite requires p + q <= 64");
  SearchSpace s;
  s.kind = SpaceKind::WeakBipartite;
  s.p = p;
  s.q = q;
  return s;
}

SearchSpace SearchSpace::hypertrees(int n_max, int m) {
  if (n_max < 2 || n_max > 64) bad_space("hypertrees requires 2 <= nmax <= 64");
  if (m < 1) bad_space("hypertrees requires m >= 1");
  SearchSpace s;
  s.kind = SpaceKind::Hypertrees;
  s.n_max = n_max;
  s.m = m;
  return s;
}

SearchSpace SearchSpace::hypertrees_exact(int n, int m) {
  SearchSpace s = hypertrees(n, m);
  s.exact_n = true;
  return s;
}

SearchSpace SearchSpace::uniform_hypertrees(int k, int m) {
  if (k < 2) bad_space("uniformhypertrees requires k >= 2");
  if (m < 1) bad_space("uniformhypertrees requires m >= 1");
  long long n_top = static_cast<long long>(m) * (k - 1) + 1;
  if (n_top > 64) bad_space("uniformhypertrees requires m(k-1)+1 <= 64");
  SearchSpace s;
  s.kind = SpaceKind::UniformHypertrees;
  s.k = k;
  s.m = m;
  return s;
}

bool operator==(const SearchSpace& a, const SearchSpace& b) {
  return a.kind == b.kind && a.n == b.n && a.k == b.k && a.p == b.p &&
         a.q == b.q && a.m == b.m && a.n_max == b.n_max &&
         a.exact_n == b.exact_n;
}

bool operator!=(const SearchSpace& a, const SearchSpace& b) {
  return !(a == b);
}

namespace {

std::vector<std::pair<std::string, int>> space_kv(const std::string& text) {
  std::vector<std::pair<std::string, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      fail(errc::parse_error, "expected key=value in space text, got '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    try {
      size_t pos = 0;
      int v = std::stoi(val, &pos);
      if (pos != val.size()) throw std::invalid_argument(val);
      out.emplace_back(key, v);
    } catch (const std::exception&) {
      fail(errc::parse_error,
           "space parameter '" + key + "' is not an integer: '" + val + "'");
    }
  }
  return out;
}

int space_take(const std::vector<std::pair<std::string, int>>& kv,
               const std::string& key) {
  for (const auto& [k, v] : kv) {
    if (k == key) return v;
  }
  fail(errc::parse_error, "space text is missing parameter '" + key + "'");
}

bool space_has(const std::vector<std::pair<std::string, int>>& kv,
               const std::string& key) {
  for (const auto& [k, v] : kv) {
    (void)v;
    if (k == key) return true;
  }
  return false;
}

void space_expect(const std::vector<std::pair<std::string, int>>& kv,
                  size_t count, const std::string& head) {
  if (kv.size() != count) {
    fail(errc::parse_error, "space '" + head + "' takes exactly " +
                                std::to_string(count) + " parameters");
  }
}

}  // namespace

SearchSpace parse_space(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    fail(errc::parse_error, "expected kind:params in space text, got '" + text + "'");
  }
  std::string head = text.substr(0, colon);
  auto kv = space_kv(text.substr(colon + 1));
  if (head == "allconnected") {
    space_expect(kv, 1, head);
    return SearchSpace::all_connected(space_take(kv, "n"));
  }
  if (head == "uniformconnected") {
    space_expect(kv, 2, head);
    return SearchSpace::uniform_connected(space_take(kv, "n"),
                                          space_take(kv, "k"));
  }
  if (head == "weakbipartite") {
    space_expect(kv, 2, head);
    return SearchSpace::weak_bipartite(space_take(kv, "p"),
                                       space_take(kv, "q"));
  }
  if (head == "hypertrees") {
    space_expect(kv, 2, head);
    if (space_has(kv, "n")) {
      return SearchSpace::hypertrees_exact(space_take(kv, "n"),
                                           space_take(kv, "m"));
    }
    return SearchSpace::hypertrees(space_take(kv, "nmax"),
                                   space_take(kv, "m"));
  }
  if (head == "uniformhypertrees") {
    space_expect(kv, 2, head);
    return SearchSpace::uniform_hypertrees(space_take(kv, "k"),
                                           space_take(kv, "m"));
  }
  fail(errc::parse_error, "unknown space kind '" + head + "'");
}

std::string to_text(const SearchSpace& space) {
  std::ostringstream out;
  switch (space.kind) {
    case SpaceKind::AllConnected:
      out << "allconnected:n=" << space.n;
      break;
    case SpaceKind::UniformConnected:
      out << "uniformconnected:n=" << space.n << ",k=" << space.k;
      break;
    case SpaceKind::WeakBipartite:
      out << "weakbipartite:p=" << space.p << ",q=" << space.q;
      break;
    case SpaceKind::Hypertrees:
      if (space.exact_n) {
        out << "hypertrees:n=" << space.n_max << ",m=" << space.m;
      } else {
        out << "hypertrees:nmax=" << space.n_max << ",m=" << space.m;
      }
      break;
    case SpaceKind::UniformHypertrees:
      out << "uniformhypertrees:k=" << space.k << ",m=" << space.m;
      break;
  }
  return out.str();
}

const char* index_name(WhichIndex index) {
  return index == WhichIndex::Hm1 ? "hm1" : "hm2";
}

WhichIndex parse_index(const std::string& text) {
  if (text == "hm1") return WhichIndex::Hm1;
  if (text == "hm2") return WhichIndex::Hm2;
  fail(errc::parse_error, "index must be hm1 or hm2, got '" + text + "'");
}

const char* side_name(BoundSide side) {
  return side == BoundSide::Lower ? "lower" : "upper";
}

const char* status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::HoldsTight: return "holds-tight";
    case ClaimStatus::HoldsSlack: return "holds-slack";
    case ClaimStatus::Violated: return "violated";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Enumeration plumbing.

namespace {

struct Cand {
  std::vector<int> members;
  std::uint64_t vmask = 0;
};

struct Stratum {
  int n = 0;
  std::uint64_t full_mask = 0;
  std::vector<Cand> cands;
  std::uint64_t subsets = 0;  // 2^|cands| or C(|cands|, m); <= cap
  std::uint64_t chunks = 0;
  bool use_u64 = false;
};

struct Plan {
  SearchSpace space;
  bool combo = false;    // subsets are exactly-m combinations of candidates
  bool bridges = false;  // hypertree predicate: every edge a bridge
  int m = 0;
  std::vector<Stratum> strata;
  std::vector<std::uint64_t> chunk_base;  // prefix sums of per-stratum chunks
  std::uint64_t total_chunks = 0;
};

std::vector<int> strata_ns(const SearchSpace& space) {
  std::vector<int> ns;
  switch (space.kind) {
    case SpaceKind::AllConnected:
    case SpaceKind::UniformConnected:
      ns.push_back(space.n);
      break;
    case SpaceKind::WeakBipartite:
      ns.push_back(space.p + space.q);
      break;
    case SpaceKind::Hypertrees:
      if (space.exact_n) {
        ns.push_back(space.n_max);
      } else {
        for (int n = 2; n <= space.n_max; ++n) ns.push_back(n);
      }
      break;
    case SpaceKind::UniformHypertrees: {
      int n_top = space.m * (space.k - 1) + 1;
      for (int n = space.k; n <= n_top; ++n) ns.push_back(n);
      break;
    }
  }
  return ns;
}

IndexValue candidate_count(const SearchSpace& space, int n) {
  switch (space.kind) {
    case SpaceKind::AllConnected:
    case SpaceKind::Hypertrees:
      return big_pow(2, n) - n - 1;
    case SpaceKind::UniformConnected:
      return big_binom(n, space.k);
    case SpaceKind::WeakBipartite:
      return big_pow(2, space.p + space.q) - big_pow(2, space.p) -
             big_pow(2, space.q) + 1;
    case SpaceKind::UniformHypertrees:
      return big_binom(n, space.k);
  }
  return 0;
}

bool is_combo_space(const SearchSpace& space) {
  return space.kind == SpaceKind::Hypertrees ||
         space.kind == SpaceKind::UniformHypertrees;
}

IndexValue stratum_subset_count(const SearchSpace& space, int n) {
  IndexValue c = candidate_count(space, n);
  if (c > kMaxCandidates) {
    too_large("candidate edge table for " + to_text(space) + " at n=" +
              std::to_string(n) + " would hold " + c.str() +
              " edges, over the limit of " + std::to_string(kMaxCandidates));
  }
  if (is_combo_space(space)) return big_binom(c.convert_to<long long>(), space.m);
  return big_pow(2, c.convert_to<unsigned long long>());
}

// Lexicographic s-subsets of {0..n-1}; lex member order concatenated over
// ascending sizes is exactly the canonical edge order.
template <typename Fn>
void lex_combinations(int n, int s, Fn&& fn) {
  if (s > n) return;
  std::vector<int> combo(s);
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    fn(combo);
    int i = s - 1;
    while (i >= 0 && combo[i] == n - s + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
  }
}

std::uint64_t members_mask(const std::vector<int>& members) {
  std::uint64_t m = 0;
  for (int v : members) m |= std::uint64_t(1) << v;
  return m;
}

std::vector<Cand> build_candidates(const SearchSpace& space, int n) {
  std::vector<Cand> cands;
  auto add = [&](const std::vector<int>& members) {
    cands.push_back({members, members_mask(members)});
  };
  switch (space.kind) {
    case SpaceKind::AllConnected:
    case SpaceKind::Hypertrees:
      for (int s = 2; s <= n; ++s) lex_combinations(n, s, add);
      break;
    case SpaceKind::UniformConnected:
    case SpaceKind::UniformHypertrees:
      lex_combinations(n, space.k, add);
      break;
    case SpaceKind::WeakBipartite: {
      std::uint64_t side1 = (std::uint64_t(1) << space.p) - 1;
      std::uint64_t side2 = ((std::uint64_t(1) << n) - 1) & ~side1;
      for (int s = 2; s <= n; ++s) {
        lex_combinations(n, s, [&](const std::vector<int>& members) {
          std::uint64_t m = members_mask(members);
          if ((m & side1) != 0 && (m & side2) != 0) add(members);
        });
      }
      break;
    }
  }
  return cands;
}

// Sound upper bounds on any hm1/hm2 value reachable in the stratum; when
// both fit comfortably in 64 bits the fast kernel is used.
bool u64_kernel_ok(const Stratum& st, bool combo, int m) {
  std::uint64_t budget = combo ? std::uint64_t(m) : st.cands.size();
  std::array<std::uint64_t, 64> full_deg{};
  size_t emax = 0;
  for (const Cand& c : st.cands) {
    emax = std::max(emax, c.members.size());
    for (int v : c.members) ++full_deg[v];
  }
  std::uint64_t d = 0;
  for (int v = 0; v < st.n; ++v) d = std::max(d, std::min(budget, full_deg[v]));
  IndexValue s_max = IndexValue(emax) * d;
  IndexValue p_max = big_pow(d, emax);
  IndexValue limit = big_pow(2, 63);
  return budget * s_max * s_max < limit && budget * p_max * p_max < limit;
}

Plan make_plan(const SearchSpace& space, std::uint64_t cap) {
  // Count before materializing anything, so oversized requests fail with
  // the total instead of thrashing memory.
  IndexValue total = 0;
  for (int n : strata_ns(space)) total += stratum_subset_count(space, n);
  if (total > cap) {
    too_large("space " + to_text(space) + " has " + total.str() +
              " candidate edge subsets, over the cap " + std::to_string(cap) +
              "; an explicit cap override is required");
  }

  Plan plan;
  plan.space = space;
  plan.combo = is_combo_space(space);
  plan.bridges = plan.combo;
  plan.m = space.m;
  std::uint64_t chunk_size = plan.combo ? kComboChunk : kMaskChunk;
  for (int n : strata_ns(space)) {
    Stratum st;
    st.n = n;
    st.full_mask = n == 64 ? ~std::uint64_t(0)
                           : (std::uint64_t(1) << n) - 1;
    st.cands = build_candidates(space, n);
    if (plan.combo) {
      st.subsets = big_binom(static_cast<long long>(st.cands.size()), plan.m)
                       .convert_to<std::uint64_t>();
    } else {
      st.subsets = std::uint64_t(1) << st.cands.size();
    }
    st.chunks = (st.subsets + chunk_size - 1) / chunk_size;
    st.use_u64 = u64_kernel_ok(st, plan.combo, plan.m);
    plan.chunk_base.push_back(plan.total_chunks);
    plan.total_chunks += st.chunks;
    plan.strata.push_back(std::move(st));
  }
  return plan;
}

// ---- Predicates on a subset of candidate edges, given their vertex masks.

// Connectivity among the edges; the caller checks coverage separately.
bool edges_connected(const std::uint64_t* evm, int ec) {
  std::uint64_t comp = evm[0];
  std::array<std::uint64_t, 64> pending;
  int np = 0;
  for (int j = 1; j < ec; ++j) pending[np++] = evm[j];
  bool grew = true;
  while (grew && np > 0) {
    grew = false;
    int w = 0;
    for (int j = 0; j < np; ++j) {
      if (pending[j] & comp) {
        comp |= pending[j];
        grew = true;
      } else {
        pending[w++] = pending[j];
      }
    }
    np = w;
  }
  return np == 0;
}

bool edges_connected_big(const std::vector<std::uint64_t>& evm) {
  std::uint64_t comp = evm[0];
  std::vector<std::uint64_t> pending(evm.begin() + 1, evm.end());
  size_t np = pending.size();
  bool grew = true;
  while (grew && np > 0) {
    grew = false;
    size_t w = 0;
    for (size_t j = 0; j < np; ++j) {
      if (pending[j] & comp) {
        comp |= pending[j];
        grew = true;
      } else {
        pending[w++] = pending[j];
      }
    }
    np = w;
  }
  return np == 0;
}

// Every edge a bridge: dropping any single edge leaves at least two
// components (isolated vertices count). Assumes the whole subset is
// connected and covers all n vertices.
bool all_edges_bridges(const std::vector<std::uint64_t>& evm, int n) {
  int ec = static_cast<int>(evm.size());
  std::vector<std::uint64_t> comps(ec);
  for (int d = 0; d < ec; ++d) {
    int nc = 0;
    std::uint64_t cover = 0;
    for (int j = 0; j < ec; ++j) {
      if (j == d) continue;
      std::uint64_t cm = evm[j];
      cover |= cm;
      int w = 0;
      for (int c = 0; c < nc; ++c) {
        if (comps[c] & cm) {
          cm |= comps[c];
        } else {
          comps[w++] = comps[c];
        }
      }
      nc = w;
      comps[nc++] = cm;
    }
    int total = nc + (n - std::popcount(cover));
    if (total < 2) return false;
  }
  return true;
}

// ---- Deterministic witness bookkeeping.

// A subset of one stratum's candidate table. Because candidate tables are
// in canonical edge order, lexicographic comparison of index sequences
// (stratum first) equals canonical comparison of the hypergraphs.
struct CompactWit {
  std::uint32_t stratum = 0;
  std::vector<std::uint32_t> idx;

  bool operator<(const CompactWit& o) const {
    if (stratum != o.stratum) return stratum < o.stratum;
    return idx < o.idx;
  }
  bool operator==(const CompactWit& o) const {
    return stratum == o.stratum && idx == o.idx;
  }
};

template <typename Value>
struct SideAcc {
  bool is_min = true;
  bool init = false;
  Value best{};
  std::uint64_t attainers = 0;
  std::vector<CompactWit> wits;  // ascending, at most witness_limit

  void insert_wit(CompactWit w, int limit) {
    auto pos = std::lower_bound(wits.begin(), wits.end(), w);
    wits.insert(pos, std::move(w));
    if (static_cast<int>(wits.size()) > limit) wits.pop_back();
  }

  template <typename WitFn>
  void update(const Value& v, int limit, WitFn&& mk) {
    if (!init || (is_min ? v < best : v > best)) {
      init = true;
      best = v;
      attainers = 1;
      wits.clear();
      if (limit > 0) wits.push_back(mk());
      return;
    }
    if (v == best) {
      ++attainers;
      if (limit <= 0) return;
      if (static_cast<int>(wits.size()) < limit) {
        insert_wit(mk(), limit);
      } else {
        CompactWit w = mk();
        if (w < wits.back()) insert_wit(std::move(w), limit);
      }
    }
  }
};

template <typename Value>
struct PartialT {
  std::uint64_t population = 0;
  SideAcc<Value> h1min, h1max, h2min, h2max;

  PartialT() {
    h1min.is_min = true;
    h1max.is_min = false;
    h2min.is_min = true;
    h2max.is_min = false;
  }
};

using Partial = PartialT<IndexValue>;

// Merge is associative and commutative with the empty partial as identity,
// so the final result is independent of chunk assignment and thread count.
template <typename V>
void fold_side(SideAcc<IndexValue>& g, const SideAcc<V>& c, int limit) {
  if (!c.init) return;
  IndexValue v(c.best);
  bool better = !g.init || (g.is_min ? v < g.best : v > g.best);
  if (better) {
    g.init = true;
    g.best = v;
    g.attainers = c.attainers;
    g.wits.assign(c.wits.begin(), c.wits.end());
    return;
  }
  if (v == g.best) {
    g.attainers += c.attainers;
    std::vector<CompactWit> merged;
    merged.reserve(g.wits.size() + c.wits.size());
    std::merge(g.wits.begin(), g.wits.end(), c.wits.begin(), c.wits.end(),
               std::back_inserter(merged));
    if (static_cast<int>(merged.size()) > limit) merged.resize(limit);
    g.wits = std::move(merged);
  }
}

template <typename V>
void fold_partial(Partial& g, const PartialT<V>& c, int limit) {
  g.population += c.population;
  fold_side(g.h1min, c.h1min, limit);
  fold_side(g.h1max, c.h1max, limit);
  fold_side(g.h2min, c.h2min, limit);
  fold_side(g.h2max, c.h2max, limit);
}

// ---- Kernels. The Value type is uint64_t when the stratum's certificate
// shows no overflow is possible, exact big integers otherwise.

template <typename Value>
void run_mask_chunk(const Stratum& st, std::uint32_t sidx, std::uint64_t lo,
                    std::uint64_t hi, int limit, PartialT<Value>& acc) {
  const int n = st.n;
  std::array<int, 64> deg{};
  std::array<std::uint64_t, 64> evm;
  std::array<std::uint32_t, 64> eidx;
  for (std::uint64_t sub = lo; sub < hi; ++sub) {
    int ec = 0;
    std::uint64_t cover = 0;
    for (std::uint64_t t = sub; t != 0; t &= t - 1) {
      std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(t));
      evm[ec] = st.cands[i].vmask;
      cover |= evm[ec];
      eidx[ec] = i;
      ++ec;
    }
    if (ec == 0) {
      if (n != 1) continue;
    } else if (cover != st.full_mask || !edges_connected(evm.data(), ec)) {
      continue;
    }
    for (int j = 0; j < ec; ++j) {
      for (int v : st.cands[eidx[j]].members) ++deg[v];
    }
    Value h1{};
    Value h2{};
    for (int j = 0; j < ec; ++j) {
      long long s = 0;
      Value p(1);
      for (int v : st.cands[eidx[j]].members) {
        s += deg[v];
        p *= Value(deg[v]);
      }
      h1 += Value(s) * Value(s);
      h2 += p * p;
    }
    for (int j = 0; j < ec; ++j) {
      for (int v : st.cands[eidx[j]].members) deg[v] = 0;
    }
    ++acc.population;
    auto mk = [&] {
      return CompactWit{sidx, std::vector<std::uint32_t>(
                                  eidx.begin(), eidx.begin() + ec)};
    };
    acc.h1min.update(h1, limit, mk);
    acc.h1max.update(h1, limit, mk);
    acc.h2min.update(h2, limit, mk);
    acc.h2max.update(h2, limit, mk);
  }
}

void colex_unrank(std::uint64_t rank, int m, std::uint32_t count,
                  std::vector<std::uint32_t>& idx) {
  for (int j = m - 1; j >= 0; --j) {
    std::uint32_t lo = j;
    std::uint32_t hi = count - 1;
    while (lo < hi) {
      std::uint32_t mid = lo + (hi - lo + 1) / 2;
      if (big_binom(mid, j + 1) <= rank) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    idx[j] = lo;
    rank -= big_binom(lo, j + 1).convert_to<std::uint64_t>();
  }
}

void colex_next(std::vector<std::uint32_t>& idx, int m) {
  int j = 0;
  while (j + 1 < m && idx[j] + 1 == idx[j + 1]) {
    idx[j] = j;
    ++j;
  }
  ++idx[j];
}

template <typename Value>
void run_combo_chunk(const Stratum& st, std::uint32_t sidx, int m,
                     bool bridges, std::uint64_t lo, std::uint64_t hi,
                     int limit, PartialT<Value>& acc) {
  const int n = st.n;
  std::vector<std::uint32_t> idx(m);
  std::vector<std::uint64_t> evm(m);
  std::array<int, 64> deg{};
  colex_unrank(lo, m, static_cast<std::uint32_t>(st.cands.size()), idx);
  for (std::uint64_t rank = lo; rank < hi; ++rank) {
    std::uint64_t cover = 0;
    for (int j = 0; j < m; ++j) {
      evm[j] = st.cands[idx[j]].vmask;
      cover |= evm[j];
    }
    bool keep = cover == st.full_mask && edges_connected_big(evm) &&
                (!bridges || all_edges_bridges(evm, n));
    if (keep) {
      for (int j = 0; j < m; ++j) {
        for (int v : st.cands[idx[j]].members) ++deg[v];
      }
      Value h1{};
      Value h2{};
      for (int j = 0; j < m; ++j) {
        long long s = 0;
        Value p(1);
        for (int v : st.cands[idx[j]].members) {
          s += deg[v];
          p *= Value(deg[v]);
        }
        h1 += Value(s) * Value(s);
        h2 += p * p;
      }
      for (int j = 0; j < m; ++j) {
        for (int v : st.cands[idx[j]].members) deg[v] = 0;
      }
      ++acc.population;
      auto mk = [&] { return CompactWit{sidx, idx}; };
      acc.h1min.update(h1, limit, mk);
      acc.h1max.update(h1, limit, mk);
      acc.h2min.update(h2, limit, mk);
      acc.h2max.update(h2, limit, mk);
    }
    if (rank + 1 < hi) colex_next(idx, m);
  }
}

void run_chunk(const Plan& plan, std::uint64_t chunk, int limit,
               Partial& out) {
  size_t s = static_cast<size_t>(
      std::upper_bound(plan.chunk_base.begin(), plan.chunk_base.end(), chunk) -
      plan.chunk_base.begin() - 1);
  const Stratum& st = plan.strata[s];
  std::uint64_t chunk_size = plan.combo ? kComboChunk : kMaskChunk;
  std::uint64_t lo = (chunk - plan.chunk_base[s]) * chunk_size;
  std::uint64_t hi = std::min(lo + chunk_size, st.subsets);
  std::uint32_t sidx = static_cast<std::uint32_t>(s);
  if (plan.combo) {
    if (st.use_u64) {
      PartialT<std::uint64_t> acc;
      run_combo_chunk(st, sidx, plan.m, plan.bridges, lo, hi, limit, acc);
      fold_partial(out, acc, limit);
    } else {
      PartialT<IndexValue> acc;
      run_combo_chunk(st, sidx, plan.m, plan.bridges, lo, hi, limit, acc);
      fold_partial(out, acc, limit);
    }
  } else {
    if (st.use_u64) {
      PartialT<std::uint64_t> acc;
      run_mask_chunk(st, sidx, lo, hi, limit, acc);
      fold_partial(out, acc, limit);
    } else {
      PartialT<IndexValue> acc;
      run_mask_chunk(st, sidx, lo, hi, limit, acc);
      fold_partial(out, acc, limit);
    }
  }
}

int resolve_threads(int requested) {
  if (requested >= 1) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

Hypergraph wit_to_hypergraph(const Plan& plan, const CompactWit& w) {
  const Stratum& st = plan.strata[w.stratum];
  std::vector<std::vector<int>> edges;
  edges.reserve(w.idx.size());
  for (std::uint32_t i : w.idx) edges.push_back(st.cands[i].members);
  return Hypergraph::build(st.n, edges);
}

ExtremalSide to_side(const Plan& plan, const SideAcc<IndexValue>& acc) {
  ExtremalSide side;
  side.value = acc.init ? acc.best : IndexValue(0);
  side.attainers = acc.attainers;
  for (const CompactWit& w : acc.wits) {
    side.witnesses.push_back(wit_to_hypergraph(plan, w));
  }
  return side;
}

}  // namespace

ScanResult scan_all(const SearchSpace& space, const ScanOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  Plan plan = make_plan(space, options.cap);
  int threads = resolve_threads(options.threads);
  int limit = std::max(0, options.witness_limit);

  std::vector<Partial> partials(threads);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&](int w) {
    std::uint64_t c;
    while ((c = next.fetch_add(1)) < plan.total_chunks) {
      run_chunk(plan, c, limit, partials[w]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          worker(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  Partial total;
  for (const Partial& p : partials) fold_partial(total, p, limit);

  ScanResult result;
  result.space = space;
  result.population = total.population;
  result.hm1_min = to_side(plan, total.h1min);
  result.hm1_max = to_side(plan, total.h1max);
  result.hm2_min = to_side(plan, total.h2min);
  result.hm2_max = to_side(plan, total.h2max);
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

ExtremalResult extremal_scan(const SearchSpace& space, WhichIndex index,
                             const ScanOptions& options) {
  ScanResult all = scan_all(space, options);
  ExtremalResult result;
  result.space = space;
  result.index = index;
  result.min = index == WhichIndex::Hm1 ? all.hm1_min : all.hm2_min;
  result.max = index == WhichIndex::Hm1 ? all.hm1_max : all.hm2_max;
  result.population = all.population;
  result.elapsed_seconds = all.elapsed_seconds;
  return result;
}

void for_each_hypergraph(const SearchSpace& space,
                         const std::function<void(const Hypergraph&)>& fn,
                         std::uint64_t cap) {
  Plan plan = make_plan(space, cap);
  for (size_t s = 0; s < plan.strata.size(); ++s) {
    const Stratum& st = plan.strata[s];
    int c = static_cast<int>(st.cands.size());
    auto emit = [&](const std::vector<std::uint32_t>& idx) {
      std::vector<std::uint64_t> evm(idx.size());
      std::uint64_t cover = 0;
      for (size_t j = 0; j < idx.size(); ++j) {
        evm[j] = st.cands[idx[j]].vmask;
        cover |= evm[j];
      }
      bool keep;
      if (idx.empty()) {
        keep = st.n == 1;
      } else {
        keep = cover == st.full_mask && edges_connected_big(evm) &&
               (!plan.bridges || all_edges_bridges(evm, st.n));
      }
      if (!keep) return;
      std::vector<std::vector<int>> edges;
      edges.reserve(idx.size());
      for (std::uint32_t i : idx) edges.push_back(st.cands[i].members);
      fn(Hypergraph::build(st.n, edges));
    };
    if (plan.combo) {
      if (st.subsets == 0) continue;
      std::vector<std::uint32_t> idx(plan.m);
      std::iota(idx.begin(), idx.end(), 0);
      for (std::uint64_t rank = 0; rank < st.subsets; ++rank) {
        emit(idx);
        if (rank + 1 < st.subsets) colex_next(idx, plan.m);
      }
    } else {
      // Increasing cardinality, then ascending candidate-index bitmask.
      for (int pc = 0; pc <= c; ++pc) {
        if (pc == 0) {
          emit({});
          continue;
        }
        std::uint64_t mask = (std::uint64_t(1) << pc) - 1;
        std::uint64_t top = std::uint64_t(1) << c;
        while (mask < top) {
          std::vector<std::uint32_t> idx;
          idx.reserve(pc);
          for (std::uint64_t t = mask; t != 0; t &= t - 1) {
            idx.push_back(static_cast<std::uint32_t>(std::countr_zero(t)));
          }
          emit(idx);
          // Gosper's hack: next mask with the same popcount.
          std::uint64_t u = mask & (~mask + 1);
          std::uint64_t v = mask + u;
          if (v >= top || v == 0) break;
          mask = v | (((mask ^ v) / u) >> 2);
        }
      }
    }
  }
}

std::vector<Hypergraph> collect(const SearchSpace& space, std::uint64_t cap) {
  std::vector<Hypergraph> out;
  for_each_hypergraph(space, [&](const Hypergraph& h) { out.push_back(h); },
                      cap);
  return out;
}

IndexValue subset_count(const SearchSpace& space) {
  IndexValue total = 0;
  for (int n : strata_ns(space)) total += stratum_subset_count(space, n);
  return total;
}

// ---------------------------------------------------------------------------
// Claim registry and checking.

long long ClaimParams::get(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) {
    fail(errc::invalid_claim_params, "claim parameter '" + name + "' missing");
  }
  return it->second;
}

ClaimParams parse_claim_params(const std::string& text) {
  ClaimParams params;
  if (text.empty()) return params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      fail(errc::invalid_claim_params,
           "expected key=value in claim parameters, got '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    try {
      size_t pos = 0;
      long long v = std::stoll(val, &pos);
      if (pos != val.size()) throw std::invalid_argument(val);
      if (!params.values.emplace(key, v).second) {
        fail(errc::invalid_claim_params,
             "claim parameter '" + key + "' given twice");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::invalid_claim_params,
           "claim parameter '" + key + "' is not an integer: '" + val + "'");
    }
  }
  return params;
}

namespace {

struct ClaimDef {
  std::string id;
  std::vector<std::string> param_names;
  std::string description;
  WhichIndex index;
  BoundSide side;
  bool uniqueness_claimed = false;
  std::function<void(const ClaimParams&)> validate;
  std::function<SearchSpace(const ClaimParams&)> space;
  std::function<IndexValue(const ClaimParams&)> bound;
  std::function<FamilySpec(const ClaimParams&)> witness;
};

void need(bool ok, const std::string& msg) {
  if (!ok) fail(errc::invalid_claim_params, msg);
}

IndexValue closed_hm1(const FamilySpec& spec) {
  return closed_form(spec).hm1_variants.front().second;
}

IndexValue closed_hm2(const FamilySpec& spec) {
  return closed_form(spec).hm2_variants.front().second;
}

std::vector<ClaimDef> build_registry() {
  std::vector<ClaimDef> defs;

  auto val_n = [](const ClaimParams& v) {
    long long n = v.get("n");
    need(n >= 2 && n <= 64, "requires 2 <= n <= 64");
  };
  auto val_nk = [](const ClaimParams& v) {
    long long n = v.get("n");
    long long k = v.get("k");
    need(n >= 2 && n <= 64, "requires 2 <= n <= 64");
    need(k >= 2 && k <= n, "requires 2 <= k <= n");
  };
  auto val_pq = [](const ClaimParams& v) {
    long long p = v.get("p");
    long long q = v.get("q");
    need(p >= 1 && q >= 1, "requires p >= 1 and q >= 1");
    need(p + q <= 64, "requires p + q <= 64");
  };
  auto val_km = [](const ClaimParams& v) {
    long long k = v.get("k");
    long long m = v.get("m");
    need(k >= 2, "requires k >= 2");
    need(m >= 2, "requires m >= 2");
    need(m * (k - 1) + 1 <= 64, "requires m(k-1)+1 <= 64");
  };
  auto val_mp = [](const ClaimParams& v) {
    long long m = v.get("m");
    long long p = v.get("p");
    need(m >= 2, "requires m >= 2");
    need(p >= 1, "requires p >= 1");
    need(m + p <= 64, "requires m + p <= 64");
  };

  auto space_n = [](const ClaimParams& v) {
    return SearchSpace::all_connected(static_cast<int>(v.get("n")));
  };
  auto space_nk = [](const ClaimParams& v) {
    return SearchSpace::uniform_connected(static_cast<int>(v.get("n")),
                                          static_cast<int>(v.get("k")));
  };
  auto space_pq = [](const ClaimParams& v) {
    return SearchSpace::weak_bipartite(static_cast<int>(v.get("p")),
                                       static_cast<int>(v.get("q")));
  };
  auto space_km = [](const ClaimParams& v) {
    return SearchSpace::uniform_hypertrees(static_cast<int>(v.get("k")),
                                           static_cast<int>(v.get("m")));
  };
  auto space_mp = [](const ClaimParams& v) {
    int m = static_cast<int>(v.get("m"));
    int p = static_cast<int>(v.get("p"));
    return SearchSpace::hypertrees_exact(m + p, m);
  };

  auto full_edge_n = [](const ClaimParams& v) {
    int n = static_cast<int>(v.get("n"));
    return FamilySpec::complete_uniform(n, n);
  };
  auto full_edge_pq = [](const ClaimParams& v) {
    int n = static_cast<int>(v.get("p") + v.get("q"));
    return FamilySpec::complete_uniform(n, n);
  };
  auto sunflower_km = [](const ClaimParams& v) {
    int k = static_cast<int>(v.get("k"));
    int m = static_cast<int>(v.get("m"));
    return FamilySpec::sunflower(m, k - 1, k);
  };
  auto sunflower_mp = [](const ClaimParams& v) {
    int m = static_cast<int>(v.get("m"));
    int p = static_cast<int>(v.get("p"));
    return FamilySpec::sunflower(m, p, p + 1);
  };
  auto path_km = [](const ClaimParams& v) {
    return FamilySpec::uniform_hyperpath(static_cast<int>(v.get("m")),
                                         static_cast<int>(v.get("k")));
  };
  auto path_mp = [](const ClaimParams& v) {
    int m = static_cast<int>(v.get("m"));
    int p = static_cast<int>(v.get("p"));
    std::vector<int> sizes(m, 2);
    sizes[0] = p + 1;
    return FamilySpec::general_hyperpath(std::move(sizes));
  };

  defs.push_back(
      {"general-lower-hm1",
       {"n"},
       "hm1 >= n^2 for connected hypergraphs on n >= 2 vertices; equality at "
       "the single edge containing every vertex",
       WhichIndex::Hm1,
       BoundSide::Lower,
       false,
       val_n,
       space_n,
       [](const ClaimParams& v) {
         return IndexValue(v.get("n")) * v.get("n");
       },
       full_edge_n});
  defs.push_back(
      {"general-lower-hm2",
       {"n"},
       "hm2 >= 1 for connected hypergraphs on n >= 2 vertices; equality at "
       "the single edge containing every vertex",
       WhichIndex::Hm2,
       BoundSide::Lower,
       false,
       val_n,
       space_n,
       [](const ClaimParams&) { return IndexValue(1); },
       full_edge_n});
  defs.push_back(
      {"general-upper-hm1",
       {"n"},
       "hm1 <= n(2^(n-1)-1)^2((n+1)2^(n-2)-1) for connected hypergraphs on n "
       "vertices; equality at the complete hypergraph",
       WhichIndex::Hm1,
       BoundSide::Upper,
       false,
       val_n,
       space_n,
       [](const ClaimParams& v) {
         return closed_hm1(FamilySpec::complete(static_cast<int>(v.get("n"))));
       },
       [](const ClaimParams& v) {
         return FamilySpec::complete(static_cast<int>(v.get("n")));
       }});
  defs.push_back(
      {"general-upper-hm2",
       {"n"},
       "hm2 <= (1+(2^(n-1)-1)^2)^n - 1 - n(2^(n-1)-1)^2 for connected "
       "hypergraphs on n vertices; equality at the complete hypergraph",
       WhichIndex::Hm2,
       BoundSide::Upper,
       false,
       val_n,
       space_n,
       [](const ClaimParams& v) {
         return closed_hm2(FamilySpec::complete(static_cast<int>(v.get("n"))));
       },
       [](const ClaimParams& v) {
         return FamilySpec::complete(static_cast<int>(v.get("n")));
       }});

  defs.push_back(
      {"uniform-upper-hm1",
       {"n", "k"},
       "hm1 <= C(n,k) k^2 C(n-1,k-1)^2 for connected k-uniform hypergraphs "
       "on n vertices; equality exactly at the complete k-uniform hypergraph",
       WhichIndex::Hm1,
       BoundSide::Upper,
       true,
       val_nk,
       space_nk,
       [](const ClaimParams& v) {
         return closed_hm1(FamilySpec::complete_uniform(
             static_cast<int>(v.get("n")), static_cast<int>(v.get("k"))));
       },
       [](const ClaimParams& v) {
         return FamilySpec::complete_uniform(static_cast<int>(v.get("n")),
                                             static_cast<int>(v.get("k")));
       }});
  defs.push_back(
      {"uniform-upper-hm2",
       {"n", "k"},
       "hm2 <= C(n,k) C(n-1,k-1)^(2k) for connected k-uniform hypergraphs on "
       "n vertices; equality exactly at the complete k-uniform hypergraph",
       WhichIndex::Hm2,
       BoundSide::Upper,
       true,
       val_nk,
       space_nk,
       [](const ClaimParams& v) {
         return closed_hm2(FamilySpec::complete_uniform(
             static_cast<int>(v.get("n")), static_cast<int>(v.get("k"))));
       },
       [](const ClaimParams& v) {
         return FamilySpec::complete_uniform(static_cast<int>(v.get("n")),
                                             static_cast<int>(v.get("k")));
       }});

  defs.push_back(
      {"bipartite-lower-hm1",
       {"p", "q"},
       "hm1 >= (p+q)^2 for connected weak bipartite hypergraphs; equality at "
       "the single edge containing every vertex",
       WhichIndex::Hm1,
       BoundSide::Lower,
       false,
       val_pq,
       space_pq,
       [](const ClaimParams& v) {
         IndexValue n = v.get("p") + v.get("q");
         return n * n;
       },
       full_edge_pq});
  defs.push_back(
      {"bipartite-lower-hm2",
       {"p", "q"},
       "hm2 >= 1 for connected weak bipartite hypergraphs; equality at the "
       "single edge containing every vertex",
       WhichIndex::Hm2,
       BoundSide::Lower,
       false,
       val_pq,
       space_pq,
       [](const ClaimParams&) { return IndexValue(1); },
       full_edge_pq});
  defs.push_back(
      {"bipartite-upper-hm1",
       {"p", "q"},
       "hm1 bounded above by the complete weak bipartite double sum; "
       "equality at the complete weak bipartite hypergraph",
       WhichIndex::Hm1,
       BoundSide::Upper,
       false,
       val_pq,
       space_pq,
       [](const ClaimParams& v) {
         return closed_hm1(FamilySpec::bipartite(static_cast<int>(v.get("p")),
                                                 static_cast<int>(v.get("q"))));
       },
       [](const ClaimParams& v) {
         return FamilySpec::bipartite(static_cast<int>(v.get("p")),
                                      static_cast<int>(v.get("q")));
       }});
  defs.push_back(
      {"bipartite-upper-hm2",
       {"p", "q"},
       "hm2 bounded above by the complete weak bipartite double sum; "
       "equality at the complete weak bipartite hypergraph",
       WhichIndex::Hm2,
       BoundSide::Upper,
       false,
       val_pq,
       space_pq,
       [](const ClaimParams& v) {
         return closed_hm2(FamilySpec::bipartite(static_cast<int>(v.get("p")),
                                                 static_cast<int>(v.get("q"))));
       },
       [](const ClaimParams& v) {
         return FamilySpec::bipartite(static_cast<int>(v.get("p")),
                                      static_cast<int>(v.get("q")));
       }});

  defs.push_back(
      {"ktree-lower-hm1-lemma-variant",
       {"k", "m"},
       "hm1 >= 4k^2 m - 8k + 2 for k-uniform hypertrees with m edges, with "
       "the k-uniform hyperpath as claimed minimizer (lemma variant)",
       WhichIndex::Hm1,
       BoundSide::Lower,
       false,
       val_km,
       space_km,
       [](const ClaimParams& v) {
         IndexValue k = v.get("k");
         return 4 * k * k * v.get("m") - 8 * k + 2;
       },
       path_km});
  defs.push_back(
      {"ktree-lower-hm1-corollary-variant",
       {"k", "m"},
       "hm1 >= 2(k+1)^2 + (m-2)(k+2)^2 for k-uniform hypertrees with m "
       "edges; equality at the k-uniform hyperpath (corollary variant)",
       WhichIndex::Hm1,
       BoundSide::Lower,
       false,
       val_km,
       space_km,
       [](const ClaimParams& v) {
         IndexValue end = IndexValue(v.get("k") + 1) * (v.get("k") + 1);
         IndexValue mid = IndexValue(v.get("k") + 2) * (v.get("k") + 2);
         return 2 * end + (v.get("m") - 2) * mid;
       },
       path_km});
  defs.push_back(
      {"ktree-lower-hm2-lemma-variant",
       {"k", "m"},
       "hm2 >= 2^(2k-1)(2m-3) for k-uniform hypertrees with m edges, with "
       "the k-uniform hyperpath as claimed minimizer (lemma variant)",
       WhichIndex::Hm2,
       BoundSide::Lower,
       false,
       val_km,
       space_km,
       [](const ClaimParams& v) {
         return big_pow(2, 2 * v.get("k") - 1) * (2 * v.get("m") - 3);
       },
       path_km});
  defs.push_back(
      {"ktree-lower-hm2-corollary-variant",
       {"k", "m"},
       "hm2 >= 16m - 24 for k-uniform hypertrees with m edges; equality at "
       "the k-uniform hyperpath (corollary variant)",
       WhichIndex::Hm2,
       BoundSide::Lower,
       false,
       val_km,
       space_km,
       [](const ClaimParams& v) { return IndexValue(16) * v.get("m") - 24; },
       path_km});
  defs.push_back(
      {"ktree-upper-hm1",
       {"k", "m"},
       "hm1 <= m((k-1)m+1)^2 for k-uniform hypertrees with m edges; equality "
       "at the sunflower with k-1 seeds",
       WhichIndex::Hm1,
       BoundSide::Upper,
       false,
       val_km,
       space_km,
       [](const ClaimParams& v) {
         IndexValue s = (v.get("k") - 1) * v.get("m") + 1;
         return v.get("m") * s * s;
       },
       sunflower_km});
  defs.push_back(
      {"ktree-upper-hm2",
       {"k", "m"},
       "hm2 <= m^(2k-1) for k-uniform hypertrees with m edges; equality at "
       "the sunflower with k-1 seeds",
       WhichIndex::Hm2,
       BoundSide::Upper,
       false,
       val_km,
       space_km,
       [](const ClaimParams& v) {
         return big_pow(v.get("m"), 2 * v.get("k") - 1);
       },
       sunflower_km});

  defs.push_back(
      {"uniform-hypertree-upper-hm1",
       {"k", "m"},
       "hm1 <= m((k-1)m+k)^2 for k-uniform hypertrees with m edges, with the "
       "sunflower named as attainer",
       WhichIndex::Hm1,
       BoundSide::Upper,
       false,
       val_km,
       space_km,
       [](const ClaimParams& v) {
         IndexValue s = (v.get("k") - 1) * v.get("m") + v.get("k");
         return v.get("m") * s * s;
       },
       sunflower_km});
  defs.push_back(
      {"uniform-hypertree-upper-hm2",
       {"k", "m"},
       "hm2 <= m^(2k-1) for k-uniform hypertrees with m edges, with the "
       "sunflower named as attainer",
       WhichIndex::Hm2,
       BoundSide::Upper,
       false,
       val_km,
       space_km,
       [](const ClaimParams& v) {
         return big_pow(v.get("m"), 2 * v.get("k") - 1);
       },
       sunflower_km});

  defs.push_back(
      {"hypertree-upper-hm1",
       {"m", "p"},
       "hm1 <= m(pm+p+1)^2 for hypertrees on n = m+p vertices with m edges, "
       "with the sunflower S(m,p,p+1) named as attainer",
       WhichIndex::Hm1,
       BoundSide::Upper,
       false,
       val_mp,
       space_mp,
       [](const ClaimParams& v) {
         IndexValue s = v.get("p") * v.get("m") + v.get("p") + 1;
         return v.get("m") * s * s;
       },
       sunflower_mp});
  defs.push_back(
      {"hypertree-upper-hm1-sunflower-variant",
       {"m", "p"},
       "hm1 <= m(pm+1)^2 for hypertrees on n = m+p vertices with m edges; "
       "equality at the sunflower S(m,p,p+1)",
       WhichIndex::Hm1,
       BoundSide::Upper,
       false,
       val_mp,
       space_mp,
       [](const ClaimParams& v) {
         IndexValue s = v.get("p") * v.get("m") + 1;
         return v.get("m") * s * s;
       },
       sunflower_mp});
  defs.push_back(
      {"hypertree-upper-hm2",
       {"m", "p"},
       "hm2 <= m^(2p+1) for hypertrees on n = m+p vertices with m edges; "
       "equality at the sunflower S(m,p,p+1)",
       WhichIndex::Hm2,
       BoundSide::Upper,
       false,
       val_mp,
       space_mp,
       [](const ClaimParams& v) {
         return big_pow(v.get("m"), 2 * v.get("p") + 1);
       },
       sunflower_mp});
  defs.push_back(
      {"hypertree-lower-hm2",
       {"m", "p"},
       "hm2 >= 16m - 24 for hypertrees on n = m+p vertices with m edges; "
       "equality at a hyperpath whose first edge has size p+1",
       WhichIndex::Hm2,
       BoundSide::Lower,
       false,
       val_mp,
       space_mp,
       [](const ClaimParams& v) { return IndexValue(16) * v.get("m") - 24; },
       path_mp});

  return defs;
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = build_registry();
  return defs;
}

const ClaimDef& find_claim(const std::string& id) {
  for (const ClaimDef& def : registry()) {
    if (def.id == id) return def;
  }
  fail(errc::unknown_claim, "no claim named '" + id + "'");
}

}  // namespace

std::vector<ClaimInfo> claim_registry() {
  std::vector<ClaimInfo> out;
  for (const ClaimDef& def : registry()) {
    out.push_back({def.id, def.param_names, def.description});
  }
  return out;
}

VerificationReport check_claim(const std::string& claim_id,
                               const ClaimParams& params,
                               const ScanOptions& options) {
  const ClaimDef& def = find_claim(claim_id);
  for (const auto& [name, value] : params.values) {
    (void)value;
    if (std::find(def.param_names.begin(), def.param_names.end(), name) ==
        def.param_names.end()) {
      fail(errc::invalid_claim_params,
           "claim '" + claim_id + "' takes no parameter '" + name + "'");
    }
  }
  try {
    def.validate(params);
  } catch (const Error& e) {
    if (e.code() == errc::invalid_claim_params) {
      fail(errc::invalid_claim_params, "claim '" + claim_id + "' " +
                                           std::string(e.what()).substr(
                                               std::string("InvalidClaimParams: ").size()));
    }
    throw;
  }

  VerificationReport report;
  report.claim_id = claim_id;
  report.params = params;
  report.index = def.index;
  report.side = def.side;
  report.uniqueness_claimed = def.uniqueness_claimed;
  report.space = def.space(params);
  report.claimed_bound = def.bound(params);

  ScanResult scan = scan_all(report.space, options);
  const ExtremalSide& side =
      def.side == BoundSide::Lower
          ? (def.index == WhichIndex::Hm1 ? scan.hm1_min : scan.hm2_min)
          : (def.index == WhichIndex::Hm1 ? scan.hm1_max : scan.hm2_max);
  report.population = scan.population;
  report.observed_extremum = side.value;
  report.attainers = side.attainers;
  report.witnesses = side.witnesses;
  report.uniqueness_observed = side.attainers == 1;
  report.elapsed_seconds = scan.elapsed_seconds;

  if (def.side == BoundSide::Lower) {
    if (report.observed_extremum < report.claimed_bound) {
      report.status = ClaimStatus::Violated;
    } else if (report.observed_extremum == report.claimed_bound) {
      report.status = ClaimStatus::HoldsTight;
    } else {
      report.status = ClaimStatus::HoldsSlack;
    }
  } else {
    if (report.observed_extremum > report.claimed_bound) {
      report.status = ClaimStatus::Violated;
    } else if (report.observed_extremum == report.claimed_bound) {
      report.status = ClaimStatus::HoldsTight;
    } else {
      report.status = ClaimStatus::HoldsSlack;
    }
  }

  report.expected_witness = def.witness(params);
  Hypergraph wit = generate(report.expected_witness);
  report.expected_witness_value =
      def.index == WhichIndex::Hm1 ? hm1(wit) : hm2(wit);
  report.expected_witness_attains =
      report.expected_witness_value == report.observed_extremum;
  return report;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

std::string params_text(const std::string& claim_id, const ClaimParams& params) {
  std::ostringstream out;
  bool first = true;
  // Use registry parameter order when the claim is known.
  std::vector<std::string> order;
  for (const ClaimDef& def : registry()) {
    if (def.id == claim_id) order = def.param_names;
  }
  if (order.empty()) {
    for (const auto& [k, v] : params.values) {
      (void)v;
      order.push_back(k);
    }
  }
  for (const std::string& name : order) {
    auto it = params.values.find(name);
    if (it == params.values.end()) continue;
    if (!first) out << ',';
    first = false;
    out << name << '=' << it->second;
  }
  return out.str();
}

void side_lines(std::ostringstream& out, const char* tag,
                const ExtremalSide& side) {
  out << tag << " = " << side.value.str() << "\n";
  out << tag << "_attainers = " << side.attainers << "\n";
  for (size_t i = 0; i < side.witnesses.size(); ++i) {
    out << tag << "_witness[" << i
        << "] = " << to_hg_inline(side.witnesses[i]) << "\n";
  }
}

nlohmann::json side_json(const ExtremalSide& side) {
  nlohmann::json j;
  j["value"] = side.value.str();
  j["attainers"] = side.attainers;
  nlohmann::json wits = nlohmann::json::array();
  for (const Hypergraph& w : side.witnesses) wits.push_back(to_hg_inline(w));
  j["witnesses"] = wits;
  return j;
}

}  // namespace

std::string to_text(const ExtremalResult& result) {
  std::ostringstream out;
  out << "space = " << to_text(result.space) << "\n";
  out << "index = " << index_name(result.index) << "\n";
  out << "population = " << result.population << "\n";
  if (result.population > 0) {
    side_lines(out, "min", result.min);
    side_lines(out, "max", result.max);
  }
  return out.str();
}

std::string to_json(const ExtremalResult& result) {
  nlohmann::json j;
  j["space"] = to_text(result.space);
  j["index"] = index_name(result.index);
  j["population"] = result.population;
  j["min"] = side_json(result.min);
  j["max"] = side_json(result.max);
  j["elapsed_seconds"] = result.elapsed_seconds;
  return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "claim = " << report.claim_id << "\n";
  out << "params = " << params_text(report.claim_id, report.params) << "\n";
  out << "space = " << to_text(report.space) << "\n";
  out << "index = " << index_name(report.index) << "\n";
  out << "side = " << side_name(report.side) << "\n";
  out << "claimed = " << report.claimed_bound.str() << "\n";
  out << "observed = " << report.observed_extremum.str() << "\n";
  out << "status = " << status_name(report.status) << "\n";
  out << "population = " << report.population << "\n";
  out << "attainers = " << report.attainers << "\n";
  out << "uniqueness_claimed = " << (report.uniqueness_claimed ? "true" : "false")
      << "\n";
  out << "uniqueness_observed = "
      << (report.uniqueness_observed ? "true" : "false") << "\n";
  out << "expected_witness = " << to_text(report.expected_witness) << "\n";
  out << "expected_witness_value = " << report.expected_witness_value.str()
      << "\n";
  out << "expected_witness_attains = "
      << (report.expected_witness_attains ? "true" : "false") << "\n";
  for (size_t i = 0; i < report.witnesses.size(); ++i) {
    out << "witness[" << i << "] = " << to_hg_inline(report.witnesses[i])
        << "\n";
  }
  return out.str();
}

std::string to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["claim"] = report.claim_id;
  nlohmann::json p = nlohmann::json::object();
  for (const auto& [k, v] : report.params.values) p[k] = v;
  j["params"] = p;
  j["space"] = to_text(report.space);
  j["index"] = index_name(report.index);
  j["side"] = side_name(report.side);
  j["claimed"] = report.claimed_bound.str();
  j["observed"] = report.observed_extremum.str();
  j["status"] = status_name(report.status);
  j["population"] = report.population;
  j["attainers"] = report.attainers;
  j["uniqueness_claimed"] = report.uniqueness_claimed;
  j["uniqueness_observed"] = report.uniqueness_observed;
  j["expected_witness"] = to_text(report.expected_witness);
  j["expected_witness_value"] = report.expected_witness_value.str();
  j["expected_witness_attains"] = report.expected_witness_attains;
  nlohmann::json wits = nlohmann::json::array();
  for (const Hypergraph& w : report.witnesses) wits.push_back(to_hg_inline(w));
  j["witnesses"] = wits;
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(2) + "\n";
}

}  // namespace hz
