#include "hz/families.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "hz/bigmath.hpp"
#include "hz/error.hpp"

namespace hz {

namespace {

// Largest edge set generate() will materialize, and the vertex budget for
// the sparse families. Closed forms have no such limit.
constexpr std::uint64_t kMaxEdges = 1ull << 20;
constexpr long long kMaxVertices = 1000000;

[[noreturn]] void bad_params(const std::string& detail) {
  fail(errc::invalid_family_params, detail);
}

std::string kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Complete: return "complete";
    case FamilyKind::CompleteUniform: return "uniform";
    case FamilyKind::CompleteWeakBipartite: return "bipartite";
    case FamilyKind::Sunflower: return "sunflower";
    case FamilyKind::Hyperstar: return "star";
    case FamilyKind::UniformHyperpath: return "path";
    case FamilyKind::GeneralHyperpath: return "path";
  }
  return "?";
}

}  // namespace

FamilySpec FamilySpec::complete(int n) {
  if (n < 2) bad_params("complete requires n >= 2");
  FamilySpec s;
  s.kind = FamilyKind::Complete;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::complete_uniform(int n, int k) {
  if (k < 2 || k > n) bad_params("uniform requires 2 <= k <= n");
  FamilySpec s;
  s.kind = FamilyKind::CompleteUniform;
  s.n = n;
  s.k = k;
  return s;
}

FamilySpec FamilySpec::bipartite(int p, int q) {
  if (p < 1 || q < 1) bad_params("bipartite requires p >= 1 and q >= 1");
  FamilySpec s;
  s.kind = FamilyKind::CompleteWeakBipartite;
  s.p = p;
  s.q = q;
  return s;
}

FamilySpec FamilySpec::sunflower(int m, int p, int k) {
  if (m < 1) bad_params("sunflower requires m >= 1");
  if (p < 1 || p >= k) bad_params("sunflower requires 1 <= p < k");
  FamilySpec s;
  s.kind = FamilyKind::Sunflower;
  s.m = m;
  s.p = p;
  s.k = k;
  return s;
}

FamilySpec FamilySpec::hyperstar(int m, int k) {
  if (m < 2 || k < 2) bad_params("star requires m >= 2 and k >= 2");
  FamilySpec s;
  s.kind = FamilyKind::Hyperstar;
  s.m = m;
  s.k = k;
  return s;
}

FamilySpec FamilySpec::uniform_hyperpath(int m, int k) {
  if (m < 2 || k < 2) bad_params("path requires m >= 2 and k >= 2");
  FamilySpec s;
  s.kind = FamilyKind::UniformHyperpath;
  s.m = m;
  s.k = k;
  return s;
}

FamilySpec FamilySpec::general_hyperpath(std::vector<int> sizes) {
  if (sizes.size() < 2) bad_params("path requires at least 2 edge sizes");
  for (int sz : sizes) {
    if (sz < 2) bad_params("path edge sizes must be >= 2");
  }
  FamilySpec s;
  s.kind = FamilyKind::GeneralHyperpath;
  s.m = static_cast<int>(sizes.size());
  s.sizes = std::move(sizes);
  return s;
}

bool operator==(const FamilySpec& a, const FamilySpec& b) {
  return a.kind == b.kind && a.n == b.n && a.k == b.k && a.p == b.p &&
         a.q == b.q && a.m == b.m && a.sizes == b.sizes;
}

bool operator!=(const FamilySpec& a, const FamilySpec& b) { return !(a == b); }

namespace {

// Parses "key=value,key=value" into ordered pairs; values here are plain
// ints. The sizes= form is handled separately because its value list is
// itself comma-separated.
std::vector<std::pair<std::string, int>> parse_kv(const std::string& text) {
  std::vector<std::pair<std::string, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      bad_params("expected key=value, got '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    try {
      size_t pos = 0;
      int v = std::stoi(val, &pos);
      if (pos != val.size()) throw std::invalid_argument(val);
      out.emplace_back(key, v);
    } catch (const std::exception&) {
      bad_params("value of '" + key + "' is not an integer: '" + val + "'");
    }
  }
  return out;
}

int take(const std::vector<std::pair<std::string, int>>& kv,
         const std::string& key, const std::string& head) {
  for (const auto& [k, v] : kv) {
    if (k == key) return v;
  }
  bad_params(head + " needs parameter '" + key + "'");
}

void expect_keys(const std::vector<std::pair<std::string, int>>& kv,
                 std::initializer_list<const char*> keys,
                 const std::string& head) {
  if (kv.size() != keys.size()) {
    bad_params(head + " takes exactly " + std::to_string(keys.size()) +
               " parameters");
  }
  for (const auto& [k, v] : kv) {
    (void)v;
    if (std::find_if(keys.begin(), keys.end(), [&](const char* want) {
          return k == want;
        }) == keys.end()) {
      bad_params("unknown parameter '" + k + "' for " + head);
    }
  }
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    bad_params("expected kind:params, got '" + text + "'");
  }
  std::string head = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);

  if (head == "path" && rest.rfind("sizes=", 0) == 0) {
    std::vector<int> sizes;
    std::stringstream ss(rest.substr(6));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        sizes.push_back(v);
      } catch (const std::exception&) {
        bad_params("size list entry is not an integer: '" + item + "'");
      }
    }
    return FamilySpec::general_hyperpath(std::move(sizes));
  }

  auto kv = parse_kv(rest);
  if (head == "complete") {
    expect_keys(kv, {"n"}, head);
    return FamilySpec::complete(take(kv, "n", head));
  }
  if (head == "uniform") {
    expect_keys(kv, {"n", "k"}, head);
    return FamilySpec::complete_uniform(take(kv, "n", head),
                                        take(kv, "k", head));
  }
  if (head == "bipartite") {
    expect_keys(kv, {"p", "q"}, head);
    return FamilySpec::bipartite(take(kv, "p", head), take(kv, "q", head));
  }
  if (head == "sunflower") {
    expect_keys(kv, {"m", "p", "k"}, head);
    return FamilySpec::sunflower(take(kv, "m", head), take(kv, "p", head),
                                 take(kv, "k", head));
  }
  if (head == "star") {
    expect_keys(kv, {"m", "k"}, head);
    return FamilySpec::hyperstar(take(kv, "m", head), take(kv, "k", head));
  }
  if (head == "path") {
    expect_keys(kv, {"m", "k"}, head);
    return FamilySpec::uniform_hyperpath(take(kv, "m", head),
                                         take(kv, "k", head));
  }
  bad_params("unknown family kind '" + head + "'");
}

std::string to_text(const FamilySpec& spec) {
  std::ostringstream out;
  out << kind_name(spec.kind) << ':';
  switch (spec.kind) {
    case FamilyKind::Complete:
      out << "n=" << spec.n;
      break;
    case FamilyKind::CompleteUniform:
      out << "n=" << spec.n << ",k=" << spec.k;
      break;
    case FamilyKind::CompleteWeakBipartite:
      out << "p=" << spec.p << ",q=" << spec.q;
      break;
    case FamilyKind::Sunflower:
      out << "m=" << spec.m << ",p=" << spec.p << ",k=" << spec.k;
      break;
    case FamilyKind::Hyperstar:
      out << "m=" << spec.m << ",k=" << spec.k;
      break;
    case FamilyKind::UniformHyperpath:
      out << "m=" << spec.m << ",k=" << spec.k;
      break;
    case FamilyKind::GeneralHyperpath: {
      out << "sizes=";
      for (size_t i = 0; i < spec.sizes.size(); ++i) {
        if (i > 0) out << ',';
        out << spec.sizes[i];
      }
      break;
    }
  }
  return out.str();
}

namespace {

std::vector<int> mask_members(std::uint64_t mask) {
  std::vector<int> members;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) members.push_back(v);
  }
  return members;
}

Hypergraph generate_complete(int n) {
  if (n > 20) bad_params("complete:n=" + std::to_string(n) +
                         " is too large to materialize (limit n=20)");
  std::vector<std::vector<int>> edges;
  edges.reserve((std::uint64_t(1) << n) - n - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    if (std::popcount(mask) >= 2) edges.push_back(mask_members(mask));
  }
  return Hypergraph::build(n, edges);
}

Hypergraph generate_complete_uniform(int n, int k) {
  if (big_binom(n, k) > kMaxEdges) {
    bad_params("uniform:n=" + std::to_string(n) + ",k=" + std::to_string(k) +
               " is too large to materialize");
  }
  std::vector<std::vector<int>> edges;
  std::vector<int> combo(k);
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    edges.push_back(combo);
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return Hypergraph::build(n, edges);
}

Hypergraph generate_bipartite(int p, int q) {
  int n = p + q;
  if (n > 20) bad_params("bipartite:p=" + std::to_string(p) +
                         ",q=" + std::to_string(q) +
                         " is too large to materialize (limit p+q=20)");
  std::uint64_t side1 = (std::uint64_t(1) << p) - 1;
  std::uint64_t side2 = ((std::uint64_t(1) << n) - 1) & ~side1;
  std::vector<std::vector<int>> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    if ((mask & side1) != 0 && (mask & side2) != 0 && std::popcount(mask) >= 2) {
      edges.push_back(mask_members(mask));
    }
  }
  return Hypergraph::build(n, edges);
}

Hypergraph generate_sunflower(int m, int p, int k) {
  long long n = p + static_cast<long long>(m) * (k - p);
  if (n > kMaxVertices) {
    bad_params("sunflower instance needs " + std::to_string(n) +
               " vertices, over the limit of " + std::to_string(kMaxVertices));
  }
  std::vector<int> seeds(p);
  std::iota(seeds.begin(), seeds.end(), 0);
  std::vector<std::vector<int>> edges;
  edges.reserve(m);
  int next = p;
  for (int i = 0; i < m; ++i) {
    std::vector<int> e = seeds;
    for (int j = 0; j < k - p; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(static_cast<int>(n), edges);
}

Hypergraph generate_hyperpath(const std::vector<int>& sizes) {
  long long n = std::accumulate(sizes.begin(), sizes.end(), 0ll) -
                (static_cast<long long>(sizes.size()) - 1);
  if (n > kMaxVertices) {
    bad_params("path instance needs " + std::to_string(n) +
               " vertices, over the limit of " + std::to_string(kMaxVertices));
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(sizes.size());
  int start = 0;
  for (int sz : sizes) {
    std::vector<int> e(sz);
    std::iota(e.begin(), e.end(), start);
    start += sz - 1;  // last vertex is shared with the next edge
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(static_cast<int>(n), edges);
}

}  // namespace

Hypergraph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Complete:
      return generate_complete(spec.n);
    case FamilyKind::CompleteUniform:
      return generate_complete_uniform(spec.n, spec.k);
    case FamilyKind::CompleteWeakBipartite:
      return generate_bipartite(spec.p, spec.q);
    case FamilyKind::Sunflower:
      return generate_sunflower(spec.m, spec.p, spec.k);
    case FamilyKind::Hyperstar:
      return generate_sunflower(spec.m, 1, spec.k);
    case FamilyKind::UniformHyperpath:
      return generate_hyperpath(std::vector<int>(spec.m, spec.k));
    case FamilyKind::GeneralHyperpath:
      return generate_hyperpath(spec.sizes);
  }
  bad_params("unhandled family kind");
}

namespace {

ClosedForm single(IndexValue hm1, IndexValue hm2) {
  ClosedForm cf;
  cf.hm1_variants.emplace_back("formula", std::move(hm1));
  cf.hm2_variants.emplace_back("formula", std::move(hm2));
  return cf;
}

ClosedForm closed_form_complete(int n) {
  // Every vertex lies in 2^(n-1) subsets minus the two too-small ones
  // (itself alone and the empty intersection won't occur as edges), giving
  // degree d = 2^(n-1) - 1 for each of the n vertices.
  IndexValue d = big_pow(2, n - 1) - 1;
  IndexValue hm1 = n * d * d * ((n + 1) * big_pow(2, n - 2) - 1);
  IndexValue hm2 = big_pow(1 + d * d, n) - 1 - n * d * d;
  return single(std::move(hm1), std::move(hm2));
}

ClosedForm closed_form_uniform(int n, int k) {
  IndexValue count = big_binom(n, k);
  IndexValue d = big_binom(n - 1, k - 1);
  IndexValue hm1 = count * k * k * d * d;
  IndexValue hm2 = count * big_pow(d, 2ull * k);
  return single(std::move(hm1), std::move(hm2));
}

ClosedForm closed_form_bipartite(int p, int q) {
  // Side-1 vertices have degree 2^(p-1)(2^q - 1): fix the vertex, pick the
  // rest of its side freely and a non-empty subset of the other side.
  IndexValue d1 = big_pow(2, p - 1) * (big_pow(2, q) - 1);
  IndexValue d2 = big_pow(2, q - 1) * (big_pow(2, p) - 1);
  IndexValue hm1 = 0, hm2 = 0;
  for (int k = 2; k <= p + q; ++k) {
    for (int i = 1; i <= k - 1; ++i) {
      IndexValue ways = big_binom(p, i) * big_binom(q, k - i);
      if (ways == 0) continue;
      IndexValue s = i * d1 + (k - i) * d2;
      hm1 += ways * s * s;
      hm2 += ways * big_pow(d1, 2ull * i) * big_pow(d2, 2ull * (k - i));
    }
  }
  return single(std::move(hm1), std::move(hm2));
}

ClosedForm closed_form_sunflower(int m, int p, int k) {
  IndexValue s = static_cast<long long>(p) * m + (k - p);
  IndexValue hm1 = m * s * s;
  IndexValue hm2 = big_pow(m, 2ull * p + 1);
  return single(std::move(hm1), std::move(hm2));
}

ClosedForm closed_form_hyperstar(int m, int k) {
  IndexValue s = static_cast<long long>(m) + k - 1;
  IndexValue hm1 = m * s * s;
  IndexValue hm2 = IndexValue(m) * m * m;
  return single(std::move(hm1), std::move(hm2));
}

ClosedForm closed_form_uniform_hyperpath(int m, int k) {
  ClosedForm cf;
  IndexValue end = IndexValue(k + 1) * (k + 1);
  IndexValue mid = IndexValue(k + 2) * (k + 2);
  cf.hm1_variants.emplace_back("corollary", 2 * end + (m - 2) * mid);
  cf.hm2_variants.emplace_back("corollary", IndexValue(16) * m - 24);
  cf.hm1_variants.emplace_back(
      "lemma", IndexValue(4) * k * k * m - 8 * k + 2);
  cf.hm2_variants.emplace_back(
      "lemma", big_pow(2, 2ull * k - 1) * (2 * IndexValue(m) - 3));
  return cf;
}

ClosedForm closed_form_general_hyperpath(const std::vector<int>& sizes) {
  int m = static_cast<int>(sizes.size());
  IndexValue hm1 = IndexValue(sizes.front() + 1) * (sizes.front() + 1) +
                   IndexValue(sizes.back() + 1) * (sizes.back() + 1);
  for (int i = 1; i + 1 < m; ++i) {
    hm1 += IndexValue(sizes[i] + 2) * (sizes[i] + 2);
  }
  return single(std::move(hm1), IndexValue(16) * m - 24);
}

}  // namespace

ClosedForm closed_form(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Complete:
      return closed_form_complete(spec.n);
    case FamilyKind::CompleteUniform:
      return closed_form_uniform(spec.n, spec.k);
    case FamilyKind::CompleteWeakBipartite:
      return closed_form_bipartite(spec.p, spec.q);
    case FamilyKind::Sunflower:
      return closed_form_sunflower(spec.m, spec.p, spec.k);
    case FamilyKind::Hyperstar:
      return closed_form_hyperstar(spec.m, spec.k);
    case FamilyKind::UniformHyperpath:
      return closed_form_uniform_hyperpath(spec.m, spec.k);
    case FamilyKind::GeneralHyperpath:
      return closed_form_general_hyperpath(spec.sizes);
  }
  bad_params("unhandled family kind");
}

bool CrossCheckReport::hm1_any_match() const {
  for (const auto& v : hm1_verdicts) {
    if (v.matches) return true;
  }
  return false;
}

bool CrossCheckReport::hm2_any_match() const {
  for (const auto& v : hm2_verdicts) {
    if (v.matches) return true;
  }
  return false;
}

CrossCheckReport cross_check(const FamilySpec& spec) {
  CrossCheckReport report;
  report.spec = spec;
  HmPair structural = hm_both(generate(spec));
  report.structural_hm1 = structural.hm1;
  report.structural_hm2 = structural.hm2;
  ClosedForm cf = closed_form(spec);
  for (auto& [label, value] : cf.hm1_variants) {
    report.hm1_verdicts.push_back(
        {label, value, value == report.structural_hm1});
  }
  for (auto& [label, value] : cf.hm2_variants) {
    report.hm2_verdicts.push_back(
        {label, value, value == report.structural_hm2});
  }
  return report;
}

}  // namespace hz
