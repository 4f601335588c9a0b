#include "hz/indices.hpp"

namespace hz {

std::string to_decimal(const IndexValue& v) { return v.str(); }

std::vector<EdgeContribution> edge_contributions(const Hypergraph& h) {
  std::vector<EdgeContribution> out;
  out.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    EdgeContribution c;
    c.edge = e;
    c.degree_product = 1;
    for (int v : e.members) {
      long long d = h.degree(v);
      c.degree_sum += d;
      c.degree_product *= d;
    }
    out.push_back(std::move(c));
  }
  return out;
}

IndexValue hm1(const Hypergraph& h) {
  IndexValue total = 0;
  for (const Edge& e : h.edges()) {
    long long s = 0;
    for (int v : e.members) s += h.degree(v);
    total += IndexValue(s) * s;
  }
  return total;
}

IndexValue hm2(const Hypergraph& h) {
  IndexValue total = 0;
  for (const Edge& e : h.edges()) {
    IndexValue p = 1;
    for (int v : e.members) p *= h.degree(v);
    total += p * p;
  }
  return total;
}

HmPair hm_both(const Hypergraph& h) {
  HmPair r;
  r.hm1 = 0;
  r.hm2 = 0;
  for (const Edge& e : h.edges()) {
    long long s = 0;
    IndexValue p = 1;
    for (int v : e.members) {
      long long d = h.degree(v);
      s += d;
      p *= d;
    }
    r.hm1 += IndexValue(s) * s;
    r.hm2 += p * p;
  }
  return r;
}

}  // namespace hz
