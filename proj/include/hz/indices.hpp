#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hz/hypergraph.hpp"

namespace hz {

// Exact non-negative integer for index values. HM2 of the complete
// hypergraph grows like (2^(n-1) - 1)^(2n), so machine words are out from
// the start; serialization is always a full decimal string.
using IndexValue = boost::multiprecision::cpp_int;

std::string to_decimal(const IndexValue& v);

// Per-edge terms of the two indices: the degree sum and degree product
// over the edge's members.
struct EdgeContribution {
  Edge edge;
  long long degree_sum = 0;
  IndexValue degree_product;
};

// One entry per edge, in canonical edge order.
std::vector<EdgeContribution> edge_contributions(const Hypergraph& h);

// First Hyper-Zagreb index: sum over edges of (degree sum)^2.
// 0 for edgeless input.
IndexValue hm1(const Hypergraph& h);

// Second Hyper-Zagreb index: sum over edges of (degree product)^2.
// 0 for edgeless input.
IndexValue hm2(const Hypergraph& h);

struct HmPair {
  IndexValue hm1;
  IndexValue hm2;
};

// Both indices in one pass over the edges.
HmPair hm_both(const Hypergraph& h);

}  // namespace hz
