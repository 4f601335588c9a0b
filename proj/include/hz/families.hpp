#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hz/hypergraph.hpp"
#include "hz/indices.hpp"

namespace hz {

// The seven structured families with closed-form index values. Parameter
// ranges are enforced when a spec is constructed (factories and parse),
// so a FamilySpec in hand is always valid.
enum class FamilyKind {
  Complete,             // all subsets of size >= 2 of n vertices, n >= 2
  CompleteUniform,      // all k-subsets of n vertices, 2 <= k <= n
  CompleteWeakBipartite,// all subsets of size >= 2 meeting both sides, p,q >= 1
  Sunflower,            // m petal blocks of size k-p around p seeds, m >= 1, 1 <= p < k
  Hyperstar,            // sunflower with a single seed, m,k >= 2
  UniformHyperpath,     // chain of m k-edges, consecutive edges share one vertex
  GeneralHyperpath,     // chain with prescribed edge sizes (each >= 2, at least 2 edges)
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Complete;
  int n = 0;
  int k = 0;
  int p = 0;
  int q = 0;
  int m = 0;
  std::vector<int> sizes;  // GeneralHyperpath only

  static FamilySpec complete(int n);
  static FamilySpec complete_uniform(int n, int k);
  static FamilySpec bipartite(int p, int q);
  static FamilySpec sunflower(int m, int p, int k);
  static FamilySpec hyperstar(int m, int k);
  static FamilySpec uniform_hyperpath(int m, int k);
  static FamilySpec general_hyperpath(std::vector<int> sizes);
};

bool operator==(const FamilySpec& a, const FamilySpec& b);
bool operator!=(const FamilySpec& a, const FamilySpec& b);

// Canonical text syntax, e.g. "complete:n=4", "uniform:n=5,k=3",
// "bipartite:p=2,q=2", "sunflower:m=3,p=2,k=3", "star:m=3,k=3",
// "path:m=3,k=3", "path:sizes=3,4,3". parse_family/to_text round-trip.
FamilySpec parse_family(const std::string& text);
std::string to_text(const FamilySpec& spec);

// Closed-form index values. Most families have a single variant labeled
// "formula"; UniformHyperpath carries two published expressions, labeled
// "corollary" and "lemma", which disagree for k >= 3. Both are reported;
// cross_check adjudicates against the generated structure.
struct ClosedForm {
  std::vector<std::pair<std::string, IndexValue>> hm1_variants;
  std::vector<std::pair<std::string, IndexValue>> hm2_variants;
};

struct VariantVerdict {
  std::string label;
  IndexValue claimed;
  bool matches = false;
};

struct CrossCheckReport {
  FamilySpec spec;
  IndexValue structural_hm1;
  IndexValue structural_hm2;
  std::vector<VariantVerdict> hm1_verdicts;
  std::vector<VariantVerdict> hm2_verdicts;

  bool hm1_any_match() const;
  bool hm2_any_match() const;
};

// Builds the labeled hypergraph with the documented vertex conventions:
// seeds {0..p-1} then petal blocks in order; hyperpath vertices in chain
// order; bipartite side1 = {0..p-1}. Throws InvalidFamilyParams if the
// instance is too large to materialize.
Hypergraph generate(const FamilySpec& spec);

ClosedForm closed_form(const FamilySpec& spec);

// Structural hm1/hm2 of generate(spec) compared against every closed-form
// variant.
CrossCheckReport cross_check(const FamilySpec& spec);

}  // namespace hz
