#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hz/hypergraph.hpp"
#include "hz/indices.hpp"

namespace hz {

struct DescriptorRow {
  std::string name;
  IndexValue hm1;
  IndexValue hm2;
  IndexValue interaction;  // hm1 * hm2, exact
  std::optional<double> activity;
};

struct TableEntry {
  std::string name;
  Hypergraph hypergraph;
  std::optional<double> activity;
};

// Rows in input order with exact index values; names must be unique.
std::vector<DescriptorRow> descriptor_table(
    const std::vector<TableEntry>& entries);

// Least-squares model activity ~ alpha*hm1 + beta*hm2 + gamma*(hm1*hm2) +
// delta. The solve runs in standardized feature space (zero mean, unit
// population variance per column) because hm2 and the interaction span many
// orders of magnitude; raw coefficients are recovered by back-transforming.
struct FitResult {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  // Same model in standardized space: coefficients of z1, z2, z3 and the
  // standardized-space intercept.
  std::array<double, 4> standardized_coefficients{};
  double r_squared = 0.0;
  bool condition_warning = false;  // design was rank-deficient; pseudo-inverse used
};

// Needs at least 4 rows, each with an activity value. r_squared is defined
// as 0 when the targets are constant.
FitResult fit(const std::vector<DescriptorRow>& rows);

// alpha*hm1 + beta*hm2 + gamma*(hm1*hm2) + delta in raw descriptor units.
double predict(const FitResult& f, const DescriptorRow& row);

// Exact integer to double with round-to-nearest-even; values beyond the
// double range raise FitError instead of producing infinities.
double to_double_exact(const IndexValue& v);

// Straight-line least squares for (x, y) scatter data.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit line_fit(const std::vector<std::pair<double, double>>& points);

// CSV with header name,hm1,hm2,activity; hm1/hm2 are decimal integer
// strings, activity may be empty. Serialization adds the exact interaction
// column, and a prediction column when a fit is supplied.
std::vector<DescriptorRow> parse_descriptor_csv(const std::string& text);
std::string to_csv(const std::vector<DescriptorRow>& rows,
                   const FitResult* model = nullptr);

// Scatter CSV with header x,y; one point per line.
std::vector<std::pair<double, double>> parse_xy_csv(const std::string& text);

std::string fit_to_json(const FitResult& f);

// Shortest decimal text that round-trips to the same double.
std::string double_text(double v);

}  // namespace hz
