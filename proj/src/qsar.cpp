#include "hz/qsar.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "json.hpp"

#include "hz/error.hpp"

namespace hz {

std::string double_text(double v) {
  std::array<char, 64> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

double to_double_exact(const IndexValue& v) {
  if (v == 0) return 0.0;
  bool neg = v < 0;
  IndexValue a = neg ? IndexValue(-v) : v;
  unsigned bits = boost::multiprecision::msb(a) + 1;
  double r;
  if (bits <= 53) {
    r = static_cast<double>(a.convert_to<std::uint64_t>());
  } else {
    // Keep the top 53 bits plus one rounding bit; everything below is sticky.
    unsigned shift = bits - 54;
    std::uint64_t top = (a >> shift).convert_to<std::uint64_t>();
    bool sticky = (a & ((IndexValue(1) << shift) - 1)) != 0;
    std::uint64_t mant = top >> 1;
    bool round_bit = (top & 1) != 0;
    if (round_bit && (sticky || (mant & 1))) ++mant;
    r = std::ldexp(static_cast<double>(mant), static_cast<int>(shift) + 1);
  }
  if (!std::isfinite(r)) {
    fail(errc::fit_error,
         "descriptor value does not fit in a double: " + v.str());
  }
  return neg ? -r : r;
}

std::vector<DescriptorRow> descriptor_table(
    const std::vector<TableEntry>& entries) {
  std::set<std::string> seen;
  std::vector<DescriptorRow> rows;
  rows.reserve(entries.size());
  for (const TableEntry& e : entries) {
    if (!seen.insert(e.name).second) {
      fail(errc::duplicate_name,
           "descriptor name '" + e.name + "' appears twice");
    }
    DescriptorRow row;
    row.name = e.name;
    HmPair hm = hm_both(e.hypergraph);
    row.hm1 = hm.hm1;
    row.hm2 = hm.hm2;
    row.interaction = row.hm1 * row.hm2;
    row.activity = e.activity;
    rows.push_back(std::move(row));
  }
  return rows;
}

FitResult fit(const std::vector<DescriptorRow>& rows) {
  for (const DescriptorRow& r : rows) {
    if (!r.activity) {
      fail(errc::missing_activity,
           "row '" + r.name + "' has no activity value");
    }
  }
  const int n = static_cast<int>(rows.size());
  if (n < 4) {
    fail(errc::too_few_rows,
         "fit needs at least 4 rows, got " + std::to_string(n));
  }

  Eigen::MatrixXd raw(n, 3);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    raw(i, 0) = to_double_exact(rows[i].hm1);
    raw(i, 1) = to_double_exact(rows[i].hm2);
    raw(i, 2) = to_double_exact(rows[i].interaction);
    y(i) = *rows[i].activity;
  }

  // Standardize with the population deviation (divide by n); constant
  // columns get sigma 0 and a zero standardized column.
  Eigen::Vector3d mu, sigma;
  Eigen::MatrixXd design(n, 4);
  for (int j = 0; j < 3; ++j) {
    mu(j) = raw.col(j).mean();
    sigma(j) = std::sqrt((raw.col(j).array() - mu(j)).square().sum() / n);
    if (sigma(j) > 0) {
      design.col(j) = (raw.col(j).array() - mu(j)) / sigma(j);
    } else {
      design.col(j).setZero();
    }
  }
  design.col(3).setOnes();

  FitResult result;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  Eigen::Vector4d c;
  if (qr.rank() < 4) {
    result.condition_warning = true;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    c = svd.solve(y);
  } else {
    c = qr.solve(y);
  }
  result.standardized_coefficients = {c(0), c(1), c(2), c(3)};

  // Back-transform: z_j = (x_j - mu_j) / sigma_j, so the raw slope is
  // c_j / sigma_j and the mean terms fold into the intercept.
  double delta = c(3);
  std::array<double, 3> slopes{};
  for (int j = 0; j < 3; ++j) {
    if (sigma(j) > 0) {
      slopes[j] = c(j) / sigma(j);
      delta -= c(j) * mu(j) / sigma(j);
    }
  }
  result.alpha = slopes[0];
  result.beta = slopes[1];
  result.gamma = slopes[2];
  result.delta = delta;

  Eigen::VectorXd fitted = design * c;
  double ss_res = (y - fitted).squaredNorm();
  double ss_tot = (y.array() - y.mean()).square().sum();
  result.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 0.0;
  return result;
}

double predict(const FitResult& f, const DescriptorRow& row) {
  return f.alpha * to_double_exact(row.hm1) +
         f.beta * to_double_exact(row.hm2) +
         f.gamma * to_double_exact(row.interaction) + f.delta;
}

LineFit line_fit(const std::vector<std::pair<double, double>>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) {
    fail(errc::too_few_rows,
         "line fit needs at least 2 points, got " + std::to_string(n));
  }
  double sx = 0, sy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
  }
  double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  LineFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  double ss_res = 0, ss_tot = 0;
  for (const auto& [x, y] : points) {
    double e = y - (f.slope * x + f.intercept);
    ss_res += e * e;
    ss_tot += (y - my) * (y - my);
  }
  f.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 0.0;
  return f;
}

namespace {

IndexValue parse_index_value(const std::string& text, const std::string& col) {
  if (text.empty()) {
    fail(errc::parse_error, "column '" + col + "' is empty");
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      fail(errc::parse_error, "column '" + col +
                                  "' is not a non-negative integer: '" + text +
                                  "'");
    }
  }
  return IndexValue(text);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

std::vector<DescriptorRow> parse_descriptor_csv(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty() || lines[0] != "name,hm1,hm2,activity") {
    fail(errc::parse_error,
         "descriptor CSV must start with header 'name,hm1,hm2,activity'");
  }
  std::vector<DescriptorRow> rows;
  std::set<std::string> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv_line(lines[i]);
    if (cells.size() != 4) {
      fail(errc::parse_error, "descriptor CSV row " + std::to_string(i) +
                                  " must have 4 cells, got " +
                                  std::to_string(cells.size()));
    }
    DescriptorRow row;
    row.name = cells[0];
    if (row.name.empty()) {
      fail(errc::parse_error,
           "descriptor CSV row " + std::to_string(i) + " has an empty name");
    }
    if (!seen.insert(row.name).second) {
      fail(errc::duplicate_name,
           "descriptor name '" + row.name + "' appears twice");
    }
    row.hm1 = parse_index_value(cells[1], "hm1");
    row.hm2 = parse_index_value(cells[2], "hm2");
    row.interaction = row.hm1 * row.hm2;
    if (!cells[3].empty()) {
      try {
        size_t pos = 0;
        double a = std::stod(cells[3], &pos);
        if (pos != cells[3].size()) throw std::invalid_argument(cells[3]);
        row.activity = a;
      } catch (const std::exception&) {
        fail(errc::parse_error,
             "activity is not a number: '" + cells[3] + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<DescriptorRow>& rows,
                   const FitResult* model) {
  std::ostringstream out;
  out << "name,hm1,hm2,interaction,activity";
  if (model != nullptr) out << ",prediction";
  out << "\n";
  for (const DescriptorRow& row : rows) {
    out << row.name << ',' << row.hm1.str() << ',' << row.hm2.str() << ','
        << row.interaction.str() << ',';
    if (row.activity) out << double_text(*row.activity);
    if (model != nullptr) out << ',' << double_text(predict(*model, row));
    out << "\n";
  }
  return out.str();
}

std::vector<std::pair<double, double>> parse_xy_csv(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty() || lines[0] != "x,y") {
    fail(errc::parse_error, "scatter CSV must start with header 'x,y'");
  }
  std::vector<std::pair<double, double>> points;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_csv_line(lines[i]);
    if (cells.size() != 2) {
      fail(errc::parse_error, "scatter CSV row " + std::to_string(i) +
                                  " must have 2 cells, got " +
                                  std::to_string(cells.size()));
    }
    try {
      size_t px = 0, py = 0;
      double x = std::stod(cells[0], &px);
      double y = std::stod(cells[1], &py);
      if (px != cells[0].size() || py != cells[1].size()) {
        throw std::invalid_argument(lines[i]);
      }
      points.emplace_back(x, y);
    } catch (const std::exception&) {
      fail(errc::parse_error,
           "scatter CSV row " + std::to_string(i) + " is not numeric");
    }
  }
  return points;
}

std::string fit_to_json(const FitResult& f) {
  nlohmann::json j;
  j["alpha"] = double_text(f.alpha);
  j["beta"] = double_text(f.beta);
  j["gamma"] = double_text(f.gamma);
  j["delta"] = double_text(f.delta);
  j["standardized_coefficients"] = {
      double_text(f.standardized_coefficients[0]),
      double_text(f.standardized_coefficients[1]),
      double_text(f.standardized_coefficients[2]),
      double_text(f.standardized_coefficients[3])};
  j["r_squared"] = double_text(f.r_squared);
  j["condition_warning"] = f.condition_warning;
  return j.dump(2) + "\n";
}

}  // namespace hz
