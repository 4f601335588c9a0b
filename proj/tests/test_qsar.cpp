#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "hz/families.hpp"
#include "hz/hg_io.hpp"
#include "hz/qsar.hpp"

using namespace hz;

namespace {

#define CHECK_FAILS(expr, expected)                    \
  do {                                                 \
    try {                                              \
      (void)(expr);                                    \
      FAIL_CHECK("expected an Error, none was raised");\
    } catch (const Error& e) {                         \
      CHECK(e.code() == errc::expected);               \
    }                                                  \
  } while (0)

std::string data_path(const char* file) {
  return std::string(HZ_DATA_DIR) + "/" + file;
}

DescriptorRow row(std::string name, long long h1, long long h2,
                  std::optional<double> activity) {
  DescriptorRow r;
  r.name = std::move(name);
  r.hm1 = h1;
  r.hm2 = h2;
  r.interaction = IndexValue(h1) * h2;
  r.activity = activity;
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("qsar");

TEST_CASE("exact integer to double conversion") {
  CHECK(to_double_exact(IndexValue(0)) == 0.0);
  CHECK(to_double_exact(IndexValue(6249803)) == 6249803.0);
  CHECK(to_double_exact(IndexValue(-42)) == -42.0);

  IndexValue p53 = IndexValue(1) << 53;
  CHECK(to_double_exact(p53) == std::ldexp(1.0, 53));
  // Ties round to the even mantissa.
  CHECK(to_double_exact(p53 + 1) == std::ldexp(1.0, 53));
  CHECK(to_double_exact(p53 + 2) == std::ldexp(1.0, 53) + 2);
  CHECK(to_double_exact(p53 + 3) == std::ldexp(1.0, 53) + 4);

  CHECK(to_double_exact(IndexValue(1) << 1023) == std::ldexp(1.0, 1023));
  CHECK_FAILS(to_double_exact(IndexValue(1) << 1024), fit_error);
}

TEST_CASE("double text round-trips through parsing") {
  for (double v : {0.0, 1.0, 0.5, 0.1, -3.25, 0.815836298932, 1e300, 1e-300}) {
    CAPTURE(v);
    CHECK(std::stod(double_text(v)) == v);
  }
  CHECK(double_text(0.5) == "0.5");
  CHECK(double_text(1.0) == "1");
}

TEST_CASE("descriptor table computes exact features") {
  std::vector<TableEntry> entries(2);
  entries[0].name = "k3";
  entries[0].hypergraph = generate(FamilySpec::complete(3));
  entries[0].activity = 0.5;
  entries[1].name = "star";
  entries[1].hypergraph = generate(FamilySpec::hyperstar(3, 3));
  auto rows = descriptor_table(entries);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].hm1 == 189);
  CHECK(rows[0].hm2 == 972);
  CHECK(rows[0].interaction == 189 * 972);
  CHECK(rows[0].activity == 0.5);
  CHECK(rows[1].hm1 == 75);
  CHECK(rows[1].hm2 == 27);
  CHECK_FALSE(rows[1].activity.has_value());

  entries[1].name = "k3";
  CHECK_FAILS(descriptor_table(entries), duplicate_name);
}

TEST_CASE("fit recovers planted coefficients from noiseless rows") {
  const double alpha = 2.0e-3, beta = -1.5e-6, gamma = 1.0e-10, delta = 0.7;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> h1(100, 10000);
  std::uniform_int_distribution<long long> h2(100, 1000000);
  std::vector<DescriptorRow> rows;
  for (int i = 0; i < 30; ++i) {
    long long a = h1(rng), b = h2(rng);
    DescriptorRow r = row("r" + std::to_string(i), a, b, std::nullopt);
    double inter = static_cast<double>(a) * static_cast<double>(b);
    r.activity = alpha * static_cast<double>(a) + beta * static_cast<double>(b) +
                 gamma * inter + delta;
    rows.push_back(r);
  }
  FitResult f = fit(rows);
  CHECK(f.alpha == doctest::Approx(alpha).epsilon(1e-8));
  CHECK(f.beta == doctest::Approx(beta).epsilon(1e-8));
  CHECK(f.gamma == doctest::Approx(gamma).epsilon(1e-8));
  CHECK(f.delta == doctest::Approx(delta).epsilon(1e-8));
  CHECK(f.r_squared >= 1.0 - 1e-12);
  CHECK_FALSE(f.condition_warning);
  for (const DescriptorRow& r : rows) {
    CHECK(predict(f, r) == doctest::Approx(*r.activity).epsilon(1e-8));
  }
}

TEST_CASE("fit input validation") {
  std::vector<DescriptorRow> rows;
  for (int i = 0; i < 3; ++i) {
    rows.push_back(row("r" + std::to_string(i), 10 + i, 20 + i, 0.5));
  }
  CHECK_FAILS(fit(rows), too_few_rows);
  rows.push_back(row("r3", 13, 23, std::nullopt));
  CHECK_FAILS(fit(rows), missing_activity);
}

TEST_CASE("a constant column triggers the condition warning") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> h2(100, 100000);
  std::vector<DescriptorRow> rows;
  for (int i = 0; i < 10; ++i) {
    long long b = h2(rng);
    DescriptorRow r = row("r" + std::to_string(i), 500, b, std::nullopt);
    r.activity = 0.3 + 1e-6 * static_cast<double>(b);
    rows.push_back(r);
  }
  FitResult f = fit(rows);
  CHECK(f.condition_warning);
  // The degenerate fit still reproduces the targets.
  for (const DescriptorRow& r : rows) {
    CHECK(predict(f, r) == doctest::Approx(*r.activity).epsilon(1e-6));
  }
}

TEST_CASE("four-row descriptor table interpolates exactly") {
  auto rows = parse_descriptor_csv(read_text_file(data_path("drug_descriptors.csv")));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].name == "Aspirin");
  CHECK(rows[0].hm1 == 4528);
  CHECK(rows[0].hm2 == 12345);
  CHECK(rows[0].interaction == IndexValue(4528) * 12345);
  CHECK(rows[3].activity == 0.68);

  FitResult f = fit(rows);
  CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  for (const DescriptorRow& r : rows) {
    CHECK(predict(f, r) == doctest::Approx(*r.activity).epsilon(1e-9));
  }
}

TEST_CASE("line fit matches the frozen scatter regression") {
  auto points = parse_xy_csv(read_text_file(data_path("ace_scatter.csv")));
  REQUIRE(points.size() == 10);
  LineFit f = line_fit(points);
  CHECK(f.slope == doctest::Approx(0.815836298932).epsilon(1e-9));
  CHECK(f.intercept == doctest::Approx(0.152962633452).epsilon(1e-9));
  CHECK(f.r_squared == doctest::Approx(0.879109149378).epsilon(1e-9));
}

TEST_CASE("line fit degenerate inputs") {
  CHECK_FAILS(line_fit({{1.0, 2.0}}), too_few_rows);
  LineFit vertical = line_fit({{2.0, 1.0}, {2.0, 3.0}});
  CHECK(vertical.slope == 0.0);
  CHECK(vertical.r_squared == 0.0);
  LineFit flat = line_fit({{1.0, 5.0}, {2.0, 5.0}, {3.0, 5.0}});
  CHECK(flat.slope == 0.0);
  CHECK(flat.r_squared == 0.0);  // defined as 0 for constant targets
}

TEST_CASE("descriptor csv parsing") {
  auto rows = parse_descriptor_csv(
      "name,hm1,hm2,activity\r\nA,189,972,0.5\r\n\r\nB,75,27,\r\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].name == "A");
  CHECK(rows[0].hm1 == 189);
  CHECK(rows[0].activity == 0.5);
  CHECK_FALSE(rows[1].activity.has_value());

  CHECK_FAILS(parse_descriptor_csv(""), parse_error);
  CHECK_FAILS(parse_descriptor_csv("name,hm1,hm2\nA,1,2\n"), parse_error);
  CHECK_FAILS(parse_descriptor_csv("name,hm1,hm2,activity\nA,1,2\n"),
              parse_error);
  CHECK_FAILS(parse_descriptor_csv("name,hm1,hm2,activity\nA,x,2,0.5\n"),
              parse_error);
  CHECK_FAILS(parse_descriptor_csv("name,hm1,hm2,activity\nA,1,2,zz\n"),
              parse_error);
  CHECK_FAILS(parse_descriptor_csv("name,hm1,hm2,activity\n,1,2,0.5\n"),
              parse_error);
  CHECK_FAILS(
      parse_descriptor_csv("name,hm1,hm2,activity\nA,1,2,0.5\nA,3,4,0.6\n"),
      duplicate_name);
}

TEST_CASE("csv serialization carries interaction and optional predictions") {
  std::vector<DescriptorRow> rows{row("A", 3, 4, 0.5),
                                  row("B", 5, 6, std::nullopt)};
  CHECK(to_csv(rows) ==
        "name,hm1,hm2,interaction,activity\n"
        "A,3,4,12,0.5\n"
        "B,5,6,30,\n");

  std::vector<DescriptorRow> four{row("A", 1, 1, 1.0), row("B", 2, 1, 2.0),
                                  row("C", 1, 2, 3.0), row("D", 3, 3, 4.0)};
  FitResult f = fit(four);
  std::string text = to_csv(four, &f);
  CHECK(text.find("name,hm1,hm2,interaction,activity,prediction\n") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("scatter csv parsing") {
  auto points = parse_xy_csv("x,y\n1.5,2\n-0.5,3e2\n");
  REQUIRE(points.size() == 2);
  CHECK(points[0] == std::pair{1.5, 2.0});
  CHECK(points[1] == std::pair{-0.5, 300.0});
  CHECK_FAILS(parse_xy_csv("a,b\n1,2\n"), parse_error);
  CHECK_FAILS(parse_xy_csv("x,y\n1\n"), parse_error);
  CHECK_FAILS(parse_xy_csv("x,y\n1,up\n"), parse_error);
}

TEST_CASE("fit report serializes to json") {
  std::vector<DescriptorRow> four{row("A", 1, 1, 1.0), row("B", 2, 1, 2.0),
                                  row("C", 1, 2, 3.0), row("D", 3, 3, 4.0)};
  FitResult f = fit(four);
  nlohmann::json j = nlohmann::json::parse(fit_to_json(f));
  CHECK(j.contains("alpha"));
  CHECK(j.contains("beta"));
  CHECK(j.contains("gamma"));
  CHECK(j.contains("delta"));
  CHECK(j.contains("r_squared"));
  CHECK(j["standardized_coefficients"].size() == 4);
  CHECK(j["condition_warning"].is_boolean());
  CHECK(std::stod(j["alpha"].get<std::string>()) == f.alpha);
}

TEST_SUITE_END();
