#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "hz/cli.hpp"
#include "hz/families.hpp"
#include "hz/hg_io.hpp"

using namespace hz;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data_path(const char* file) {
  return std::string(HZ_DATA_DIR) + "/" + file;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("usage errors exit 1, help exits 0") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"no-such-command"}).code == 1);
  CHECK(run_cli({"scan"}).code == 1);  // missing required positionals
  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "scan"));
}

TEST_CASE("compute reports indices and contributions") {
  std::string path = temp_path("hz_cli_k3.hg");
  write_text_file(path, to_hg(generate(FamilySpec::complete(3))));

  CliResult r = run_cli({"compute", path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "n = 3\n"));
  CHECK(contains(r.out, "edges = 4\n"));
  CHECK(contains(r.out, "hm1 = 189\n"));
  CHECK(contains(r.out, "hm2 = 972\n"));
  CHECK(contains(r.out, "edge[0].degree_sum = 6\n"));

  CliResult j = run_cli({"compute", path, "--json"});
  CHECK(j.code == 0);
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["hm1"] == "189");
  CHECK(doc["hm2"] == "972");
  CHECK(doc["contributions"].size() == 4);

  CliResult missing = run_cli({"compute", "/no/such/file.hg"});
  CHECK(missing.code == 1);
  CHECK(contains(missing.err, "error:"));
  std::remove(path.c_str());
}

TEST_CASE("generate prints or writes the instance") {
  CliResult r = run_cli({"generate", "star:m=3,k=3"});
  CHECK(r.code == 0);
  CHECK(r.out == to_hg(generate(FamilySpec::hyperstar(3, 3))));

  CliResult j = run_cli({"generate", "star:m=3,k=3", "--json"});
  CHECK(j.out == to_json(generate(FamilySpec::hyperstar(3, 3))));

  std::string path = temp_path("hz_cli_star.hg");
  CliResult o = run_cli({"generate", "star:m=3,k=3", "-o", path});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  CHECK(read_hypergraph_file(path) == generate(FamilySpec::hyperstar(3, 3)));
  std::remove(path.c_str());

  CHECK(run_cli({"generate", "star:m=0,k=3"}).code == 1);
}

TEST_CASE("closed-form lists every variant") {
  CliResult r = run_cli({"closed-form", "path:m=3,k=3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "hm1[corollary] = 57\n"));
  CHECK(contains(r.out, "hm1[lemma] = 86\n"));
  CHECK(contains(r.out, "hm2[corollary] = 24\n"));
  CHECK(contains(r.out, "hm2[lemma] = 96\n"));

  CliResult c = run_cli({"closed-form", "complete:n=4"});
  CHECK(contains(c.out, "hm1[formula] = 3724\n"));
  CHECK(contains(c.out, "hm2[formula] = 6249803\n"));
}

TEST_CASE("cross-check adjudicates variants against the structure") {
  CliResult r = run_cli({"cross-check", "path:m=3,k=3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "structural_hm1 = 57\n"));
  CHECK(contains(r.out, "structural_hm2 = 24\n"));
  CHECK(contains(r.out, "hm1[corollary] = 57 match\n"));
  CHECK(contains(r.out, "hm1[lemma] = 86 mismatch\n"));
  CHECK(contains(r.out, "hm2[lemma] = 96 mismatch\n"));

  CliResult j = run_cli({"cross-check", "sunflower:m=3,p=2,k=3", "--json"});
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["structural_hm1"] == "147");
  CHECK(doc["hm1"][0]["matches"] == true);
}

TEST_CASE("verify exits 0 on holding claims and 2 on violations") {
  CliResult ok = run_cli({"verify", "general-lower-hm1", "--n", "3"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "status = holds-tight\n"));
  CHECK(contains(ok.out, "claimed = 9\n"));
  CHECK(contains(ok.err, "elapsed_seconds = "));
  CHECK_FALSE(contains(ok.out, "elapsed"));

  CliResult bad =
      run_cli({"verify", "ktree-lower-hm1-lemma-variant", "--k", "3", "--m", "3"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "status = violated\n"));
  CHECK(contains(bad.out, "claimed = 86\n"));
  CHECK(contains(bad.out, "observed = 57\n"));

  CliResult slack = run_cli({"verify", "uniform-hypertree-upper-hm1", "--k",
                             "3", "--m", "3", "--json"});
  CHECK(slack.code == 0);
  nlohmann::json doc = nlohmann::json::parse(slack.out);
  CHECK(doc["status"] == "holds-slack");
  CHECK(doc.contains("elapsed_seconds"));

  CHECK(run_cli({"verify", "no-such-claim", "--n", "3"}).code == 1);
  CHECK(run_cli({"verify", "general-lower-hm1"}).code == 1);
  CHECK(run_cli({"verify", "general-lower-hm1", "--n", "3", "--k", "2"}).code == 1);
}

TEST_CASE("claims lists the registry") {
  CliResult r = run_cli({"claims"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 22);
  CHECK(contains(r.out, "general-upper-hm1 (n):"));
  CHECK(contains(r.out, "ktree-lower-hm1-lemma-variant (k,m):"));

  CliResult j = run_cli({"claims", "--json"});
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc.size() == 22);
}

TEST_CASE("scan emits stable text with timing on stderr") {
  CliResult r = run_cli({"scan", "allconnected:n=2", "hm1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "space = allconnected:n=2\n"
        "index = hm1\n"
        "population = 1\n"
        "min = 4\n"
        "min_attainers = 1\n"
        "min_witness[0] = 2 1;0 1\n"
        "max = 4\n"
        "max_attainers = 1\n"
        "max_witness[0] = 2 1;0 1\n");
  CHECK(contains(r.err, "elapsed_seconds = "));

  CliResult j = run_cli({"scan", "allconnected:n=3", "hm2", "--json"});
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["population"] == 12);
  CHECK(doc["max"]["value"] == "972");
  CHECK(doc.contains("elapsed_seconds"));

  CHECK(run_cli({"scan", "allconnected:n=3", "hm3"}).code == 1);
  CHECK(run_cli({"scan", "allconnected:n=90", "hm1"}).code == 1);
  // Over the default cap without an override.
  CHECK(run_cli({"scan", "allconnected:n=6", "hm1"}).code == 1);
}

TEST_CASE("scan output is byte-identical across thread counts") {
  for (const char* space : {"allconnected:n=4", "uniformhypertrees:k=3,m=3"}) {
    CAPTURE(space);
    CliResult one = run_cli({"scan", space, "hm1", "--threads", "1"});
    CliResult two = run_cli({"scan", space, "hm1", "--threads", "2"});
    CliResult any = run_cli({"scan", space, "hm1"});
    CHECK(one.code == 0);
    CHECK(one.out == two.out);
    CHECK(one.out == any.out);
  }
  CliResult v1 = run_cli({"verify", "general-upper-hm1", "--n", "4",
                          "--threads", "1"});
  CliResult v2 = run_cli({"verify", "general-upper-hm1", "--n", "4",
                          "--threads", "2"});
  CHECK(v1.out == v2.out);
}

TEST_CASE("qsar-fit reports the model") {
  CliResult r = run_cli({"qsar-fit", data_path("drug_descriptors.csv")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rows = 4\n"));
  CHECK(contains(r.out, "alpha = "));
  CHECK(contains(r.out, "condition_warning = false\n"));

  std::string json_path = temp_path("hz_cli_fit.json");
  std::string csv_path = temp_path("hz_cli_fit.csv");
  CliResult o = run_cli({"qsar-fit", data_path("drug_descriptors.csv"), "-o",
                         json_path, "--csv-out", csv_path});
  CHECK(o.code == 0);
  nlohmann::json doc = nlohmann::json::parse(read_text_file(json_path));
  CHECK(std::stod(doc["r_squared"].get<std::string>()) ==
        doctest::Approx(1.0).epsilon(1e-9));
  std::string csv = read_text_file(csv_path);
  CHECK(contains(csv, "name,hm1,hm2,interaction,activity,prediction\n"));
  CHECK(contains(csv, "Aspirin,4528,12345,"));
  std::remove(json_path.c_str());
  std::remove(csv_path.c_str());

  CHECK(run_cli({"qsar-fit", "/no/such.csv"}).code == 1);
}

TEST_CASE("qsar-table builds descriptor rows from files") {
  std::string a = temp_path("alpha.hg");
  std::string b = temp_path("kappa.json");
  write_text_file(a, to_hg(generate(FamilySpec::hyperstar(3, 3))));
  write_text_file(b, to_json(generate(FamilySpec::complete(3))));
  CliResult r = run_cli({"qsar-table", a, b});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "name,hm1,hm2,interaction,activity\n"
        "alpha,75,27,2025,\n"
        "kappa,189,972,183708,\n");
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("qsar-line reports computed and reference coefficients") {
  CliResult r = run_cli({"qsar-line", data_path("ace_scatter.csv"),
                         "--ref-slope", "0.98", "--ref-intercept", "0.02",
                         "--ref-r2", "0.89"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "points = 10\n"));
  CHECK(contains(r.out, "reference_slope = 0.98\n"));
  CHECK(contains(r.out, "reference_intercept = 0.02\n"));
  CHECK(contains(r.out, "reference_r_squared = 0.89\n"));

  std::istringstream lines(r.out);
  std::string line;
  double slope = 0, r2 = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("slope = ", 0) == 0) slope = std::stod(line.substr(8));
    if (line.rfind("r_squared = ", 0) == 0) r2 = std::stod(line.substr(12));
  }
  CHECK(slope == doctest::Approx(0.815836298932).epsilon(1e-9));
  CHECK(r2 == doctest::Approx(0.879109149378).epsilon(1e-9));

  CliResult bare = run_cli({"qsar-line", data_path("ace_scatter.csv")});
  CHECK(bare.code == 0);
  CHECK_FALSE(contains(bare.out, "reference"));
}

TEST_SUITE_END();
