#include "hz/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "hz/error.hpp"
#include "hz/families.hpp"
#include "hz/hg_io.hpp"
#include "hz/indices.hpp"
#include "hz/qsar.hpp"
#include "hz/verify.hpp"

namespace hz {

namespace {

void write_or_print(const std::string& text, const std::string& path,
                    std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

int cmd_compute(const std::string& file, bool json, std::ostream& out) {
  Hypergraph h = read_hypergraph_file(file);
  auto contribs = edge_contributions(h);
  HmPair hm = hm_both(h);
  if (json) {
    nlohmann::json j;
    j["n"] = h.n();
    j["edges"] = h.edge_count();
    j["hm1"] = hm.hm1.str();
    j["hm2"] = hm.hm2.str();
    nlohmann::json list = nlohmann::json::array();
    for (const EdgeContribution& c : contribs) {
      nlohmann::json e;
      e["edge"] = c.edge.members;
      e["degree_sum"] = c.degree_sum;
      e["degree_product"] = c.degree_product.str();
      list.push_back(e);
    }
    j["contributions"] = list;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "n = " << h.n() << "\n";
  out << "edges = " << h.edge_count() << "\n";
  out << "hm1 = " << hm.hm1.str() << "\n";
  out << "hm2 = " << hm.hm2.str() << "\n";
  for (size_t i = 0; i < contribs.size(); ++i) {
    const EdgeContribution& c = contribs[i];
    out << "edge[" << i << "] =";
    for (int v : c.edge.members) out << ' ' << v;
    out << "\n";
    out << "edge[" << i << "].degree_sum = " << c.degree_sum << "\n";
    out << "edge[" << i << "].degree_product = " << c.degree_product.str()
        << "\n";
  }
  return 0;
}

int cmd_generate(const std::string& family, const std::string& out_path,
                 bool json, std::ostream& out) {
  Hypergraph h = generate(parse_family(family));
  write_or_print(json ? to_json(h) : to_hg(h), out_path, out);
  return 0;
}

int cmd_closed_form(const std::string& family, bool json, std::ostream& out) {
  FamilySpec spec = parse_family(family);
  ClosedForm cf = closed_form(spec);
  if (json) {
    nlohmann::json j;
    j["family"] = to_text(spec);
    nlohmann::json h1 = nlohmann::json::array();
    for (const auto& [label, value] : cf.hm1_variants) {
      h1.push_back({{"label", label}, {"value", value.str()}});
    }
    nlohmann::json h2 = nlohmann::json::array();
    for (const auto& [label, value] : cf.hm2_variants) {
      h2.push_back({{"label", label}, {"value", value.str()}});
    }
    j["hm1"] = h1;
    j["hm2"] = h2;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "family = " << to_text(spec) << "\n";
  for (const auto& [label, value] : cf.hm1_variants) {
    out << "hm1[" << label << "] = " << value.str() << "\n";
  }
  for (const auto& [label, value] : cf.hm2_variants) {
    out << "hm2[" << label << "] = " << value.str() << "\n";
  }
  return 0;
}

int cmd_cross_check(const std::string& family, bool json, std::ostream& out) {
  CrossCheckReport report = cross_check(parse_family(family));
  if (json) {
    nlohmann::json j;
    j["family"] = to_text(report.spec);
    j["structural_hm1"] = report.structural_hm1.str();
    j["structural_hm2"] = report.structural_hm2.str();
    auto verdicts = [](const std::vector<VariantVerdict>& vs) {
      nlohmann::json arr = nlohmann::json::array();
      for (const VariantVerdict& v : vs) {
        arr.push_back({{"label", v.label},
                       {"claimed", v.claimed.str()},
                       {"matches", v.matches}});
      }
      return arr;
    };
    j["hm1"] = verdicts(report.hm1_verdicts);
    j["hm2"] = verdicts(report.hm2_verdicts);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "family = " << to_text(report.spec) << "\n";
  out << "structural_hm1 = " << report.structural_hm1.str() << "\n";
  out << "structural_hm2 = " << report.structural_hm2.str() << "\n";
  for (const VariantVerdict& v : report.hm1_verdicts) {
    out << "hm1[" << v.label << "] = " << v.claimed.str() << " "
        << (v.matches ? "match" : "mismatch") << "\n";
  }
  for (const VariantVerdict& v : report.hm2_verdicts) {
    out << "hm2[" << v.label << "] = " << v.claimed.str() << " "
        << (v.matches ? "match" : "mismatch") << "\n";
  }
  return 0;
}

struct ScanFlags {
  int threads = 0;
  std::uint64_t cap_override = 0;

  ScanOptions options() const {
    ScanOptions o;
    o.threads = threads;
    if (cap_override > 0) o.cap = cap_override;
    return o;
  }
};

int cmd_verify(const std::string& claim_id, const ClaimParams& params,
               const ScanFlags& flags, bool json, std::ostream& out,
               std::ostream& err) {
  VerificationReport report = check_claim(claim_id, params, flags.options());
  if (json) {
    out << to_json(report);
  } else {
    out << to_text(report);
    err << "elapsed_seconds = " << double_text(report.elapsed_seconds) << "\n";
  }
  return report.status == ClaimStatus::Violated ? 2 : 0;
}

int cmd_claims(bool json, std::ostream& out) {
  auto infos = claim_registry();
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ClaimInfo& info : infos) {
      arr.push_back({{"id", info.id},
                     {"params", info.param_names},
                     {"description", info.description}});
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (const ClaimInfo& info : infos) {
    out << info.id << " (";
    for (size_t i = 0; i < info.param_names.size(); ++i) {
      if (i > 0) out << ',';
      out << info.param_names[i];
    }
    out << "): " << info.description << "\n";
  }
  return 0;
}

int cmd_scan(const std::string& space_text, const std::string& index_text,
             const ScanFlags& flags, bool json, std::ostream& out,
             std::ostream& err) {
  ExtremalResult result = extremal_scan(parse_space(space_text),
                                        parse_index(index_text),
                                        flags.options());
  if (json) {
    out << to_json(result);
  } else {
    out << to_text(result);
    err << "elapsed_seconds = " << double_text(result.elapsed_seconds) << "\n";
  }
  return 0;
}

void print_fit_text(const FitResult& f, size_t rows, std::ostream& out) {
  out << "rows = " << rows << "\n";
  out << "alpha = " << double_text(f.alpha) << "\n";
  out << "beta = " << double_text(f.beta) << "\n";
  out << "gamma = " << double_text(f.gamma) << "\n";
  out << "delta = " << double_text(f.delta) << "\n";
  const char* names[4] = {"hm1", "hm2", "interaction", "intercept"};
  for (int i = 0; i < 4; ++i) {
    out << "standardized[" << names[i]
        << "] = " << double_text(f.standardized_coefficients[i]) << "\n";
  }
  out << "r_squared = " << double_text(f.r_squared) << "\n";
  out << "condition_warning = " << (f.condition_warning ? "true" : "false")
      << "\n";
}

int cmd_qsar_fit(const std::string& csv_in, const std::string& json_out,
                 const std::string& csv_out, bool json, std::ostream& out) {
  auto rows = parse_descriptor_csv(read_text_file(csv_in));
  FitResult f = fit(rows);
  if (!json_out.empty()) write_text_file(json_out, fit_to_json(f));
  if (!csv_out.empty()) write_text_file(csv_out, to_csv(rows, &f));
  if (json) {
    out << fit_to_json(f);
  } else {
    print_fit_text(f, rows.size(), out);
  }
  return 0;
}

int cmd_qsar_table(const std::vector<std::string>& files,
                   const std::string& csv_out, std::ostream& out) {
  std::vector<TableEntry> entries;
  for (const std::string& file : files) {
    TableEntry e;
    e.name = std::filesystem::path(file).stem().string();
    e.hypergraph = read_hypergraph_file(file);
    entries.push_back(std::move(e));
  }
  write_or_print(to_csv(descriptor_table(entries)), csv_out, out);
  return 0;
}

int cmd_qsar_line(const std::string& csv_in, std::optional<double> ref_slope,
                  std::optional<double> ref_intercept,
                  std::optional<double> ref_r2, bool json, std::ostream& out) {
  auto points = parse_xy_csv(read_text_file(csv_in));
  LineFit f = line_fit(points);
  if (json) {
    nlohmann::json j;
    j["points"] = points.size();
    j["slope"] = double_text(f.slope);
    j["intercept"] = double_text(f.intercept);
    j["r_squared"] = double_text(f.r_squared);
    if (ref_slope) j["reference_slope"] = double_text(*ref_slope);
    if (ref_intercept) j["reference_intercept"] = double_text(*ref_intercept);
    if (ref_r2) j["reference_r_squared"] = double_text(*ref_r2);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "points = " << points.size() << "\n";
  out << "slope = " << double_text(f.slope) << "\n";
  out << "intercept = " << double_text(f.intercept) << "\n";
  out << "r_squared = " << double_text(f.r_squared) << "\n";
  if (ref_slope) out << "reference_slope = " << double_text(*ref_slope) << "\n";
  if (ref_intercept) {
    out << "reference_intercept = " << double_text(*ref_intercept) << "\n";
  }
  if (ref_r2) out << "reference_r_squared = " << double_text(*ref_r2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Hyper-Zagreb indices of hypergraphs: structured "
               "families, closed forms, exhaustive bound verification, and "
               "QSAR fitting"};
  app.name("hz");
  app.require_subcommand(1);
  int exit_code = 0;

  // compute
  std::string compute_file;
  bool compute_json = false;
  int compute_threads = 0;
  auto* compute = app.add_subcommand(
      "compute", "Compute hm1/hm2 and per-edge contributions of a hypergraph file");
  compute->add_option("file", compute_file, "input .hg or .json hypergraph")
      ->required();
  compute->add_flag("--json", compute_json, "emit JSON");
  compute
      ->add_option("--threads", compute_threads,
                   "accepted for interface symmetry; computing indices is "
                   "single-threaded")
      ->envname("HZ_THREADS");
  compute->callback(
      [&] { exit_code = cmd_compute(compute_file, compute_json, out); });

  // generate
  std::string gen_family, gen_out;
  bool gen_json = false;
  auto* gen = app.add_subcommand("generate",
                                 "Generate a structured family instance");
  gen->add_option("family", gen_family,
                  "family text, e.g. sunflower:m=3,p=2,k=3")
      ->required();
  gen->add_option("-o,--out", gen_out, "output file (stdout if omitted)");
  gen->add_flag("--json", gen_json, "emit JSON instead of .hg");
  gen->callback(
      [&] { exit_code = cmd_generate(gen_family, gen_out, gen_json, out); });

  // closed-form
  std::string cf_family;
  bool cf_json = false;
  auto* cf = app.add_subcommand("closed-form",
                                "Evaluate a family's closed-form index values");
  cf->add_option("family", cf_family, "family text")->required();
  cf->add_flag("--json", cf_json, "emit JSON");
  cf->callback([&] { exit_code = cmd_closed_form(cf_family, cf_json, out); });

  // cross-check
  std::string cc_family;
  bool cc_json = false;
  auto* cc = app.add_subcommand(
      "cross-check", "Compare closed forms against the generated structure");
  cc->add_option("family", cc_family, "family text")->required();
  cc->add_flag("--json", cc_json, "emit JSON");
  cc->callback([&] { exit_code = cmd_cross_check(cc_family, cc_json, out); });

  // verify
  std::string verify_id;
  bool verify_json = false;
  ScanFlags verify_flags;
  std::optional<long long> vn, vk, vp, vq, vm;
  auto* verify = app.add_subcommand("verify",
                                    "Check one registered bound claim "
                                    "exhaustively (exit 2 if violated)");
  verify->add_option("claim", verify_id, "claim id, see the claims command")
      ->required();
  verify->add_option("--n", vn, "claim parameter n");
  verify->add_option("--k", vk, "claim parameter k");
  verify->add_option("--p", vp, "claim parameter p");
  verify->add_option("--q", vq, "claim parameter q");
  verify->add_option("--m", vm, "claim parameter m");
  verify->add_option("--threads", verify_flags.threads, "worker threads (0 = auto)")
      ->envname("HZ_THREADS");
  verify->add_option("--cap-override", verify_flags.cap_override,
                     "raise the candidate-subset cap beyond 2^26");
  verify->add_flag("--json", verify_json, "emit JSON");
  verify->callback([&] {
    ClaimParams params;
    if (vn) params.values["n"] = *vn;
    if (vk) params.values["k"] = *vk;
    if (vp) params.values["p"] = *vp;
    if (vq) params.values["q"] = *vq;
    if (vm) params.values["m"] = *vm;
    exit_code = cmd_verify(verify_id, params, verify_flags, verify_json, out, err);
  });

  // claims
  bool claims_json = false;
  auto* claims = app.add_subcommand("claims", "List registered bound claims");
  claims->add_flag("--json", claims_json, "emit JSON");
  claims->callback([&] { exit_code = cmd_claims(claims_json, out); });

  // scan
  std::string scan_space, scan_index;
  bool scan_json = false;
  ScanFlags scan_flags;
  auto* scan = app.add_subcommand(
      "scan", "Exhaustive min/max of an index over a search space");
  scan->add_option("space", scan_space,
                   "space text, e.g. allconnected:n=4 or hypertrees:nmax=5,m=3")
      ->required();
  scan->add_option("index", scan_index, "hm1 or hm2")->required();
  scan->add_option("--threads", scan_flags.threads, "worker threads (0 = auto)")
      ->envname("HZ_THREADS");
  scan->add_option("--cap-override", scan_flags.cap_override,
                   "raise the candidate-subset cap beyond 2^26");
  scan->add_flag("--json", scan_json, "emit JSON");
  scan->callback([&] {
    exit_code = cmd_scan(scan_space, scan_index, scan_flags, scan_json, out, err);
  });

  // qsar-fit
  std::string qf_csv, qf_json_out, qf_csv_out;
  bool qf_json = false;
  auto* qf = app.add_subcommand(
      "qsar-fit", "Fit activity ~ hm1 + hm2 + hm1*hm2 from a descriptor CSV");
  qf->add_option("csv", qf_csv, "input CSV (name,hm1,hm2,activity)")
      ->required();
  qf->add_option("-o,--json-out", qf_json_out, "write the fit as JSON here");
  qf->add_option("--csv-out", qf_csv_out,
                 "write the table with interaction and prediction columns here");
  qf->add_flag("--json", qf_json, "emit JSON on stdout");
  qf->callback([&] {
    exit_code = cmd_qsar_fit(qf_csv, qf_json_out, qf_csv_out, qf_json, out);
  });

  // qsar-table
  std::vector<std::string> qt_files;
  std::string qt_out;
  auto* qt = app.add_subcommand(
      "qsar-table", "Build a descriptor CSV from hypergraph files");
  qt->add_option("files", qt_files, "input .hg/.json files")->required();
  qt->add_option("-o,--out", qt_out, "output CSV (stdout if omitted)");
  qt->callback([&] { exit_code = cmd_qsar_table(qt_files, qt_out, out); });

  // qsar-line
  std::string ql_csv;
  bool ql_json = false;
  std::optional<double> ql_slope, ql_intercept, ql_r2;
  auto* ql = app.add_subcommand(
      "qsar-line", "Straight-line fit of an x,y scatter CSV");
  ql->add_option("csv", ql_csv, "input CSV (x,y)")->required();
  ql->add_option("--ref-slope", ql_slope, "reference slope to report alongside");
  ql->add_option("--ref-intercept", ql_intercept,
                 "reference intercept to report alongside");
  ql->add_option("--ref-r2", ql_r2, "reference r_squared to report alongside");
  ql->add_flag("--json", ql_json, "emit JSON");
  ql->callback([&] {
    exit_code = cmd_qsar_line(ql_csv, ql_slope, ql_intercept, ql_r2, ql_json, out);
  });

  std::vector<const char*> argv;
  argv.push_back("hz");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace hz
