// uqd: verification suites and structure-constant export for u_q(b), A_q and D(u_q(b)).
#include "uqd/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace uqd;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_checks(const std::string& s) {
  if (s == "all") return suite_check_names();
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int verify(const std::string& type_name, long n, const std::string& checks, std::uint64_t seed, int jobs,
           const std::string& format, bool timing) {
  const auto type = parse_cartan_type(type_name);
  if (!type) {
    std::cerr << "unknown type: " << type_name << "\n";
    return kExitUsage;
  }
  auto emit = [&](const Json& report) {
    if (format == "structured") std::cout << report.dump(2) << "\n";
    else std::cout << report_text(report);
  };
  const auto violations = validate_params(*type, n);
  if (!violations.empty()) {
    emit(violation_report(*type, n, violations));
    for (const auto& v : violations) std::cerr << "invalid parameters: " << v.message << "\n";
    return kExitUsage;
  }
  const auto names = split_checks(checks);
  const auto& known = suite_check_names();
  std::set<std::string> seen;
  for (const auto& c : names) {
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      std::cerr << "unknown check: " << c << "\n";
      return kExitUsage;
    }
    if (!seen.insert(c).second) {
      std::cerr << "check listed twice: " << c << "\n";
      return kExitUsage;
    }
  }

  Suite suite(*type, static_cast<int>(n), seed, jobs);
  std::vector<CheckRecord> records;
  bool failed = false;
  for (const auto& c : names) {
    records.push_back(suite.run(c));
    failed = failed || records.back().status == "fail";
  }
  emit(build_report(*type, static_cast<int>(n), seed, records, timing));
  return failed ? kExitFail : 0;
}

int do_export(const std::string& type_name, long n, const std::string& what, const std::string& out_path) {
  const auto type = parse_cartan_type(type_name);
  if (!type) {
    std::cerr << "unknown type: " << type_name << "\n";
    return kExitUsage;
  }
  const auto violations = validate_params(*type, n);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "invalid parameters: " << v.message << "\n";
    return kExitUsage;
  }
  Json doc;
  try {
    doc = export_document(*type, static_cast<int>(n), what);
  } catch (const ExportRefused& e) {
    std::cerr << "export refused: " << e.what() << "\n";
    return kExitUsage;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitUsage;
  }
  out << doc.dump(1) << "\n";
  std::cerr << "wrote " << doc.at("entries").size() << " entries to " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the quasi-Hopf algebra A_q inside u_q(b) and of D(u_q(b))"};
  app.require_subcommand(1);

  std::string type = "A1", checks = "all", format = "text", what, out;
  long n = 3;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool timing = false;

  auto* verify_cmd = app.add_subcommand("verify", "run verification checks and print a report");
  verify_cmd->add_option("--type", type, "A1 or A2")->required();
  verify_cmd->add_option("--n", n, "odd n; q is a primitive n^2-th root of unity")->required();
  verify_cmd->add_option("--checks", checks, "comma-separated check names, or all")->default_val("all");
  verify_cmd->add_option("--seed", seed, "seed for sampled checks")->default_val(1);
  verify_cmd->add_option("--jobs", jobs, "threads for the associator comparison")->default_val(1)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", format, "text or structured")->default_val("text")->check(CLI::IsMember({"text", "structured"}));
  verify_cmd->add_flag("--timing", timing, "include wall times (breaks byte-identical output)");

  auto* export_cmd = app.add_subcommand("export", "write structure constants as a JSON document");
  export_cmd->add_option("--type", type, "A1 or A2")->required();
  export_cmd->add_option("--n", n, "odd n")->required();
  export_cmd->add_option("--what", what, "uqb, Aq, J, Phi or double-generators")->required()->check(CLI::IsMember(export_targets()));
  export_cmd->add_option("--out", out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return verify(type, n, checks, seed, jobs, format, timing);
    return do_export(type, n, what, out);
  } catch (const ParamError& e) {
    for (const auto& v : e.violations()) std::cerr << "invalid parameters: " << v.message << "\n";
    return kExitUsage;
  }
}
