#include "uqd/suite.hpp"

#include <sstream>

namespace uqd {

namespace {

const char* kScope =
    "Exact algebra-level checks only. The categorical equivalence statements (module categories, "
    "Drinfeld centers, equivariantization) are not verified; their algebra-level ingredients are the "
    "gamma-presentation, double-twist and r-matrix checks.";

}  // namespace

Json monomial_json(const Monomial& m, int rank, int pbw_letters) {
  Json g = Json::array(), p = Json::array();
  for (int i = 0; i < rank; ++i) g.push_back(m.group[i]);
  for (int i = 0; i < pbw_letters; ++i) p.push_back(m.pbw[i]);
  return Json{{"group_exp", g}, {"pbw_exp", p}};
}

Json scalar_json(const CycScalar& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(Json::array({r.num().to_string(), r.den().to_string()}));
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Monomial monomial_from_json(const Json& j) {
  Monomial m;
  const auto& g = j.at("group_exp");
  const auto& p = j.at("pbw_exp");
  if (g.size() > kMaxRank || p.size() > kMaxRoots) throw std::invalid_argument("monomial has too many exponents");
  for (std::size_t i = 0; i < g.size(); ++i) m.group[i] = g[i].get<std::uint16_t>();
  for (std::size_t i = 0; i < p.size(); ++i) m.pbw[i] = p[i].get<std::uint16_t>();
  return m;
}

CycScalar scalar_from_json(const Json& j) {
  const CycField& f = CycField::of(j.at("order").get<std::uint32_t>());
  std::vector<BigRational> coeffs;
  for (const auto& c : j.at("coeffs")) {
    coeffs.emplace_back(Int(c.at(0).get<std::string>()), Int(c.at(1).get<std::string>()));
  }
  return CycScalar::from_coeffs(f, coeffs);
}

Json build_report(CartanType type, int n, std::uint64_t seed, const std::vector<CheckRecord>& records, bool timing) {
  Json checks = Json::array();
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : records) {
    Json c{{"name", r.name}, {"statement", r.statement}, {"status", r.status}, {"details", r.details}};
    if (!r.counterexample.is_null()) c["counterexample"] = r.counterexample;
    if (timing) c["seconds"] = r.seconds;
    checks.push_back(c);
    if (r.status == "pass") ++passed;
    else if (r.status == "fail") ++failed;
    else ++skipped;
  }
  return Json{{"schema_version", kSchemaVersion},
              {"parameters", Json{{"type", std::string(to_string(type))}, {"n", n}, {"seed", seed}}},
              {"scope", kScope},
              {"checks", checks},
              {"summary", Json{{"passed", passed}, {"failed", failed}, {"skipped", skipped}}}};
}

Json violation_report(CartanType type, long n, const std::vector<ParamViolation>& violations) {
  Json v = Json::array();
  for (const auto& p : violations) v.push_back(Json{{"code", p.code}, {"message", p.message}});
  return Json{{"schema_version", kSchemaVersion},
              {"parameters", Json{{"type", std::string(to_string(type))}, {"n", n}}},
              {"scope", kScope},
              {"violations", v},
              {"checks", Json::array()},
              {"summary", Json{{"passed", 0}, {"failed", 0}, {"skipped", 0}}}};
}

std::string report_text(const Json& report) {
  std::ostringstream out;
  const Json& p = report.at("parameters");
  out << "uqd verification: type " << p.at("type").get<std::string>() << ", n = " << p.at("n").get<long>();
  if (p.contains("seed")) out << ", seed " << p.at("seed").get<std::uint64_t>();
  out << "\n" << report.at("scope").get<std::string>() << "\n";
  if (report.contains("violations")) {
    out << "invalid parameters:\n";
    for (const auto& v : report.at("violations")) out << "  " << v.at("message").get<std::string>() << "\n";
    return out.str();
  }
  for (const auto& c : report.at("checks")) {
    std::string status = c.at("status").get<std::string>();
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << "\n" << status << "  " << c.at("name").get<std::string>() << "  " << c.at("statement").get<std::string>();
    if (c.contains("seconds")) out << "  (" << c.at("seconds").get<double>() << " s)";
    out << "\n    details: " << c.at("details").dump() << "\n";
    if (c.contains("counterexample")) out << "    counterexample: " << c.at("counterexample").dump() << "\n";
  }
  const Json& s = report.at("summary");
  out << "\n" << s.at("passed").get<int>() << " passed, " << s.at("failed").get<int>() << " failed, "
      << s.at("skipped").get<int>() << " skipped\n";
  return out.str();
}

}  // namespace uqd
