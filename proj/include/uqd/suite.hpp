#pragma once

#include "uqd/cocycle.hpp"
#include "uqd/drinfeld_double.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace uqd {

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string name;
  std::string statement;
  std::string status;  // "pass", "fail" or "skipped"
  Json details = Json::object();
  Json counterexample;  // null unless the check failed
  double seconds = 0;
};

/// Names accepted by Suite::run, in report order.
const std::vector<std::string>& suite_check_names();

/// Runs named verification checks at one parameter pair. Shared objects
/// (u_q(b), A_q, J, Phi, the double) are built on first use. The
/// constructor throws ParamError for invalid parameters.
class Suite {
 public:
  Suite(CartanType type, int n, std::uint64_t seed = 1, int jobs = 1);

  CartanType type() const { return type_; }
  int n() const { return n_; }
  std::uint64_t seed() const { return seed_; }

  /// Throws std::invalid_argument for an unknown name.
  CheckRecord run(const std::string& name);

  /// True when the double-based checks apply (A1, n = 3).
  bool double_supported() const;

  const QuantumBorel& uqb() const { return *uqb_; }
  const AqBasis& aq();
  const TwistJ& twist();
  const Associator& phi();
  const TwistedAq& twisted_aq();

 private:
  void lemma31(CheckRecord& r);
  void lemma32(CheckRecord& r);
  void dimensions(CheckRecord& r);
  void pentagon(CheckRecord& r);
  void quasicoassoc(CheckRecord& r);
  void gamma(CheckRecord& r);
  void cocycle(CheckRecord& r);
  void double_twist(CheckRecord& r);
  void r_matrix(CheckRecord& r);

  CartanType type_;
  int n_;
  std::uint64_t seed_;
  int jobs_;
  std::shared_ptr<const QuantumBorel> uqb_;
  std::optional<AqBasis> aq_;
  std::optional<TwistJ> j_;
  std::optional<Associator> phi_;
  std::optional<TwistedAq> taq_;
  std::shared_ptr<const DrinfeldDouble> double_;
  std::optional<DoubleGenerators> gens_;
};

Json monomial_json(const Monomial& m, int rank, int pbw_letters);
Json scalar_json(const CycScalar& c);
Monomial monomial_from_json(const Json& j);
CycScalar scalar_from_json(const Json& j);

/// Structured report {schema_version, parameters, scope, checks, summary}.
/// Wall times are included only when `timing` is set.
Json build_report(CartanType type, int n, std::uint64_t seed, const std::vector<CheckRecord>& records, bool timing);
/// Report for rejected parameters.
Json violation_report(CartanType type, long n, const std::vector<ParamViolation>& violations);
std::string report_text(const Json& report);

inline constexpr int kSchemaVersion = 1;

/// Thrown when an export request cannot be served at the given parameters.
class ExportRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Export targets: "uqb", "Aq", "J", "Phi", "double-generators".
const std::vector<std::string>& export_targets();
Json export_document(CartanType type, int n, const std::string& what);

}  // namespace uqd
