#include <doctest.h>

#include "uqd/suite.hpp"

#include <random>

using namespace uqd;

namespace {

Json reparse(const Json& j) { return Json::parse(j.dump(1)); }

Element element_from_json(const Json& j) {
  Element e;
  for (const auto& t : j) e.add(monomial_from_json(t.at("monomial")), scalar_from_json(t.at("coeff")));
  return e;
}

CycScalar coeff_at(const Json& doc, const std::vector<int>& labels) {
  for (const auto& e : doc.at("entries")) {
    bool match = true;
    for (std::size_t s = 0; s < labels.size(); ++s) match = match && e.at("tensor")[s].at("group_exp")[0] == labels[s];
    if (match) return scalar_from_json(e.at("coeff"));
  }
  throw std::out_of_range("no entry with these labels");
}

}  // namespace

TEST_CASE("scalar serialization round trip") {
  const CycField& f = CycField::of(25);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<BigRational> c;
    for (std::uint32_t i = 0; i < f.degree(); ++i) {
      c.emplace_back(Int(static_cast<std::int64_t>(rng() % 2001) - 1000), Int(static_cast<std::int64_t>(rng() % 7 + 1)));
    }
    const CycScalar x = CycScalar::from_coeffs(f, c);
    CHECK(scalar_from_json(reparse(scalar_json(x))) == x);
  }
  const CycScalar z = CycScalar::zeta_pow(f, 7);
  const Json j = scalar_json(z);
  CHECK(j.at("order") == 25);
  CHECK(j.at("coeffs").size() == 20);
  CHECK(j.at("coeffs").at(7) == Json::array({"1", "1"}));
}

TEST_CASE("uqb export reproduces multiplication and coproduct") {
  const Json doc = reparse(export_document(CartanType::A1, 3, "uqb"));
  CHECK(doc.at("schema_version") == kSchemaVersion);
  const auto& entries = doc.at("entries");
  REQUIRE(entries.size() == 81);
  auto u = QuantumBorel::build(CartanType::A1, 3);
  const Algebra& a = u->group_algebra();
  std::mt19937_64 rng(11);
  for (int s = 0; s < 300; ++s) {
    const std::size_t i = rng() % 81, k = rng() % 81;
    const Monomial x = monomial_from_json(entries[i].at("monomial"));
    const Monomial y = monomial_from_json(entries[k].at("monomial"));
    CHECK(element_from_json(entries[i].at("products")[k]) == a.multiply(x, y));
  }
  for (std::size_t i = 0; i < 81; i += 9) {
    TensorElement d(2);
    for (const auto& t : entries[i].at("coproduct")) {
      d.add(TensorKey{monomial_from_json(t.at("tensor")[0]), monomial_from_json(t.at("tensor")[1])},
            scalar_from_json(t.at("coeff")));
    }
    CHECK(d == u->hopf().coproduct(monomial_from_json(entries[i].at("monomial"))));
  }
  CHECK_THROWS_AS(export_document(CartanType::A1, 5, "uqb"), ExportRefused);
}

TEST_CASE("Phi, J and Aq exports") {
  const Json phi = reparse(export_document(CartanType::A1, 3, "Phi"));
  REQUIRE(phi.at("entries").size() == 27);
  const Associator ref = closed_form_phi(CartanType::A1, 3);
  for (const auto& e : phi.at("entries")) {
    const CycScalar c = scalar_from_json(e.at("coeff"));
    const auto k = c.root_of_unity_exponent();
    REQUIRE(k.has_value());
    CHECK(*k % 3 == 0);
    PhaseTensor::Index idx{};
    for (int s = 0; s < 3; ++s) idx[s] = e.at("tensor")[s].at("group_exp")[0].get<std::uint32_t>();
    CHECK(c == ref.value.coefficient(idx));
  }
  // Phi(1, 2, 2) = q^{-6}: 2 * 1 * ((2 + 2)' - 2 - 2) = -6.
  CHECK(coeff_at(phi, {1, 2, 2}) == CycScalar::zeta_pow(CycField::of(9), -6));

  const Json j = reparse(export_document(CartanType::A1, 3, "J"));
  REQUIRE(j.at("entries").size() == 81);
  // J at (z, y) = (1, 3): c(1, 3)^2 = q^{-2 * 1 * 3} = q^{-6}.
  CHECK(coeff_at(j, {1, 3}) == CycScalar::zeta_pow(CycField::of(9), -6));

  const Json aq = reparse(export_document(CartanType::A1, 3, "Aq"));
  REQUIRE(aq.at("entries").size() == 27);
  for (const auto& e : aq.at("entries")) CHECK(e.at("monomial").at("group_exp")[0].get<int>() % 3 == 0);
  CHECK_THROWS_AS(export_document(CartanType::A1, 5, "double-generators"), ExportRefused);
  CHECK_THROWS_AS(export_document(CartanType::A2, 3, "Phi"), ParamError);
}

TEST_CASE("double generator export re-imports") {
  const Json doc = reparse(export_document(CartanType::A1, 3, "double-generators"));
  auto d = DrinfeldDouble::build(QuantumBorel::build(CartanType::A1, 3));
  const DoubleGenerators g = identify_generators(*d);
  REQUIRE(doc.at("entries").size() == 4);
  const std::vector<const TensorElement*> want = {&g.e[0], &g.f[0], &g.K[0], &g.Kp[0]};
  for (std::size_t i = 0; i < 4; ++i) {
    TensorElement x(2);
    for (const auto& t : doc.at("entries")[i].at("terms")) {
      x.add(TensorKey{monomial_from_json(t.at("tensor")[0]), monomial_from_json(t.at("tensor")[1])},
            scalar_from_json(t.at("coeff")));
    }
    CHECK(x == *want[i]);
  }
}

TEST_CASE("reports are deterministic and carry counterexamples") {
  auto run = [] {
    Suite s(CartanType::A1, 3, 5);
    std::vector<CheckRecord> r;
    for (const auto& name : {"lemma32", "theorem33-dim", "gamma-presentation", "cocycle-nontrivial"}) r.push_back(s.run(name));
    return build_report(CartanType::A1, 3, 5, r, false).dump(2);
  };
  const std::string a = run();
  CHECK(a == run());
  CHECK(a.find("seconds") == std::string::npos);

  const Json empty = build_report(CartanType::A1, 3, 1, {}, false);
  CHECK(empty.at("checks").empty());
  CHECK(report_text(empty).find("0 passed, 0 failed, 0 skipped") != std::string::npos);

  CheckRecord bad{"pentagon", "statement", "fail", Json::object(), Json{{"residual_terms", 3}}, 0.5};
  const Json rep = build_report(CartanType::A1, 3, 1, {bad}, true);
  CHECK(rep.at("summary").at("failed") == 1);
  CHECK(rep.at("checks")[0].at("counterexample").at("residual_terms") == 3);
  CHECK(rep.at("checks")[0].contains("seconds"));

  Suite s(CartanType::A1, 5);
  CHECK(s.run("r-matrix").status == "skipped");
  CHECK_THROWS_AS(s.run("no-such-check"), std::invalid_argument);
}
