#include <doctest.h>

#include "uqd/quantum_borel.hpp"

#include <random>

using namespace uqd;

namespace {

Element one_term(const Monomial& m, const CycField& f) {
  Element e;
  e.add(m, CycScalar::one(f));
  return e;
}

}  // namespace

TEST_CASE("u_q(b) construction") {
  auto u = QuantumBorel::build(CartanType::A1, 3);
  CHECK(u->dimension() == 81);
  CHECK(u->K_exponent(0)[0] == 2);
  CHECK_THROWS_AS(QuantumBorel::build(CartanType::A2, 3), ParamError);
  try {
    QuantumBorel::build(CartanType::A1, 4);
  } catch (const ParamError& e) {
    CHECK(e.violations().size() == 2);
  }
  auto a2 = QuantumBorel::build(CartanType::A2, 5);
  CHECK(a2->dimension() == 9765625);
  CHECK(a2->K_exponent(1)[0] == -1);
}

TEST_CASE("Hopf laws for A1") {
  auto u = QuantumBorel::build(CartanType::A1, 3);
  const HopfData& h = u->hopf();
  const auto basis = u->group_algebra().basis_monomials();
  CHECK_FALSE(check_coassociativity(h, basis).has_value());
  CHECK_FALSE(check_counit(h, basis).has_value());
  CHECK_FALSE(check_antipode(h, basis).has_value());
  std::vector<std::pair<Monomial, Monomial>> pairs;
  for (const auto& x : basis) {
    for (const auto& y : {u->g({1, 0}), u->e(0)}) pairs.emplace_back(x, y);
  }
  CHECK_FALSE(check_coproduct_multiplicative(h, pairs).has_value());
  // Delta(e) Delta(e) = Delta(e^2)
  const Algebra& a = u->group_algebra();
  const Element e = one_term(u->e(0), a.field());
  CHECK(a.multiply(h.delta(e), h.delta(e)) == h.delta(a.multiply(e, e)));
  // S(e) = -e K^{-1}
  Element se = a.multiply(e, one_term(u->g({-2, 0}), a.field()));
  se.scale(-CycScalar::one(a.field()));
  CHECK(h.S(e) == se);
}

TEST_CASE("Hopf laws in the idempotent basis agree") {
  auto u = QuantumBorel::build(CartanType::A1, 3);
  const HopfData& hi = u->hopf_idempotent();
  const auto basis = u->idempotent_algebra().basis_monomials();
  CHECK_FALSE(check_coassociativity(hi, basis).has_value());
  CHECK_FALSE(check_counit(hi, basis).has_value());
  const Algebra& a = u->group_algebra();
  for (const auto& m : a.basis_monomials()) {
    const Element x = one_term(m, a.field());
    const TensorElement via_idem = u->idempotent_algebra().to_basis(hi.delta(a.to_basis(x, CartanBasis::idempotent)), CartanBasis::group);
    CHECK(via_idem == u->hopf().delta(x));
  }
}

TEST_CASE("Hopf laws for A2 on generators and samples") {
  auto u = QuantumBorel::build(CartanType::A2, 5);
  const HopfData& h = u->hopf();
  const Algebra& a = u->group_algebra();
  auto xs = generator_monomials(a);
  std::mt19937_64 rng(3);
  for (int s = 0; s < 30; ++s) {
    Monomial m = a.basis_monomial(rng() % a.dimension());
    for (auto& p : m.pbw) p %= 3;
    xs.push_back(m);
  }
  CHECK_FALSE(check_coassociativity(h, xs).has_value());
  CHECK_FALSE(check_counit(h, xs).has_value());
  CHECK_FALSE(check_antipode(h, generator_monomials(a)).has_value());
  std::vector<std::pair<Monomial, Monomial>> pairs;
  for (const auto& x : generator_monomials(a)) {
    for (const auto& y : generator_monomials(a)) pairs.emplace_back(x, y);
  }
  CHECK_FALSE(check_coproduct_multiplicative(h, pairs).has_value());
}

TEST_CASE("A_q basis") {
  auto u = QuantumBorel::build(CartanType::A1, 3);
  const AqBasis aq = build_Aq(u);
  CHECK(aq.count == 27);
  CHECK_FALSE(check_Aq_closure(aq, 10000, 0, 1).has_value());
  const Algebra& a = u->group_algebra();
  CHECK_FALSE(in_Aq(aq, a.multiply(u->g({1, 0}), u->e(0))));
  CHECK(in_Aq(aq, a.multiply(u->g({3, 0}), u->e(0))));
  for (std::uint64_t i = 0; i < aq.count; ++i) CHECK(aq.contains(aq.monomial(i)));

  auto u2 = QuantumBorel::build(CartanType::A2, 5);
  const AqBasis aq2 = build_Aq(u2);
  CHECK(aq2.count == 390625);
  CHECK_FALSE(check_Aq_closure(aq2, 10000, 300, 5).has_value());
}

TEST_CASE("group algebra of T") {
  const HopfData t = build_group_algebra_T(1, 3);
  CHECK(t.algebra->dimension() == 9);
  const Monomial k = t.algebra->cartan({1, 0});
  TensorElement kk(2);
  kk.add({k, k}, CycScalar::one(t.algebra->field()));
  CHECK(t.coproduct(k) == kk);
  Element p = t.algebra->one();
  for (int i = 0; i < 9; ++i) p = t.algebra->multiply(p, one_term(k, t.algebra->field()));
  CHECK(p == t.algebra->one());
  CHECK_FALSE(check_antipode(t, t.algebra->basis_monomials()).has_value());
}

TEST_CASE("Gamma action data") {
  auto u = QuantumBorel::build(CartanType::A1, 3);
  const Algebra& a = u->group_algebra();
  CHECK(GammaActionData::correction_exponent(1, 1, 3) == 0);
  CHECK(GammaActionData::correction_exponent(2, 2, 3) == -1);
  CHECK(GammaActionData::correction(*u, 0, 2, 2) == one_term(u->g({6, 0}), a.field()));
  CHECK(gamma_action_data(*u, 0, 0).conjugator == a.one());
  // p2 p2 = p1 g^3
  CHECK(a.multiply(u->g({2, 0}), u->g({2, 0})) == a.multiply(u->g({1, 0}), u->g({3, 0})));
  for (int j = 0; j < 3; ++j) CHECK(a.multiply(u->g({0, 0}), u->g({j, 0})) == one_term(u->g({j, 0}), a.field()));

  const GammaReport r = gamma_presentation_check(build_Aq(u), 10000, 0, 1);
  CHECK_FALSE(r.failure.has_value());
  CHECK(r.spanning_count == 81);
  CHECK(r.uqb_dimension == 81);
}
