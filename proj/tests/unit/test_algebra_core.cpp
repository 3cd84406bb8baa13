#include <doctest.h>

#include "uqd/quantum_borel.hpp"

using namespace uqd;

namespace {

Element one_term(const Monomial& m, const CycScalar& c) {
  Element e;
  e.add(m, c);
  return e;
}

Monomial mono(std::array<std::uint16_t, kMaxRank> g, std::array<std::uint16_t, kMaxRoots> p) {
  Monomial m;
  m.group = g;
  m.pbw = p;
  return m;
}

// e2^c e1 = q^c e1 e2^c + beta_c E12 e2^(c-1), beta_c = -sum_{k=1..c} q^(2k-c),
// derived by induction from the three straightening rules.
CycScalar beta(const CycField& f, int c) {
  CycScalar b = CycScalar::zero(f);
  for (int k = 1; k <= c; ++k) b -= CycScalar::zeta_pow(f, 2 * k - c);
  return b;
}

}  // namespace

TEST_CASE("A1 normal forms") {
  auto u = QuantumBorel::build(CartanType::A1, 3);
  const Algebra& a = u->group_algebra();
  const CycField& f = a.field();
  const Monomial g = u->g({1, 0});
  const Monomial e = u->e(0);
  // e g = q^{-1} g e
  CHECK(a.multiply(e, g) == one_term(mono({1, 0}, {1, 0, 0}), CycScalar::zeta_pow(f, -1)));
  Element p = a.one();
  for (int k = 0; k < 9; ++k) p = a.multiply(p, one_term(g, CycScalar::one(f)));
  CHECK(p == a.one());
  Element x = a.one();
  for (int k = 0; k < 8; ++k) x = a.multiply(x, one_term(e, CycScalar::one(f)));
  CHECK(x == one_term(mono({0, 0}, {8, 0, 0}), CycScalar::one(f)));
  CHECK(a.multiply(x, one_term(e, CycScalar::one(f))).empty());
  CHECK(a.dimension() == 81);
  CHECK(a.basis_monomials().size() == 81);
  for (std::uint64_t i = 0; i < a.dimension(); ++i) CHECK(a.basis_index(a.basis_monomial(i)) == i);
  for (const auto& m : a.basis_monomials()) {
    CHECK(a.multiply(a.one(), one_term(m, CycScalar::one(f))) == one_term(m, CycScalar::one(f)));
    CHECK(a.multiply(one_term(m, CycScalar::one(f)), a.one()) == one_term(m, CycScalar::one(f)));
  }
}

TEST_CASE("A2 straightening rules") {
  auto u = QuantumBorel::build(CartanType::A2, 5);
  const RewriteSystem& r = u->pbw();
  const CycField& f = r.field();
  const CycScalar q = CycScalar::zeta_pow(f, 1);
  const CycScalar qi = CycScalar::zeta_pow(f, -1);
  CHECK(r.dimension() == 15625);
  // E12 as defined through e1 e2 - q^{-1} e2 e1
  Element def = r.normal_form({0, 2});
  def.add_scaled(r.normal_form({2, 0}), -qi);
  CHECK(def == r.normal_form({1}));
  // Serre relations in both orders
  for (auto [i, j] : {std::pair{0, 2}, std::pair{2, 0}}) {
    Element s = r.normal_form({i, i, j});
    s.add_scaled(r.normal_form({i, j, i}), -(q + qi));
    s.add(r.normal_form({j, i, i}));
    CHECK(s.empty());
  }
  for (int c = 1; c <= 25; ++c) {
    std::vector<int> w(static_cast<std::size_t>(c), 2);
    w.push_back(0);
    Element want;
    Monomial m1;
    m1.pbw = {1, 0, static_cast<std::uint16_t>(c)};
    Monomial m2;
    m2.pbw = {0, 1, static_cast<std::uint16_t>(c - 1)};
    if (c < 25) want.add(m1, CycScalar::zeta_pow(f, c));
    want.add(m2, beta(f, c));
    CHECK(r.normal_form(w) == want);
  }
  CHECK(beta(f, 25).is_zero());
  CHECK(r.normal_form(std::vector<int>(25, 1)).empty());
  CHECK(u->dimension() == 9765625);
}

TEST_CASE("associativity probe") {
  auto a1 = QuantumBorel::build(CartanType::A1, 3);
  CHECK_FALSE(associativity_probe(a1->group_algebra(), generator_monomials(a1->group_algebra()), 200, 1).has_value());
  CHECK_FALSE(associativity_probe(a1->idempotent_algebra(), generator_monomials(a1->idempotent_algebra()), 200, 1).has_value());
  auto a2 = QuantumBorel::build(CartanType::A2, 5);
  const auto gens = generator_monomials(a2->group_algebra());
  CHECK(gens.size() == 5);
  CHECK_FALSE(associativity_probe(a2->group_algebra(), gens, 500, 7).has_value());

  // Negative control: perturb the coefficient of E12 e1 -> q^{-1} e1 E12.
  const CycField& f = a2->field();
  auto bad = a2->pbw().with_rule({1, 0}, {{{0, 1}, CycScalar::zeta_pow(f, 1)}});
  auto broken = QuantumBorel::build(CartanType::A2, 5, bad);
  auto fail = associativity_probe(broken->group_algebra(), gens, 500, 7);
  REQUIRE(fail.has_value());
  CHECK_FALSE(fail->lhs == fail->rhs);
}

TEST_CASE("tensor products and slot maps") {
  auto u = QuantumBorel::build(CartanType::A1, 3);
  const Algebra& a = u->group_algebra();
  const CycField& f = a.field();
  const CycScalar one = CycScalar::one(f);
  const Monomial g = u->g({1, 0});
  const Monomial e = u->e(0);
  const Monomial I{};
  TensorElement g1(2), onesg(2), e1(2), gg(2);
  g1.add({g, I}, one);
  onesg.add({I, g}, one);
  e1.add({e, I}, one);
  gg.add({g, g}, one);
  CHECK(a.multiply(a.tensor_one(2), gg) == gg);
  CHECK(a.multiply(g1, onesg) == gg);
  TensorElement want(2);
  want.add({mono({1, 0}, {1, 0, 0}), I}, CycScalar::zeta_pow(f, -1));
  CHECK(a.multiply(e1, g1) == want);
  CHECK_THROWS_AS(a.multiply(gg, a.tensor_one(3)), std::invalid_argument);

  CHECK(apply_on_slot(gg, 0, [](const Monomial& m) { return as_tensor(Element{} = [&] { Element x; x.add(m, CycScalar::one(CycField::of(9))); return x; }()); }) == gg);
  TensorElement eps = u->hopf().epsilon_on_slot(gg, 0);
  CHECK(eps == as_tensor(one_term(g, one)));
  TensorElement d = u->hopf().delta_on_slot(e1, 0);
  TensorElement dwant(3);
  dwant.add({e, u->g({2, 0}), I}, one);
  dwant.add({I, e, I}, one);
  CHECK(d == dwant);
}

TEST_CASE("tensor inversion") {
  auto u = QuantumBorel::build(CartanType::A1, 3);
  const Algebra& a = u->group_algebra();
  const Algebra& ai = u->idempotent_algebra();
  const CycField& f = a.field();
  CHECK(invert_tensor(a, a.tensor_one(2)) == a.tensor_one(2));
  TensorElement qt = a.tensor_one(2);
  qt.scale(CycScalar::zeta_pow(f, 1));
  TensorElement qinv = a.tensor_one(2);
  qinv.scale(CycScalar::zeta_pow(f, -1));
  CHECK(invert_tensor(a, qt) == qinv);

  // Diagonal idempotent tensor with coefficients q^{zy}; inverse is q^{-zy}.
  TensorElement dz(2), dzi(2);
  for (int z = 0; z < 9; ++z) {
    for (int y = 0; y < 9; ++y) {
      dz.add({ai.cartan({z, 0}), ai.cartan({y, 0})}, CycScalar::zeta_pow(f, z * y));
      dzi.add({ai.cartan({z, 0}), ai.cartan({y, 0})}, CycScalar::zeta_pow(f, -z * y));
    }
  }
  CHECK(invert_tensor(ai, dz) == dzi);
  CHECK(ai.multiply(dz, dzi) == ai.tensor_one(2));

  // Unipotent case: (1 + e⊗e)(g⊗1)
  TensorElement x(2);
  x.add({u->g({1, 0}), Monomial{}}, CycScalar::one(f));
  x.add({u->e(0), u->e(0)}, CycScalar::one(f));
  const TensorElement xi = invert_tensor(a, x);
  CHECK(a.multiply(x, xi) == a.tensor_one(2));
  CHECK(a.multiply(xi, x) == a.tensor_one(2));
  // A group-basis Cartan part needing the idempotent route.
  TensorElement y(1);
  y.add({u->g({0, 0})}, CycScalar::one(f));
  y.add({u->g({1, 0})}, CycScalar::rational(f, 2));
  CHECK(a.multiply(y, invert_tensor(a, y)) == a.tensor_one(1));
  TensorElement sing(1);
  sing.add({u->e(0)}, CycScalar::one(f));
  CHECK_THROWS_AS(invert_tensor(a, sing), std::domain_error);
}

TEST_CASE("basis conversion round trip") {
  auto u = QuantumBorel::build(CartanType::A1, 3);
  const Algebra& a = u->group_algebra();
  for (const auto& m : a.basis_monomials()) {
    const Element x = one_term(m, CycScalar::one(a.field()));
    CHECK(u->idempotent_algebra().to_basis(a.to_basis(x, CartanBasis::idempotent), CartanBasis::group) == x);
  }
  CHECK(a.to_basis(a.one(), CartanBasis::idempotent) == u->idempotent_algebra().one());
}

TEST_CASE("sparse hygiene") {
  auto u = QuantumBorel::build(CartanType::A2, 5);
  const Algebra& a = u->group_algebra();
  const CycField& f = a.field();
  Element x = a.letter(0);
  x.add(a.letter(2));
  Element y = a.multiply(x, x);
  y.add_scaled(y, -CycScalar::one(f));
  CHECK(y.empty());
  Element z = a.multiply(a.multiply(x, a.letter(1)), x);
  CHECK(z.hygienic());
  CHECK(u->hopf().delta(z).hygienic());
}
