#include <doctest.h>

#include "uqd/drinfeld_double.hpp"

using namespace uqd;

namespace {

std::shared_ptr<const DrinfeldDouble> a1_double() {
  static auto d = DrinfeldDouble::build(QuantumBorel::build(CartanType::A1, 3));
  return d;
}

Element single(const Monomial& m, const CycField& f) {
  Element e;
  e.add(m, CycScalar::one(f));
  return e;
}

void require_all(const std::vector<DoubleCheck>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("double: gate and dimension") {
  CHECK_THROWS_AS(DrinfeldDouble::build(QuantumBorel::build(CartanType::A1, 5)), std::invalid_argument);
  CHECK(a1_double()->dimension() == 6561);
}

TEST_CASE("double: dual product is the transpose of the coproduct") {
  const auto& d = *a1_double();
  const QuantumBorel& b = d.base();
  const CycField& f = d.field();
  // (fg)(x) = sum f(x_1) g(x_2), computed here straight from Delta.
  for (std::uint64_t p = 0; p < d.base_dimension(); p += 7) {
    for (std::uint64_t r = 0; r < d.base_dimension(); r += 5) {
      const Element fp = single(d.base_monomial(p), f), fr = single(d.base_monomial(r), f);
      const Element prod = d.dual_multiply(fp, fr);
      for (std::uint64_t x = 0; x < d.base_dimension(); ++x) {
        const TensorElement dx = b.hopf().coproduct(d.base_monomial(x));
        const CycScalar* want = dx.find(TensorKey{d.base_monomial(p), d.base_monomial(r)});
        const CycScalar got = d.evaluate(prod, single(d.base_monomial(x), f));
        CHECK(got == (want ? *want : CycScalar::zero(f)));
      }
    }
  }
}

TEST_CASE("double: dual coproduct reads f(y x)") {
  const auto& d = *a1_double();
  const Algebra& alg = d.base().group_algebra();
  const CycField& f = d.field();
  const Element phi = d.character({2, 0});
  const TensorElement dphi = d.dual_coproduct(phi);
  for (std::uint64_t x = 0; x < d.base_dimension(); x += 4) {
    for (std::uint64_t y = 0; y < d.base_dimension(); y += 3) {
      CycScalar lhs = CycScalar::zero(f);
      for (const auto& [k, c] : dphi)
        if (k[0] == d.base_monomial(x) && k[1] == d.base_monomial(y)) lhs += c;
      const Element yx = alg.multiply(d.base_monomial(y), d.base_monomial(x));
      CHECK(lhs == d.evaluate(phi, yx));
    }
  }
}

TEST_CASE("double: characters are multiplicative") {
  const auto& d = *a1_double();
  const Algebra& alg = d.base().group_algebra();
  const CycField& f = d.field();
  const Element chi = d.character({4, 0});
  for (std::uint64_t x = 0; x < d.base_dimension(); x += 2) {
    for (std::uint64_t y = 0; y < d.base_dimension(); y += 3) {
      const Element xy = alg.multiply(d.base_monomial(x), d.base_monomial(y));
      CHECK(d.evaluate(chi, xy) ==
            d.evaluate(chi, single(d.base_monomial(x), f)) * d.evaluate(chi, single(d.base_monomial(y), f)));
    }
  }
}

TEST_CASE("double: e chi_w = q^{-2w} chi_w e") {
  // From the cross relation with Delta^2(e) = e⊗K⊗K + 1⊗e⊗K + 1⊗1⊗e, only
  // the middle term survives: e chi = chi(K)^{-1} chi e, chi_w(K) = q^{2w}.
  const auto& d = *a1_double();
  const CycField& f = d.field();
  const TensorElement e = d.from_base(single(d.base().e(0), f));
  for (long w = 0; w < 9; ++w) {
    const TensorElement chi = d.grouplike({0, 0}, {w, 0});
    TensorElement rhs = d.multiply(chi, e);
    rhs.scale(CycScalar::zeta_pow(f, -2 * w));
    CHECK(d.multiply(e, chi) == rhs);
  }
}

TEST_CASE("double: generator identification") {
  const auto& d = *a1_double();
  const DoubleGenerators g = identify_generators(d);
  // m = 9, 1/2 = 5: K = g^{5*2} chi_5 = g^1 chi_5, K' = g^1 chi_4.
  CHECK(g.K_v[0][0] == 1);
  CHECK(g.K_w[0][0] == 5);
  CHECK(g.Kp_v[0][0] == 1);
  CHECK(g.Kp_w[0][0] == 4);
  require_all(check_double_structure(d, g, 40, 7));
}

TEST_CASE("double: [e,f] is a multiple of K - K^{-1}") {
  const auto& d = *a1_double();
  const DoubleGenerators g = identify_generators(d);
  for (const auto& c : check_double_structure(d, g, 0, 1)) {
    if (c.name == "commutator") {
      CHECK(c.pass);
      CHECK(c.detail.find("(K - K^{-1})") != std::string::npos);
    }
  }
}

TEST_CASE("double: bicharacter twist") {
  const auto& d = *a1_double();
  const DoubleGenerators g = identify_generators(d);
  const BicharacterTwist j = bicharacter_twist(d, g);
  // J = |T|^{-1} sum_{c,d} q^{<d,c>} K^c ⊗ K'^d: 81 group terms, 9 x 9 basis terms each.
  CHECK(j.group_terms == 81);
  CHECK(j.value.size() == 6561);
  require_all(check_bicharacter_twist(d, g, j));
}

TEST_CASE("double: R-matrix intertwines Delta and Delta^op") {
  const auto& d = *a1_double();
  const DoubleGenerators g = identify_generators(d);
  CHECK(d.R().size() == 729);
  require_all(r_matrix_check(d, g));
}

TEST_CASE("double: negative controls") {
  const auto& d = *a1_double();
  DoubleGenerators g = identify_generators(d);
  // Taking K' = K breaks centrality.
  DoubleGenerators bad = g;
  bad.Kp = g.K;
  bad.Kp_inv = g.K_inv;
  bool central = true;
  for (const auto& c : check_double_structure(d, bad, 0, 1))
    if (c.name == "K'-central") central = c.pass;
  CHECK_FALSE(central);

  // The flipped R = sum (delta_i ⊗ 1) ⊗ (eps ⊗ h_i) does not intertwine.
  const TensorElement R = d.R();
  TensorElement flipped(4);
  for (const auto& [k, c] : R) flipped.add(TensorKey{k[2], k[3], k[0], k[1]}, c);
  const TensorElement& e = g.e[0];
  CHECK_FALSE(d.multiply(flipped, d.coproduct(e)) == d.multiply(d.coproduct_op(e), flipped));
}

TEST_CASE("double: the inverse bicharacter does not twist to the tensor-product coproduct") {
  const auto& d = *a1_double();
  const DoubleGenerators g = identify_generators(d);
  BicharacterTwist j = bicharacter_twist(d, g);
  std::swap(j.value, j.inverse);
  std::swap(j.group_value, j.group_inverse);
  bool e_ok = true;
  for (const auto& c : check_bicharacter_twist(d, g, j))
    if (c.name == "twisted-coproduct-e") e_ok = c.pass;
  CHECK_FALSE(e_ok);
}
