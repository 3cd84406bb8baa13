#pragma once

#include "uqd/phase_tensor.hpp"
#include "uqd/quantum_borel.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace uqd {

/// Drinfeld double D(H) = H^{*cop} ⊗ H of H = u_q(b).
///
/// An element of D is a TensorElement of arity 2 whose first slot holds a
/// dual basis functional delta_p (p a basis monomial of H) and whose second
/// slot holds a basis monomial of H. Elements of D ⊗ D have arity 4.
/// Multiplication uses
///   (f ⊗ a)(g ⊗ b) = sum f g(S^{-1}(a_3) ? a_1) ⊗ a_2 b,
/// the coproduct is that of H^{*cop} ⊗ H, and
///   R = sum_i (eps ⊗ h_i) ⊗ (delta_{h_i} ⊗ 1).
/// Caches are filled lazily and are not synchronized.
class DrinfeldDouble {
 public:
  /// Only u_q(b) of dimension at most 81 is accepted (A1, n = 3).
  static std::shared_ptr<const DrinfeldDouble> build(std::shared_ptr<const QuantumBorel> uqb);

  const QuantumBorel& base() const { return *uqb_; }
  const CycField& field() const { return uqb_->field(); }
  std::uint64_t dimension() const { return dim_ * dim_; }
  std::uint64_t base_dimension() const { return dim_; }
  Monomial base_monomial(std::uint64_t i) const { return basis_[i]; }

  // Dual Hopf algebra H^{*cop}; functionals are Elements over dual basis monomials.
  Element dual_unit() const;
  Element dual_multiply(const Element& f, const Element& g) const;
  /// Delta(f)(x ⊗ y) = f(y x).
  TensorElement dual_coproduct(const Element& f) const;
  CycScalar evaluate(const Element& f, const Element& x) const;

  TensorElement one() const;
  TensorElement from_base(const Element& h) const;
  TensorElement from_dual(const Element& f) const;
  /// Grouplike g^v chi_w with chi_w(g^a) = q^{w.a}, chi_w(e_i) = 0.
  TensorElement grouplike(const std::array<long, kMaxRank>& v, const std::array<long, kMaxRank>& w) const;
  Element character(const std::array<long, kMaxRank>& w) const;

  /// Product in D (arity 2) or slot-pairwise in D ⊗ D (arity 4).
  TensorElement multiply(const TensorElement& x, const TensorElement& y) const;
  TensorElement coproduct(const TensorElement& x) const;
  TensorElement coproduct_op(const TensorElement& x) const;
  TensorElement tensor(const TensorElement& x, const TensorElement& y) const;
  TensorElement R() const;

  /// Basis element delta_p ⊗ h with flat index in [0, dimension()).
  TensorElement basis_element(std::uint64_t i) const;

 private:
  DrinfeldDouble() = default;
  std::size_t index(const Monomial& m) const { return static_cast<std::size_t>(uqb_->group_algebra().basis_index(m)); }
  const TensorElement& basis_product(const TensorKey& key) const;
  Element single_element(const Monomial& m) const;
  using Terms = std::vector<std::pair<std::uint32_t, CycScalar>>;
  const std::vector<Terms>& conjugation(std::size_t a1, std::size_t a3) const;

  std::shared_ptr<const QuantumBorel> uqb_;
  std::uint64_t dim_ = 0;
  std::vector<Monomial> basis_;
  std::vector<Element> mult_;                 // x * y at x * dim + y
  std::vector<TensorElement> delta_;          // Delta(x)
  std::vector<TensorElement> delta2_;         // (Delta ⊗ id) Delta(x)
  std::vector<Element> antipode_inv_;         // S^{-1}(x)
  std::vector<Terms> dual_product_;           // at p * dim + r: x with [Delta x]_{p ⊗ r}
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, CycScalar>>> dual_coproduct_;  // p -> (x, y, [y x]_p)

  mutable std::unordered_map<std::uint64_t, std::unique_ptr<std::vector<Terms>>> conj_cache_;
  mutable std::unordered_map<TensorKey, std::unique_ptr<TensorElement>, TensorKeyHash> product_cache_;
};

/// e_i, f_i, K_i, K_i' inside D(u_q(b)).
///
/// With 1/2 the inverse of 2 modulo m = n^2, and (v, w) the grouplike g^v chi_w:
///   K_i  = (A_i / 2,  delta_i / 2),   K_i' = (A_i / 2, -delta_i / 2),
/// so K_i K_i' = g^{A_i} is the K_i of u_q(b), K_i' commutes with every e_j,
/// and f_i = phi_i K_i'^{-1} with phi_i = sum_a delta_{g^a e_i}.
struct DoubleGenerators {
  std::vector<TensorElement> e, f, K, Kp, K_inv, Kp_inv;
  std::vector<std::array<long, kMaxRank>> K_v, K_w, Kp_v, Kp_w;
};
DoubleGenerators identify_generators(const DrinfeldDouble& d);

struct DoubleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Unit, associativity (generator triples and seeded random basis
/// triples), coproduct multiplicativity, the generator coproduct formulas,
/// centrality of K', the u_q(g) conjugation relations and the observed
/// shape of [e, f].
std::vector<DoubleCheck> check_double_structure(const DrinfeldDouble& d, const DoubleGenerators& g,
                                                std::uint64_t samples, std::uint64_t seed);

/// The bicharacter twist J on C = <K_i, K_i'>:
/// characters chi_(a,b)(K^c K'^d) = q^{<a,c> - <b,d>}, <a,c> = sum a_i a_ij c_j,
/// and J = sum <a, d> 1_(a,b) ⊗ 1_(c,d).
struct BicharacterTwist {
  PhaseTensor idempotent_form;  // labels (a, b) in (Z/m)^{2r}
  TensorElement value{4};       // in D ⊗ D
  TensorElement inverse{4};     // in D ⊗ D
  std::uint64_t group_terms = 0;  // nonzero (h, h') pairs of the group form
  /// Group form: coefficients on K^c K'^d ⊗ K^c' K'^d', labels packed as in idempotent_form.
  struct GroupTerm {
    std::uint32_t left, right;
    CycScalar coeff;
  };
  std::vector<GroupTerm> group_value, group_inverse;
  std::vector<TensorElement> elements;  // K^c K'^d in D, by label
};
BicharacterTwist bicharacter_twist(const DrinfeldDouble& d, const DoubleGenerators& g);

/// 2-cocycle identity and invertibility of J, and J Delta_*(x) = Delta(x) J for
/// the tensor-product coproducts Delta(e) = e ⊗ K + 1 ⊗ e,
/// Delta(f) = f ⊗ 1 + K^{-1} ⊗ f, Delta(K) = K ⊗ K, Delta(K') = K' ⊗ K'.
std::vector<DoubleCheck> check_bicharacter_twist(const DrinfeldDouble& d, const DoubleGenerators& g,
                                                 const BicharacterTwist& j);

/// R Delta_*(x) = Delta_*^{op}(x) R for x in {e, f, K, K'}.
std::vector<DoubleCheck> r_matrix_check(const DrinfeldDouble& d, const DoubleGenerators& g);

}  // namespace uqd
