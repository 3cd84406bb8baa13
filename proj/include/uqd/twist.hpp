#pragma once

#include "uqd/phase_tensor.hpp"
#include "uqd/quantum_borel.hpp"

#include <optional>
#include <string>

namespace uqd {

/// Exponent of c(z, y) = q^{-z (y - y')}, y' the residue of y mod n in [0, n).
long c_exponent(long z, long y, int n);
CycScalar c_scalar(const CycField& f, long z, long y, int n);

/// 1_z = n^{-2r} sum_a q^{-z.a} g^a in the group basis.
Element primitive_idempotent(const QuantumBorel& uqb, const std::array<int, kMaxRank>& z);

/// Idempotent of C[(Z/n)^r] embedded through g_i -> g_i^n, i.e. the sum of
/// the 1_z with z = beta mod n. Built from its own character formula and
/// checked against that aggregation and the eigenvector equation
/// 1_beta g_i^n = q^{n beta_i} 1_beta; throws std::logic_error on mismatch.
Element bold_idempotent(const QuantumBorel& uqb, const std::array<int, kMaxRank>& beta);

/// The twist J = sum_{z,y} prod_{ij} c(z_i, y_j)^{a_ij} 1_z ⊗ 1_y.
struct TwistJ {
  PhaseTensor value;
  PhaseTensor inverse;
};
TwistJ build_twist_J(const QuantumBorel& uqb);

/// The closed-form associator
/// Phi = sum_{b,c,d in (Z/n)^r} prod_{ij} q^{a_ij b_i ((c_j+d_j)' - c_j - d_j)} 1_b ⊗ 1_c ⊗ 1_d
/// over the bold idempotents.
struct Associator {
  PhaseTensor value;  // labels in (Z/n)^r
};
Associator closed_form_phi(CartanType type, int n);

/// Phi read on the fine labels (Z/n^2)^r: 1_b = sum_{z = b mod n} 1_z.
PhaseTensor phi_on_fine_labels(const Associator& phi, const QuantumBorel& uqb);

/// dJ = (1⊗J)(id⊗Δ)(J)[(Δ⊗id)(J)]^{-1}(J⊗1)^{-1}, as a lazy diagonal tensor.
PhaseTensor coboundary_dJ(const TwistJ& j);

/// The same coboundary computed with sparse tensor arithmetic in the
/// idempotent basis of the given algebra (small instances only).
TensorElement coboundary_dJ_sparse(const QuantumBorel& uqb, const TwistJ& j);

/// J x J^{-1} for a diagonal J and any x in the idempotent basis.
TensorElement conjugate_by_diagonal(const Algebra& idem, const PhaseTensor& j, const PhaseTensor& jinv,
                                    const TensorElement& x);

/// Delta_J(x) = J Delta(x) J^{-1}, with x in the idempotent basis of u_q(b).
TensorElement delta_J(const QuantumBorel& uqb, const TwistJ& j, const Element& x);

/// First tensor term showing x is not in A_q^{⊗k}, or nullopt.
/// Group basis: a slot exponent not divisible by n. Idempotent basis: the
/// coefficient is not constant on a coset z + n Z^r (or a coset is partial).
std::optional<std::pair<TensorKey, std::string>> aq_tensor_violation(const QuantumBorel& uqb, const TensorElement& x,
                                                                     CartanBasis basis);

/// Rewrites a tensor over u_q(b) (idempotent basis) that lies in A_q^{⊗k}
/// into the bold-idempotent basis of A_q. Throws std::domain_error when the
/// input is not in A_q^{⊗k}.
TensorElement to_coset_basis(const QuantumBorel& uqb, const Algebra& coset_idem, const TensorElement& x);
/// Inverse of to_coset_basis for arity-1 inputs.
Element from_coset_basis(const QuantumBorel& uqb, const Element& x);

/// A_q with Delta_J and Phi, in the bold-idempotent basis.
struct TwistedAq {
  AqBasis basis;
  std::shared_ptr<const Algebra> algebra;
  HopfData structure;  // coproduct Delta_J, counit; no antipode
  TensorElement phi{3};
};
TwistedAq build_twisted_Aq(const AqBasis& aq, const TwistJ& j, const Associator& phi);

/// (1⊗Φ)(id⊗Δ⊗id)(Φ)(Φ⊗1) - (id⊗id⊗Δ)(Φ)(Δ⊗id⊗id)(Φ), or nullopt when zero.
std::optional<TensorElement> pentagon_check(const Algebra& alg, const HopfData& delta, const TensorElement& phi);

/// (id⊗Δ)(Δ(x)) Φ - Φ (Δ⊗id)(Δ(x)), or nullopt when zero.
std::optional<TensorElement> quasi_coassoc_check(const Algebra& alg, const HopfData& delta, const TensorElement& phi,
                                                 const Element& x);

}  // namespace uqd
