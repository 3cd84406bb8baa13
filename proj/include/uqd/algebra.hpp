#pragma once

#include "uqd/rewrite.hpp"
#include "uqd/sparse.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace uqd {

/// How the Cartan part of a Monomial is read.
///   group:      g^a, with g_i^N = 1
///   idempotent: 1_z, the primitive idempotents of the same group algebra
enum class CartanBasis { group, idempotent };

/// Cartan group algebra C[(Z/N)^r] smashed with a PBW subalgebra B.
///
/// The generator g_i acts on B by g_i x g_i^{-1} = q^{step * wt_i(x)} x, so
/// in normal form (g^a E^x)(g^b E^y) = q^{-step * b.wt(x)} g^{a+b} E^x E^y.
/// In the idempotent basis the same algebra reads
/// (1_z E^x)(1_w E^y) = [w = z - wt(x)] 1_z E^x E^y.
/// step = 1 with N = n^2 gives u_q(b); step = n with N = n gives A_q in the
/// generators g_i^n.
class Algebra {
 public:
  Algebra(std::shared_ptr<const RewriteSystem> pbw, int rank, int modulus, int step, CartanBasis basis);

  const CycField& field() const { return pbw_->field(); }
  const RewriteSystem& pbw() const { return *pbw_; }
  std::shared_ptr<const RewriteSystem> pbw_handle() const { return pbw_; }
  int rank() const { return rank_; }
  int modulus() const { return modulus_; }
  int step() const { return step_; }
  CartanBasis basis() const { return basis_; }

  /// Same algebra read in the other Cartan basis.
  std::shared_ptr<Algebra> with_basis(CartanBasis b) const;

  std::uint64_t cartan_size() const;
  std::uint64_t dimension() const { return cartan_size() * pbw_->dimension(); }

  CycScalar scalar(std::int64_t k) const { return CycScalar::rational(field(), BigRational(k)); }
  CycScalar q_pow(std::int64_t k) const { return CycScalar::zeta_pow(field(), k); }

  Element one() const;
  TensorElement tensor_one(int arity) const;
  /// Cartan label or exponent vector, reduced modulo N.
  Monomial cartan(const std::array<int, kMaxRank>& a) const;
  /// Group element g^a in this algebra's basis.
  Element group_element(const std::array<int, kMaxRank>& a) const;
  Element letter(int l) const;

  Element multiply(const Monomial& x, const Monomial& y) const;
  Element multiply(const Element& x, const Element& y) const;
  /// Slot-wise product; throws std::invalid_argument on arity mismatch.
  TensorElement multiply(const TensorElement& x, const TensorElement& y) const;

  /// All normal-form monomials, Cartan part outermost.
  std::vector<Monomial> basis_monomials() const;
  /// Monomial with flat index i in [0, dimension()).
  Monomial basis_monomial(std::uint64_t i) const;
  /// Inverse of basis_monomial.
  std::uint64_t basis_index(const Monomial& m) const;

  /// Group basis <-> idempotent basis on each slot.
  Element to_basis(const Element& x, CartanBasis target) const;
  TensorElement to_basis(const TensorElement& x, CartanBasis target) const;

 private:
  std::vector<std::pair<Monomial, CycScalar>> convert_monomial(const Monomial& m, CartanBasis target) const;

  std::shared_ptr<const RewriteSystem> pbw_;
  int rank_;
  int modulus_;
  int step_;
  CartanBasis basis_;
};

/// Applies a linear map to one tensor slot. The map's value is a tensor of
/// arity j >= 1 and replaces the slot in place, so the arity changes by
/// j - 1. Values of f are memoized per distinct monomial during the call.
TensorElement apply_on_slot(const TensorElement& x, int slot,
                            const std::function<TensorElement(const Monomial&)>& f);
/// Scalar-valued variant: contracts the slot (the arity drops by 1; the
/// input must have arity >= 2).
TensorElement contract_slot(const TensorElement& x, int slot,
                            const std::function<CycScalar(const Monomial&)>& f);

/// Inverse in the tensor-power algebra. The input must be D(1 + N) with D
/// invertible and free of root vectors and N of positive PBW degree; the
/// inverse is then (sum (-N)^k) D^{-1}. Throws std::domain_error otherwise.
TensorElement invert_tensor(const Algebra& alg, const TensorElement& x);

struct AssociativityFailure {
  std::array<Monomial, 3> triple;
  Element lhs;
  Element rhs;
};

/// Checks (xy)z = x(yz) on all triples of the given generators and on
/// `samples` seeded random basis-monomial triples.
std::optional<AssociativityFailure> associativity_probe(const Algebra& alg, const std::vector<Monomial>& generators,
                                                        std::uint64_t samples, std::uint64_t seed);

/// Generators of an algebra: g_i (or the 1_z labels) and every PBW letter.
std::vector<Monomial> generator_monomials(const Algebra& alg);

}  // namespace uqd
