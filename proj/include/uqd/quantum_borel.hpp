#pragma once

#include "uqd/algebra.hpp"
#include "uqd/lie_data.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqd {

/// Thrown when construction parameters violate the standing assumptions.
class ParamError : public std::invalid_argument {
 public:
  explicit ParamError(std::vector<ParamViolation> v);
  const std::vector<ParamViolation>& violations() const { return violations_; }

 private:
  std::vector<ParamViolation> violations_;
};

/// Structure maps of a (quasi-)bialgebra, given on basis monomials and
/// extended linearly. The antipode maps may be empty.
struct HopfData {
  std::shared_ptr<const Algebra> algebra;
  std::function<TensorElement(const Monomial&)> coproduct;
  std::function<CycScalar(const Monomial&)> counit;
  std::function<Element(const Monomial&)> antipode;
  std::function<Element(const Monomial&)> antipode_inverse;

  TensorElement delta(const Element& x) const;
  /// Coproduct applied on one slot of a tensor (raises the arity by 1).
  TensorElement delta_on_slot(const TensorElement& x, int slot) const;
  CycScalar epsilon(const Element& x) const;
  /// Counit applied on one slot (lowers the arity by 1).
  TensorElement epsilon_on_slot(const TensorElement& x, int slot) const;
  Element S(const Element& x) const;
};

/// u_q(b) at q = zeta_{n^2} with Cartan generators g_i (g_i^{n^2} = 1) and
/// skew-primitives e_i, Delta(e_i) = e_i ⊗ K_i + 1 ⊗ e_i, K_i = prod_j g_j^{a_ij}.
class QuantumBorel {
 public:
  /// Throws ParamError when validate_params fails. A custom rewrite system
  /// may replace the standard PBW rules (negative controls).
  static std::shared_ptr<const QuantumBorel> build(CartanType type, int n,
                                                   std::shared_ptr<const RewriteSystem> pbw = nullptr);

  const LieDatum& datum() const { return datum_; }
  int n() const { return n_; }
  int m() const { return n_ * n_; }
  int rank() const { return datum_.rank; }
  const CycField& field() const { return pbw_->field(); }
  const RewriteSystem& pbw() const { return *pbw_; }

  const Algebra& group_algebra() const { return *group_; }
  const Algebra& idempotent_algebra() const { return *idem_; }
  std::shared_ptr<const Algebra> group_handle() const { return group_; }
  std::shared_ptr<const Algebra> idempotent_handle() const { return idem_; }
  const HopfData& hopf() const { return hopf_; }
  const HopfData& hopf_idempotent() const { return hopf_idem_; }

  /// Exponent vector of K_i, i.e. row i of the Cartan matrix.
  std::array<int, kMaxRank> K_exponent(int i) const;
  /// Monomials g^a and e_i (group basis).
  Monomial g(const std::array<int, kMaxRank>& a) const { return group_->cartan(a); }
  Monomial e(int i) const;
  std::uint64_t dimension() const { return group_->dimension(); }

 private:
  QuantumBorel() = default;

  LieDatum datum_{};
  int n_ = 0;
  std::shared_ptr<const RewriteSystem> pbw_;
  std::shared_ptr<const Algebra> group_;
  std::shared_ptr<const Algebra> idem_;
  HopfData hopf_;
  HopfData hopf_idem_;
};

/// A Hopf-law failure on specific basis monomials.
struct HopfFailure {
  std::string law;
  std::vector<Monomial> arguments;
};

std::optional<HopfFailure> check_coassociativity(const HopfData& h, const std::vector<Monomial>& xs);
std::optional<HopfFailure> check_counit(const HopfData& h, const std::vector<Monomial>& xs);
std::optional<HopfFailure> check_antipode(const HopfData& h, const std::vector<Monomial>& xs);
/// Delta(xy) = Delta(x) Delta(y) on every listed pair.
std::optional<HopfFailure> check_coproduct_multiplicative(const HopfData& h,
                                                          const std::vector<std::pair<Monomial, Monomial>>& pairs);

/// Basis of A_q inside u_q(b): group exponents divisible by n.
struct AqBasis {
  std::shared_ptr<const QuantumBorel> uqb;
  std::uint64_t count = 0;

  bool contains(const Monomial& m) const;
  /// Flat enumeration (index < count).
  Monomial monomial(std::uint64_t i) const;
  /// A_q written in its own generators g_i^n, as an algebra over
  /// C[(Z/n)^r] in the requested Cartan basis.
  std::shared_ptr<Algebra> coset_algebra(CartanBasis basis) const;
  /// Embeds A_q elements (coset algebra, group basis) into u_q(b).
  Element embed(const Element& x) const;
};

AqBasis build_Aq(std::shared_ptr<const QuantumBorel> uqb);

struct ClosureFailure {
  Monomial left;
  Monomial right;
  Monomial outside;
};

/// Products of A_q basis pairs stay in A_q: every pair when the basis has at
/// most `exhaustive_limit` pairs, else `samples` seeded random pairs.
std::optional<ClosureFailure> check_Aq_closure(const AqBasis& aq, std::uint64_t exhaustive_limit,
                                               std::uint64_t samples, std::uint64_t seed);
/// True iff every support monomial of x (u_q(b), group basis) lies in A_q.
bool in_Aq(const AqBasis& aq, const Element& x);

/// Group algebra C[T], T = (Z/n^2)^r, with grouplike generators.
HopfData build_group_algebra_T(int r, int n);

/// Data implementing the Gamma-action: conjugation by g_i^j and the
/// correction (g_i^n)^{((j1+j2)' - j1 - j2)/n}.
struct GammaActionData {
  int i;
  int j;
  Element conjugator;
  /// ((j1+j2)' - j1 - j2)/n, always 0 or -1.
  static int correction_exponent(int j1, int j2, int n);
  static Element correction(const QuantumBorel& uqb, int i, int j1, int j2);
};
GammaActionData gamma_action_data(const QuantumBorel& uqb, int i, int j);

struct GammaFailure {
  std::string identity;
  int i = 0;
  std::vector<int> indices;
  std::string detail;
};

struct GammaReport {
  std::uint64_t spanning_count = 0;
  std::uint64_t uqb_dimension = 0;
  std::uint64_t identities_checked = 0;
  std::optional<GammaFailure> failure;
};

/// Conjugation, composition and spanning identities of p_{i,j} = g_i^j.
/// Spanning is verified exhaustively up to `exhaustive_limit` products and
/// by seeded sampling beyond.
GammaReport gamma_presentation_check(const AqBasis& aq, std::uint64_t exhaustive_limit, std::uint64_t samples,
                                     std::uint64_t seed);

}  // namespace uqd
