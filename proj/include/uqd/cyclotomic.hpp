#pragma once

#include "uqd/integer.hpp"
#include "uqd/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uqd {

/// Dense integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Int>;

/// The m-th cyclotomic polynomial, obtained by dividing x^m - 1 by the
/// product of Phi_d over the proper divisors d of m.
IntPoly cyclotomic_polynomial(std::uint32_t m);

std::uint32_t euler_phi(std::uint32_t m);

/// Reduction data for Q(zeta_m) = Q[x] / Phi_m. Instances are interned and
/// live for the whole program; obtain them through CycField::of.
class CycField {
 public:
  static const CycField& of(std::uint32_t m);

  std::uint32_t order() const { return order_; }
  std::uint32_t degree() const { return degree_; }
  const IntPoly& modulus() const { return modulus_; }

  /// Sparse canonical form of x^j for j < reduction_span().
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;
  const Row& power_row(std::uint32_t j) const { return power_rows_[j]; }
  std::uint32_t reduction_span() const { return static_cast<std::uint32_t>(power_rows_.size()); }

  /// Exponents k in [1, m) coprime to m (the Galois group of the field).
  const std::vector<std::uint32_t>& units() const { return units_; }

  CycField(const CycField&) = delete;
  CycField& operator=(const CycField&) = delete;

 private:
  explicit CycField(std::uint32_t m);

  std::uint32_t order_;
  std::uint32_t degree_;
  IntPoly modulus_;
  std::vector<Row> power_rows_;
  std::vector<std::uint32_t> units_;
};

/// Exact element of Q(zeta_m).
///
/// Values that are a rational multiple of a root of unity are held as
/// (c, k) meaning c * zeta^k; everything else as integer numerators over a
/// common denominator in the power basis 1, zeta, ..., zeta^(phi(m)-1).
/// Both forms are canonical, and equality compares values, not forms.
class CycScalar {
 public:
  static CycScalar zero(const CycField& f) { return CycScalar(f); }
  static CycScalar one(const CycField& f) { return CycScalar(f, Int(1), 0); }
  static CycScalar rational(const CycField& f, const BigRational& r);
  /// zeta^k with k reduced modulo m.
  static CycScalar zeta_pow(const CycField& f, std::int64_t k);
  /// c * zeta^k.
  static CycScalar monomial(const CycField& f, const BigRational& c, std::int64_t k);
  /// Builds a value from power-basis coefficients (length phi(m)).
  static CycScalar from_coeffs(const CycField& f, const std::vector<BigRational>& coeffs);

  const CycField& field() const { return *field_; }
  std::uint32_t order() const { return field_->order(); }

  /// Canonical coordinates in the power basis, length phi(m).
  std::vector<BigRational> coeffs() const;

  bool is_zero() const { return num_.empty() && unit_.is_zero(); }
  bool is_one() const { return num_.empty() && exp_ == 0 && unit_.is_one() && den_.is_one(); }
  /// k such that the value equals zeta^k, if any.
  std::optional<std::uint32_t> root_of_unity_exponent() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o) { return *this += -o; }
  CycScalar& operator*=(const CycScalar& o);
  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);

  /// Throws std::domain_error on zero.
  CycScalar inverse() const;
  std::optional<CycScalar> try_inverse() const;

  /// Image under the Galois automorphism zeta -> zeta^k (k coprime to m).
  CycScalar galois(std::uint32_t k) const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// Human-readable form, e.g. "-1 + 2*z^3" or "1/9*z^4".
  std::string to_string() const;

 private:
  explicit CycScalar(const CycField& f) : field_(&f) {}
  CycScalar(const CycField& f, Int unit, std::uint32_t exp) : field_(&f), unit_(std::move(unit)), exp_(exp) {}

  void check_same_field(const CycScalar& o) const;
  void normalize();
  /// Dense numerators (length phi) regardless of representation.
  std::vector<Int> dense_numerators() const;
  void set_dense(std::vector<Int> num, Int den);

  const CycField* field_;
  Int den_{1};
  std::vector<Int> num_;  // non-empty => dense form
  Int unit_{0};
  std::uint32_t exp_ = 0;
};

}  // namespace uqd
