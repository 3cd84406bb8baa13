#pragma once

#include "uqd/integer.hpp"

#include <string>

namespace uqd {

/// Exact rational in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(Int num) : num_(std::move(num)) {}  // NOLINT(implicit)
  BigRational(std::int64_t num) : num_(num) {}    // NOLINT(implicit)
  BigRational(Int num, Int den);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  BigRational operator-() const { return BigRational(-num_, den_, Canonical{}); }
  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b) { return a + (-b); }
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);
  BigRational inverse() const;

  friend bool operator==(const BigRational& a, const BigRational& b) = default;

  /// "p" or "p/q".
  std::string to_string() const;

 private:
  struct Canonical {};
  BigRational(Int num, Int den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Int num_{0};
  Int den_{1};
};

}  // namespace uqd
