#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace uqd {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision integer with an inline int64 fast path.
///
/// Values that fit in int64 never allocate; arithmetic that overflows is
/// redone in BigInt and demoted again when the result fits.
class Int {
 public:
  Int() = default;
  Int(std::int64_t v) : small_(v) {}  // NOLINT(implicit)
  Int(int v) : small_(v) {}           // NOLINT(implicit)
  explicit Int(const BigInt& v);
  explicit Int(std::string_view decimal);

  Int(const Int& o) : small_(o.small_), big_(o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr) {}
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o);
  Int& operator=(Int&&) noexcept = default;
  ~Int() = default;

  bool is_small() const { return !big_; }
  std::int64_t small() const { return small_; }
  BigInt to_big() const { return big_ ? *big_ : BigInt(small_); }
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  int sign() const;

  Int operator-() const;
  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);
  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  /// Exact quotient; the divisor must divide this value.
  Int divexact(const Int& d) const;
  /// Floor-free truncated remainder (sign follows the dividend).
  Int rem(const Int& d) const;
  /// Least nonnegative residue modulo a positive modulus.
  std::int64_t mod(std::int64_t m) const;
  Int abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Int& a, const Int& b);
  friend std::strong_ordering operator<=>(const Int& a, const Int& b);

  std::string to_string() const;

 private:
  void assign_big(BigInt v);

  std::int64_t small_ = 0;
  std::unique_ptr<BigInt> big_;
};

/// Nonnegative gcd; gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);

}  // namespace uqd
