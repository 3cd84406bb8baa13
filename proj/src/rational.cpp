#include "uqd/rational.hpp"

#include <stdexcept>

namespace uqd {

BigRational::BigRational(Int num, Int den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  const Int g = gcd(num, den);
  if (!g.is_one() && !g.is_zero()) {
    num = num.divexact(g);
    den = den.divexact(g);
  }
  if (num.is_zero()) den = Int(1);
  num_ = std::move(num);
  den_ = std::move(den);
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  if (a.den_ == b.den_) return BigRational(a.num_ + b.num_, a.den_);
  return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator*(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}

BigRational operator/(const BigRational& a, const BigRational& b) { return a * b.inverse(); }

BigRational BigRational::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational");
  return BigRational(den_, num_);
}

std::string BigRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace uqd
