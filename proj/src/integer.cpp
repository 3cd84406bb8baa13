#include "uqd/integer.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace uqd {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits_small(const BigInt& v) { return v >= kMin && v <= kMax; }

}  // namespace

Int::Int(const BigInt& v) { assign_big(v); }

Int::Int(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("empty integer literal");
  assign_big(BigInt(std::string(decimal)));
}

Int& Int::operator=(const Int& o) {
  if (this != &o) {
    small_ = o.small_;
    big_ = o.big_ ? std::make_unique<BigInt>(*o.big_) : nullptr;
  }
  return *this;
}

void Int::assign_big(BigInt v) {
  if (fits_small(v)) {
    small_ = static_cast<std::int64_t>(v);
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<BigInt>(std::move(v));
  }
}

int Int::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

Int Int::operator-() const {
  if (!big_ && small_ != kMin) return Int(-small_);
  Int r;
  r.assign_big(-to_big());
  return r;
}

Int& Int::operator+=(const Int& o) {
  std::int64_t out;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &out)) {
    small_ = out;
    return *this;
  }
  assign_big(to_big() + o.to_big());
  return *this;
}

Int& Int::operator-=(const Int& o) {
  std::int64_t out;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &out)) {
    small_ = out;
    return *this;
  }
  assign_big(to_big() - o.to_big());
  return *this;
}

Int& Int::operator*=(const Int& o) {
  std::int64_t out;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &out)) {
    small_ = out;
    return *this;
  }
  assign_big(to_big() * o.to_big());
  return *this;
}

Int Int::divexact(const Int& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !d.big_ && !(small_ == kMin && d.small_ == -1)) return Int(small_ / d.small_);
  Int r;
  r.assign_big(to_big() / d.to_big());
  return r;
}

Int Int::rem(const Int& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !d.big_) {
    if (d.small_ == -1) return Int(0);
    return Int(small_ % d.small_);
  }
  Int r;
  r.assign_big(to_big() % d.to_big());
  return r;
}

std::int64_t Int::mod(std::int64_t m) const {
  if (m <= 0) throw std::domain_error("modulus must be positive");
  if (!big_) {
    std::int64_t r = small_ % m;
    return r < 0 ? r + m : r;
  }
  BigInt r = *big_ % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

bool operator==(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  // Both are normalized: a big value never fits in int64.
  if (!a.big_ || !b.big_) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const BigInt x = a.to_big();
  const BigInt y = b.to_big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Int::to_string() const { return big_ ? big_->str() : std::to_string(small_); }

Int gcd(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small() && a.small() != kMin && b.small() != kMin) {
    return Int(std::gcd(a.small(), b.small()));
  }
  return Int(boost::multiprecision::gcd(a.to_big(), b.to_big()));
}

}  // namespace uqd
