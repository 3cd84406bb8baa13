#include "uqd/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uqd {

namespace {

// Quotient of a by a monic divisor; throws when the remainder is nonzero.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("divide_monic: degree too small");
  IntPoly q(a.size() - db, Int(0));
  for (std::size_t i = a.size(); i-- > db;) {
    const Int c = a[i];
    if (c.is_zero()) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (!a[i].is_zero()) throw std::logic_error("divide_monic: nonzero remainder");
  }
  return q;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::int64_t checked_small(const Int& v) {
  if (!v.is_small()) throw std::overflow_error("cyclotomic reduction coefficient exceeds int64");
  return v.small();
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("euler_phi(0)");
  std::uint32_t result = m;
  std::uint32_t x = m;
  for (std::uint32_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

IntPoly cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
  IntPoly num(m + 1, Int(0));
  num[0] = Int(-1);
  num[m] = Int(1);
  IntPoly den{Int(1)};
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d == 0) den = multiply(den, cyclotomic_polynomial(d));
  }
  return divide_monic(std::move(num), den);
}

const CycField& CycField::of(std::uint32_t m) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<CycField>> fields;
  std::lock_guard lock(mutex);
  auto& slot = fields[m];
  if (!slot) slot.reset(new CycField(m));
  return *slot;
}

CycField::CycField(std::uint32_t m) : order_(m), degree_(euler_phi(m)), modulus_(cyclotomic_polynomial(m)) {
  const std::uint32_t span = std::max(m, 2 * degree_);
  power_rows_.reserve(span);
  // Dense running remainder of x^j.
  std::vector<Int> cur(degree_, Int(0));
  cur[0] = Int(1);
  if (degree_ == 0) throw std::logic_error("degree zero field");
  for (std::uint32_t j = 0; j < span; ++j) {
    Row row;
    for (std::uint32_t i = 0; i < degree_; ++i) {
      if (!cur[i].is_zero()) row.emplace_back(i, checked_small(cur[i]));
    }
    power_rows_.push_back(std::move(row));
    // Multiply by x and fold x^degree = -sum_{i<degree} modulus[i] x^i.
    const Int top = cur[degree_ - 1];
    for (std::uint32_t i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = Int(0);
    if (!top.is_zero()) {
      for (std::uint32_t i = 0; i < degree_; ++i) cur[i] -= top * modulus_[i];
    }
  }
  for (std::uint32_t k = 1; k < m || (m == 1 && k == 1); ++k) {
    if (std::gcd(k, m) == 1) units_.push_back(k);
    if (m == 1) break;
  }
}

// ---------------------------------------------------------------------------

CycScalar CycScalar::rational(const CycField& f, const BigRational& r) {
  CycScalar s(f, r.num(), 0);
  s.den_ = r.den();
  s.normalize();
  return s;
}

CycScalar CycScalar::zeta_pow(const CycField& f, std::int64_t k) {
  const auto m = static_cast<std::int64_t>(f.order());
  std::int64_t e = k % m;
  if (e < 0) e += m;
  CycScalar s(f, Int(1), static_cast<std::uint32_t>(e));
  s.normalize();
  return s;
}

CycScalar CycScalar::monomial(const CycField& f, const BigRational& c, std::int64_t k) {
  CycScalar s = zeta_pow(f, k);
  s.unit_ *= c.num();
  s.den_ = c.den();
  s.normalize();
  return s;
}

CycScalar CycScalar::from_coeffs(const CycField& f, const std::vector<BigRational>& coeffs) {
  if (coeffs.size() != f.degree()) throw std::invalid_argument("from_coeffs: wrong length");
  Int den(1);
  for (const auto& c : coeffs) den = (den * c.den()).divexact(gcd(den, c.den()));
  std::vector<Int> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.push_back(c.num() * den.divexact(c.den()));
  CycScalar s(f);
  s.set_dense(std::move(num), std::move(den));
  return s;
}

void CycScalar::check_same_field(const CycScalar& o) const {
  if (field_ != o.field_) {
    throw std::invalid_argument("CycScalar: mixing orders " + std::to_string(order()) + " and " +
                                std::to_string(o.order()));
  }
}

void CycScalar::set_dense(std::vector<Int> num, Int den) {
  num_ = std::move(num);
  den_ = std::move(den);
  unit_ = Int(0);
  exp_ = 0;
  normalize();
}

void CycScalar::normalize() {
  if (!num_.empty()) {
    Int g = den_;
    std::size_t nonzero = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i].is_zero()) continue;
      ++nonzero;
      last = i;
      if (!g.is_one()) g = gcd(g, num_[i]);
    }
    if (nonzero == 0) {
      num_.clear();
      den_ = Int(1);
      unit_ = Int(0);
      exp_ = 0;
      return;
    }
    if (den_.sign() < 0) g = -g;
    if (!g.is_one()) {
      for (auto& c : num_) {
        if (!c.is_zero()) c = c.divexact(g);
      }
      den_ = den_.divexact(g);
    }
    if (nonzero == 1) {
      unit_ = std::move(num_[last]);
      exp_ = static_cast<std::uint32_t>(last);
      num_.clear();
    } else {
      return;
    }
  }
  if (unit_.is_zero()) {
    den_ = Int(1);
    exp_ = 0;
    return;
  }
  if (den_.sign() < 0) {
    den_ = -den_;
    unit_ = -unit_;
  }
  if (!den_.is_one()) {
    const Int g = gcd(unit_, den_);
    if (!g.is_one()) {
      unit_ = unit_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  const std::uint32_t m = field_->order();
  if (m % 2 == 0 && exp_ >= m / 2) {
    exp_ -= m / 2;
    unit_ = -unit_;
  }
}

std::vector<Int> CycScalar::dense_numerators() const {
  if (!num_.empty()) return num_;
  std::vector<Int> out(field_->degree(), Int(0));
  if (unit_.is_zero()) return out;
  for (const auto& [i, c] : field_->power_row(exp_)) out[i] = unit_ * Int(c);
  return out;
}

std::vector<BigRational> CycScalar::coeffs() const {
  std::vector<BigRational> out;
  out.reserve(field_->degree());
  for (auto& c : dense_numerators()) out.emplace_back(c, den_);
  return out;
}

std::optional<std::uint32_t> CycScalar::root_of_unity_exponent() const {
  const std::uint32_t m = field_->order();
  if (num_.empty()) {
    if (unit_.is_zero() || !den_.is_one()) return std::nullopt;
    if (unit_.is_one()) return exp_;
    if (unit_ == Int(-1) && m % 2 == 0) return exp_ + m / 2;
    return std::nullopt;
  }
  if (!den_.is_one()) return std::nullopt;
  for (std::uint32_t k = 0; k < m; ++k) {
    const auto& row = field_->power_row(k);
    std::size_t nonzero = 0;
    bool match = true;
    for (const auto& [i, c] : row) {
      if (!(num_[i] == Int(c))) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    for (const auto& c : num_) nonzero += !c.is_zero();
    if (nonzero == row.size()) return k;
  }
  return std::nullopt;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  if (!r.num_.empty()) {
    for (auto& c : r.num_) c = -c;
  } else {
    r.unit_ = -r.unit_;
  }
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  check_same_field(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (num_.empty() && o.num_.empty() && exp_ == o.exp_) {
    if (den_ == o.den_) {
      unit_ += o.unit_;
    } else {
      unit_ = unit_ * o.den_ + o.unit_ * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  std::vector<Int> a = dense_numerators();
  const std::vector<Int> b = o.dense_numerators();
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    set_dense(std::move(a), den_);
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] * o.den_ + b[i] * den_;
    set_dense(std::move(a), den_ * o.den_);
  }
  return *this;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  a.check_same_field(b);
  const CycField& f = *a.field_;
  if (a.is_zero() || b.is_zero()) return CycScalar::zero(f);
  if (a.num_.empty() && b.num_.empty()) {
    CycScalar r(f, a.unit_ * b.unit_, (a.exp_ + b.exp_) % f.order());
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  std::vector<Int> out(f.degree(), Int(0));
  auto accumulate = [&](std::uint32_t power, const Int& c) {
    for (const auto& [i, k] : f.power_row(power)) out[i] += c * Int(k);
  };
  if (a.num_.empty() || b.num_.empty()) {
    const CycScalar& u = a.num_.empty() ? a : b;
    const CycScalar& d = a.num_.empty() ? b : a;
    for (std::uint32_t i = 0; i < d.num_.size(); ++i) {
      if (d.num_[i].is_zero()) continue;
      const std::uint32_t p = (i + u.exp_) % f.order();
      if (p < f.degree()) {
        out[p] += d.num_[i] * u.unit_;
      } else {
        accumulate(p, d.num_[i] * u.unit_);
      }
    }
  } else {
    const std::uint32_t n = f.degree();
    std::vector<Int> conv(2 * n - 1, Int(0));
    for (std::uint32_t i = 0; i < n; ++i) {
      if (a.num_[i].is_zero()) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        if (!b.num_[j].is_zero()) conv[i + j] += a.num_[i] * b.num_[j];
      }
    }
    for (std::uint32_t i = 0; i < conv.size(); ++i) {
      if (conv[i].is_zero()) continue;
      if (i < n) {
        out[i] += conv[i];
      } else {
        accumulate(i, conv[i]);
      }
    }
  }
  CycScalar r(f);
  r.set_dense(std::move(out), a.den_ * b.den_);
  return r;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) { return *this = *this * o; }

CycScalar CycScalar::galois(std::uint32_t k) const {
  const CycField& f = *field_;
  const std::uint32_t m = f.order();
  if (std::gcd(k % m, m) != 1 && m != 1) throw std::invalid_argument("galois: exponent not a unit");
  if (num_.empty()) {
    CycScalar r(f, unit_, static_cast<std::uint32_t>((static_cast<std::uint64_t>(exp_) * k) % m));
    r.den_ = den_;
    r.normalize();
    return r;
  }
  std::vector<Int> out(f.degree(), Int(0));
  for (std::uint32_t i = 0; i < num_.size(); ++i) {
    if (num_[i].is_zero()) continue;
    const auto p = static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) * k) % m);
    for (const auto& [j, c] : f.power_row(p)) out[j] += num_[i] * Int(c);
  }
  CycScalar r(f);
  r.set_dense(std::move(out), den_);
  return r;
}

std::optional<CycScalar> CycScalar::try_inverse() const {
  const CycField& f = *field_;
  if (is_zero()) return std::nullopt;
  if (num_.empty()) {
    CycScalar r(f, den_, (f.order() - exp_) % f.order());
    r.den_ = unit_;
    r.normalize();
    return r;
  }
  // a^-1 = prod_{sigma != 1} sigma(a) / N(a), with N(a) rational.
  CycScalar conj = CycScalar::one(f);
  for (std::uint32_t k : f.units()) {
    if (k != 1) conj *= galois(k);
  }
  const CycScalar norm = *this * conj;
  if (!norm.num_.empty() || norm.exp_ != 0) throw std::logic_error("field norm is not rational");
  return conj * CycScalar::rational(f, BigRational(norm.den_, norm.unit_));
}

CycScalar CycScalar::inverse() const {
  auto r = try_inverse();
  if (!r) throw std::domain_error("inverse of zero cyclotomic scalar");
  return *std::move(r);
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.num_.empty() && b.num_.empty()) return a.unit_ == b.unit_ && a.exp_ == b.exp_ && a.den_ == b.den_;
  if (!(a.den_ == b.den_)) return false;
  return a.dense_numerators() == b.dense_numerators();
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  auto term = [&](const Int& c, std::uint32_t power, bool first) {
    BigRational r(c, den_);
    std::string s = r.to_string();
    if (!first) os << (s[0] == '-' ? " - " : " + ");
    if (!first && s[0] == '-') s.erase(0, 1);
    if (power == 0) {
      os << s;
    } else {
      if (s == "1") {
        s.clear();
      } else if (s == "-1") {
        s = "-";
      } else {
        s += "*";
      }
      os << s << "z^" << power;
    }
  };
  if (num_.empty()) {
    term(unit_, exp_, true);
  } else {
    bool first = true;
    for (std::uint32_t i = 0; i < num_.size(); ++i) {
      if (num_[i].is_zero()) continue;
      term(num_[i], i, first);
      first = false;
    }
  }
  return os.str();
}

}  // namespace uqd
