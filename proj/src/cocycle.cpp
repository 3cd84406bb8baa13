#include "uqd/cocycle.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace uqd {

namespace {

long mod(long v, long m) {
  const long r = v % m;
  return r < 0 ? r + m : r;
}

// Truncated quotient.
Int quotient(const Int& a, const Int& b) { return (a - a.rem(b)).divexact(b); }

IntMatrix identity(std::size_t k) {
  IntMatrix m(k, std::vector<Int>(k, Int(0)));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = Int(1);
  return m;
}

// Modular inverse of a unit a modulo m.
long inverse_mod(long a, long m) {
  long t = 0, nt = 1, r = m, nr = mod(a, m);
  while (nr != 0) {
    const long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw std::logic_error("not invertible modulo m");
  return mod(t, m);
}

}  // namespace

AdditiveCochain::AdditiveCochain(int degree, int n) : degree_(degree), n_(n) {
  std::size_t s = 1;
  for (int i = 0; i < degree; ++i) s *= static_cast<std::size_t>(n);
  values_.assign(s, 0);
}

std::size_t AdditiveCochain::index(const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != degree_) throw std::invalid_argument("cochain arity mismatch");
  std::size_t k = 0;
  for (int i = degree_; i-- > 0;) k = k * static_cast<std::size_t>(n_) + static_cast<std::size_t>(mod(args[i], n_));
  return k;
}

std::vector<int> AdditiveCochain::arguments(std::size_t flat) const {
  std::vector<int> a(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    a[i] = static_cast<int>(flat % static_cast<std::size_t>(n_));
    flat /= static_cast<std::size_t>(n_);
  }
  return a;
}

void AdditiveCochain::set(const std::vector<int>& args, long v) { values_[index(args)] = static_cast<int>(mod(v, n_)); }
void AdditiveCochain::set_value(std::size_t flat, long v) { values_[flat] = static_cast<int>(mod(v, n_)); }

bool AdditiveCochain::is_zero() const {
  for (int v : values_) {
    if (v != 0) return false;
  }
  return true;
}

AdditiveCochain restrict_phi(const Associator& phi, int coordinate) {
  const LabelGroup& g = phi.value.group();
  if (coordinate < 0 || coordinate >= g.dims()) throw std::invalid_argument("coordinate out of range");
  const int n = static_cast<int>(g.modulus());
  AdditiveCochain w(3, n);
  for (std::size_t flat = 0; flat < w.size(); ++flat) {
    const auto args = w.arguments(flat);
    PhaseTensor::Index idx{};
    for (int s = 0; s < 3; ++s) {
      std::array<long, kMaxLabelDims> d{};
      d[coordinate] = args[s];
      idx[s] = g.make(d);
    }
    const std::uint32_t e = phi.value.exponent(idx);
    if (e % static_cast<std::uint32_t>(n) != 0) {
      throw std::domain_error("associator coefficient is not a power of q^n");
    }
    w.set_value(flat, static_cast<long>(e) / n);
  }
  return w;
}

AdditiveCochain coboundary(const AdditiveCochain& mu) {
  const int k = mu.degree();
  const int n = mu.n();
  AdditiveCochain out(k + 1, n);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const auto a = out.arguments(flat);
    long v = 0;
    // face 0 drops the first argument; face k+1 drops the last; inner faces add neighbours
    std::vector<int> args(a.begin() + 1, a.end());
    v += mu.at(args);
    for (int i = 0; i < k; ++i) {
      std::vector<int> merged;
      for (int j = 0; j <= k; ++j) {
        if (j == i) {
          merged.push_back((a[j] + a[j + 1]) % n);
          ++j;
        } else {
          merged.push_back(a[j]);
        }
      }
      v += ((i + 1) % 2 == 0 ? 1 : -1) * mu.at(merged);
    }
    args.assign(a.begin(), a.end() - 1);
    v += ((k + 1) % 2 == 0 ? 1 : -1) * mu.at(args);
    out.set_value(flat, v);
  }
  return out;
}

std::optional<std::vector<int>> cocycle_violation(const AdditiveCochain& omega) {
  const AdditiveCochain d = coboundary(omega);
  for (std::size_t flat = 0; flat < d.size(); ++flat) {
    if (d.value(flat) != 0) return d.arguments(flat);
  }
  return std::nullopt;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IntMatrix out(r, std::vector<Int>(c, Int(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j) {
        if (!b[t][j].is_zero()) out[i][j] += a[i][t] * b[t][j];
      }
    }
  }
  return out;
}

Int determinant(IntMatrix m) {
  const std::size_t k = m.size();
  if (k == 0) return Int(1);
  Int sign(1), prev(1);
  for (std::size_t p = 0; p < k; ++p) {
    if (m[p][p].is_zero()) {
      std::size_t s = p + 1;
      while (s < k && m[s][p].is_zero()) ++s;
      if (s == k) return Int(0);
      std::swap(m[p], m[s]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]).divexact(prev);
      m[i][p] = Int(0);
    }
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithForm s{identity(rows), identity(cols), {}};
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(s.left[i], s.left[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : s.right) std::swap(r[i], r[j]);
  };
  // row_i -= f * row_j
  auto row_op = [&](std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= f * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) s.left[i][c] -= f * s.left[j][c];
  };
  auto col_op = [&](std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] -= f * a[r][j];
    for (std::size_t r = 0; r < cols; ++r) s.right[r][i] -= f * s.right[r][j];
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (!a[i][j].is_zero() && (pi == rows || a[i][j].abs() < a[pi][pj].abs())) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        row_op(i, t, quotient(a[i][t], a[t][t]));
        if (!a[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        col_op(j, t, quotient(a[t][j], a[t][t]));
        if (!a[t][j].is_zero()) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold a row holding a non-multiple into row t
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!a[i][j].rem(a[t][t]).is_zero()) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      row_op(t, bad, Int(-1));
    }
    if (a[t][t].sign() < 0) {
      for (std::size_t c = 0; c < cols; ++c) a[t][c] = -a[t][c];
      for (std::size_t c = 0; c < rows; ++c) s.left[t][c] = -s.left[t][c];
    }
  }
  for (std::size_t t = 0; t < diag; ++t) s.diagonal.push_back(a[t][t]);
  return s;
}

IntMatrix coboundary_matrix(int n) {
  AdditiveCochain mu(2, n);
  AdditiveCochain om(3, n);
  IntMatrix m(om.size(), std::vector<Int>(mu.size(), Int(0)));
  for (std::size_t row = 0; row < om.size(); ++row) {
    const auto x = om.arguments(row);
    const int a = x[0], b = x[1], c = x[2];
    m[row][mu.index({b, c})] += Int(1);
    m[row][mu.index({(a + b) % n, c})] -= Int(1);
    m[row][mu.index({a, (b + c) % n})] += Int(1);
    m[row][mu.index({a, b})] -= Int(1);
  }
  return m;
}

CoboundaryVerdict is_coboundary(const AdditiveCochain& omega) {
  if (omega.degree() != 3) throw std::invalid_argument("is_coboundary expects a 3-cochain");
  const int n = omega.n();
  const IntMatrix m = coboundary_matrix(n);
  const SmithForm s = smith_normal_form(m);
  // L M R = D, so M x = w (mod n) iff D y = L w with x = R y.
  std::vector<Int> lw(m.size(), Int(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!s.left[i][j].is_zero() && omega.value(j) != 0) lw[i] += s.left[i][j] * Int(omega.value(j));
    }
  }
  const std::size_t cols = m[0].size();
  std::vector<long> y(cols, 0);
  CoboundaryVerdict v;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const long w = lw[i].mod(n);
    const long d = i < s.diagonal.size() ? s.diagonal[i].mod(n) : 0;
    const long g = std::gcd(d, static_cast<long>(n));
    if (w % g != 0) {
      v.obstruction = "row " + std::to_string(i) + ": " + s.diagonal[std::min(i, s.diagonal.size() - 1)].to_string() +
                      " * y = " + std::to_string(w) + " has no solution mod " + std::to_string(n);
      if (i >= s.diagonal.size()) v.obstruction = "row " + std::to_string(i) + ": 0 = " + std::to_string(w) + " mod " + std::to_string(n);
      return v;
    }
    if (i < cols && d != 0) {
      const long nn = n / g;
      y[i] = nn == 1 ? 0 : mod((w / g) * inverse_mod(d / g, nn), nn);
    }
  }
  AdditiveCochain mu(2, n);
  for (std::size_t r = 0; r < cols; ++r) {
    Int x(0);
    for (std::size_t c = 0; c < cols; ++c) {
      if (y[c] != 0) x += s.right[r][c] * Int(y[c]);
    }
    mu.set_value(r, x.mod(n));
  }
  if (!(coboundary(mu) == omega)) throw std::logic_error("coboundary solver produced a wrong witness");
  v.trivial = true;
  v.witness = mu;
  return v;
}

bool brute_force_is_coboundary(const AdditiveCochain& omega) {
  const int n = omega.n();
  AdditiveCochain mu(2, n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < mu.size(); ++i) total *= static_cast<std::size_t>(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      mu.set_value(i, static_cast<long>(c % static_cast<std::size_t>(n)));
      c /= static_cast<std::size_t>(n);
    }
    if (coboundary(mu) == omega) return true;
  }
  return false;
}

}  // namespace uqd
