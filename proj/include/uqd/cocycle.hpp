#pragma once

#include "uqd/integer.hpp"
#include "uqd/twist.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uqd {

/// Map (Z/n)^degree -> Z/n, arguments packed little-endian in base n.
class AdditiveCochain {
 public:
  AdditiveCochain(int degree, int n);

  int degree() const { return degree_; }
  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  int at(const std::vector<int>& args) const { return values_[index(args)]; }
  void set(const std::vector<int>& args, long v);
  int value(std::size_t flat) const { return values_[flat]; }
  void set_value(std::size_t flat, long v);
  std::size_t index(const std::vector<int>& args) const;
  std::vector<int> arguments(std::size_t flat) const;
  bool is_zero() const;
  friend bool operator==(const AdditiveCochain&, const AdditiveCochain&) = default;

 private:
  int degree_;
  int n_;
  std::vector<int> values_;
};

/// omega(b, c, d) = (q^n-exponent of Phi at b e_i ⊗ c e_i ⊗ d e_i) mod n.
/// Throws std::domain_error if a coefficient is not a power of q^n.
AdditiveCochain restrict_phi(const Associator& phi, int coordinate);

/// Coboundary with trivial coefficients:
/// (d mu)(a,b,c) = mu(b,c) - mu(a+b,c) + mu(a,b+c) - mu(a,b), and the
/// analogous alternating sum in degree 3.
AdditiveCochain coboundary(const AdditiveCochain& mu);

/// First argument tuple where d(omega) != 0, if any.
std::optional<std::vector<int>> cocycle_violation(const AdditiveCochain& omega);

using IntMatrix = std::vector<std::vector<Int>>;

struct SmithForm {
  IntMatrix left;   // unimodular, rows x rows
  IntMatrix right;  // unimodular, cols x cols
  std::vector<Int> diagonal;  // min(rows, cols) invariant factors, d_i | d_{i+1}
};

SmithForm smith_normal_form(const IntMatrix& m);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant by fraction-free elimination.
Int determinant(IntMatrix m);

/// Matrix of mu -> d mu from 2-cochains to 3-cochains over Z.
IntMatrix coboundary_matrix(int n);

struct CoboundaryVerdict {
  bool trivial = false;
  std::optional<AdditiveCochain> witness;  // d(witness) = omega when trivial
  std::string obstruction;                 // when nontrivial
};

/// Solves d mu = omega over Z/n through the Smith form of the coboundary matrix.
CoboundaryVerdict is_coboundary(const AdditiveCochain& omega);

/// Exhaustive search over all n^(n^2) 2-cochains (n = 3 only in practice).
bool brute_force_is_coboundary(const AdditiveCochain& omega);

}  // namespace uqd
