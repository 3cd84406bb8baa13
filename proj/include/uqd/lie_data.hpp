#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uqd {

enum class CartanType { A1, A2 };

std::string_view to_string(CartanType t);
std::optional<CartanType> parse_cartan_type(std::string_view s);

inline constexpr int kMaxRank = 2;
inline constexpr int kMaxRoots = 3;

struct LieDatum {
  CartanType type;
  int rank;
  std::array<std::array<int, kMaxRank>, kMaxRank> cartan{};
  int positive_roots;
  int dim_g;

  int a(int i, int j) const { return cartan[i][j]; }
  long determinant() const;
};

LieDatum lie_datum(CartanType t);

/// One violated standing assumption on the order parameter n.
struct ParamViolation {
  std::string code;     // "n-too-small", "n-even", "gcd"
  std::string message;  // e.g. "gcd(n, det)=3"
};

/// Checks n >= 3, n odd and gcd(n, det(cartan)) = 1. The G2 clause
/// (3 does not divide n) is vacuous for the shipped types. Never throws.
std::vector<ParamViolation> validate_params(CartanType t, long n);

}  // namespace uqd
