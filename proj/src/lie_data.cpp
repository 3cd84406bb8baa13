#include "uqd/lie_data.hpp"

#include <numeric>

namespace uqd {

std::string_view to_string(CartanType t) {
  switch (t) {
    case CartanType::A1: return "A1";
    case CartanType::A2: return "A2";
  }
  return "?";
}

std::optional<CartanType> parse_cartan_type(std::string_view s) {
  if (s == "A1") return CartanType::A1;
  if (s == "A2") return CartanType::A2;
  return std::nullopt;
}

long LieDatum::determinant() const {
  if (rank == 1) return cartan[0][0];
  return static_cast<long>(cartan[0][0]) * cartan[1][1] - static_cast<long>(cartan[0][1]) * cartan[1][0];
}

LieDatum lie_datum(CartanType t) {
  switch (t) {
    case CartanType::A1: {
      LieDatum d{t, 1, {}, 1, 3};
      d.cartan[0][0] = 2;
      return d;
    }
    case CartanType::A2: {
      LieDatum d{t, 2, {}, 3, 8};
      d.cartan = {{{2, -1}, {-1, 2}}};
      return d;
    }
  }
  return {};
}

std::vector<ParamViolation> validate_params(CartanType t, long n) {
  std::vector<ParamViolation> out;
  const long det = lie_datum(t).determinant();
  if (n < 3) out.push_back({"n-too-small", "n=" + std::to_string(n) + " is below 3"});
  if (n % 2 == 0) out.push_back({"n-even", "n=" + std::to_string(n) + " is even"});
  const long g = std::gcd(n, det);
  if (g != 1) out.push_back({"gcd", "gcd(n, det)=" + std::to_string(g)});
  return out;
}

}  // namespace uqd
