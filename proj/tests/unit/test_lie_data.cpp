#include <doctest.h>

#include "uqd/lie_data.hpp"

using namespace uqd;

TEST_CASE("lie data tables") {
  const LieDatum a1 = lie_datum(CartanType::A1);
  CHECK(a1.rank == 1);
  CHECK(a1.a(0, 0) == 2);
  CHECK(a1.positive_roots == 1);
  CHECK(a1.dim_g == 3);
  CHECK(a1.determinant() == 2);
  const LieDatum a2 = lie_datum(CartanType::A2);
  CHECK(a2.rank == 2);
  CHECK(a2.a(0, 1) == -1);
  CHECK(a2.dim_g == 8);
  CHECK(a2.determinant() == 3);
  for (auto t : {CartanType::A1, CartanType::A2}) {
    const LieDatum d = lie_datum(t);
    CHECK(d.dim_g == d.rank + 2 * d.positive_roots);
    for (int i = 0; i < d.rank; ++i) CHECK(d.a(i, i) == 2);
  }
}

TEST_CASE("parameter validation") {
  CHECK(validate_params(CartanType::A1, 3).empty());
  CHECK(validate_params(CartanType::A1, 5).empty());
  CHECK(validate_params(CartanType::A2, 5).empty());
  auto v = validate_params(CartanType::A1, 4);
  REQUIRE(v.size() == 2);
  CHECK(v[0].code == "n-even");
  CHECK(v[1].message == "gcd(n, det)=2");
  v = validate_params(CartanType::A2, 3);
  REQUIRE(v.size() == 1);
  CHECK(v[0].message == "gcd(n, det)=3");
  v = validate_params(CartanType::A1, 2);
  CHECK(v.size() == 3);
  // Adding a failing condition never drops another one.
  CHECK(validate_params(CartanType::A2, 6).size() >= validate_params(CartanType::A2, 3).size());
  CHECK(parse_cartan_type("A2") == CartanType::A2);
  CHECK_FALSE(parse_cartan_type("B2").has_value());
}
