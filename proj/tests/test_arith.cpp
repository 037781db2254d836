#include <doctest.h>

#include "cyclic/arith.hpp"

using namespace cyclic;

TEST_CASE("mod is non-negative") {
  CHECK(mod(-1, 5) == 4);
  CHECK(mod(7, 5) == 2);
  CHECK(mod(0, 1) == 0);
}

TEST_CASE("inverse_mod") {
  CHECK(inverse_mod(3, 8) == 3);
  CHECK(inverse_mod(2, 5) == 3);
  CHECK_FALSE(inverse_mod(2, 4).has_value());
  CHECK(inverse_mod(5, 1) == 0);
}

TEST_CASE("divisors, units, totient") {
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
  CHECK(units(8) == std::vector<int>{1, 3, 5, 7});
  CHECK(units(1) == std::vector<int>{0});
  for (int d = 1; d <= 30; ++d) CHECK(euler_phi(d) == static_cast<int>(d == 1 ? 1 : units(d).size()));
}

TEST_CASE("additive order and discrete log") {
  CHECK(additive_order(2, 8) == 4);
  CHECK(additive_order(0, 8) == 1);
  CHECK(discrete_log_additive(2, 6, 8) == 3);
  CHECK_FALSE(discrete_log_additive(2, 3, 8).has_value());
  for (int n = 1; n <= 12; ++n)
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x) {
        const auto y = discrete_log_additive(a, mod(std::int64_t{a} * x, n), n);
        REQUIRE(y.has_value());
        CHECK(mod(std::int64_t{a} * *y, n) == mod(std::int64_t{a} * x, n));
      }
}
