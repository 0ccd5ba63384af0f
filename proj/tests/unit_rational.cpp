#include <doctest.h>

#include "symtau/rational.hpp"

#include <stdexcept>

using namespace symtau;

TEST_CASE("isqrt_floor on small and large values") {
  CHECK(isqrt_floor(BigInt(0)) == 0);
  CHECK(isqrt_floor(BigInt(1)) == 1);
  CHECK(isqrt_floor(BigInt(3)) == 1);
  CHECK(isqrt_floor(BigInt(4)) == 2);
  CHECK(isqrt_floor(BigInt(8)) == 2);
  CHECK(isqrt_floor(BigInt(9)) == 3);
  CHECK(isqrt_floor(BigInt(99)) == 9);
  CHECK(isqrt_floor(BigInt(100)) == 10);
  const BigInt big = BigInt("123456789123456789123456789");
  const BigInt root = isqrt_floor(big);
  CHECK(root * root <= big);
  CHECK((root + 1) * (root + 1) > big);
  CHECK_THROWS_AS(isqrt_floor(BigInt(-1)), std::invalid_argument);
}

TEST_CASE("exact_sqrt recognizes perfect squares only") {
  CHECK(exact_sqrt(BigInt(16)).value() == 4);
  CHECK(exact_sqrt(BigInt(0)).value() == 0);
  CHECK(exact_sqrt(BigInt(1)).value() == 1);
  CHECK(!exact_sqrt(BigInt(17)).has_value());
  CHECK(!exact_sqrt(BigInt(2)).has_value());
  for (long n = 2; n <= 40; ++n) {
    CHECK(exact_sqrt(BigInt(n) * BigInt(n)).value() == n);
    CHECK(!exact_sqrt(BigInt(n) * BigInt(n) + 1).has_value());
  }
}

TEST_CASE("is_integer") {
  CHECK(is_integer(Rational(4)));
  CHECK(is_integer(Rational(-7)));
  CHECK(is_integer(Rational(0)));
  CHECK(is_integer(Rational(8, 2)));
  CHECK(!is_integer(Rational(1, 2)));
  CHECK(!is_integer(Rational(-75, 2)));
}

TEST_CASE("rational_str canonical forms") {
  CHECK(rational_str(Rational(5)) == "5");
  CHECK(rational_str(Rational(-7, 3)) == "-7/3");
  CHECK(rational_str(Rational(0)) == "0");
  CHECK(rational_str(Rational(6, 4)) == "3/2");
  CHECK(rational_str(Rational(-8, 2)) == "-4");
}

TEST_CASE("parse_rational round-trips and rejects malformed text") {
  for (const char* text : {"5", "-7/3", "0", "3/2", "-4", "123456789123456789/8"}) {
    auto q = parse_rational(text);
    REQUIRE(q.has_value());
    CHECK(rational_str(*q) == text);
  }
  CHECK(parse_rational("1/2").value() == Rational(1, 2));
  CHECK(!parse_rational("").has_value());
  CHECK(!parse_rational("7/0").has_value());
  CHECK(!parse_rational("7/").has_value());
  CHECK(!parse_rational("/3").has_value());
  CHECK(!parse_rational("1.5").has_value());
  CHECK(!parse_rational("x").has_value());
  CHECK(!parse_rational("5x").has_value());
}
