#include "symtau/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace symtau {

BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: negative input");
  return boost::multiprecision::sqrt(n);  // integer sqrt, rounds down
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

std::string rational_str(const Rational& q) {
  std::string s = boost::multiprecision::numerator(q).str();
  if (!is_integer(q)) {
    s += '/';
    s += boost::multiprecision::denominator(q).str();
  }
  return s;
}

namespace {

// Consumes an optionally signed decimal integer; advances pos past it.
std::optional<BigInt> eat_integer(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) return std::nullopt;
  return BigInt(std::string(text.substr(start, pos - start)));
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto num = eat_integer(text, pos);
  if (!num) return std::nullopt;
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    auto d = eat_integer(text, pos);
    if (!d || *d == 0) return std::nullopt;
    den = *d;
  }
  if (pos != text.size()) return std::nullopt;
  return Rational(*num, den);
}

}  // namespace symtau
