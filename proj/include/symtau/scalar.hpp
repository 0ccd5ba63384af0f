#pragma once

#include "symtau/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace symtau {

// Exact element a + b*sqrt(r) of the real quadratic extension Q(sqrt(r)).
//
// The radicand r is a fixed integer >= 2 attached to each value (in this
// library it is always the curve genus).  When r is a perfect square the root
// part is folded into the rational part at construction, so representation —
// and therefore operator== — is canonical.  All comparisons are exact: no
// floating point is involved anywhere.
class Scalar {
 public:
  Scalar(Rational rational_part, Rational root_part, long radicand);

  // a + 0*sqrt(r)
  static Scalar of(Rational rational_part, long radicand);
  static Scalar of(long value, long radicand) { return of(Rational(value), radicand); }
  // 0 + 1*sqrt(r)
  static Scalar root(long radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& root_part() const { return b_; }
  long radicand() const { return r_; }
  bool is_rational() const { return b_ == 0; }

  // Sign of the real value: -1, 0, or +1.  Decided by case analysis on the
  // term signs, squaring to break ties; exact for every input.
  int sign() const;

  // Three-way comparison with exact semantics; throws std::invalid_argument
  // when the radicands differ (mixing extensions has no defined order here).
  int cmp(const Scalar& rhs) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.cmp(y) == 0; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return x.cmp(y) != 0; }
  friend bool operator<(const Scalar& x, const Scalar& y) { return x.cmp(y) < 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return x.cmp(y) <= 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return x.cmp(y) > 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return x.cmp(y) >= 0; }

  // Text form: "p/q", "sqrt(r)", "(p/q)*sqrt(r)", "p/q + (s/t)*sqrt(r)", with
  // integral coefficients printed without the denominator.  str/parse
  // round-trip exactly.
  std::string str() const;
  static std::optional<Scalar> parse(std::string_view text, long radicand);

 private:
  Rational a_;
  Rational b_;
  long r_;
};

}  // namespace symtau
