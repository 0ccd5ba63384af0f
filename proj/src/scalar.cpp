#include "symtau/scalar.hpp"

#include <stdexcept>

namespace symtau {

Scalar::Scalar(Rational rational_part, Rational root_part, long radicand)
    : a_(std::move(rational_part)), b_(std::move(root_part)), r_(radicand) {
  if (r_ < 2) throw std::invalid_argument("Scalar: radicand must be >= 2");
  if (auto root = exact_sqrt(BigInt(r_))) {
    // sqrt(r) is rational: fold it away so equal values compare equal.
    a_ += b_ * Rational(*root);
    b_ = 0;
  }
}

Scalar Scalar::of(Rational rational_part, long radicand) {
  return Scalar(std::move(rational_part), Rational(0), radicand);
}

Scalar Scalar::root(long radicand) { return Scalar(Rational(0), Rational(1), radicand); }

int Scalar::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(r) decided by squaring.  Equality is
  // impossible here: r is not a perfect square after normalization, so
  // a^2 == b^2 * r has no rational solution with a, b != 0.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(r_);
  int c = lhs.compare(rhs);
  return sa > 0 ? c : -c;
}

int Scalar::cmp(const Scalar& rhs) const {
  if (r_ != rhs.r_)
    throw std::invalid_argument("Scalar: comparing values over different radicands");
  return Scalar(a_ - rhs.a_, b_ - rhs.b_, r_).sign();
}

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, r_); }

namespace {
void require_same_radicand(const Scalar& x, const Scalar& y) {
  if (x.radicand() != y.radicand())
    throw std::invalid_argument("Scalar: mixing values over different radicands");
}
}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_same_radicand(x, y);
  return Scalar(x.a_ + y.a_, x.b_ + y.b_, x.r_);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  require_same_radicand(x, y);
  return Scalar(x.a_ - y.a_, x.b_ - y.b_, x.r_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same_radicand(x, y);
  // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 r + (a1 b2 + b1 a2) s,  s = sqrt(r)
  return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * x.r_, x.a_ * y.b_ + x.b_ * y.a_, x.r_);
}

namespace {

// |coeff|*sqrt(r) with the multiplication sign elided for coeff == 1.
std::string root_term(const Rational& coeff_abs, long radicand) {
  std::string root = "sqrt(" + std::to_string(radicand) + ")";
  if (coeff_abs == 1) return root;
  if (is_integer(coeff_abs)) return rational_str(coeff_abs) + "*" + root;
  return "(" + rational_str(coeff_abs) + ")*" + root;
}

}  // namespace

std::string Scalar::str() const {
  if (b_ == 0) return rational_str(a_);
  std::string root = root_term(boost::multiprecision::abs(b_), r_);
  if (a_ == 0) return b_ < 0 ? "-" + root : root;
  return rational_str(a_) + (b_ < 0 ? " - " : " + ") + root;
}

namespace {

// One additive term: either a plain rational or [coeff*]sqrt(N), where coeff
// may be parenthesized.  `negate` applies an already-consumed leading sign.
struct Term {
  Rational rational{0};
  Rational root_coeff{0};
  long radicand = 0;  // 0 when the term has no root factor
};

std::optional<Term> parse_term(std::string_view text, bool negate) {
  Term out;
  if (text.empty()) return std::nullopt;

  auto parse_root = [&](std::string_view t) -> bool {
    if (!t.starts_with("sqrt(") || !t.ends_with(")")) return false;
    auto inner = t.substr(5, t.size() - 6);
    auto n = parse_rational(inner);
    if (!n || !is_integer(*n) || *n < 2) return false;
    out.radicand = static_cast<long>(boost::multiprecision::numerator(*n).convert_to<long long>());
    return true;
  };

  if (auto star = text.find("*sqrt("); star != std::string_view::npos) {
    std::string_view coeff_text = text.substr(0, star);
    if (coeff_text.size() >= 2 && coeff_text.front() == '(' && coeff_text.back() == ')')
      coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
    auto coeff = parse_rational(coeff_text);
    if (!coeff || !parse_root(text.substr(star + 1))) return std::nullopt;
    out.root_coeff = negate ? -*coeff : *coeff;
    return out;
  }
  if (text.starts_with("sqrt(")) {
    if (!parse_root(text)) return std::nullopt;
    out.root_coeff = negate ? -1 : 1;
    return out;
  }
  auto q = parse_rational(text);
  if (!q) return std::nullopt;
  out.rational = negate ? -*q : *q;
  return out;
}

}  // namespace

std::optional<Scalar> Scalar::parse(std::string_view text, long radicand) {
  // Grammar: term | term ' + ' term | term ' - ' term, at most one root term.
  // A leading '-' binds to the first term.
  bool lead_negate = false;
  if (text.starts_with('-') && !text.starts_with("- ")) {
    lead_negate = true;
    text.remove_prefix(1);
  }

  std::size_t split = std::string_view::npos;
  bool second_negate = false;
  for (std::size_t i = 0; i + 2 < text.size(); ++i) {
    if (text[i] == ' ' && (text[i + 1] == '+' || text[i + 1] == '-') && text[i + 2] == ' ') {
      split = i;
      second_negate = text[i + 1] == '-';
      break;
    }
  }

  Rational a = 0, b = 0;
  auto absorb = [&](const Term& t) -> bool {
    if (t.radicand != 0) {
      if (t.radicand != radicand || b != 0) return false;
      b = t.root_coeff;
    } else {
      a = t.rational;
    }
    return true;
  };

  auto first = parse_term(split == std::string_view::npos ? text : text.substr(0, split),
                          lead_negate);
  if (!first || !absorb(*first)) return std::nullopt;
  if (split != std::string_view::npos) {
    auto second = parse_term(text.substr(split + 3), second_negate);
    // Two-term form is always "rational +/- root": reject duplicate kinds.
    if (!second || second->radicand == 0 || !absorb(*second)) return std::nullopt;
  }
  return Scalar(std::move(a), std::move(b), radicand);
}

}  // namespace symtau
