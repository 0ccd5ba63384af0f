#include "symtau/linexpr.hpp"

#include <stdexcept>
#include <vector>

namespace symtau {

LinExpr LinExpr::genus(Rational coeff) {
  LinExpr e;
  e.cg_ = std::move(coeff);
  return e;
}

LinExpr LinExpr::var(std::string name, Rational coeff) {
  LinExpr e;
  if (coeff != 0) e.vars_.emplace(std::move(name), std::move(coeff));
  return e;
}

void LinExpr::prune(const std::string& name) {
  auto it = vars_.find(name);
  if (it != vars_.end() && it->second == 0) vars_.erase(it);
}

LinExpr& LinExpr::operator+=(const LinExpr& rhs) {
  c0_ += rhs.c0_;
  cg_ += rhs.cg_;
  for (const auto& [name, coeff] : rhs.vars_) {
    vars_[name] += coeff;
    prune(name);
  }
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& rhs) {
  c0_ -= rhs.c0_;
  cg_ -= rhs.cg_;
  for (const auto& [name, coeff] : rhs.vars_) {
    vars_[name] -= coeff;
    prune(name);
  }
  return *this;
}

LinExpr& LinExpr::operator*=(const Rational& k) {
  if (k == 0) {
    *this = LinExpr();
    return *this;
  }
  c0_ *= k;
  cg_ *= k;
  for (auto& [name, coeff] : vars_) coeff *= k;
  return *this;
}

LinExpr LinExpr::with_genus(const Rational& g) const {
  LinExpr e = *this;
  e.c0_ += e.cg_ * g;
  e.cg_ = 0;
  return e;
}

LinExpr LinExpr::with_var(const std::string& name, const Rational& value) const {
  LinExpr e = *this;
  auto it = e.vars_.find(name);
  if (it != e.vars_.end()) {
    e.c0_ += it->second * value;
    e.vars_.erase(it);
  }
  return e;
}

Rational LinExpr::eval(const Rational& g,
                       const std::map<std::string, Rational>& assignment) const {
  Rational out = c0_ + cg_ * g;
  for (const auto& [name, coeff] : vars_) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw std::invalid_argument("LinExpr::eval: no value for variable " + name);
    out += coeff * it->second;
  }
  return out;
}

std::pair<Rational, Rational> LinExpr::range(
    const Rational& g, const std::map<std::string, std::pair<long, long>>& boxes) const {
  Rational lo = c0_ + cg_ * g;
  Rational hi = lo;
  for (const auto& [name, coeff] : vars_) {
    auto it = boxes.find(name);
    if (it == boxes.end())
      throw std::invalid_argument("LinExpr::range: no box for variable " + name);
    const auto& [blo, bhi] = it->second;
    if (blo > bhi) throw std::invalid_argument("LinExpr::range: empty box for " + name);
    if (coeff > 0) {
      lo += coeff * blo;
      hi += coeff * bhi;
    } else {
      lo += coeff * bhi;
      hi += coeff * blo;
    }
  }
  return {lo, hi};
}

std::string LinExpr::str() const {
  // Collect terms in print order, then factor out the common denominator.
  struct Piece {
    BigInt coeff;  // integer after scaling
    std::string symbol;
  };
  BigInt common_den = boost::multiprecision::denominator(cg_);
  for (const auto& [name, coeff] : vars_)
    common_den = boost::multiprecision::lcm(common_den, boost::multiprecision::denominator(coeff));
  common_den = boost::multiprecision::lcm(common_den, boost::multiprecision::denominator(c0_));

  auto scaled = [&](const Rational& q) {
    Rational s = q * Rational(common_den);
    return boost::multiprecision::numerator(s);
  };

  std::vector<Piece> pieces;
  if (cg_ != 0) pieces.push_back({scaled(cg_), "g"});
  for (const auto& [name, coeff] : vars_) pieces.push_back({scaled(coeff), name});
  if (c0_ != 0 || pieces.empty()) pieces.push_back({scaled(c0_), ""});

  std::string poly;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    BigInt mag = boost::multiprecision::abs(p.coeff);
    bool neg = p.coeff < 0;
    if (i == 0) {
      if (neg) poly += '-';
    } else {
      poly += neg ? " - " : " + ";
    }
    if (p.symbol.empty()) {
      poly += mag.str();
    } else {
      if (mag != 1) poly += mag.str();
      poly += p.symbol;
    }
  }

  if (common_den == 1) return poly;
  if (pieces.size() == 1) return poly + "/" + common_den.str();
  return "(" + poly + ")/" + common_den.str();
}

}  // namespace symtau
