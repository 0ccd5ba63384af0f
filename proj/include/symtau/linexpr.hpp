#pragma once

#include "symtau/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace symtau {

// Linear form  c0 + cg*g + sum_i ci*v_i  with exact rational coefficients.
//
// Used by the decomposition enumerator to keep intersection degrees and slope
// formulas symbolic in the ambient genus g and in the unknown genera of
// component curves, so tables can print "g - 2h" instead of a number.
class LinExpr {
 public:
  LinExpr() = default;
  explicit LinExpr(Rational constant) : c0_(std::move(constant)) {}
  explicit LinExpr(long constant) : c0_(constant) {}

  static LinExpr genus(Rational coeff = Rational(1));
  static LinExpr var(std::string name, Rational coeff = Rational(1));

  const Rational& constant_coeff() const { return c0_; }
  const Rational& genus_coeff() const { return cg_; }
  const std::map<std::string, Rational>& var_coeffs() const { return vars_; }
  bool has_vars() const { return !vars_.empty(); }

  LinExpr& operator+=(const LinExpr& rhs);
  LinExpr& operator-=(const LinExpr& rhs);
  LinExpr& operator*=(const Rational& k);
  friend LinExpr operator+(LinExpr lhs, const LinExpr& rhs) { return lhs += rhs; }
  friend LinExpr operator-(LinExpr lhs, const LinExpr& rhs) { return lhs -= rhs; }
  friend LinExpr operator*(LinExpr lhs, const Rational& k) { return lhs *= k; }
  friend bool operator==(const LinExpr& a, const LinExpr& b) {
    return a.c0_ == b.c0_ && a.cg_ == b.cg_ && a.vars_ == b.vars_;
  }

  // Substitutes a concrete genus, leaving the other variables symbolic.
  LinExpr with_genus(const Rational& g) const;
  // Substitutes one variable by a constant.
  LinExpr with_var(const std::string& name, const Rational& value) const;
  // Full evaluation; throws std::invalid_argument if a variable is missing.
  Rational eval(const Rational& g, const std::map<std::string, Rational>& assignment) const;

  // Extremes over independent inclusive integer boxes for the variables,
  // at a fixed genus.  Throws if some variable has no box.
  std::pair<Rational, Rational> range(
      const Rational& g, const std::map<std::string, std::pair<long, long>>& boxes) const;

  // "g - 2h + 4", "(g + 2)/2", "h", "0".  Terms are ordered g, then variables
  // by name, then the constant; a common denominator is factored out.
  std::string str() const;

 private:
  Rational c0_{0};
  Rational cg_{0};
  std::map<std::string, Rational> vars_;  // name -> coefficient, nonzero only
  void prune(const std::string& name);
};

}  // namespace symtau
