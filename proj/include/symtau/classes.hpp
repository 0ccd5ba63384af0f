#pragma once

#include "symtau/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace symtau {

// Numerical divisor classes on the second symmetric product C^(2) of a smooth
// genus-g curve, written in (n, gamma) + xi coordinates:
//
//   (n, gamma) + xi  :=  (n + gamma) x  -  gamma (delta/2)  +  xi
//
// where x is the fibre class, delta the diagonal, and xi lives in a fixed
// negative-semidefinite residue subspace orthogonal to <x, delta>.  With the
// standard products (x.x) = 1, (x.delta) = 2, (delta.delta) = 4 - 4g one gets
//
//   (D1.D2) = n1 n2 - gamma1 gamma2 g + (xi1.xi2).

// Pairing table for a finite set of residue basis vectors.  The matrix must
// be symmetric and negative semidefinite — residues never raise a
// self-intersection — and both properties are checked exactly on
// construction.
class ResidueSpace {
 public:
  ResidueSpace() = default;  // zero-dimensional: only the zero residue
  explicit ResidueSpace(std::vector<std::vector<Rational>> gram);

  std::size_t dimension() const { return gram_.size(); }
  const Rational& gram(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::vector<Rational>> gram_;
};

// Formal rational combination of residue basis vectors, kept sorted by basis
// id with nonzero coefficients only.  Empty means the zero residue.
using ResidueVec = std::vector<std::pair<std::size_t, Rational>>;

struct NS2Class {
  Rational n;      // fibre degree: (D.x) ... = n after the change of basis
  Rational gamma;  // diagonal-part coefficient
  ResidueVec residue;
};

NS2Class ns2(Rational n, Rational gamma);
NS2Class ns2(Rational n, Rational gamma, std::size_t residue_id);

// (xi1.xi2) under the space's Gram matrix; throws std::invalid_argument on a
// basis id outside the space ("unknown residue identifier").
Rational residue_pairing(const ResidueVec& a, const ResidueVec& b, const ResidueSpace& space);

Rational intersect(const NS2Class& d1, const NS2Class& d2, const ResidueSpace& space,
                   long genus);
// Residue-free overload; throws if either class carries a residue.
Rational intersect(const NS2Class& d1, const NS2Class& d2, long genus);

// c1*D1 + c2*D2, componentwise; residues combine formally.
NS2Class combine(const NS2Class& d1, const Rational& c1, const NS2Class& d2,
                 const Rational& c2);

// Coefficients of the same class on the (x, delta) basis:
//   (n, gamma) + xi  =  (n + gamma) x + (-gamma/2) delta + xi.
std::pair<Rational, Rational> to_x_delta(const NS2Class& d);
NS2Class from_x_delta(const Rational& coeff_x, const Rational& coeff_delta);

// Class of the curve traced on C^(2) by a degree-d pencil:  (d-1, 1), i.e.
// d x - delta/2.  Requires d >= 2.
NS2Class pencil_curve_class(long degree);

// Slope R(C') = ((delta.C') - 2 (x.C')) / (2 (x.C')) of an irreducible curve
// from its two basic intersection degrees; requires x_deg > 0.
Rational r_value(const Rational& x_deg, const Rational& delta_deg);

}  // namespace symtau
