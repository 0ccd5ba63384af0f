#pragma once

#include <utility>

namespace symtau {

// An n-sheeted branched cover C -> H with target genus h.  A base-point-free
// pencil of degree n is the special case h = 0 (target P^1).
struct CoverDatum {
  long degree = 2;        // number of sheets, n >= 2
  long target_genus = 0;  // h >= 0
};

// Intersection degrees of a curve cycle inside a symmetric product against
// the fibre class x, the pulled-back theta divisor, and the diagonal delta.
struct CycleNumbers {
  long long x_deg = 0;
  long long theta_deg = 0;
  long long delta_deg = 0;
};

// C(n, k) with the convention C(n, k) = 0 outside 0 <= k <= n.
// Computed without overflow; throws std::overflow_error if the value does
// not fit in long long.
long long binomial(long long n, long long k);

// Degree of the ramification divisor, 2(g-1) - 2n(h-1).  Negative output
// means the cover violates the Riemann-Hurwitz bound and cannot exist.
long long ramification_degree(const CoverDatum& cover, long genus);

// Numbers of the curve Sigma = {p + q : f(p) = f(q), p != q} traced in C^(2)
// by an n-sheeted cover f (counted with multiplicity):
//   x = 1,  theta = n h,  delta = 2(g-1) - 2n(h-1).
// Throws std::invalid_argument when the cover is inadmissible for this genus.
CycleNumbers cover_cycle(const CoverDatum& cover, long genus);

// Numbers of B_{n-d}(H) = { D + f^*(q) restricted to degree d } in C^(d),
// for 2 <= d <= n:
//   x     = C(n-1, n-d)
//   theta = n h C(n-2, n-d) + g C(n-2, n-d-1)
//   delta = 2(d+g-1) x - 2 theta.
CycleNumbers b_cycle(const CoverDatum& cover, long symmetric_index, long genus);

// The diagonal of C^(d) as a combination (a, b) meaning a*x + b*theta:
//   delta_d == 2((d+g-1) x - theta).
std::pair<long long, long long> diagonal_class(long symmetric_index, long genus);

}  // namespace symtau
