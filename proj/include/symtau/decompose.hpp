#pragma once

#include "symtau/curve_spec.hpp"
#include "symtau/linexpr.hpp"
#include "symtau/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symtau {

// Case analysis for the curve of a degree-d pencil inside the second symmetric
// product.  The pencil curve has x-degree d-1 and delta-degree 2d-2+2g; its
// irreducible components split those budgets.  Components of x-degree 1 are
// curves isomorphic to targets of double covers, so each one carries a genus
// parameter; components pinned by a declared cover get concrete data.

enum class ComponentKind {
  pinned_cover,  // forced by a declared cover (labels "S(H)", "B1(H)")
  double_cover,  // x-degree 1, symbolic target genus (labels "H1", ...)
  residual,      // x-degree >= 2, only budget bounds known (labels "C1", ...)
};

struct Component {
  ComponentKind kind = ComponentKind::residual;
  std::string label;
  long x_deg = 1;
  // Genus of the covered target: concrete when pinned (declared cover, or a
  // delta-budget equality with a unique solution), otherwise a named variable
  // ranging over an inclusive integer box.  Residuals track no genus.
  std::optional<long> pinned_genus;
  std::string genus_var;
  long genus_lo = 0;
  long genus_hi = 0;
  // Intersection with delta and slope contribution R = (delta - 2x) / (2x).
  // Exact when the budget determines them, otherwise upper bounds.
  LinExpr delta;
  bool delta_exact = true;
  LinExpr r;
  bool r_exact = true;
};

struct Scenario {
  long degree = 2;  // pencil degree d
  long genus = 2;   // ambient curve genus
  std::vector<long> partition;        // free x-budget split, parts descending
  std::vector<Component> components;  // pinned components first, then parts
  std::vector<std::string> constraints;  // relations binding the genus vars
  std::string tau_formula;  // e.g. "max{h, g - 2h}" or "(g + 2)/2"
  bool tau_is_upper = false;  // formula only bounds the candidate from above
  Rational tau_sup{0};        // numeric supremum of the candidate at `genus`
};

struct Rejection {
  std::vector<long> partition;
  std::string reason;
};

struct Decomposition {
  long degree = 2;
  long genus = 2;
  std::vector<Scenario> scenarios;
  std::vector<Rejection> rejected;
  Rational tau_upper{0};  // max of the scenario suprema
  bool tau_upper_valid = false;
};

// All partitions of the free x-budget d-1, parts descending, lexicographically
// largest first: d=4 gives [3], [2,1], [1,1,1].  Throws for d < 2.
std::vector<std::vector<long>> enumerate_x_partitions(long d);

// Drops partitions containing a part of size 1 when d is odd: such a part is a
// double-cover component, and composing the two maps would factor the pencil
// through degree 2, impossible for odd d.  Rejections are appended if given.
std::vector<std::vector<long>> filter_by_factorization(
    long d, const std::vector<std::vector<long>>& partitions,
    std::vector<Rejection>* rejections = nullptr);

// Recomputes tau_formula / tau_is_upper / tau_sup from the components.  The
// candidate is the maximum of the component slopes; it is only an upper bound
// when some component slope is itself only an upper bound.
void scenario_tau(Scenario& s);

// Hurwitz clip (double-cover genus at most (g+1)/2) and the two-cover genus
// bound g <= 2*h1 + 2*h2 + 1 between double-cover components, plus the mixed
// bound against declared covers of odd degree.  Narrows genus boxes in place;
// returns false (with the reason) when a component or pair is impossible.
bool apply_cover_constraints(Scenario& s, const std::vector<CoverDecl>& declared_covers,
                             std::string* reject_reason = nullptr);

// Full enumeration: partitions, factorization filter, pinned components for
// declared covers with 2n == d (n in {2,3}), delta-budget assignment, cover
// constraints, and per-scenario tau candidates.  Throws for d < 2 or genus < 2.
Decomposition feasible_tau(long d, long genus, const std::vector<CoverDecl>& declared_covers);

// Plain-text table, deterministic layout; rejected partitions listed only
// when verbose.
std::string render_decomposition(const Decomposition& dec, bool verbose);

}  // namespace symtau
