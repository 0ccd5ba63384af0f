#pragma once

#include "symtau/curve_spec.hpp"
#include "symtau/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symtau {

// The solver maintains an exact interval [lo, hi] in Q(sqrt(g)) for the
// slope invariant
//
//   tau(C) = inf { mu >= 0 : (mu+1) x - delta/2 is nef on C^(2) }
//
// and applies every structural bound it can justify from the declared data,
// recording one trace entry per rule application.

enum class RuleOutcome {
  lower_tightened,
  upper_tightened,
  exact_set,
  noop,     // rule evaluated but did not improve the interval
  skipped,  // a hypothesis is unknown; rule left pending and logged
  conflict  // the produced bound inverted the interval
};

const char* outcome_str(RuleOutcome o);

struct RuleApplication {
  std::string rule;
  std::string detail;  // which declared datum the rule consumed
  RuleOutcome outcome;
  std::optional<Scalar> bound;  // bound or exact value the rule produced
  std::string statement;        // self-contained mathematical justification
  std::string note;             // outcome commentary ("already implied", ...)
};

struct TauResult {
  Scalar lo;
  Scalar hi;
  bool exact = false;       // lo == hi
  bool consistent = true;   // false: the declared data forced lo > hi
  std::vector<RuleApplication> trace;
  // When inconsistent, the two trace entries whose bounds contradict.
  int conflict_a = -1;
  int conflict_b = -1;

  TauResult(Scalar l, Scalar h) : lo(std::move(l)), hi(std::move(h)) {}
};

// Runs validation, then all rules to fixpoint.  Deterministic: seeds, then
// exactness rules, then interval rules, re-running anything unblocked by a
// derived fact.  Throws SpecError on invalid input; an inconsistent (but
// well-formed) spec comes back with consistent == false, never an exception.
TauResult solve(const CurveSpec& spec);

// --- individual bounds (pure; solve composes these) -----------------------

// tau >= sqrt(g): the nef boundary class (tau, 1) has tau^2 - g >= 0.
Scalar rule_sqrt_lower(long genus);

// tau <= g: a degree-(g+1) pencil with irreducible pencil curve always exists.
Rational rule_genus_upper(long genus);

// tau >= g/(d-1) from the effective pencil curve (d-1, 1).
// Throws std::invalid_argument unless the pencil is base-point-free.
Rational rule_pencil_lower(const PencilDatum& pencil, long genus);

// tau <= d-1 when the pencil curve is irreducible and d - 1 >= sqrt(g)
// (then (d-1, 1)^2 >= 0 makes it nef); nullopt when a hypothesis fails.
std::optional<Rational> rule_pencil_upper(const PencilDatum& pencil, long genus);

// tau = g/(d-1) when the pencil curve is irreducible and d <= 1 + floor(sqrt(g)).
std::optional<Rational> rule_kouvidakis(const PencilDatum& pencil, long genus);

// tau >= b*g/a from a declared effective class (a, b), a, b > 0.
Rational rule_effective_lower(long a, long b, long genus);

// tau >= g - 2h: the genus-h target of a double cover embeds in C^(2).
Rational rule_double_cover_lower(long target_genus, long genus);

// tau = g - 2h for a double cover with target genus small against g:
// either h <= (g-1)/8 with g >= 6, or — given an explicit threshold k —
// h <= k/2 with g > max(2k+1, 4k-3).  Defaults to trying both the
// closed-form criterion and the minimal threshold k = 2h.
std::optional<Rational> rule_double_cover_exact(long target_genus, long genus,
                                                std::optional<long> threshold = std::nullopt);

// Non-hyperelliptic small-genus and bielliptic bounds:
//   g=3 -> tau = 9/5;  g=4 -> tau = 2;
//   g>=5 -> tau <= g-2, exact precisely when bielliptic.
// Both fields empty when hyperelliptic != no or g == 2.
struct DebarreBounds {
  std::optional<Rational> exact;
  std::optional<Rational> upper;
};
DebarreBounds rule_debarre(TriState hyperelliptic, TriState bielliptic, long genus);

// tau = g/2 for a non-hyperelliptic curve with a base-point-free degree-3
// pencil and g >= 4 (whose pencil curve is forced irreducible).
std::optional<Rational> rule_trigonal(const NormalizedSpec& spec);

// g/4 <= tau <= (g+2)/2 when the declared gonality is exactly 5 and g >= 16.
std::optional<std::pair<Rational, Rational>> rule_five_gonal(const NormalizedSpec& spec);

// tau = (g-3h)/2 for a 3-sheeted cover whose genus-h target carries a
// degree-2 pencil, provided g >= max(9h+4, 26).
std::optional<Rational> rule_triple_cover_exact(const CoverDecl& cover, long genus);

// Brill-Noether number rho(g, r, d) = g - (r+1)(g-d+r); requires r >= d-g.
long brill_noether_rho(long genus, long r, long d);

// Every genus-g curve carries a base-point-free pencil of degree at most
// floor((g+3)/2).
long gonality_bound(long genus);

// Structure forced by a high slope: tau >= (3g+1)/4 makes the curve a double
// cover of a curve of genus (g-tau)/2.  Requires g >= 6.
struct Classification {
  enum class Kind { none, double_cover, infeasible } kind = Kind::none;
  long target_genus = -1;  // set for Kind::double_cover
  std::string detail;
};
Classification classify_from_tau(long genus, const Scalar& tau);

// --- rendering -------------------------------------------------------------

std::string render_trace_entry(const RuleApplication& e);
// "tau = v" / "tau in [lo, hi]" plus, on request, the numbered derivation;
// inconsistent results render the conflicting pair instead of a value.
std::string render_result(const TauResult& result, bool with_trace);

}  // namespace symtau
