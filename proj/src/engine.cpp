#include "symtau/engine.hpp"

#include "symtau/rational.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

namespace symtau {

const char* outcome_str(RuleOutcome o) {
  switch (o) {
    case RuleOutcome::lower_tightened: return "lower_tightened";
    case RuleOutcome::upper_tightened: return "upper_tightened";
    case RuleOutcome::exact_set: return "exact_set";
    case RuleOutcome::noop: return "noop";
    case RuleOutcome::skipped: return "skipped";
    case RuleOutcome::conflict: return "conflict";
  }
  return "?";
}

// --- individual rules -------------------------------------------------------

Scalar rule_sqrt_lower(long genus) { return Scalar::root(genus); }

Rational rule_genus_upper(long genus) {
  if (genus < 2) throw std::invalid_argument("rule_genus_upper: genus must be >= 2");
  return Rational(genus);
}

Rational rule_pencil_lower(const PencilDatum& pencil, long genus) {
  if (!pencil.base_point_free)
    throw std::invalid_argument("rule_pencil_lower: pencil must be base-point-free");
  if (pencil.degree < 2 || genus < 2)
    throw std::invalid_argument("rule_pencil_lower: degree and genus must be >= 2");
  return Rational(genus, pencil.degree - 1);
}

std::optional<Rational> rule_pencil_upper(const PencilDatum& pencil, long genus) {
  if (genus < 2) throw std::invalid_argument("rule_pencil_upper: genus must be >= 2");
  if (!pencil.base_point_free || pencil.gamma_irreducible != TriState::yes) return std::nullopt;
  const long d = pencil.degree;
  // d - 1 >= sqrt(g), decided exactly.
  if (Scalar::of(d - 1, genus) < Scalar::root(genus)) return std::nullopt;
  return Rational(d - 1);
}

std::optional<Rational> rule_kouvidakis(const PencilDatum& pencil, long genus) {
  if (genus < 2) throw std::invalid_argument("rule_kouvidakis: genus must be >= 2");
  if (!pencil.base_point_free || pencil.gamma_irreducible != TriState::yes) return std::nullopt;
  const long d = pencil.degree;
  long root = static_cast<long>(isqrt_floor(BigInt(genus)).convert_to<long long>());
  if (d > 1 + root) return std::nullopt;
  return Rational(genus, d - 1);
}

Rational rule_effective_lower(long a, long b, long genus) {
  if (a <= 0 || b <= 0)
    throw std::invalid_argument("rule_effective_lower: both class coefficients must be positive");
  if (genus < 2) throw std::invalid_argument("rule_effective_lower: genus must be >= 2");
  return Rational(static_cast<long long>(b) * genus, a);
}

Rational rule_double_cover_lower(long target_genus, long genus) {
  if (genus < 2 || target_genus < 0)
    throw std::invalid_argument("rule_double_cover_lower: bad genus");
  return Rational(genus - 2 * target_genus);
}

std::optional<Rational> rule_double_cover_exact(long target_genus, long genus,
                                                std::optional<long> threshold) {
  if (genus < 2 || target_genus < 0)
    throw std::invalid_argument("rule_double_cover_exact: bad genus");
  const long h = target_genus;
  auto threshold_route = [&](long k) {
    return k >= 0 && 2 * h <= k && genus > std::max(2 * k + 1, 4 * k - 3);
  };
  bool fires;
  if (threshold) {
    fires = threshold_route(*threshold);
  } else {
    // Try the closed-form criterion, then the minimal threshold k = 2h.
    fires = (genus >= 6 && 8 * h <= genus - 1) || threshold_route(2 * h);
  }
  if (!fires) return std::nullopt;
  return Rational(genus - 2 * h);
}

DebarreBounds rule_debarre(TriState hyperelliptic, TriState bielliptic, long genus) {
  DebarreBounds out;
  if (genus < 2) throw std::invalid_argument("rule_debarre: genus must be >= 2");
  if (hyperelliptic != TriState::no) return out;
  if (genus == 3) {
    out.exact = Rational(9, 5);
  } else if (genus == 4) {
    out.exact = Rational(2);
  } else if (genus >= 5) {
    if (bielliptic == TriState::yes)
      out.exact = Rational(genus - 2);
    else
      out.upper = Rational(genus - 2);
  }
  return out;
}

std::optional<Rational> rule_trigonal(const NormalizedSpec& spec) {
  if (spec.spec.hyperelliptic != TriState::no) return std::nullopt;
  if (!spec.has_pencil_degree(3)) return std::nullopt;
  if (spec.spec.genus < 4) return std::nullopt;
  return Rational(spec.spec.genus, 2);
}

std::optional<std::pair<Rational, Rational>> rule_five_gonal(const NormalizedSpec& spec) {
  if (spec.spec.hyperelliptic == TriState::yes) return std::nullopt;
  auto min_degree = spec.min_pencil_degree();
  if (!min_degree || *min_degree != 5) return std::nullopt;
  const long g = spec.spec.genus;
  if (g < 16) return std::nullopt;
  return std::make_pair(Rational(g, 4), Rational(g + 2, 2));
}

std::optional<Rational> rule_triple_cover_exact(const CoverDecl& cover, long genus) {
  if (genus < 2) throw std::invalid_argument("rule_triple_cover_exact: genus must be >= 2");
  if (cover.degree != 3 || !cover.has_g12()) return std::nullopt;
  const long h = cover.target_genus;
  if (genus < std::max(9 * h + 4, 26L)) return std::nullopt;
  return Rational(genus - 3 * h, 2);
}

long brill_noether_rho(long genus, long r, long d) {
  if (r < d - genus)
    throw std::invalid_argument("brill_noether_rho: requires r >= d - g");
  return genus - (r + 1) * (genus - d + r);
}

long gonality_bound(long genus) {
  if (genus < 2) throw std::invalid_argument("gonality_bound: genus must be >= 2");
  return (genus + 3) / 2;
}

Classification classify_from_tau(long genus, const Scalar& tau) {
  if (genus < 6) throw std::invalid_argument("classify_from_tau: requires genus >= 6");
  if (tau.radicand() != genus)
    throw std::invalid_argument("classify_from_tau: tau is not a value over sqrt(genus)");
  Classification out;
  Scalar threshold = Scalar::of(Rational(3 * genus + 1, 4), genus);
  if (tau < threshold) {
    out.kind = Classification::Kind::none;
    out.detail = "tau below the structural threshold (3g+1)/4";
    return out;
  }
  // tau >= (3g+1)/4 forces a double cover of a curve of genus (g - tau)/2,
  // so tau must be an integer of the same parity as g, between 0 and g.
  const Rational& a = tau.rational_part();
  bool integral = tau.is_rational() && is_integer(a);
  Rational q2 = (Rational(genus) - a) / 2;
  if (!integral || !is_integer(q2) || q2 < 0) {
    out.kind = Classification::Kind::infeasible;
    out.detail = "no curve attains this slope: (g - tau)/2 = " +
                 (tau.is_rational() ? rational_str(q2) : "(g - " + tau.str() + ")/2") +
                 " is not a nonnegative integer genus";
    return out;
  }
  out.kind = Classification::Kind::double_cover;
  out.target_genus = static_cast<long>(
      boost::multiprecision::numerator(q2).convert_to<long long>());
  out.detail = "double cover of a curve of genus " + std::to_string(out.target_genus);
  return out;
}

// --- solve -------------------------------------------------------------------

namespace {

// Justification strings attached to trace entries.
constexpr const char* kStmtSqrtLower =
    "the nef boundary class (tau, 1) has nonnegative self-intersection: tau^2 - g >= 0";
constexpr const char* kStmtGenusUpper =
    "a base-point-free pencil of degree g+1 with irreducible pencil curve always exists, "
    "giving tau <= g";
constexpr const char* kStmtPencilLower =
    "the pencil curve (d-1, 1) is effective; pairing it with the nef boundary gives "
    "tau (d-1) - g >= 0";
constexpr const char* kStmtPencilUpper =
    "for d - 1 >= sqrt(g) an irreducible pencil curve is nef ((d-1,1)^2 = (d-1)^2 - g >= 0), "
    "so tau <= d - 1";
constexpr const char* kStmtKouvidakis =
    "an irreducible pencil curve of degree d <= 1 + floor(sqrt(g)) computes tau = g/(d-1)";
constexpr const char* kStmtEffective =
    "pairing the nef boundary with the declared effective class (a, b) gives a tau - b g >= 0";
constexpr const char* kStmtDoubleCoverLower =
    "the genus-h target of a double cover embeds in C^(2) as a curve with R = g - 2h, and "
    "pairing it with the nef boundary gives tau >= g - 2h";
constexpr const char* kStmtDoubleCoverExact =
    "a double cover with target genus small against g (h <= (g-1)/8 with g >= 6, or h <= k/2 "
    "with g > max(2k+1, 4k-3)) is unique and attains tau = g - 2h";
constexpr const char* kStmtDebarre3 = "a non-hyperelliptic genus-3 curve has tau = 9/5";
constexpr const char* kStmtDebarre4 = "a non-hyperelliptic genus-4 curve has tau = 2";
constexpr const char* kStmtDebarre5 =
    "a non-hyperelliptic curve of genus >= 5 has tau <= g - 2, with equality exactly for "
    "bielliptic curves";
constexpr const char* kStmtTrigonal =
    "on a non-hyperelliptic curve of genus >= 4 a degree-3 pencil traces an irreducible curve "
    "on C^(2), and tau = g/2";
constexpr const char* kStmtFiveGonal =
    "for declared gonality 5 and g >= 16 every decomposition of the degree-5 pencil curve "
    "keeps g/4 <= tau <= (g+2)/2";
constexpr const char* kStmtTripleCover =
    "a 3-sheeted cover whose genus-h target carries a degree-2 pencil composes to a degree-6 "
    "pencil, and for g >= max(9h+4, 26) its decomposition forces tau = (g-3h)/2";

struct Ctx {
  long g;
  Scalar lo;
  Scalar hi;
  int lo_src = 0;
  int hi_src = 1;
  bool exact = false;
  bool consistent = true;
  int conflict_a = -1;
  int conflict_b = -1;
  std::vector<RuleApplication> trace;

  Ctx(long genus, Scalar l, Scalar h) : g(genus), lo(std::move(l)), hi(std::move(h)) {}

  int push(RuleApplication e) {
    trace.push_back(std::move(e));
    return static_cast<int>(trace.size()) - 1;
  }

  void mark_conflict(int prior, int now) {
    consistent = false;
    conflict_a = prior;
    conflict_b = now;
    trace[now].outcome = RuleOutcome::conflict;
  }

  void note_entry(const std::string& rule, const std::string& detail, RuleOutcome outcome,
                  const std::string& statement, const std::string& note) {
    push({rule, detail, outcome, std::nullopt, statement, note});
  }

  void tighten_lower(const std::string& rule, const std::string& detail, const Scalar& v,
                     const std::string& statement) {
    RuleApplication e{rule, detail, RuleOutcome::noop, v, statement, ""};
    if (v.cmp(hi) > 0) {
      e.note = "lower bound " + v.str() + " exceeds upper bound " + hi.str();
      mark_conflict(hi_src, push(std::move(e)));
      return;
    }
    if (v.cmp(lo) > 0) {
      e.outcome = RuleOutcome::lower_tightened;
      lo_src = push(std::move(e));
      lo = v;
      if (lo.cmp(hi) == 0) exact = true;
    } else {
      e.note = "already implied by the current interval";
      push(std::move(e));
    }
  }

  void tighten_upper(const std::string& rule, const std::string& detail, const Scalar& v,
                     const std::string& statement) {
    RuleApplication e{rule, detail, RuleOutcome::noop, v, statement, ""};
    if (v.cmp(lo) < 0) {
      e.note = "upper bound " + v.str() + " falls below lower bound " + lo.str();
      mark_conflict(lo_src, push(std::move(e)));
      return;
    }
    if (v.cmp(hi) < 0) {
      e.outcome = RuleOutcome::upper_tightened;
      hi_src = push(std::move(e));
      hi = v;
      if (lo.cmp(hi) == 0) exact = true;
    } else {
      e.note = "already implied by the current interval";
      push(std::move(e));
    }
  }

  void set_exact(const std::string& rule, const std::string& detail, const Scalar& v,
                 const std::string& statement) {
    RuleApplication e{rule, detail, RuleOutcome::exact_set, v, statement, ""};
    if (exact && v.cmp(lo) == 0) {
      e.outcome = RuleOutcome::noop;
      e.note = "confirms the value already determined";
      push(std::move(e));
      return;
    }
    if (v.cmp(lo) < 0) {
      e.note = "exact value " + v.str() + " falls below lower bound " + lo.str();
      mark_conflict(lo_src, push(std::move(e)));
      return;
    }
    if (v.cmp(hi) > 0) {
      e.note = "exact value " + v.str() + " exceeds upper bound " + hi.str();
      mark_conflict(hi_src, push(std::move(e)));
      return;
    }
    int idx = push(std::move(e));
    lo = v;
    hi = v;
    lo_src = hi_src = idx;
    exact = true;
  }

  Scalar scalar(const Rational& q) const { return Scalar::of(q, g); }
};

// A rule instance evaluates at most once to a final trace entry; instances
// blocked on an unknown flag log one "skipped" entry and stay pending, to be
// re-run if a later rule derives the missing fact.
struct Instance {
  std::function<bool(Ctx&)> run;  // true once finished
  bool done = false;
};

}  // namespace

TauResult solve(const CurveSpec& input) {
  NormalizedSpec norm = normalize(input);
  const long g = norm.spec.genus;

  // Extra validation beyond normalize: a genus-2 curve is always
  // hyperelliptic, so denying that is structurally impossible.
  if (g == 2 && norm.spec.hyperelliptic == TriState::no)
    throw SpecError(SpecError::Kind::validation, "hyperelliptic",
                    "every genus-2 curve is hyperelliptic; hyperelliptic=no is impossible");

  Ctx ctx(g, rule_sqrt_lower(g), Scalar::of(rule_genus_upper(g), g));
  ctx.push({"sqrt_lower", "", RuleOutcome::lower_tightened, ctx.lo, kStmtSqrtLower,
            "seed bound"});
  ctx.push({"genus_upper", "", RuleOutcome::upper_tightened, ctx.hi, kStmtGenusUpper,
            "seed bound"});

  // Shared mutable pencil state so derived irreducibility re-enables rules.
  auto pencils = std::make_shared<std::vector<PencilDatum>>(norm.all_pencils());
  const std::size_t declared_pencils = norm.spec.pencils.size();
  auto pencil_detail = [declared_pencils](std::size_t i, const PencilDatum& p) {
    std::string s = "degree-" + std::to_string(p.degree) + " pencil";
    if (i >= declared_pencils) s += " (implied)";
    return s;
  };

  std::vector<Instance> instances;

  // -- exactness rules --------------------------------------------------

  // Kouvidakis, per pencil.
  for (std::size_t i = 0; i < pencils->size(); ++i) {
    instances.push_back({[=, logged = false](Ctx& c) mutable -> bool {
      const PencilDatum& p = pencils->at(i);
      std::string detail = pencil_detail(i, p);
      if (!p.base_point_free) {
        c.note_entry("kouvidakis", detail, RuleOutcome::noop, kStmtKouvidakis,
                     "requires a base-point-free pencil");
        return true;
      }
      if (p.gamma_irreducible == TriState::unknown) {
        if (!logged) {
          logged = true;
          c.note_entry("kouvidakis", detail, RuleOutcome::skipped, kStmtKouvidakis,
                       "irreducibility of the pencil curve unknown");
        }
        return false;  // pending: a later rule may derive irreducibility
      }
      if (p.gamma_irreducible == TriState::no) {
        c.note_entry("kouvidakis", detail, RuleOutcome::noop, kStmtKouvidakis,
                     "pencil curve declared reducible");
        return true;
      }
      auto v = rule_kouvidakis(p, c.g);
      if (!v) {
        long root = static_cast<long>(isqrt_floor(BigInt(c.g)).convert_to<long long>());
        c.note_entry("kouvidakis", detail, RuleOutcome::noop, kStmtKouvidakis,
                     "requires degree <= 1 + floor(sqrt(g)) = " + std::to_string(1 + root));
        return true;
      }
      c.set_exact("kouvidakis", detail, c.scalar(*v), kStmtKouvidakis);
      return true;
    }});
  }

  // Debarre small-genus / bielliptic rule (hyp/biell flags are fixed after
  // normalization, so an unknown hypothesis is final).
  instances.push_back({[&norm](Ctx& c) -> bool {
    TriState hyp = norm.spec.hyperelliptic;
    TriState biell = norm.spec.bielliptic;
    std::string detail = "genus " + std::to_string(c.g);
    const char* stmt = c.g == 3 ? kStmtDebarre3 : (c.g == 4 ? kStmtDebarre4 : kStmtDebarre5);
    if (hyp == TriState::unknown) {
      c.note_entry("debarre", detail, RuleOutcome::skipped, stmt,
                   "hyperelliptic status unknown");
      return true;
    }
    if (hyp == TriState::yes) {
      c.note_entry("debarre", detail, RuleOutcome::noop, stmt, "requires hyperelliptic=no");
      return true;
    }
    DebarreBounds b = rule_debarre(hyp, biell, c.g);
    if (b.exact) {
      c.set_exact("debarre", detail, c.scalar(*b.exact), stmt);
    } else if (b.upper) {
      std::string note = biell == TriState::no
                             ? "not bielliptic, so the inequality is strict"
                             : "bielliptic status unknown; equality undecided";
      Scalar v = c.scalar(*b.upper);
      // tighten_upper writes its own note on success; attach ours after.
      c.tighten_upper("debarre", detail, v, stmt);
      if (c.trace.back().note.empty()) c.trace.back().note = note;
    } else {
      c.note_entry("debarre", detail, RuleOutcome::noop, stmt, "no case applies");
    }
    return true;
  }});

  // Double-cover exactness, minimal target genus first.
  {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < norm.spec.covers.size(); ++i)
      if (norm.spec.covers[i].degree == 2) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return norm.spec.covers[a].target_genus < norm.spec.covers[b].target_genus;
    });
    for (std::size_t i : order) {
      instances.push_back({[&norm, i](Ctx& c) -> bool {
        const CoverDecl& cov = norm.spec.covers[i];
        const long h = cov.target_genus;
        std::string detail = "double cover, target genus " + std::to_string(h);
        auto v = rule_double_cover_exact(h, c.g);
        if (!v) {
          c.note_entry("double_cover_exact", detail, RuleOutcome::noop, kStmtDoubleCoverExact,
                       "target genus too large against g: needs h <= (g-1)/8 with g >= 6, or "
                       "g > max(4h+1, 8h-3)");
          return true;
        }
        c.set_exact("double_cover_exact", detail, c.scalar(*v), kStmtDoubleCoverExact);
        return true;
      }});
    }
  }

  // Trigonal rule; also derives irreducibility of every degree-3 pencil.
  if ([&] {
        for (const auto& p : *pencils)
          if (p.degree == 3 && p.base_point_free) return true;
        return false;
      }()) {
    instances.push_back({[&norm, pencils](Ctx& c) -> bool {
      std::string detail = "degree-3 pencil, genus " + std::to_string(c.g);
      if (norm.spec.hyperelliptic == TriState::unknown) {
        c.note_entry("trigonal", detail, RuleOutcome::skipped, kStmtTrigonal,
                     "hyperelliptic status unknown");
        return true;
      }
      if (norm.spec.hyperelliptic == TriState::yes) {
        c.note_entry("trigonal", detail, RuleOutcome::noop, kStmtTrigonal,
                     "requires hyperelliptic=no");
        return true;
      }
      if (c.g < 4) {
        c.note_entry("trigonal", detail, RuleOutcome::noop, kStmtTrigonal,
                     "requires genus >= 4");
        return true;
      }
      c.set_exact("trigonal", detail, c.scalar(Rational(c.g, 2)), kStmtTrigonal);
      if (c.consistent) {
        bool marked = false;
        for (auto& p : *pencils)
          if (p.degree == 3 && p.base_point_free &&
              p.gamma_irreducible == TriState::unknown) {
            p.gamma_irreducible = TriState::yes;
            marked = true;
          }
        if (marked)
          c.trace.back().note = "degree-3 pencil curve derived irreducible";
      }
      return true;
    }});
  }

  // Triple-cover exactness, per qualifying cover.
  for (std::size_t i = 0; i < norm.spec.covers.size(); ++i) {
    const CoverDecl& cov = norm.spec.covers[i];
    if (cov.degree != 3 || !cov.has_g12()) continue;
    instances.push_back({[&norm, i](Ctx& c) -> bool {
      const CoverDecl& cov = norm.spec.covers[i];
      const long h = cov.target_genus;
      std::string detail = "3-sheeted cover, target genus " + std::to_string(h) +
                           " with a degree-2 pencil";
      auto v = rule_triple_cover_exact(cov, c.g);
      if (!v) {
        c.note_entry("triple_cover", detail, RuleOutcome::noop, kStmtTripleCover,
                     "requires genus >= max(9h+4, 26) = " +
                         std::to_string(std::max(9 * h + 4, 26L)));
        return true;
      }
      c.set_exact("triple_cover", detail, c.scalar(*v), kStmtTripleCover);
      return true;
    }});
  }

  // Five-gonal interval (the lower half duplicates pencil_lower; both are
  // recorded under this rule for a readable trace).
  if (auto min_degree = norm.min_pencil_degree(); min_degree && *min_degree == 5) {
    instances.push_back({[&norm](Ctx& c) -> bool {
      std::string detail = "declared gonality 5";
      auto bounds = rule_five_gonal(norm);
      if (!bounds) {
        c.note_entry("five_gonal", detail, RuleOutcome::noop, kStmtFiveGonal,
                     "requires genus >= 16");
        return true;
      }
      c.tighten_lower("five_gonal", detail, c.scalar(bounds->first), kStmtFiveGonal);
      if (c.consistent)
        c.tighten_upper("five_gonal", detail, c.scalar(bounds->second), kStmtFiveGonal);
      return true;
    }});
  }

  // -- interval rules ----------------------------------------------------

  for (std::size_t i = 0; i < pencils->size(); ++i) {
    instances.push_back({[=](Ctx& c) -> bool {
      const PencilDatum& p = pencils->at(i);
      std::string detail = pencil_detail(i, p);
      if (!p.base_point_free) {
        c.note_entry("pencil_lower", detail, RuleOutcome::skipped, kStmtPencilLower,
                     "pencil not base-point-free");
        return true;
      }
      c.tighten_lower("pencil_lower", detail, c.scalar(rule_pencil_lower(p, c.g)),
                      kStmtPencilLower);
      return true;
    }});
  }

  for (std::size_t i = 0; i < pencils->size(); ++i) {
    instances.push_back({[=, logged = false](Ctx& c) mutable -> bool {
      const PencilDatum& p = pencils->at(i);
      std::string detail = pencil_detail(i, p);
      if (!p.base_point_free) {
        c.note_entry("pencil_upper", detail, RuleOutcome::noop, kStmtPencilUpper,
                     "requires a base-point-free pencil");
        return true;
      }
      if (p.gamma_irreducible == TriState::unknown) {
        if (!logged) {
          logged = true;
          c.note_entry("pencil_upper", detail, RuleOutcome::skipped, kStmtPencilUpper,
                       "irreducibility of the pencil curve unknown");
        }
        return false;  // pending: a later rule may derive irreducibility
      }
      if (p.gamma_irreducible == TriState::no) {
        c.note_entry("pencil_upper", detail, RuleOutcome::noop, kStmtPencilUpper,
                     "pencil curve declared reducible");
        return true;
      }
      auto v = rule_pencil_upper(p, c.g);
      if (!v) {
        c.note_entry("pencil_upper", detail, RuleOutcome::noop, kStmtPencilUpper,
                     "requires d - 1 >= sqrt(g)");
        return true;
      }
      c.tighten_upper("pencil_upper", detail, c.scalar(*v), kStmtPencilUpper);
      return true;
    }});
  }

  for (std::size_t i = 0; i < norm.spec.effective_classes.size(); ++i) {
    instances.push_back({[&norm, i](Ctx& c) -> bool {
      auto [a, b] = norm.spec.effective_classes[i];
      std::string detail =
          "effective class (" + std::to_string(a) + ", " + std::to_string(b) + ")";
      c.tighten_lower("effective_lower", detail, c.scalar(rule_effective_lower(a, b, c.g)),
                      kStmtEffective);
      return true;
    }});
  }

  for (std::size_t i = 0; i < norm.spec.covers.size(); ++i) {
    if (norm.spec.covers[i].degree != 2) continue;
    instances.push_back({[&norm, i](Ctx& c) -> bool {
      const long h = norm.spec.covers[i].target_genus;
      std::string detail = "double cover, target genus " + std::to_string(h);
      c.tighten_lower("double_cover_lower", detail,
                      c.scalar(rule_double_cover_lower(h, c.g)), kStmtDoubleCoverLower);
      return true;
    }});
  }

  // -- fixpoint -----------------------------------------------------------
  // Each instance runs at most once to completion; instances blocked on an
  // unknown irreducibility flag log one skip entry themselves and re-run
  // after any pass that made progress (the trigonal rule is the only
  // in-engine deriver, so at most one extra pass fires).
  bool progressed = true;
  while (progressed && ctx.consistent) {
    progressed = false;
    for (auto& inst : instances) {
      if (inst.done || !ctx.consistent) continue;
      if (inst.run(ctx)) {
        inst.done = true;
        progressed = true;
      }
    }
  }

  TauResult out(ctx.lo, ctx.hi);
  out.exact = ctx.consistent && ctx.lo.cmp(ctx.hi) == 0;
  out.consistent = ctx.consistent;
  out.trace = std::move(ctx.trace);
  out.conflict_a = ctx.conflict_a;
  out.conflict_b = ctx.conflict_b;
  return out;
}

// --- rendering ---------------------------------------------------------------

std::string render_trace_entry(const RuleApplication& e) {
  std::string s = e.rule;
  if (!e.detail.empty()) s += " (" + e.detail + ")";
  s += ": ";
  switch (e.outcome) {
    case RuleOutcome::lower_tightened: s += "tau >= " + e.bound->str(); break;
    case RuleOutcome::upper_tightened: s += "tau <= " + e.bound->str(); break;
    case RuleOutcome::exact_set: s += "tau = " + e.bound->str(); break;
    case RuleOutcome::noop: s += "no effect"; break;
    case RuleOutcome::skipped: s += "skipped"; break;
    case RuleOutcome::conflict: s += "CONFLICT"; break;
  }
  if (!e.note.empty()) s += " [" + e.note + "]";
  if (!e.statement.empty()) s += " -- " + e.statement;
  return s;
}

std::string render_result(const TauResult& result, bool with_trace) {
  std::string out;
  if (!result.consistent) {
    out += "inconsistent specification: the declared data force an empty interval\n";
    for (int idx : {result.conflict_a, result.conflict_b})
      if (idx >= 0)
        out += "  [" + std::to_string(idx + 1) + "] " +
               render_trace_entry(result.trace[static_cast<std::size_t>(idx)]) + "\n";
  } else if (result.exact) {
    out += "tau = " + result.lo.str() + "\n";
  } else {
    out += "tau in [" + result.lo.str() + ", " + result.hi.str() + "]\n";
  }
  if (with_trace) {
    out += "derivation:\n";
    for (std::size_t i = 0; i < result.trace.size(); ++i)
      out += "  " + std::to_string(i + 1) + ". " + render_trace_entry(result.trace[i]) + "\n";
  }
  return out;
}

}  // namespace symtau
