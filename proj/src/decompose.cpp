#include "symtau/decompose.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace symtau {
namespace {

long checked_long(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<long>::max()) ||
      v < BigInt(std::numeric_limits<long>::min())) {
    throw std::overflow_error("value does not fit in a machine integer");
  }
  return static_cast<long>(v.convert_to<long long>());
}

long ceil_long(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);  // den > 0 canonically
  BigInt quo = num / den;                           // truncates toward zero
  if (num > 0 && quo * den != num) ++quo;
  return checked_long(quo);
}

long floor_long(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt quo = num / den;
  if (num < 0 && quo * den != num) --quo;
  return checked_long(quo);
}

void partitions_desc(long n, long max_part, std::vector<long>& cur,
                     std::vector<std::vector<long>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_desc(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::string partition_label(const std::vector<long>& partition) {
  if (partition.empty()) return "(pinned components only)";
  std::string out;
  for (auto it = partition.rbegin(); it != partition.rend(); ++it) {
    if (!out.empty()) out += "+";
    out += std::to_string(*it);
  }
  return out;
}

long hurwitz_cap(long genus) { return (genus + 1) / 2; }

// Largest admissible genus of a component, from its box or pin.
long genus_max(const Component& c) {
  return c.pinned_genus ? *c.pinned_genus : c.genus_hi;
}

bool is_accola_participant(const Component& c) {
  // Double-cover components, including a pinned S(H); the x = 2 component of
  // a declared triple cover is handled through the declared-cover checks.
  return c.kind == ComponentKind::double_cover ||
         (c.kind == ComponentKind::pinned_cover && c.x_deg == 1);
}

// Raises the genus floor of `c` to `bound`; false when the box empties.
bool raise_floor(Component& c, long bound) {
  if (c.genus_lo < bound) c.genus_lo = bound;
  return c.genus_lo <= c.genus_hi;
}

struct BudgetOutcome {
  bool ok = true;
  std::string reason;
};

// Distributes the delta budget 2d-2+2g over the components: double covers and
// pinned components carry fixed expressions, residuals absorb the remainder.
BudgetOutcome assign_delta_budget(Scenario& s) {
  const Rational g(s.genus);
  LinExpr total = LinExpr::genus(2) + LinExpr(2 * s.degree - 2);

  LinExpr known;
  std::vector<Component*> residuals;
  std::vector<Component*> dc_vars;  // unpinned double covers, in order
  for (Component& c : s.components) {
    if (c.kind == ComponentKind::residual) {
      residuals.push_back(&c);
    } else {
      known += c.delta;
      if (c.kind == ComponentKind::double_cover && !c.genus_var.empty()) {
        dc_vars.push_back(&c);
      }
    }
  }
  LinExpr remaining = total - known;  // each free genus h enters as +4h

  std::map<std::string, Rational> zeros;
  for (const auto& [name, coeff] : remaining.var_coeffs()) {
    (void)coeff;
    zeros[name] = Rational(0);
  }
  const Rational v0 = remaining.eval(g, zeros);  // remainder with all genera 0

  if (residuals.empty()) {
    // The known expressions must exhaust the budget exactly.
    if (dc_vars.empty()) {
      if (v0 != 0) {
        return {false, "the delta budget does not balance (off by " + rational_str(v0) + ")"};
      }
      return {};
    }
    const Rational sum = -v0 / 4;  // forced value of the genus sum
    if (dc_vars.size() == 1) {
      Component& c = *dc_vars.front();
      if (!is_integer(sum)) {
        return {false, "the delta budget forces " + c.genus_var + " = " + rational_str(sum) +
                           ", which is not an integer"};
      }
      const long value = floor_long(sum);
      if (value < c.genus_lo || value > c.genus_hi) {
        return {false, "the delta budget forces " + c.genus_var + " = " + rational_str(sum) +
                           ", outside the admissible range [" + std::to_string(c.genus_lo) +
                           ", " + std::to_string(c.genus_hi) + "]"};
      }
      s.constraints.push_back(c.genus_var + " = " + std::to_string(value));
      c.delta = c.delta.with_var(c.genus_var, Rational(value));
      c.r = c.r.with_var(c.genus_var, Rational(value));
      c.pinned_genus = value;
      c.genus_var.clear();
      return {};
    }
    std::string lhs;
    LinExpr rhs = remaining;  // strip the genus variables, then solve for the sum
    for (const Component* c : dc_vars) {
      if (!lhs.empty()) lhs += " + ";
      lhs += c->genus_var;
      rhs += LinExpr::var(c->genus_var, -remaining.var_coeffs().at(c->genus_var));
    }
    rhs *= Rational(-1, 4);
    if (!is_integer(sum)) {
      return {false, "the delta budget forces " + lhs + " = " + rational_str(sum) +
                         ", which is not an integer"};
    }
    long lo_sum = 0, hi_sum = 0;
    for (const Component* c : dc_vars) {
      lo_sum += c->genus_lo;
      hi_sum += c->genus_hi;
    }
    if (sum < lo_sum || sum > hi_sum) {
      return {false, "the delta budget forces " + lhs + " = " + rational_str(sum) +
                         ", outside the admissible range [" + std::to_string(lo_sum) + ", " +
                         std::to_string(hi_sum) + "]"};
    }
    s.constraints.push_back(lhs + " = " + rhs.str());
    // Interval propagation of the equality onto each genus box.
    for (Component* c : dc_vars) {
      long others_lo = 0, others_hi = 0;
      for (const Component* o : dc_vars) {
        if (o == c) continue;
        others_lo += o->genus_lo;
        others_hi += o->genus_hi;
      }
      const long lo = ceil_long(sum - others_hi);
      const long hi = floor_long(sum - others_lo);
      if (lo > c->genus_lo) c->genus_lo = lo;
      if (hi < c->genus_hi) c->genus_hi = hi;
      if (c->genus_lo > c->genus_hi) {
        return {false, "the delta budget leaves no admissible genus for " + c->genus_var};
      }
    }
    return {};
  }

  // Some budget must be left for the residual components.
  if (dc_vars.empty()) {
    if (v0 < 0) {
      return {false, "the pinned and double-cover components exceed the delta budget by " +
                         rational_str(-v0)};
    }
  } else {
    // remaining = v0 + sum(4*h_i) >= 0; push each genus floor up assuming the
    // other genera sit at the top of their boxes.
    bool narrowed = false;
    for (Component* c : dc_vars) {
      Rational others(0);
      for (const Component* o : dc_vars) {
        if (o != c) others += Rational(4) * Rational(o->genus_hi);
      }
      const long bound = ceil_long((-v0 - others) / 4);
      if (bound > c->genus_lo) {
        c->genus_lo = bound;
        narrowed = true;
      }
      if (c->genus_lo > c->genus_hi) {
        return {false, "the delta budget leaves no admissible genus for " + c->genus_var};
      }
    }
    if (narrowed) s.constraints.push_back(remaining.str() + " >= 0");
  }

  if (residuals.size() == 1) {
    Component& c = *residuals.front();
    c.delta = remaining;
    c.delta_exact = true;
    c.r = (remaining - LinExpr(2 * c.x_deg)) * Rational(1, 2 * c.x_deg);
    c.r_exact = true;
  } else {
    // Each residual can take at most the whole remainder.
    for (Component* c : residuals) {
      c->delta = remaining;
      c->delta_exact = false;
      c->r = (remaining - LinExpr(2 * c->x_deg)) * Rational(1, 2 * c->x_deg);
      c->r_exact = false;
    }
  }
  return {};
}

std::string kind_str(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::pinned_cover: return "pinned cover";
    case ComponentKind::double_cover: return "double cover";
    case ComponentKind::residual: return "residual";
  }
  return "?";
}

}  // namespace

std::vector<std::vector<long>> enumerate_x_partitions(long d) {
  if (d < 2) throw std::invalid_argument("pencil degree must be at least 2");
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  partitions_desc(d - 1, d - 1, cur, out);
  return out;
}

std::vector<std::vector<long>> filter_by_factorization(
    long d, const std::vector<std::vector<long>>& partitions,
    std::vector<Rejection>* rejections) {
  std::vector<std::vector<long>> kept;
  for (const auto& partition : partitions) {
    const bool has_unit = std::find(partition.begin(), partition.end(), 1L) != partition.end();
    if (d % 2 != 0 && has_unit) {
      if (rejections) {
        rejections->push_back({partition, "parts of size 1 require an even pencil degree"});
      }
      continue;
    }
    kept.push_back(partition);
  }
  return kept;
}

void scenario_tau(Scenario& s) {
  const Rational g(s.genus);
  std::map<std::string, std::pair<long, long>> boxes;
  for (const Component& c : s.components) {
    if (!c.genus_var.empty()) boxes[c.genus_var] = {c.genus_lo, c.genus_hi};
  }

  std::vector<std::string> pieces;
  bool any_upper = false;
  bool first = true;
  Rational sup(0);
  for (const Component& c : s.components) {
    if (!c.r_exact) any_upper = true;
    const Rational top = c.r.range(g, boxes).second;
    if (first || top > sup) sup = top;
    first = false;
    const std::string piece = c.r.str();
    if (std::find(pieces.begin(), pieces.end(), piece) == pieces.end()) {
      pieces.push_back(piece);
    }
  }
  if (pieces.empty()) {
    s.tau_formula = "0";
    s.tau_is_upper = false;
    s.tau_sup = Rational(0);
    return;
  }
  if (pieces.size() == 1) {
    s.tau_formula = pieces.front();
  } else {
    std::string joined;
    for (const std::string& piece : pieces) {
      if (!joined.empty()) joined += ", ";
      joined += piece;
    }
    s.tau_formula = "max{" + joined + "}";
  }
  s.tau_is_upper = any_upper;
  s.tau_sup = sup;
}

bool apply_cover_constraints(Scenario& s, const std::vector<CoverDecl>& declared_covers,
                             std::string* reject_reason) {
  const long g = s.genus;
  const long cap = hurwitz_cap(g);
  auto reject = [&](const std::string& why) {
    if (reject_reason) *reject_reason = why;
    return false;
  };

  // Hurwitz clip: a double cover of a genus-h curve needs h <= (g+1)/2.
  for (Component& c : s.components) {
    if (!is_accola_participant(c)) continue;
    if (c.pinned_genus) {
      if (*c.pinned_genus < 0 || *c.pinned_genus > cap) {
        return reject("component " + c.label + " would double-cover a curve of genus " +
                      std::to_string(*c.pinned_genus) + ", above the Hurwitz bound (g + 1)/2 = " +
                      std::to_string(cap));
      }
    } else {
      if (c.genus_hi > cap) c.genus_hi = cap;
      if (c.genus_lo > c.genus_hi) {
        return reject("no genus for " + c.label + " within the Hurwitz bound (g + 1)/2 = " +
                      std::to_string(cap));
      }
    }
  }

  // Two distinct double-cover components force g <= 2*h1 + 2*h2 + 1.
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    Component& a = s.components[i];
    if (!is_accola_participant(a)) continue;
    for (std::size_t j = i + 1; j < s.components.size(); ++j) {
      Component& b = s.components[j];
      if (!is_accola_participant(b)) continue;
      if (g <= 2 * genus_max(a) + 2 * genus_max(b) + 1) {
        // Feasible at the top of the boxes; push the floors up where needed.
        bool narrowed = false;
        if (!a.pinned_genus) {
          const long bound = ceil_long(Rational(g - 1 - 2 * genus_max(b), 2));
          if (bound > a.genus_lo) narrowed = true;
          if (!raise_floor(a, bound)) {
            return reject("no genus for " + a.label +
                          " compatible with the two-cover genus bound against " + b.label);
          }
        }
        if (!b.pinned_genus) {
          const long bound = ceil_long(Rational(g - 1 - 2 * genus_max(a), 2));
          if (bound > b.genus_lo) narrowed = true;
          if (!raise_floor(b, bound)) {
            return reject("no genus for " + b.label +
                          " compatible with the two-cover genus bound against " + a.label);
          }
        }
        if (narrowed) {
          s.constraints.push_back("2*" + (a.pinned_genus ? std::to_string(*a.pinned_genus)
                                                         : a.genus_var) +
                                  " + 2*" +
                                  (b.pinned_genus ? std::to_string(*b.pinned_genus)
                                                  : b.genus_var) +
                                  " + 1 >= g");
        }
      } else {
        return reject("components " + a.label + " and " + b.label +
                      " are double covers of genera at most " + std::to_string(genus_max(a)) +
                      " and " + std::to_string(genus_max(b)) +
                      ", violating the two-cover genus bound g <= 2*h1 + 2*h2 + 1");
      }
    }
  }

  // A double-cover component against a declared cover of odd degree n (the
  // degrees are coprime, so the covers cannot share a factor):
  // g <= 2*h + n*h' + (n - 1).
  for (Component& c : s.components) {
    if (c.kind != ComponentKind::double_cover) continue;
    for (const CoverDecl& cover : declared_covers) {
      if (cover.degree % 2 == 0 || cover.degree < 3) continue;
      const long rhs_fixed = cover.degree * cover.target_genus + cover.degree - 1;
      if (c.pinned_genus) {
        if (g > 2 * *c.pinned_genus + rhs_fixed) {
          return reject("component " + c.label + " (genus " + std::to_string(*c.pinned_genus) +
                        ") and the declared degree-" + std::to_string(cover.degree) +
                        " cover of genus " + std::to_string(cover.target_genus) +
                        " violate the two-cover genus bound");
        }
        continue;
      }
      const long bound = ceil_long(Rational(g - rhs_fixed, 2));
      if (bound > c.genus_lo) {
        if (!raise_floor(c, bound)) {
          return reject("no genus for " + c.label +
                        " compatible with the two-cover genus bound against the declared degree-" +
                        std::to_string(cover.degree) + " cover");
        }
        s.constraints.push_back("2*" + c.genus_var + " + " + std::to_string(rhs_fixed) +
                                " >= g (against the declared degree-" +
                                std::to_string(cover.degree) + " cover of genus " +
                                std::to_string(cover.target_genus) + ")");
      }
    }
  }
  return true;
}

Decomposition feasible_tau(long d, long genus, const std::vector<CoverDecl>& declared_covers) {
  if (d < 2) throw std::invalid_argument("pencil degree must be at least 2");
  if (genus < 2) throw std::invalid_argument("genus must be at least 2");
  Decomposition dec;
  dec.degree = d;
  dec.genus = genus;

  // Declared covers with 2n == d pin a component of the pencil curve: the
  // pencil factors through the cover, so the curve S(H) (n = 2) or B1(H)
  // (n = 3, target carrying a degree-2 pencil) must appear.
  std::vector<const CoverDecl*> pinned_from;
  for (const CoverDecl& cover : declared_covers) {
    if (2 * cover.degree != d) continue;
    if (cover.degree == 2 || (cover.degree == 3 && cover.has_g12())) {
      pinned_from.push_back(&cover);
    }
  }
  std::vector<Component> pins;
  long pinned_x = 0;
  for (std::size_t i = 0; i < pinned_from.size(); ++i) {
    const CoverDecl& cover = *pinned_from[i];
    const long n = cover.degree;
    const long h = cover.target_genus;
    Component c;
    c.kind = ComponentKind::pinned_cover;
    const std::string suffix =
        pinned_from.size() > 1 ? "H" + std::to_string(i + 1) : std::string("H");
    c.label = (n == 2 ? "S(" : "B1(") + suffix + ")";
    c.x_deg = n - 1;
    c.pinned_genus = h;
    c.delta = LinExpr::genus(2) + LinExpr(2 * n - 2 - 2 * n * h);
    c.delta_exact = true;
    c.r = LinExpr::genus(Rational(1, n - 1)) + LinExpr(Rational(-n * h, n - 1));
    c.r_exact = true;
    pins.push_back(std::move(c));
    pinned_x += n - 1;
  }

  const long free_x = d - 1 - pinned_x;
  if (free_x < 0) {
    dec.rejected.push_back({{}, "the declared covers exceed the x budget of the pencil"});
    return dec;
  }

  std::vector<std::vector<long>> partitions;
  if (free_x == 0) {
    partitions.push_back({});
  } else {
    std::vector<std::vector<long>> all;
    std::vector<long> cur;
    partitions_desc(free_x, free_x, cur, all);
    partitions = filter_by_factorization(d, all, &dec.rejected);
  }

  const long cap = hurwitz_cap(genus);
  for (const auto& partition : partitions) {
    Scenario s;
    s.degree = d;
    s.genus = genus;
    s.partition = partition;
    s.components = pins;

    const long unit_count = std::count(partition.begin(), partition.end(), 1L);
    long residual_index = 0, dc_index = 0;
    for (long part : partition) {
      Component c;
      c.x_deg = part;
      if (part == 1) {
        ++dc_index;
        c.kind = ComponentKind::double_cover;
        c.label = "H" + std::to_string(dc_index);
        c.genus_var = unit_count == 1 ? "h" : "h" + std::to_string(dc_index);
        c.genus_lo = 0;
        c.genus_hi = cap;
        c.delta = LinExpr::genus(2) + LinExpr(2) + LinExpr::var(c.genus_var, -4);
        c.delta_exact = true;
        c.r = LinExpr::genus(1) + LinExpr::var(c.genus_var, -2);
        c.r_exact = true;
      } else {
        ++residual_index;
        c.kind = ComponentKind::residual;
        c.label = "C" + std::to_string(residual_index);
        // delta and r are filled by the budget assignment below.
      }
      s.components.push_back(std::move(c));
    }

    const BudgetOutcome budget = assign_delta_budget(s);
    if (!budget.ok) {
      dec.rejected.push_back({partition, budget.reason});
      continue;
    }
    std::string reason;
    if (!apply_cover_constraints(s, declared_covers, &reason)) {
      dec.rejected.push_back({partition, reason});
      continue;
    }
    scenario_tau(s);
    if (!dec.tau_upper_valid || s.tau_sup > dec.tau_upper) {
      dec.tau_upper = s.tau_sup;
      dec.tau_upper_valid = true;
    }
    dec.scenarios.push_back(std::move(s));
  }
  return dec;
}

std::string render_decomposition(const Decomposition& dec, bool verbose) {
  std::ostringstream out;
  out << "components of the degree-" << dec.degree << " pencil curve at genus " << dec.genus
      << "\n";
  std::size_t index = 0;
  for (const Scenario& s : dec.scenarios) {
    out << "scenario " << ++index << ": partition " << partition_label(s.partition) << "\n";
    for (const Component& c : s.components) {
      out << "  " << c.label << ": " << kind_str(c.kind) << ", x = " << c.x_deg;
      if (c.pinned_genus) {
        out << ", genus " << *c.pinned_genus;
      } else if (!c.genus_var.empty()) {
        out << ", genus " << c.genus_var << " in [" << c.genus_lo << ", " << c.genus_hi << "]";
      }
      out << ", delta " << (c.delta_exact ? "= " : "<= ") << c.delta.str();
      out << ", R " << (c.r_exact ? "= " : "<= ") << c.r.str() << "\n";
    }
    for (const std::string& constraint : s.constraints) {
      out << "  constraint: " << constraint << "\n";
    }
    out << "  tau candidate: " << (s.tau_is_upper ? "<= " : "") << s.tau_formula << "\n";
  }
  if (verbose) {
    for (const Rejection& r : dec.rejected) {
      out << "rejected: partition " << partition_label(r.partition) << " (" << r.reason << ")\n";
    }
  } else if (!dec.rejected.empty()) {
    out << "rejected partitions: " << dec.rejected.size() << " (rerun with --verbose to list)\n";
  }
  if (dec.tau_upper_valid) {
    out << "overall: tau <= " << rational_str(dec.tau_upper) << "\n";
  } else {
    out << "no feasible decomposition scenarios\n";
  }
  return out.str();
}

}  // namespace symtau
