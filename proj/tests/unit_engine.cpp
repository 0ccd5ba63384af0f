#include <doctest.h>

#include "symtau/engine.hpp"

#include <stdexcept>
#include <string>

using symtau::Classification;
using symtau::CoverDecl;
using symtau::CurveSpec;
using symtau::PencilDatum;
using symtau::Rational;
using symtau::RuleOutcome;
using symtau::Scalar;
using symtau::SpecError;
using symtau::TauResult;
using symtau::TriState;

TEST_CASE("square-root lower bound") {
  CHECK(symtau::rule_sqrt_lower(9) == Scalar::of(3, 9));
  CHECK(symtau::rule_sqrt_lower(5) == Scalar::root(5));
  // sqrt(16) folds to the rational 4.
  CHECK(symtau::rule_sqrt_lower(16).is_rational());
  CHECK_THROWS_AS(symtau::rule_sqrt_lower(1), std::invalid_argument);
}

TEST_CASE("genus upper bound") {
  CHECK(symtau::rule_genus_upper(7) == Rational(7));
  CHECK_THROWS_AS(symtau::rule_genus_upper(1), std::invalid_argument);
}

TEST_CASE("pencil lower bound") {
  CHECK(symtau::rule_pencil_lower({4, true, TriState::unknown}, 9) == Rational(3));
  CHECK(symtau::rule_pencil_lower({3, true, TriState::unknown}, 10) == Rational(5));
  CHECK_THROWS_AS(symtau::rule_pencil_lower({4, false, TriState::unknown}, 9),
                  std::invalid_argument);
}

TEST_CASE("pencil upper bound needs irreducibility and d-1 >= sqrt(g)") {
  // d = 4, g = 9: d-1 = 3 = sqrt(9), boundary case included.
  auto u = symtau::rule_pencil_upper({4, true, TriState::yes}, 9);
  REQUIRE(u.has_value());
  CHECK(*u == Rational(3));

  // d - 1 < sqrt(g): no bound.
  CHECK_FALSE(symtau::rule_pencil_upper({3, true, TriState::yes}, 9).has_value());
  // Irreducibility unknown or denied: no bound.
  CHECK_FALSE(symtau::rule_pencil_upper({4, true, TriState::unknown}, 9).has_value());
  CHECK_FALSE(symtau::rule_pencil_upper({4, true, TriState::no}, 9).has_value());
  // sqrt(10) is irrational, so d-1 = 3 < sqrt(10) must be detected exactly.
  CHECK_FALSE(symtau::rule_pencil_upper({4, true, TriState::yes}, 10).has_value());
  CHECK(symtau::rule_pencil_upper({5, true, TriState::yes}, 10).has_value());
}

TEST_CASE("low-degree irreducible pencils compute tau exactly") {
  // d <= 1 + floor(sqrt(g)).
  auto v = symtau::rule_kouvidakis({4, true, TriState::yes}, 9);
  REQUIRE(v.has_value());
  CHECK(*v == Rational(3));

  v = symtau::rule_kouvidakis({3, true, TriState::yes}, 10);
  REQUIRE(v.has_value());
  CHECK(*v == Rational(5));

  // Degree too large.
  CHECK_FALSE(symtau::rule_kouvidakis({5, true, TriState::yes}, 9).has_value());
  // Needs irreducibility.
  CHECK_FALSE(symtau::rule_kouvidakis({4, true, TriState::unknown}, 9).has_value());
  // Needs a base point free pencil.
  CHECK_FALSE(symtau::rule_kouvidakis({4, false, TriState::yes}, 9).has_value());
}

TEST_CASE("effective class lower bound") {
  CHECK(symtau::rule_effective_lower(3, 1, 12) == Rational(4));
  CHECK(symtau::rule_effective_lower(2, 3, 7) == Rational(21, 2));
  CHECK_THROWS_AS(symtau::rule_effective_lower(0, 1, 12), std::invalid_argument);
  CHECK_THROWS_AS(symtau::rule_effective_lower(3, -1, 12), std::invalid_argument);
}

TEST_CASE("double cover bounds") {
  CHECK(symtau::rule_double_cover_lower(4, 33) == Rational(25));
  CHECK(symtau::rule_double_cover_lower(0, 7) == Rational(7));

  // Closed-form criterion: h <= (g-1)/8 and g >= 6.
  auto e = symtau::rule_double_cover_exact(4, 33);
  REQUIRE(e.has_value());
  CHECK(*e == Rational(25));

  // h = 0 is exact for every admissible genus (threshold route with k = 0).
  for (long g = 2; g <= 12; ++g) {
    auto hyp = symtau::rule_double_cover_exact(0, g);
    REQUIRE(hyp.has_value());
    CHECK(*hyp == Rational(g));
  }

  // h = 1 at g = 6: closed form needs h <= 5/8, threshold needs g > 5 with
  // k = 2 -> max(5, 5) = 5, so g = 6 qualifies via the threshold route.
  auto biel = symtau::rule_double_cover_exact(1, 6);
  REQUIRE(biel.has_value());
  CHECK(*biel == Rational(4));

  // h = 1 at g = 5: threshold needs g > 5; closed form needs g >= 9.  Fails.
  CHECK_FALSE(symtau::rule_double_cover_exact(1, 5).has_value());

  // h = 4 at g = 20: closed form needs h <= 19/8; threshold k = 8 needs
  // g > max(17, 29) = 29.  Fails.
  CHECK_FALSE(symtau::rule_double_cover_exact(4, 20).has_value());
  // Same data with g = 33 succeeds (h = 4 = (33-1)/8).
  CHECK(symtau::rule_double_cover_exact(4, 33).has_value());

  // The default also tries the minimal threshold k = 2h: at g = 38, h = 5 the
  // closed form needs g >= 41 but k = 10 needs only g > 37.
  auto routed = symtau::rule_double_cover_exact(5, 38);
  REQUIRE(routed.has_value());
  CHECK(*routed == Rational(28));

  // An explicit threshold replaces the default pair of criteria entirely:
  // k = 12 pushes the genus requirement to g > 45, and k = 0 cannot cover
  // h = 4 at all even though the closed form would fire.
  CHECK_FALSE(symtau::rule_double_cover_exact(5, 38, 12).has_value());
  CHECK_FALSE(symtau::rule_double_cover_exact(4, 33, 0).has_value());
  auto forced = symtau::rule_double_cover_exact(5, 38, 10);
  REQUIRE(forced.has_value());
  CHECK(*forced == Rational(28));
}

TEST_CASE("non-hyperelliptic small genus and bielliptic bounds") {
  auto d3 = symtau::rule_debarre(TriState::no, TriState::unknown, 3);
  REQUIRE(d3.exact.has_value());
  CHECK(*d3.exact == Rational(9, 5));

  auto d4 = symtau::rule_debarre(TriState::no, TriState::unknown, 4);
  REQUIRE(d4.exact.has_value());
  CHECK(*d4.exact == Rational(2));

  // g >= 5: upper bound g-2, exact precisely when bielliptic.
  auto d7 = symtau::rule_debarre(TriState::no, TriState::unknown, 7);
  CHECK_FALSE(d7.exact.has_value());
  REQUIRE(d7.upper.has_value());
  CHECK(*d7.upper == Rational(5));

  auto d7b = symtau::rule_debarre(TriState::no, TriState::yes, 7);
  REQUIRE(d7b.exact.has_value());
  CHECK(*d7b.exact == Rational(5));

  // Hyperelliptic unknown or yes: nothing.
  auto unk = symtau::rule_debarre(TriState::unknown, TriState::yes, 7);
  CHECK_FALSE(unk.exact.has_value());
  CHECK_FALSE(unk.upper.has_value());
  auto hyp = symtau::rule_debarre(TriState::yes, TriState::unknown, 3);
  CHECK_FALSE(hyp.exact.has_value());
  CHECK_FALSE(hyp.upper.has_value());

  // g = 2 is always hyperelliptic; rule declines.
  auto g2 = symtau::rule_debarre(TriState::no, TriState::unknown, 2);
  CHECK_FALSE(g2.exact.has_value());
  CHECK_FALSE(g2.upper.has_value());
}

TEST_CASE("trigonal rule") {
  CurveSpec spec;
  spec.genus = 10;
  spec.hyperelliptic = TriState::no;
  spec.pencils.push_back({3, true, TriState::unknown});
  auto v = symtau::rule_trigonal(symtau::normalize(spec));
  REQUIRE(v.has_value());
  CHECK(*v == Rational(5));

  // Needs hyperelliptic == no.
  spec.hyperelliptic = TriState::unknown;
  CHECK_FALSE(symtau::rule_trigonal(symtau::normalize(spec)).has_value());

  // Needs g >= 4.
  CurveSpec g3;
  g3.genus = 3;
  g3.hyperelliptic = TriState::no;
  g3.pencils.push_back({3, true, TriState::unknown});
  CHECK_FALSE(symtau::rule_trigonal(symtau::normalize(g3)).has_value());

  // Needs a degree-3 pencil; one implied by a (3,0) cover counts.
  CurveSpec implied;
  implied.genus = 10;
  implied.hyperelliptic = TriState::no;
  implied.covers.push_back(CoverDecl{3, 0, std::nullopt});
  CHECK(symtau::rule_trigonal(symtau::normalize(implied)).has_value());
}

TEST_CASE("five-gonal window") {
  CurveSpec spec;
  spec.genus = 16;
  spec.pencils.push_back({5, true, TriState::unknown});
  auto w = symtau::rule_five_gonal(symtau::normalize(spec));
  REQUIRE(w.has_value());
  CHECK(w->first == Rational(4));
  CHECK(w->second == Rational(9));

  // Needs g >= 16.
  spec.genus = 15;
  CHECK_FALSE(symtau::rule_five_gonal(symtau::normalize(spec)).has_value());

  // Gonality must be exactly 5: a lower-degree pencil disqualifies.  (The
  // degree-4 pencil is declared with a base point so that the coprime-degree
  // genus bound for pairs of base-point-free pencils does not reject the
  // specification outright; the rule still sees the smaller degree.)
  CurveSpec low;
  low.genus = 16;
  low.pencils.push_back({5, true, TriState::unknown});
  low.pencils.push_back({4, false, TriState::unknown});
  CHECK_FALSE(symtau::rule_five_gonal(symtau::normalize(low)).has_value());

  // A hyperelliptic curve is excluded even when a degree-5 pencil is listed.
  // (normalize would already reject this pair, so build the normalized form
  // by hand to exercise the rule's own gate.)
  symtau::NormalizedSpec hyp;
  hyp.spec.genus = 16;
  hyp.spec.hyperelliptic = TriState::yes;
  hyp.spec.pencils.push_back({5, true, TriState::unknown});
  CHECK_FALSE(symtau::rule_five_gonal(hyp).has_value());
}

TEST_CASE("triple cover exactness") {
  auto v = symtau::rule_triple_cover_exact(CoverDecl{3, 1, std::nullopt}, 26);
  REQUIRE(v.has_value());
  CHECK(*v == Rational(23, 2));

  // Wrong degree.
  CHECK_FALSE(symtau::rule_triple_cover_exact(CoverDecl{2, 1, std::nullopt}, 26).has_value());
  // g below the floor: needs g >= max(9h+4, 26) = 26 for h = 1.
  CHECK_FALSE(symtau::rule_triple_cover_exact(CoverDecl{3, 1, std::nullopt}, 25).has_value());
  // h = 3 needs g >= 31 and an asserted degree-2 pencil on the target (a
  // genus-3 target does not carry one automatically).
  CHECK(symtau::rule_triple_cover_exact(CoverDecl{3, 3, true}, 31).has_value());
  CHECK(*symtau::rule_triple_cover_exact(CoverDecl{3, 3, true}, 31) == Rational(11));
  CHECK_FALSE(symtau::rule_triple_cover_exact(CoverDecl{3, 3, true}, 30).has_value());
  CHECK_FALSE(symtau::rule_triple_cover_exact(CoverDecl{3, 3, std::nullopt}, 31).has_value());
  // Target must carry a degree-2 pencil.
  CHECK_FALSE(symtau::rule_triple_cover_exact(CoverDecl{3, 4, std::nullopt}, 40).has_value());
  CHECK(symtau::rule_triple_cover_exact(CoverDecl{3, 4, true}, 40).has_value());
}

TEST_CASE("brill-noether number and gonality bound") {
  // rho(4, 1, 3) = 4 - 2*(4-3+1) = 0: trigonal genus-4 curves exist.
  CHECK(symtau::brill_noether_rho(4, 1, 3) == 0);
  CHECK(symtau::brill_noether_rho(10, 1, 6) == 0);
  CHECK(symtau::brill_noether_rho(7, 1, 5) == 1);
  CHECK(symtau::brill_noether_rho(7, 1, 4) == -1);

  CHECK(symtau::gonality_bound(7) == 5);
  CHECK(symtau::gonality_bound(2) == 2);
  CHECK(symtau::gonality_bound(3) == 3);
  CHECK(symtau::gonality_bound(4) == 3);
  CHECK(symtau::gonality_bound(10) == 6);
}

TEST_CASE("classification from a known slope") {
  // g = 33, tau = 25 >= (3g+1)/4 = 25: double cover of genus (33-25)/2 = 4.
  Classification c = symtau::classify_from_tau(33, Scalar::of(25, 33));
  CHECK(c.kind == Classification::Kind::double_cover);
  CHECK(c.target_genus == 4);

  // tau = 26 at g = 33 gives (g-tau)/2 = 7/2: no integral target genus.
  c = symtau::classify_from_tau(33, Scalar::of(26, 33));
  CHECK(c.kind == Classification::Kind::infeasible);

  // Below the threshold: no structural consequence.
  c = symtau::classify_from_tau(33, Scalar::of(20, 33));
  CHECK(c.kind == Classification::Kind::none);
  c = symtau::classify_from_tau(9, Scalar::root(9));
  CHECK(c.kind == Classification::Kind::none);

  CHECK_THROWS_AS(symtau::classify_from_tau(5, Scalar::of(5, 5)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// solve(): integration over full specifications
// ---------------------------------------------------------------------------

namespace {

CurveSpec make_spec(long genus) {
  CurveSpec s;
  s.genus = genus;
  return s;
}

}  // namespace

TEST_CASE("solve: bare genus gives the universal window") {
  TauResult r = symtau::solve(make_spec(7));
  CHECK(r.consistent);
  CHECK_FALSE(r.exact);
  CHECK(r.lo == Scalar::root(7));
  CHECK(r.hi == Scalar::of(7, 7));
}

TEST_CASE("solve: hyperelliptic curves have tau = g") {
  for (long g = 2; g <= 12; ++g) {
    CurveSpec s = make_spec(g);
    s.hyperelliptic = TriState::yes;
    TauResult r = symtau::solve(s);
    CHECK(r.consistent);
    CHECK(r.exact);
    CHECK(r.lo == Scalar::of(g, g));
  }
}

TEST_CASE("solve: trigonal non-hyperelliptic gives g/2") {
  CurveSpec s = make_spec(10);
  s.hyperelliptic = TriState::no;
  s.pencils.push_back({3, true, TriState::unknown});
  TauResult r = symtau::solve(s);
  CHECK(r.exact);
  CHECK(r.lo == Scalar::of(5, 10));
}

TEST_CASE("solve: trigonality certifies pencil irreducibility downstream") {
  // With irreducibility unknown the low-degree rule is skipped at first, but
  // the trigonal rule still pins tau = g/2; the skip must be recorded.
  CurveSpec s = make_spec(10);
  s.hyperelliptic = TriState::no;
  s.pencils.push_back({3, true, TriState::unknown});
  TauResult r = symtau::solve(s);
  CHECK(r.exact);
  CHECK(r.lo == Scalar::of(5, 10));
  bool saw_skip = false;
  for (const auto& e : r.trace)
    if (e.outcome == RuleOutcome::skipped &&
        e.note.find("irreducibility of the pencil curve unknown") != std::string::npos)
      saw_skip = true;
  CHECK(saw_skip);
}

TEST_CASE("solve: five-gonal window at genus 16") {
  CurveSpec s = make_spec(16);
  s.pencils.push_back({5, true, TriState::unknown});
  TauResult r = symtau::solve(s);
  CHECK(r.consistent);
  CHECK_FALSE(r.exact);
  CHECK(r.lo == Scalar::of(4, 16));
  CHECK(r.hi == Scalar::of(9, 16));
}

TEST_CASE("solve: double cover of a genus-4 curve at g = 33") {
  CurveSpec s = make_spec(33);
  s.covers.push_back(CoverDecl{2, 4, std::nullopt});
  TauResult r = symtau::solve(s);
  CHECK(r.exact);
  CHECK(r.lo == Scalar::of(25, 33));
}

TEST_CASE("solve: bielliptic exact vs merely bounded") {
  CurveSpec s = make_spec(7);
  s.hyperelliptic = TriState::no;
  s.bielliptic = TriState::yes;
  TauResult r = symtau::solve(s);
  CHECK(r.exact);
  CHECK(r.lo == Scalar::of(5, 7));

  CurveSpec nb = make_spec(7);
  nb.hyperelliptic = TriState::no;
  nb.bielliptic = TriState::no;
  r = symtau::solve(nb);
  CHECK_FALSE(r.exact);
  CHECK(r.hi == Scalar::of(5, 7));
  CHECK(r.lo == Scalar::root(7));
}

TEST_CASE("solve: low-degree irreducible pencil") {
  CurveSpec s = make_spec(9);
  s.pencils.push_back({4, true, TriState::yes});
  TauResult r = symtau::solve(s);
  CHECK(r.exact);
  CHECK(r.lo == Scalar::of(3, 9));
  // The exact value coincides with sqrt(9): both rules must agree silently.
  CHECK(r.lo == Scalar::root(9));
}

TEST_CASE("solve: genus 2 cannot be non-hyperelliptic") {
  CurveSpec s = make_spec(2);
  s.hyperelliptic = TriState::no;
  CHECK_THROWS_AS(symtau::solve(s), SpecError);
}

TEST_CASE("solve: inconsistent data are reported, not thrown") {
  // Genus 9 with an irreducible degree-4 pencil forces tau = 3, but a
  // declared (2,2)-cover forces tau >= 9 - 4 = 5.  (The pair bound does not
  // fire: gcd(4, 2) = 2.)
  CurveSpec s = make_spec(9);
  s.pencils.push_back({4, true, TriState::yes});
  s.covers.push_back(CoverDecl{2, 2, std::nullopt});
  TauResult r = symtau::solve(s);
  CHECK_FALSE(r.consistent);
  REQUIRE(r.conflict_a >= 0);
  REQUIRE(r.conflict_b >= 0);
  REQUIRE(r.conflict_b < static_cast<int>(r.trace.size()));
  CHECK(r.trace[r.conflict_b].outcome == RuleOutcome::conflict);
  // The interval retains the last coherent state: lo <= hi still holds.
  CHECK(r.lo <= r.hi);
}

TEST_CASE("solve: declared effective class sharpens the lower bound") {
  CurveSpec s = make_spec(12);
  s.effective_classes.push_back({3, 1});
  TauResult r = symtau::solve(s);
  CHECK(r.lo == Scalar::of(4, 12));
}

TEST_CASE("solve: trace entries carry printable bounds") {
  CurveSpec s = make_spec(10);
  s.hyperelliptic = TriState::no;
  s.pencils.push_back({3, true, TriState::unknown});
  TauResult r = symtau::solve(s);
  REQUIRE_FALSE(r.trace.empty());
  for (const auto& e : r.trace) {
    CHECK_FALSE(e.rule.empty());
    CHECK_FALSE(symtau::render_trace_entry(e).empty());
    if (e.bound) {
      // Printed scalars re-parse to the identical value.
      auto back = Scalar::parse(e.bound->str(), e.bound->radicand());
      REQUIRE(back.has_value());
      CHECK(*back == *e.bound);
    }
  }
}

TEST_CASE("solve: deterministic output") {
  CurveSpec s = make_spec(26);
  s.covers.push_back(CoverDecl{3, 1, std::nullopt});
  TauResult a = symtau::solve(s);
  TauResult b = symtau::solve(s);
  CHECK(symtau::render_result(a, true) == symtau::render_result(b, true));
  CHECK(a.trace.size() == b.trace.size());
  CHECK(a.exact);
  CHECK(a.lo == Scalar::of(Rational(23, 2), 26));
}

TEST_CASE("solve: rendered results match the fixed formats") {
  CurveSpec s = make_spec(33);
  s.covers.push_back(CoverDecl{2, 4, std::nullopt});
  TauResult r = symtau::solve(s);
  CHECK(symtau::render_result(r, false) == "tau = 25\n");

  CurveSpec w = make_spec(16);
  w.pencils.push_back({5, true, TriState::unknown});
  r = symtau::solve(w);
  CHECK(symtau::render_result(r, false) == "tau in [4, 9]\n");

  CurveSpec bare = make_spec(7);
  r = symtau::solve(bare);
  CHECK(symtau::render_result(r, false) == "tau in [sqrt(7), 7]\n");
}
