#include <doctest.h>

#include "curvesys/conditions.hpp"
#include "curvesys/error.hpp"
#include "curvesys/oracle.hpp"
#include "support.hpp"

using namespace curvesys;
using testing_support::S;

namespace {

Scheme rows(std::size_t n, const std::vector<std::vector<Integer>>& r) { return Scheme::from_upper_rows(n, r); }

bool is_toz_failure(const Verdict& v, long prime) {
  for (const auto& r : v.reasons)
    if (const auto* f = std::get_if<FailedToz>(&r); f && f->prime == prime) return true;
  return false;
}

}  // namespace

TEST_CASE("gcd triples") {
  CHECK(triple_gcd(S(3, {6, 10, 14}), 1, 2, 3) == Integer(2));
  CHECK_FALSE(check_triangle(S(3, {6, 10, 14})));
  CHECK(check_triangle(S(4, {5, 15, 15, 15, 15, 3})) == FailedTriangle{1, 2, 3});
  CHECK(triple_gcd(S(3, {1, 1, 1}), 1, 2, 3) == Integer(1));
  CHECK_THROWS_AS(check_triangle(S(3, {1, 0, 1})), PreconditionViolated);
  CHECK(triangle_failures(S(4, {5, 15, 15, 15, 15, 3})).size() == 4);
}

TEST_CASE("Pluecker relations") {
  const Scheme first = S(4, {1, 1, 1, 2, 1, -1});
  CHECK(pluecker_mu(first, 1, 2, 3, 4) == 0);
  CHECK(pluecker_mu(S(4, {1, 1, 1, 1, 1, 1}), 1, 2, 3, 4) == 1);
  const Scheme endemic = S(4, {5, 15, 15, 15, 15, 3});
  CHECK(pluecker_mu(endemic, 1, 2, 3, 4) == 15);
  CHECK(pluecker_mu(endemic, 2, 1, 3, 4) == -15);
  CHECK_THROWS_AS(pluecker_mu(endemic, 1, 1, 3, 4), IndexError);

  CHECK_FALSE(check_pluecker_full(first));
  CHECK_FALSE(check_pluecker_full(S(3, {1, 1, 1})));
  CHECK(check_pluecker_full(endemic) == FailedPluecker{1, 2, 3, 4});
  CHECK(check_pluecker_reduced(endemic) == FailedPluecker{1, 2, 3, 4});
  CHECK_THROWS_AS(check_pluecker_reduced(S(4, {1, 1, 1, 0, 1, 1})), PreconditionViolated);
}

TEST_CASE("Pluecker five-term identity vanishes") {
  std::vector<Integer> e;
  for (long v = 1; v <= 10; ++v) e.emplace_back(v);
  const Scheme s(5, e);
  CHECK(pluecker_identity(s, 1, 2, 3, 4, 5) == 0);
  CHECK_THROWS_AS(pluecker_identity(s, 1, 2, 3, 4, 4), IndexError);
  for (int t = 0; t < 1000; ++t) {
    const Scheme r = testing_support::random_scheme(5, 1000);
    CHECK(pluecker_identity(r, 1, 2, 3, 4, 5) == 0);
  }
}

TEST_CASE("reduced Pluecker check agrees with the full check") {
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = testing_support::uniform(4, 6);
    const Scheme r = testing_support::random_nonzero_scheme(n, 4);
    CHECK(check_pluecker_reduced(r).has_value() == check_pluecker_full(r).has_value());
    const Scheme v = testing_support::random_realizable_nonzero(n, 7);
    CHECK_FALSE(check_pluecker_reduced(v));
    CHECK_FALSE(check_pluecker_full(v));
  }
}

TEST_CASE("toz values") {
  const Scheme first = rows(4, {{1, 1, 2}, {1, 1}, {-1}});
  CHECK(toz_report(first).toz(2) == 0);
  CHECK(toz_report(first).toz(3) == 0);
  CHECK(toz_report(scale(first, 3)).toz(3) == 3);
  CHECK(toz_report(rows(4, {{3, 3, 6}, {3, 3}, {-3}})).toz(3) == 3);
  const TozReport r = toz_report(rows(4, {{9, 9, 6}, {9, 3}, {-3}}));
  CHECK(r.toz(3) == Rational(7, 3));
  CHECK(r.toz(2) == 0);
  CHECK(r.base_gcd == 9);
  REQUIRE(r.per_prime.size() == 1);
  CHECK(r.per_prime[0].nu == 2);
  CHECK(r.per_prime[0].contributions == std::vector<Rational>{1, 1, Rational(1, 3)});
  CHECK(r.checked_primes.size() == 2);

  const Scheme six = rows(6, {{3, 3, 1, -1, 1}, {6, 4, 2, 1}, {2, 4, -1}, {2, -1}, {-1}});
  // Columns 2 and 3 both have constant positive 3-valuation.
  CHECK(toz_report(six).toz(3) == 2);
  CHECK(toz_report(six).toz(5) == 0);
  CHECK(toz_report(scale(six, 3)).toz(3) == Rational(2) + Rational(1, 3) * 3);
  CHECK(toz_report(scale(six, 5)).toz(5) == 5);
  const Scheme bold = rows(6, {{15, 20, 5, -15, -10}, {25, 10, 15, -5}, {5, 5, 10}, {5, 5}, {-5}});
  CHECK(toz_report(bold).toz(5) == 4);
  CHECK(toz_report(bold).toz(3) == 0);

  CHECK_THROWS_AS(toz_report(S(3, {6, 10, 0})), PreconditionViolated);
}

TEST_CASE("toz bounds and uniform scaling") {
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = testing_support::uniform(3, 6);
    const Scheme s = testing_support::random_realizable_nonzero(n, 6);
    if (check_triangle(s)) continue;
    const TozReport r = toz_report(s);
    for (const auto& tp : r.per_prime) {
      for (const auto& c : tp.contributions) CHECK((c == 0 || (c > 0 && c <= 1)));
      CHECK(tp.total < static_cast<long>(n));
    }
    for (long p : {2L, 3L, 5L}) {
      if (p >= static_cast<long>(n)) continue;
      const Scheme scaled = scale(testing_support::random_realizable_nonzero(n, 6), p);
      bool constant = true;
      const unsigned v0 = valuation(scaled.entries().front(), p);
      for (const auto& e : scaled.entries()) constant = constant && valuation(e, p) == v0;
      if (!constant || check_triangle(scaled)) continue;
      CHECK(toz_report(scaled).toz(p) == static_cast<long>(n) - 1);
      CHECK_FALSE(decide_torus(scaled).realizable());
    }
  }
}

TEST_CASE("circledast") {
  CHECK(check_circledast(S(3, {6, 10, 14})) == FailedToz{2, 2});
  CHECK_FALSE(check_circledast(rows(4, {{9, 9, 6}, {9, 3}, {-3}})));
  CHECK_FALSE(check_circledast(S(2, {12})));
}

TEST_CASE("quick screen") {
  CHECK(quick_screen(S(4, {1, 1, 1, 2, 1, -1})) == ScreenResult::SufficientPass);
  CHECK(quick_screen(S(3, {2, 2, 2})) == ScreenResult::SufficientFail);
  CHECK(quick_screen(rows(4, {{9, 9, 6}, {9, 3}, {-3}})) == ScreenResult::Inconclusive);
  for (int t = 0; t < 300; ++t) {
    const Scheme s = testing_support::random_nonzero_scheme(testing_support::uniform(3, 5), 12);
    if (check_triangle(s) || check_pluecker_full(s)) continue;
    const auto screen = quick_screen(s);
    if (screen == ScreenResult::SufficientPass) CHECK(decide_torus(s).realizable());
    if (screen == ScreenResult::SufficientFail) CHECK_FALSE(decide_torus(s).realizable());
  }
}

TEST_CASE("decide_torus verdicts") {
  SUBCASE("toz failure") {
    const Verdict v = decide_torus(S(3, {6, 10, 14}));
    CHECK_FALSE(v.realizable());
    REQUIRE(v.reasons.size() == 1);
    CHECK(std::get<FailedToz>(v.reasons[0]) == FailedToz{2, 2});
    CHECK(is_toz_failure(v, 2));
  }
  SUBCASE("realizable with canonical witness") {
    const Verdict v = decide_torus(S(3, {2, 2, 4}));
    REQUIRE(v.realizable());
    CHECK(*v.witness == testing_support::system_of({{1, 0}, {3, 2}, {1, 2}}));
    CHECK(v.kappa == Integer(1));
    CHECK_FALSE(v.used_empty);
  }
  SUBCASE("unresolvable zero") {
    const Verdict v = decide_torus(S(3, {3, 2, 0}));
    CHECK_FALSE(v.realizable());
    REQUIRE(v.reasons.size() == 1);
    CHECK(std::holds_alternative<UnresolvableZero>(v.reasons[0]));
  }
  SUBCASE("all failing triples reported with input indices") {
    const Verdict v = decide_torus(S(4, {5, 15, 15, 15, 15, 3}));
    CHECK_FALSE(v.realizable());
    CHECK(v.reasons.size() == 4);
    for (const auto& r : v.reasons) CHECK(std::holds_alternative<FailedTriangle>(r));
    // curve 2 duplicates curve 1 ; the triple on the remaining curves fails
    const Verdict w = decide_torus(S(4, {0, 2, 2, 6, 6, 3}));
    REQUIRE(w.reasons.size() == 1);
    CHECK(std::get<FailedTriangle>(w.reasons[0]) == FailedTriangle{1, 3, 4});
  }
  SUBCASE("empty curves and duplicates") {
    const Verdict v = decide_torus(S(3, {0, 1, 0}));
    REQUIRE(v.realizable());
    CHECK(v.used_empty);
    CHECK(verify_system(S(3, {0, 1, 0}), *v.witness));
    const Verdict z = decide_torus(Scheme::zero(4));
    CHECK(z.realizable());
    CHECK(decide_torus(S(3, {3, 3, 0})).realizable());
  }
  SUBCASE("small sizes") {
    CHECK(decide_torus(Scheme(0, {})).realizable());
    CHECK(decide_torus(Scheme(1, {})).realizable());
    CHECK(decide_torus(S(2, {-6})).realizable());
  }
}

TEST_CASE("toz and the exact residue scan can disagree") {
  // Two columns forbid distinct classes inside the class forced by
  // integrality; toz only adds 1/4 for each.
  const Scheme forced = S(5, {8, -8, -16, 2, 6, -2, -2, -14, 10, -2});
  CHECK(toz_report(forced).toz(2) == Rational(3, 2));
  const Verdict a = decide_torus(forced);
  CHECK_FALSE(a.realizable());
  CHECK_FALSE(a.toz_agrees);
  REQUIRE(a.reasons.size() == 1);
  CHECK(std::get<NoAllowedKappa>(a.reasons[0]) == NoAllowedKappa{2});
  CHECK_FALSE(oracle_realizable(forced).realizable);

  // Columns 4 and 5 forbid the same class, counted twice by toz.
  const Scheme shared = S(5, {27, -18, 9, -9, -9, 9, -63, 18, 9, -27});
  CHECK(toz_report(shared).toz(3) == 3);
  const Verdict b = decide_torus(shared);
  CHECK(b.realizable());
  CHECK_FALSE(b.toz_agrees);
  CHECK(oracle_realizable(shared).realizable);
  CHECK(verify_system(shared, *b.witness));

  CHECK(decide_torus(S(3, {6, 10, 14})).toz_agrees);
}

TEST_CASE("all-equal schemes") {
  for (long k = 1; k <= 9; ++k) {
    CHECK(decide_torus(S(3, {k, k, k})).realizable() == (k % 2 == 1));
    CHECK(decide_torus(S(3, {-k, -k, -k})).realizable() == (k % 2 == 1));
    CHECK_FALSE(decide_torus(S(4, {k, k, k, k, k, k})).realizable());
  }
}

TEST_CASE("verdicts are invariant under permutations") {
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = testing_support::uniform(3, 5);
    const Scheme s = t % 2 ? testing_support::random_realizable_nonzero(n, 5)
                           : testing_support::random_nonzero_scheme(n, 12);
    const bool base = decide_torus(s).realizable();
    for (int k = 0; k < 3; ++k)
      CHECK(decide_torus(permute(s, testing_support::random_permutation(n))).realizable() == base);
  }
}

TEST_CASE("scaled vector schemes agree with the oracle") {
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = testing_support::uniform(3, 5);
    const Scheme s = scale(testing_support::random_realizable_nonzero(n, 3), testing_support::uniform(1, 6));
    if (abs_value(s.upper(1, 2)) > 2000) continue;
    const Verdict v = decide_torus(s);
    CHECK(v.realizable() == oracle_realizable(s).realizable);
    if (v.realizable()) CHECK(verify_system(s, *v.witness));
  }
}
