#include "curvesys/conditions.hpp"

#include <algorithm>

#include "curvesys/arith.hpp"
#include "curvesys/error.hpp"

namespace curvesys {

namespace {

std::vector<Integer> primes_below(std::size_t bound) {
  std::vector<Integer> out;
  for (std::size_t p = 2; p < bound; ++p) {
    bool prime = true;
    for (std::size_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) out.emplace_back(p);
  }
  return out;
}

}  // namespace

std::optional<Integer> triple_gcd(const Scheme& s, CurveIndex i, CurveIndex j, CurveIndex k) {
  const Integer mij = s.get(i, j), mik = s.get(i, k), mjk = s.get(j, k);
  Integer g = gcd(mij, mik);
  if (gcd(mij, mjk) != g || gcd(mik, mjk) != g) return std::nullopt;
  return g;
}

std::vector<FailedTriangle> triangle_failures(const Scheme& s) {
  std::vector<FailedTriangle> out;
  const std::size_t n = s.size();
  for (CurveIndex i = 1; i <= n; ++i)
    for (CurveIndex j = i + 1; j <= n; ++j)
      for (CurveIndex k = j + 1; k <= n; ++k)
        if (!triple_gcd(s, i, j, k)) out.push_back({i, j, k});
  return out;
}

std::optional<FailedTriangle> check_triangle(const Scheme& s) {
  if (s.has_zero_entry()) throw PreconditionViolated("check_triangle requires nonzero entries");
  auto failures = triangle_failures(s);
  if (failures.empty()) return std::nullopt;
  return failures.front();
}

Integer pluecker_mu(const Scheme& s, CurveIndex i, CurveIndex j, CurveIndex k, CurveIndex l) {
  if (i == j || i == k || i == l || j == k || j == l || k == l) throw IndexError("Pluecker indices must be distinct");
  return s.get(i, j) * s.get(k, l) - s.get(i, k) * s.get(j, l) + s.get(i, l) * s.get(j, k);
}

Integer pluecker_identity(const Scheme& s, CurveIndex a, CurveIndex b, CurveIndex c, CurveIndex d, CurveIndex e) {
  const std::array<CurveIndex, 5> idx{a, b, c, d, e};
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y)
      if (idx[x] == idx[y]) throw IndexError("identity indices must be distinct");
  return s.get(a, e) * pluecker_mu(s, a, b, c, d) - s.get(a, d) * pluecker_mu(s, a, b, c, e) +
         s.get(a, c) * pluecker_mu(s, a, b, d, e) - s.get(a, b) * pluecker_mu(s, a, c, d, e);
}

std::vector<FailedPluecker> pluecker_failures(const Scheme& s) {
  std::vector<FailedPluecker> out;
  const std::size_t n = s.size();
  for (CurveIndex i = 1; i <= n; ++i)
    for (CurveIndex j = i + 1; j <= n; ++j)
      for (CurveIndex k = j + 1; k <= n; ++k)
        for (CurveIndex l = k + 1; l <= n; ++l)
          if (pluecker_mu(s, i, j, k, l) != 0) out.push_back({i, j, k, l});
  return out;
}

std::optional<FailedPluecker> check_pluecker_full(const Scheme& s) {
  const std::size_t n = s.size();
  for (CurveIndex i = 1; i <= n; ++i)
    for (CurveIndex j = i + 1; j <= n; ++j)
      for (CurveIndex k = j + 1; k <= n; ++k)
        for (CurveIndex l = k + 1; l <= n; ++l)
          if (pluecker_mu(s, i, j, k, l) != 0) return FailedPluecker{i, j, k, l};
  return std::nullopt;
}

std::optional<FailedPluecker> check_pluecker_reduced(const Scheme& s) {
  if (s.has_zero_entry()) throw PreconditionViolated("the reduced Pluecker check requires nonzero entries");
  const std::size_t n = s.size();
  for (CurveIndex i = 2; i + 2 <= n; ++i)
    for (CurveIndex j = i + 2; j <= n; ++j)
      if (pluecker_mu(s, 1, i, i + 1, j) != 0) return FailedPluecker{1, i, i + 1, j};
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Rational TozReport::toz(const Integer& prime) const {
  for (const auto& p : per_prime)
    if (p.prime == prime) return p.total;
  return 0;
}

TozReport toz_report(const Scheme& s) {
  TozReport report;
  const std::size_t n = s.size();
  if (n < 3) return report;
  if (s.has_zero_entry()) throw PreconditionViolated("toz requires nonzero entries");
  const auto g = triple_gcd(s, 1, 2, 3);
  if (!g) throw PreconditionViolated("toz requires the gcd condition on the base triple");
  report.base_gcd = *g;

  if (*g > 1) {
    for (const auto& pp : factorize(*g).pairs) {
      TozPrime tp;
      tp.prime = pp.prime;
      tp.nu = pp.exponent;
      for (const auto& e : s.entries()) tp.valuations.push_back(valuation(e, pp.prime));
      const auto nu_at = [&](CurveIndex i, CurveIndex j) { return tp.valuations[Scheme::position(i, j)]; };

      tp.contributions.emplace_back(1);  // j = 2
      const unsigned v12 = nu_at(1, 2), v13 = nu_at(1, 3), v23 = nu_at(2, 3);
      tp.contributions.emplace_back(v12 > 0 && v12 == v13 && v13 == v23 ? 1 : 0);
      for (CurveIndex j = 4; j <= n; ++j) {
        const unsigned a = nu_at(1, j), b = nu_at(2, j), c = nu_at(3, j);
        if (a > 0 && a == b && b == c && a <= tp.nu) {
          // g^(nu_j - nu) with nu_j = min(nu_1j, nu_2j) = a.
          tp.contributions.emplace_back(Rational(1, pow_int(pp.prime, tp.nu - a)));
        } else {
          tp.contributions.emplace_back(0);
        }
      }
      for (const auto& c : tp.contributions) tp.total += c;
      report.per_prime.push_back(std::move(tp));
    }
  }
  for (const auto& p : primes_below(n)) report.checked_primes.emplace_back(p, report.toz(p));
  return report;
}

std::vector<FailedToz> toz_failures(const Scheme& s) {
  std::vector<FailedToz> out;
  const TozReport report = toz_report(s);
  for (const auto& [prime, total] : report.checked_primes)
    if (total >= prime) out.push_back({prime, total});
  return out;
}

std::optional<FailedToz> check_circledast(const Scheme& s) {
  auto failures = toz_failures(s);
  if (failures.empty()) return std::nullopt;
  return failures.front();
}

ScreenResult quick_screen(const Scheme& s) {
  if (s.has_zero_entry()) throw PreconditionViolated("quick_screen requires nonzero entries");
  const std::size_t n = s.size();
  const auto small_primes = primes_below(n + 1);
  for (CurveIndex i = 1; i <= n; ++i) {
    for (CurveIndex j = i + 1; j <= n; ++j) {
      for (CurveIndex k = j + 1; k <= n; ++k) {
        const auto g = triple_gcd(s, i, j, k);
        if (!g) continue;
        if (*g == 1) return ScreenResult::SufficientPass;
        if (std::none_of(small_primes.begin(), small_primes.end(),
                         [&](const Integer& p) { return *g % p == 0; })) {
          return ScreenResult::SufficientPass;
        }
      }
    }
  }
  for (const auto& p : primes_below(n)) {
    const unsigned first = valuation(s.entries().front(), p);
    if (first == 0) continue;
    const bool constant = std::all_of(s.entries().begin(), s.entries().end(),
                                      [&](const Integer& e) { return valuation(e, p) == first; });
    if (constant) return ScreenResult::SufficientFail;
  }
  return ScreenResult::Inconclusive;
}

// ---------------------------------------------------------------------------

Verdict decide_torus(const Scheme& s) {
  Verdict v;
  auto reduction = reduce_zeros(s);
  if (const auto* bad = std::get_if<Unresolvable>(&reduction)) {
    v.reasons.emplace_back(UnresolvableZero{bad->i, bad->j});
    return v;
  }
  ReductionLog log = std::get<ReductionLog>(std::move(reduction));
  const Scheme& r = log.reduced;
  const auto original = [&](CurveIndex k) { return log.kept[k - 1]; };

  const auto triangles = triangle_failures(r);
  for (const auto& f : triangles) v.reasons.emplace_back(FailedTriangle{original(f.i), original(f.j), original(f.k)});
  if (!triangles.empty()) {
    v.reduction = std::move(log);
    return v;
  }
  const auto quads = pluecker_failures(r);
  for (const auto& f : quads)
    v.reasons.emplace_back(FailedPluecker{original(f.i), original(f.j), original(f.k), original(f.l)});
  if (!quads.empty()) {
    v.reduction = std::move(log);
    return v;
  }

  NormalizedWitness reduced_witness;
  if (r.size() >= 3) {
    v.toz = toz_report(r);
    v.constraints = kappa_constraints(r);
    // toz counts coinciding forbidden classes separately and ignores how a
    // forced class shrinks the range, so it can disagree with the exact scan
    // in both directions. The scan decides; toz names the reason when it agrees.
    for (const auto& c : v.constraints->per_prime) {
      const Rational total = v.toz->toz(c.prime);
      const bool toz_fails = total >= c.prime;
      if (toz_fails != c.allowed.empty()) v.toz_agrees = false;
      if (!c.allowed.empty()) continue;
      if (toz_fails) v.reasons.emplace_back(FailedToz{c.prime, total});
      else v.reasons.emplace_back(NoAllowedKappa{c.prime});
    }
    if (!v.reasons.empty()) {
      v.reduction = std::move(log);
      return v;
    }
    const auto kappas = v.constraints->representatives(1);
    if (kappas.empty()) throw InternalFault("satisfiable constraints without a representative: " + to_string(s));
    reduced_witness = construct_witness(r, kappas.front());
    v.kappa = kappas.front();
  } else if (r.size() == 2) {
    reduced_witness = solve_pair_orbits(r.upper(1, 2)).front();
  } else {
    reduced_witness = construct_witness(r, 0);
  }

  CurveSystem lifted = log.lift(reduced_witness.system);
  if (!verify_system(s, lifted)) throw InternalFault("lifted witness does not realize " + to_string(s));
  v.status = Verdict::Status::Realizable;
  v.used_empty = log.used_empty();
  v.witness = std::move(lifted);
  v.reduction = std::move(log);
  return v;
}

}  // namespace curvesys
