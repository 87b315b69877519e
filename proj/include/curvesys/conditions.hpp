#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "curvesys/integer.hpp"
#include "curvesys/scheme.hpp"
#include "curvesys/solver.hpp"

namespace curvesys {

struct UnresolvableZero {
  CurveIndex i, j;
  friend bool operator==(const UnresolvableZero&, const UnresolvableZero&) = default;
};
struct FailedTriangle {
  CurveIndex i, j, k;
  friend bool operator==(const FailedTriangle&, const FailedTriangle&) = default;
};
struct FailedPluecker {
  CurveIndex i, j, k, l;
  friend bool operator==(const FailedPluecker&, const FailedPluecker&) = default;
};
struct FailedToz {
  Integer prime;
  Rational total;
  friend bool operator==(const FailedToz&, const FailedToz&) = default;
};

/// toz passes for this prime but the exact residue scan leaves no kappa class.
struct NoAllowedKappa {
  Integer prime;
  friend bool operator==(const NoAllowedKappa&, const NoAllowedKappa&) = default;
};

using Reason = std::variant<UnresolvableZero, FailedTriangle, FailedPluecker, FailedToz, NoAllowedKappa>;

// --- gcd triples -----------------------------------------------------------

/// Common value of the three pairwise gcds of (m_ij, m_ik, m_jk), if they agree.
std::optional<Integer> triple_gcd(const Scheme& s, CurveIndex i, CurveIndex j, CurveIndex k);

/// Every triple i<j<k whose pairwise gcds differ, lexicographic.
std::vector<FailedTriangle> triangle_failures(const Scheme& s);
/// First failing triple, or nullopt on pass. Requires nonzero entries.
std::optional<FailedTriangle> check_triangle(const Scheme& s);

// --- Pluecker relations ------------------------------------------------------

/// m_ij m_kl - m_ik m_jl + m_il m_jk for distinct indices (alternating in them).
Integer pluecker_mu(const Scheme& s, CurveIndex i, CurveIndex j, CurveIndex k, CurveIndex l);

/// m_ae mu_abcd - m_ad mu_abce + m_ac mu_abde - m_ab mu_acde; identically zero.
Integer pluecker_identity(const Scheme& s, CurveIndex a, CurveIndex b, CurveIndex c, CurveIndex d, CurveIndex e);

std::vector<FailedPluecker> pluecker_failures(const Scheme& s);
std::optional<FailedPluecker> check_pluecker_full(const Scheme& s);
/// Checks only mu_{1,i,i+1,j}, 1 < i, i+1 < j. Equivalent to the full check
/// when no entry is zero; throws PreconditionViolated otherwise.
std::optional<FailedPluecker> check_pluecker_reduced(const Scheme& s);

// --- toz ---------------------------------------------------------------------

struct TozPrime {
  Integer prime;
  unsigned nu = 0;                      // valuation of g_123
  std::vector<unsigned> valuations;     // per entry, column order
  std::vector<Rational> contributions;  // j = 2..N
  Rational total;
};

struct TozReport {
  Integer base_gcd = 1;
  std::vector<TozPrime> per_prime;  // prime divisors of g_123, increasing
  /// Every prime p < N with toz(m; p); zero when p does not divide g_123.
  std::vector<std::pair<Integer, Rational>> checked_primes;

  /// toz(m; p) for any prime p.
  Rational toz(const Integer& prime) const;
};

/// Requires nonzero entries and the gcd condition on the base triple (1,2,3).
TozReport toz_report(const Scheme& s);

std::vector<FailedToz> toz_failures(const Scheme& s);
std::optional<FailedToz> check_circledast(const Scheme& s);

enum class ScreenResult { SufficientPass, SufficientFail, Inconclusive };

/// Cheap sufficient tests; assumes the gcd and Pluecker conditions already hold.
ScreenResult quick_screen(const Scheme& s);

// --- verdict -----------------------------------------------------------------

struct Verdict {
  enum class Status { Realizable, NotRealizable };

  Status status = Status::NotRealizable;
  std::vector<Reason> reasons;
  std::optional<CurveSystem> witness;
  bool used_empty = false;
  std::optional<ReductionLog> reduction;
  // Populated when the reduced scheme has at least three curves and passes
  // the gcd condition.
  std::optional<TozReport> toz;
  std::optional<KappaConstraintSet> constraints;
  std::optional<Integer> kappa;
  // False when the toz test and the exact kappa scan disagree. The status
  // always follows the scan.
  bool toz_agrees = true;

  bool realizable() const { return status == Status::Realizable; }
};

/// Full torus decision: zero reduction, gcd triples, Pluecker relations, then
/// the toz test together with the exact kappa residue scan, then witness
/// construction. Realizable verdicts carry a verified witness for the input scheme.
Verdict decide_torus(const Scheme& s);

}  // namespace curvesys
