#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "curvesys/arith.hpp"
#include "curvesys/scheme.hpp"

namespace curvesys {

/// Bezout data for the base triple: x m'_13 - y m'_12 = 1 with m'_ij = m_ij / g_123.
struct XYWitness {
  Integer x;
  Integer y;
  Integer base_gcd;  // g_123
  Integer m12;       // m'_12
  Integer m13;       // m'_13
  Integer m23;       // m'_23
};

/// Allowed kappa classes for one prime divisor g of g_123.
///
/// Membership depends only on kappa mod g^nu (the allowed set is invariant
/// under kappa -> kappa + g_123), so residues are stored modulo `period`.
/// `check_modulus` = g^(nu+1) is the modulus the conditions are evaluated at.
struct KappaPrimeConstraint {
  Integer prime;
  unsigned nu = 0;
  Integer period;         // g^nu
  Integer check_modulus;  // g^(nu+1)
  std::vector<Integer> allowed;  // sorted residues in [0, period)

  bool allows(const Integer& kappa) const;
  /// The allowed residues lifted to modulo g^e, e >= nu.
  std::vector<Integer> allowed_mod(unsigned e) const;
};

struct KappaConstraintSet {
  Integer base_gcd = 1;
  std::vector<KappaPrimeConstraint> per_prime;

  bool unconstrained() const { return per_prime.empty(); }
  bool satisfiable() const;
  bool allows(const Integer& kappa) const;
  /// Number of allowed classes modulo g_123, i.e. the number of orbits.
  Integer orbit_count() const;
  /// Allowed kappa in [0, g_123), smallest first, at most `limit` of them.
  std::vector<Integer> representatives(std::size_t limit) const;
};

/// A solution normalized to gamma_1 = (1,0), gamma_j = (r_j, m_1j).
struct NormalizedWitness {
  Integer kappa;
  std::vector<Integer> r;  // r_2 .. r_N
  CurveSystem system;
};

/// Orbit representatives (1,0), (r, m) with 0 <= r < |m|, gcd(r, |m|) = 1.
std::vector<NormalizedWitness> solve_pair_orbits(const Integer& m);

/// Requires n >= 3, nonzero base triple, and the triangle condition on (1,2,3).
/// x is normalized into [1, |m'_12|].
XYWitness solve_xy(const Scheme& s);

/// Per-prime allowed kappa residues obtained by exhaustive scan.
KappaConstraintSet kappa_constraints(const Scheme& s, const XYWitness& w);
KappaConstraintSet kappa_constraints(const Scheme& s);

/// Number of forbidden kappa residues mod g for a 3-scheme.
Integer forbidden_count(const Scheme& s, const Integer& prime);

/// Builds and verifies the normalized system for a given kappa. For n == 2
/// kappa is r_2 itself.
NormalizedWitness construct_witness(const Scheme& s, const Integer& kappa);

/// One normalized witness per stabilizer orbit, up to `limit`.
std::vector<NormalizedWitness> enumerate_orbits(const Scheme& s, std::size_t limit);

/// 2x2 integer matrix (a b; c d) acting on column vectors (p, q).
struct Matrix2 {
  Integer a, b, c, d;
  Integer det() const { return a * d - b * c; }
};

CurveSystem sl2_act(const Matrix2& m, const CurveSystem& system);

/// True iff every non-empty class is primitive and all pairwise
/// intersections equal the scheme.
bool verify_system(const Scheme& s, const CurveSystem& system);

}  // namespace curvesys
