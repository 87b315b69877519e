#include "curvesys/solver.hpp"

#include <algorithm>
#include <limits>

#include "curvesys/conditions.hpp"
#include "curvesys/error.hpp"

namespace curvesys {

namespace {

// Residue scans run in machine words; the prime-power period is capped so a
// scan stays well under a second.
constexpr unsigned kMaxPeriodBits = 24;
constexpr std::size_t kMaxEnumeratedOrbits = std::size_t{1} << 20;

std::uint64_t to_word(const Integer& v, const Integer& modulus) {
  return static_cast<std::uint64_t>(mod_floor(v, modulus));
}

void require_nonzero(const Scheme& s, const char* what) {
  if (s.has_zero_entry()) throw PreconditionViolated(std::string(what) + " requires nonzero entries");
}

}  // namespace

bool KappaPrimeConstraint::allows(const Integer& kappa) const {
  return std::binary_search(allowed.begin(), allowed.end(), mod_floor(kappa, period));
}

std::vector<Integer> KappaPrimeConstraint::allowed_mod(unsigned e) const {
  if (e < nu) throw DomainError("allowed_mod needs an exponent of at least nu");
  const Integer modulus = pow_int(prime, e);
  std::vector<Integer> out;
  for (Integer base = 0; base < modulus; base += period)
    for (const auto& r : allowed) out.push_back(base + r);
  std::sort(out.begin(), out.end());
  return out;
}

bool KappaConstraintSet::satisfiable() const {
  return std::all_of(per_prime.begin(), per_prime.end(), [](const auto& c) { return !c.allowed.empty(); });
}

bool KappaConstraintSet::allows(const Integer& kappa) const {
  return std::all_of(per_prime.begin(), per_prime.end(), [&](const auto& c) { return c.allows(kappa); });
}

Integer KappaConstraintSet::orbit_count() const {
  Integer count = 1;
  for (const auto& c : per_prime) count *= c.allowed.size();
  return count;
}

std::vector<Integer> KappaConstraintSet::representatives(std::size_t limit) const {
  std::vector<Integer> out;
  if (limit == 0 || !satisfiable()) return out;
  const Integer count = orbit_count();
  if (count <= kMaxEnumeratedOrbits) {
    std::vector<ResidueClass> classes{ResidueClass()};
    for (const auto& c : per_prime) {
      std::vector<ResidueClass> next;
      next.reserve(classes.size() * c.allowed.size());
      for (const auto& acc : classes) {
        for (const auto& r : c.allowed) {
          const std::array<ResidueClass, 2> pair{acc, ResidueClass(c.period, r)};
          next.push_back(crt(pair));
        }
      }
      classes = std::move(next);
    }
    for (const auto& rc : classes) out.push_back(rc.residue);
    std::sort(out.begin(), out.end());
    if (out.size() > limit) out.resize(limit);
    return out;
  }
  for (Integer kappa = 0; out.size() < limit && kappa < base_gcd; ++kappa)
    if (allows(kappa)) out.push_back(kappa);
  return out;
}

std::vector<NormalizedWitness> solve_pair_orbits(const Integer& m) {
  if (m == 0) throw DomainError("solve_pair_orbits requires m != 0");
  std::vector<NormalizedWitness> out;
  const Integer bound = abs_value(m);
  for (Integer r = 0; r < bound; ++r) {
    if (gcd(r, bound) != 1) continue;
    out.push_back({r, {r}, {CurveClass::vector(1, 0), CurveClass::vector(r, m)}});
  }
  return out;
}

XYWitness solve_xy(const Scheme& s) {
  if (s.size() < 3) throw PreconditionViolated("solve_xy requires at least three curves");
  const Integer &m12 = s.upper(1, 2), &m13 = s.upper(1, 3), &m23 = s.upper(2, 3);
  if (m12 == 0 || m13 == 0 || m23 == 0) throw PreconditionViolated("solve_xy requires a nonzero base triple");
  const Integer g = gcd(m12, m13);
  if (gcd(m12, m23) != g || gcd(m13, m23) != g) throw PreconditionViolated("base triple violates the gcd condition");
  XYWitness w;
  w.base_gcd = g;
  w.m12 = m12 / g;
  w.m13 = m13 / g;
  w.m23 = m23 / g;
  const Integer period = abs_value(w.m12);
  w.x = inv_mod(w.m13, period);
  if (w.x == 0) w.x = period;
  const Integer numerator = w.x * w.m13 - 1;
  if (numerator % w.m12 != 0) throw InternalFault("Bezout normalization failed");
  w.y = numerator / w.m12;
  return w;
}

KappaConstraintSet kappa_constraints(const Scheme& s, const XYWitness& w) {
  require_nonzero(s, "kappa_constraints");
  KappaConstraintSet out;
  out.base_gcd = w.base_gcd;
  if (w.base_gcd == 1) return out;

  const std::size_t n = s.size();
  for (const auto& pp : factorize(w.base_gcd).pairs) {
    KappaPrimeConstraint c;
    c.prime = pp.prime;
    c.nu = pp.exponent;
    c.period = pow_int(pp.prime, c.nu);
    c.check_modulus = c.period * pp.prime;
    if (c.period > (Integer(1) << kMaxPeriodBits)) {
      throw DomainError("prime power " + to_string(c.period) + " exceeds the residue scan limit");
    }
    const auto g = static_cast<std::uint64_t>(pp.prime);
    const auto period = static_cast<std::uint64_t>(c.period);
    const auto modulus = static_cast<std::uint64_t>(c.check_modulus);

    // r_2 = x m'_23 + kappa m'_12 and r_3 = y m'_23 + kappa m'_13 must be units mod g.
    const std::uint64_t r2_0 = to_word(w.x * w.m23, pp.prime), r2_k = to_word(w.m12, pp.prime);
    const std::uint64_t r3_0 = to_word(w.y * w.m23, pp.prime), r3_k = to_word(w.m13, pp.prime);

    // g_123 r_j = y m_2j - x m_3j + kappa m_1j.
    struct Column {
      std::uint64_t constant;
      std::uint64_t slope;
      bool strict;  // g | m_1j: the g-valuation must be exactly nu
    };
    std::vector<Column> columns;
    for (CurveIndex j = 4; j <= n; ++j) {
      const Integer constant = w.y * s.upper(2, j) - w.x * s.upper(3, j);
      columns.push_back({to_word(constant, c.check_modulus), to_word(s.upper(1, j), c.check_modulus),
                         s.upper(1, j) % pp.prime == 0});
    }

    for (std::uint64_t kappa = 0; kappa < period; ++kappa) {
      if ((r2_0 + kappa % g * r2_k) % g == 0) continue;
      if ((r3_0 + kappa % g * r3_k) % g == 0) continue;
      bool ok = true;
      for (const auto& col : columns) {
        const auto scaled = static_cast<std::uint64_t>(static_cast<unsigned __int128>(kappa) * col.slope % modulus);
        const std::uint64_t d = (col.constant + scaled) % modulus;
        if (d % period != 0 || (col.strict && d == 0)) {
          ok = false;
          break;
        }
      }
      if (ok) c.allowed.emplace_back(kappa);
    }
    out.per_prime.push_back(std::move(c));
  }
  return out;
}

KappaConstraintSet kappa_constraints(const Scheme& s) { return kappa_constraints(s, solve_xy(s)); }

Integer forbidden_count(const Scheme& s, const Integer& prime) {
  if (s.size() != 3) throw DomainError("forbidden_count is defined for 3-schemes");
  if (s.has_zero_entry()) throw DomainError("forbidden_count requires nonzero entries");
  if (!is_probable_prime(prime)) throw DomainError(to_string(prime) + " is not prime");
  XYWitness w;
  try {
    w = solve_xy(s);
  } catch (const PreconditionViolated& e) {
    throw DomainError(e.what());
  }
  if (w.base_gcd % prime != 0) return 0;
  Integer allowed = 0;
  for (Integer kappa = 0; kappa < prime; ++kappa) {
    if ((w.x * w.m23 + kappa * w.m12) % prime == 0) continue;
    if ((w.y * w.m23 + kappa * w.m13) % prime == 0) continue;
    ++allowed;
  }
  return prime - allowed;
}

NormalizedWitness construct_witness(const Scheme& s, const Integer& kappa) {
  const std::size_t n = s.size();
  NormalizedWitness out;
  out.kappa = kappa;
  if (n == 0) return out;
  out.system.push_back(CurveClass::vector(1, 0));
  if (n == 1) return out;
  require_nonzero(s, "construct_witness");

  if (n == 2) {
    if (gcd(kappa, s.upper(1, 2)) != 1) throw ConstraintViolation("r_2 is not coprime to m_12");
    out.r.push_back(kappa);
  } else {
    if (const auto fail = check_pluecker_full(s)) {
      throw PreconditionViolated("scheme violates the Pluecker relation at a quadruple");
    }
    const XYWitness w = solve_xy(s);
    out.r.push_back(w.x * w.m23 + kappa * w.m12);
    out.r.push_back(w.y * w.m23 + kappa * w.m13);
    for (CurveIndex j = 4; j <= n; ++j) {
      const Integer d = w.y * s.upper(2, j) - w.x * s.upper(3, j) + kappa * s.upper(1, j);
      if (d % w.base_gcd != 0) {
        throw ConstraintViolation("kappa=" + to_string(kappa) + " leaves r_" + std::to_string(j) + " non-integral");
      }
      out.r.push_back(d / w.base_gcd);
    }
  }
  for (CurveIndex j = 2; j <= n; ++j) {
    if (gcd(out.r[j - 2], s.upper(1, j)) != 1) {
      throw ConstraintViolation("kappa=" + to_string(kappa) + " makes gamma_" + std::to_string(j) +
                                " non-primitive");
    }
    out.system.push_back(CurveClass::vector(out.r[j - 2], s.upper(1, j)));
  }
  if (!verify_system(s, out.system)) throw InternalFault("constructed system does not realize the scheme");
  return out;
}

std::vector<NormalizedWitness> enumerate_orbits(const Scheme& s, std::size_t limit) {
  std::vector<NormalizedWitness> out;
  if (limit == 0) return out;
  if (s.has_zero_entry()) throw DomainError("enumerate_orbits requires nonzero entries");
  if (s.size() <= 1) {
    out.push_back(construct_witness(s, 0));
    return out;
  }
  if (s.size() == 2) {
    out = solve_pair_orbits(s.upper(1, 2));
    if (out.size() > limit) out.resize(limit);
    return out;
  }
  if (check_triangle(s) || check_pluecker_full(s)) throw DomainError("scheme is not realizable on a torus");
  const KappaConstraintSet constraints = kappa_constraints(s);
  if (!constraints.satisfiable()) throw DomainError("scheme is not realizable on a torus");
  for (const auto& kappa : constraints.representatives(limit)) out.push_back(construct_witness(s, kappa));
  return out;
}

CurveSystem sl2_act(const Matrix2& m, const CurveSystem& system) {
  if (m.det() != 1) throw InvalidMatrix("matrix determinant is " + to_string(m.det()) + ", expected 1");
  CurveSystem out;
  out.reserve(system.size());
  for (const auto& c : system) {
    if (c.is_empty()) {
      out.push_back(c);
    } else {
      out.push_back(CurveClass::vector(m.a * c.p() + m.b * c.q(), m.c * c.p() + m.d * c.q()));
    }
  }
  return out;
}

bool verify_system(const Scheme& s, const CurveSystem& system) {
  if (system.size() != s.size()) return false;
  for (const auto& c : system)
    if (!c.is_empty() && !c.is_primitive()) return false;
  for (CurveIndex j = 2; j <= s.size(); ++j)
    for (CurveIndex i = 1; i < j; ++i)
      if (intersection(system[i - 1], system[j - 1]) != s.upper(i, j)) return false;
  return true;
}

}  // namespace curvesys
