#include "curvesys/oracle.hpp"

#include "curvesys/error.hpp"

namespace curvesys {

OracleResult oracle_realizable(const Scheme& s) {
  if (s.has_zero_entry()) throw PreconditionViolated("the oracle requires nonzero entries");
  OracleResult out;
  const std::size_t n = s.size();
  if (n <= 1) {
    CurveSystem system;
    if (n == 1) system.push_back(CurveClass::vector(1, 0));
    out.witnesses.push_back({0, {}, system});
    out.realizable = true;
    out.orbit_count = 1;
    return out;
  }

  const Integer& m12 = s.upper(1, 2);
  const Integer bound = abs_value(m12);
  if (bound > kOracleScanCap) throw DomainError("|m_12| exceeds the oracle scan cap");

  std::vector<Integer> r(n + 1);
  for (Integer r2 = 0; r2 < bound; ++r2) {
    r[2] = r2;
    bool ok = gcd(r2, m12) == 1;
    for (CurveIndex j = 3; ok && j <= n; ++j) {
      // r_2 m_1j - r_j m_12 = m_2j
      const Integer numerator = r2 * s.upper(1, j) - s.upper(2, j);
      if (numerator % m12 != 0) {
        ok = false;
        break;
      }
      r[j] = numerator / m12;
      ok = gcd(r[j], s.upper(1, j)) == 1;
    }
    for (CurveIndex j = 3; ok && j <= n; ++j)
      for (CurveIndex i = 2; ok && i < j; ++i)
        ok = r[i] * s.upper(1, j) - r[j] * s.upper(1, i) == s.upper(i, j);
    if (!ok) continue;

    NormalizedWitness w;
    w.kappa = r2;
    w.system.push_back(CurveClass::vector(1, 0));
    for (CurveIndex j = 2; j <= n; ++j) {
      w.r.push_back(r[j]);
      w.system.push_back(CurveClass::vector(r[j], s.upper(1, j)));
    }
    out.witnesses.push_back(std::move(w));
  }
  out.orbit_count = out.witnesses.size();
  out.realizable = out.orbit_count > 0;
  return out;
}

std::size_t oracle_orbit_count(const Scheme& s) { return oracle_realizable(s).orbit_count; }

}  // namespace curvesys
