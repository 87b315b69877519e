#pragma once

#include <cstddef>
#include <vector>

#include "curvesys/scheme.hpp"
#include "curvesys/solver.hpp"

namespace curvesys {

/// Exhaustive reference decision used to cross-check decide_torus.
struct OracleResult {
  bool realizable = false;
  /// Every normalized solution with r_2 in [0, |m_12|); kappa holds r_2.
  std::vector<NormalizedWitness> witnesses;
  std::size_t orbit_count = 0;
};

/// Largest |m_12| the oracle scans.
inline constexpr long kOracleScanCap = 1'000'000;

/// Scans r_2 over [0, |m_12|), solving r_j from the (1,2,j) relation and
/// testing every determinant and gcd directly. Requires nonzero entries.
OracleResult oracle_realizable(const Scheme& s);

std::size_t oracle_orbit_count(const Scheme& s);

}  // namespace curvesys
