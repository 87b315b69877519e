#pragma once

#include <optional>
#include <variant>

#include "curvesys/conditions.hpp"
#include "curvesys/scheme.hpp"

namespace curvesys {

/// Genus of the surface built by giving every pair of curves its own handle
/// region: -2 + n(n+1)/2. Requires n >= 2.
Integer genus_upper_bound(std::size_t n);

/// Smallest nonnegative kappa with a-kappa, b-kappa, c pairwise coprime.
/// Requires a = b mod 2 and c != 0. When a == b the solutions are a +- 1 and
/// the smaller nonnegative one is returned (a + 1 if neither is nonnegative).
Integer coprime_shift(const Integer& a, const Integer& b, const Integer& c);

/// Scheme-level split m = left + right with both parts torus-realizable.
struct Decomposition {
  Scheme left;
  Scheme right;
  Verdict left_verdict;
  Verdict right_verdict;
  bool degenerate = false;  // one side is the zero scheme
};

struct AlreadyTorus {};

/// Genus-2 split of a 3-scheme, or AlreadyTorus when no split is needed.
std::variant<Decomposition, AlreadyTorus> decompose_3scheme(const Scheme& s);

/// The 4-scheme (q; pq, pq; pq, pq, p) for distinct odd primes p, q.
Scheme endemic_family(const Integer& p, const Integer& q);

/// First m' in lexicographic column order with entries in [-bound, bound]
/// such that m' and s - m' are both torus-realizable. nullopt means none
/// exists at this bound.
std::optional<Decomposition> bounded_decomposition_search(const Scheme& s, int bound);

/// OpenMP version of bounded_decomposition_search; same result for any `jobs`.
std::optional<Decomposition> bounded_decomposition_search_parallel(const Scheme& s, int bound, int jobs = 0);

}  // namespace curvesys
