#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "curvesys/scheme.hpp"

namespace testing_support {

using curvesys::CurveClass;
using curvesys::CurveSystem;
using curvesys::Integer;
using curvesys::Scheme;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline long nonzero(long bound) {
  long v = 0;
  while (v == 0) v = uniform(-bound, bound);
  return v;
}

inline Scheme random_nonzero_scheme(std::size_t n, long bound) {
  std::vector<Integer> e(Scheme::entry_count(n));
  for (auto& x : e) x = nonzero(bound);
  return Scheme(n, std::move(e));
}

inline Scheme random_scheme(std::size_t n, long bound) {
  std::vector<Integer> e(Scheme::entry_count(n));
  for (auto& x : e) x = uniform(-bound, bound);
  return Scheme(n, std::move(e));
}

inline CurveClass random_primitive(long bound) {
  while (true) {
    const long p = uniform(-bound, bound), q = uniform(-bound, bound);
    if (std::gcd(p, q) == 1) return CurveClass::vector(p, q);
  }
}

inline CurveSystem random_system(std::size_t n, long bound) {
  CurveSystem sys;
  for (std::size_t i = 0; i < n; ++i) sys.push_back(random_primitive(bound));
  return sys;
}

/// Scheme of random pairwise non-parallel primitive vectors (all entries nonzero).
inline Scheme random_realizable_nonzero(std::size_t n, long bound, CurveSystem* out = nullptr) {
  while (true) {
    CurveSystem sys = random_system(n, bound);
    Scheme s = curvesys::intersection_scheme(sys);
    if (!s.has_zero_entry()) {
      if (out) *out = sys;
      return s;
    }
  }
}

inline std::vector<curvesys::CurveIndex> random_permutation(std::size_t n) {
  std::vector<curvesys::CurveIndex> sigma(n);
  std::iota(sigma.begin(), sigma.end(), curvesys::CurveIndex{1});
  std::shuffle(sigma.begin(), sigma.end(), rng());
  return sigma;
}

inline Scheme S(std::size_t n, std::initializer_list<long> entries) {
  std::vector<Integer> e;
  for (long x : entries) e.emplace_back(x);
  return Scheme(n, std::move(e));
}

inline CurveSystem system_of(std::initializer_list<std::pair<long, long>> vs) {
  CurveSystem sys;
  for (auto [p, q] : vs) sys.push_back(CurveClass::vector(p, q));
  return sys;
}

}  // namespace testing_support
