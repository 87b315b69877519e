#pragma once

#include <span>
#include <vector>

#include "curvesys/integer.hpp"

namespace curvesys {

struct Bezout {
  Integer g;  // gcd(|a|,|b|), never negative
  Integer x;
  Integer y;
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly increasing.
struct Factorization {
  std::vector<PrimePower> pairs;

  Integer value() const;
  std::vector<Integer> primes() const;
};

/// A class `residue (mod modulus)` with 0 <= residue < modulus.
struct ResidueClass {
  Integer modulus;
  Integer residue;

  ResidueClass() : modulus(1), residue(0) {}
  ResidueClass(Integer m, Integer r);

  bool contains(const Integer& v) const { return mod_floor(v, modulus) == residue; }
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// a*x + b*y = g with g = gcd(|a|,|b|). When b != 0, x is the least
/// nonnegative choice, 0 <= x < |b|/g.
Bezout xgcd(const Integer& a, const Integer& b);

/// Inverse of a modulo p^e, in [0, p^e). Throws NotInvertible if p | a.
Integer inv_mod_prime_power(const Integer& a, const Integer& p, unsigned e);

/// Inverse of a modulo m (m >= 1), in [0, m). Throws NotInvertible.
Integer inv_mod(const Integer& a, const Integer& m);

/// Combines classes with pairwise coprime moduli. Empty input gives 0 mod 1.
ResidueClass crt(std::span<const ResidueClass> classes);

/// Deterministic Miller-Rabin on the first twelve prime bases.
bool is_probable_prime(const Integer& n);

Factorization factorize(const Integer& n);

/// Largest e with p^e | n. Throws DomainError for n == 0.
unsigned valuation(const Integer& n, const Integer& p);

Integer euler_phi(const Integer& m);

}  // namespace curvesys
