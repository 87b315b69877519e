#include "curvesys/arith.hpp"

#include <algorithm>
#include <array>

#include <boost/multiprecision/integer.hpp>

#include "curvesys/error.hpp"

namespace curvesys {

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  // Brent's cycle detection; the increment c walks upward on failure.
  for (Integer c = 1;; ++c) {
    Integer y = 2, x = 2, q = 1, g = 1, ys;
    const auto step = [&](const Integer& v) { return (v * v + c) % n; };
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = (q * abs_value(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs_value(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& pp : pairs) v *= pow_int(pp.prime, pp.exponent);
  return v;
}

std::vector<Integer> Factorization::primes() const {
  std::vector<Integer> out;
  out.reserve(pairs.size());
  for (const auto& pp : pairs) out.push_back(pp.prime);
  return out;
}

ResidueClass::ResidueClass(Integer m, Integer r) : modulus(std::move(m)) {
  if (modulus < 1) throw DomainError("residue class modulus must be >= 1");
  residue = mod_floor(r, modulus);
}

Bezout xgcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  if (old_r == 0 || b == 0) return {old_r, old_s, old_t};
  // Smallest nonnegative x; y follows from it.
  const Integer step = abs_value(b) / old_r;
  Integer x = mod_floor(old_s, step);
  Integer y = (old_r - a * x) / b;
  return {std::move(old_r), std::move(x), std::move(y)};
}

Integer inv_mod(const Integer& a, const Integer& m) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  if (m == 1) return 0;
  Bezout b = xgcd(mod_floor(a, m), m);
  if (b.g != 1) throw NotInvertible(to_string(a) + " is not invertible mod " + to_string(m));
  return mod_floor(b.x, m);
}

Integer inv_mod_prime_power(const Integer& a, const Integer& p, unsigned e) {
  if (e == 0) throw DomainError("exponent must be >= 1");
  if (a % p == 0) throw NotInvertible(to_string(p) + " divides " + to_string(a));
  return inv_mod(a, pow_int(p, e));
}

ResidueClass crt(std::span<const ResidueClass> classes) {
  ResidueClass acc;
  for (const auto& c : classes) {
    if (gcd(acc.modulus, c.modulus) != 1) {
      throw InvalidModuli("moduli " + to_string(acc.modulus) + " and " + to_string(c.modulus) +
                          " are not coprime");
    }
    // acc.residue + acc.modulus * t == c.residue (mod c.modulus)
    Integer t = mod_floor((c.residue - acc.residue) * inv_mod(acc.modulus, c.modulus), c.modulus);
    Integer modulus = acc.modulus * c.modulus;
    acc = ResidueClass(modulus, acc.residue + acc.modulus * t);
  }
  return acc;
}

bool is_probable_prime(const Integer& n) {
  static constexpr std::array<unsigned, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (unsigned base : kBases) {
    Integer x = boost::multiprecision::powm(Integer(base), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(const Integer& n) {
  if (n < 1) throw DomainError("factorize requires n >= 1, got " + to_string(n));
  Factorization f;
  Integer rest = n;
  const auto take = [&](const Integer& p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) f.pairs.push_back({p, e});
  };
  take(2);
  for (std::uint32_t p = 3; p < kTrialBound; p += 2) {
    if (Integer(p) * p > rest) break;
    take(Integer(p));
  }
  if (rest == 1) return f;
  std::vector<Integer> big;
  split(rest, big);
  std::sort(big.begin(), big.end());
  for (std::size_t i = 0; i < big.size();) {
    std::size_t j = i;
    while (j < big.size() && big[j] == big[i]) ++j;
    f.pairs.push_back({big[i], static_cast<unsigned>(j - i)});
    i = j;
  }
  return f;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DomainError("valuation of zero is undefined");
  if (p < 2) throw DomainError("valuation base must be a prime");
  unsigned e = 0;
  Integer v = abs_value(n);
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

Integer euler_phi(const Integer& m) {
  if (m < 1) throw DomainError("euler_phi requires m >= 1");
  Integer result = m;
  for (const auto& pp : factorize(m).pairs) result = result / pp.prime * (pp.prime - 1);
  return result;
}

}  // namespace curvesys
