#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "curvesys/integer.hpp"

namespace curvesys {

/// Curve indices are 1-based throughout the library, matching the usual
/// m_ij notation.
using CurveIndex = std::size_t;

/// Permutation of 1..n stored as images: sigma[i-1] = sigma(i).
using Permutation = std::vector<CurveIndex>;

/// Pairwise algebraic intersection numbers m_ij (i < j) of n ordered curves.
///
/// Entries are stored in column order (m_12; m_13, m_23; m_14, m_24, m_34; ...),
/// which is also the wire order of the JSON documents.
class Scheme {
 public:
  Scheme() = default;
  Scheme(std::size_t n, std::vector<Integer> entries);

  static Scheme zero(std::size_t n);
  /// Builds a scheme from the upper-triangular matrix display: rows[i-1]
  /// lists m_{i,i+1}, ..., m_{i,n}.
  static Scheme from_upper_rows(std::size_t n, const std::vector<std::vector<Integer>>& rows);

  static std::size_t entry_count(std::size_t n) { return n * (n - 1) / 2; }
  /// Column-order position of m_ij, 1 <= i < j.
  static std::size_t position(CurveIndex i, CurveIndex j) { return (j - 1) * (j - 2) / 2 + (i - 1); }

  std::size_t size() const { return n_; }
  std::span<const Integer> entries() const { return entries_; }

  /// m_ij for i < j, -m_ji for i > j. Throws IndexError on i == j or out of range.
  Integer get(CurveIndex i, CurveIndex j) const;
  /// Unchecked access to m_ij with i < j.
  const Integer& upper(CurveIndex i, CurveIndex j) const { return entries_[position(i, j)]; }

  bool has_zero_entry() const;
  bool is_zero() const;

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

/// "(m_12; m_13, m_23; ...)".
std::string to_string(const Scheme& s);

/// Entry (i,j) of the result is get(s, sigma(i), sigma(j)).
Scheme permute(const Scheme& s, std::span<const CurveIndex> sigma);
Scheme scheme_sum(const Scheme& a, const Scheme& b);
Scheme scheme_difference(const Scheme& a, const Scheme& b);
Scheme scale(const Scheme& s, const Integer& factor);

/// Oriented isotopy class on the torus: a homology vector (p, q) or the
/// empty curve. Primitivity is not enforced here; verify_system checks it.
class CurveClass {
 public:
  static CurveClass vector(Integer p, Integer q) { return CurveClass(std::move(p), std::move(q)); }
  static CurveClass empty() { return CurveClass(); }

  bool is_empty() const { return empty_; }
  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_primitive() const { return !empty_ && gcd(p_, q_) == 1; }
  CurveClass negated() const { return empty_ ? *this : CurveClass(-p_, -q_); }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  CurveClass() = default;
  CurveClass(Integer p, Integer q) : empty_(false), p_(std::move(p)), q_(std::move(q)) {}

  bool empty_ = true;
  Integer p_;
  Integer q_;
};

using CurveSystem = std::vector<CurveClass>;

/// Algebraic intersection a . b = p_a q_b - p_b q_a; zero if either is empty.
Integer intersection(const CurveClass& a, const CurveClass& b);

/// The scheme realized by a curve system.
Scheme intersection_scheme(const CurveSystem& system);

std::string to_string(const CurveClass& c);

// ---------------------------------------------------------------------------
// Zero-entry reduction

struct ReductionStep {
  enum class Kind { Duplicate, Empty };

  CurveIndex removed = 0;  // index in the input scheme
  Kind kind = Kind::Empty;
  CurveIndex duplicate_of = 0;  // input index, Duplicate only
  int sign = 1;                 // Duplicate only: removed = sign * duplicate_of

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionLog {
  std::size_t original_size = 0;
  std::vector<ReductionStep> steps;
  Scheme reduced;
  /// kept[k-1] is the input index of curve k of the reduced scheme.
  std::vector<CurveIndex> kept;

  bool used_empty() const;
  /// Reconstructs the input scheme from the reduced one and the steps.
  Scheme replay() const;
  /// Extends a system for the reduced scheme to one for the input scheme.
  CurveSystem lift(const CurveSystem& reduced_system) const;
};

/// A zero entry m_ij that is neither a duplicate nor an empty curve; it
/// certifies that the scheme has no torus realization.
struct Unresolvable {
  CurveIndex i = 0;
  CurveIndex j = 0;
};

using ZeroReduction = std::variant<ReductionLog, Unresolvable>;

/// Removes duplicate and empty curves until no zero entries remain. Pairs are
/// scanned lexicographically and the larger index of a duplicate pair is dropped.
ZeroReduction reduce_zeros(const Scheme& s);

}  // namespace curvesys
