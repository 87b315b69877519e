#include "curvesys/genus.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "curvesys/arith.hpp"
#include "curvesys/error.hpp"

namespace curvesys {

Integer genus_upper_bound(std::size_t n) {
  if (n < 2) throw DomainError("genus_upper_bound requires n >= 2");
  return Integer(n) * (n + 1) / 2 - 2;
}

Integer coprime_shift(const Integer& a, const Integer& b, const Integer& c) {
  if (mod_floor(a - b, 2) != 0) throw PreconditionViolated("coprime_shift requires a = b mod 2");
  if (c == 0) throw PreconditionViolated("coprime_shift requires c != 0");
  const auto valid = [&](const Integer& k) {
    return gcd(a - k, b - k) == 1 && gcd(a - k, c) == 1 && gcd(b - k, c) == 1;
  };
  if (a == b) {
    if (a - 1 >= 0) return a - 1;
    return a + 1;
  }

  struct Forbidden {
    Integer prime;
    std::vector<Integer> residues;
  };
  std::vector<Forbidden> classes;
  for (const auto& p : factorize(abs_value(c * (a - b))).primes()) {
    Forbidden f{p, {mod_floor(a, p)}};
    if (c % p == 0 && mod_floor(b, p) != f.residues.front()) f.residues.push_back(mod_floor(b, p));
    classes.push_back(std::move(f));
  }
  // Each prime leaves at least one admissible class (two forbidden values
  // only occur for odd primes), so the scan ends below the product of primes.
  for (Integer k = 0;; ++k) {
    bool ok = true;
    for (const auto& f : classes) {
      const Integer r = mod_floor(k, f.prime);
      if (std::find(f.residues.begin(), f.residues.end(), r) != f.residues.end()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (!valid(k)) throw InternalFault("coprime_shift residue classes disagree with gcd check");
    return k;
  }
}

namespace {

// All six orderings of three curves; identity first.
constexpr std::array<std::array<CurveIndex, 3>, 6> kOrders{{
    {1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}}};

Permutation inverse(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (CurveIndex i = 1; i <= sigma.size(); ++i) inv[sigma[i - 1] - 1] = i;
  return inv;
}

Decomposition finish(const Scheme& s, Scheme left, Scheme right) {
  Decomposition d{std::move(left), std::move(right), {}, {}, false};
  if (scheme_sum(d.left, d.right) != s) throw InternalFault("decomposition does not sum to the input");
  d.left_verdict = decide_torus(d.left);
  d.right_verdict = decide_torus(d.right);
  if (!d.left_verdict.realizable() || !d.right_verdict.realizable()) {
    throw InternalFault("decomposition summand is not torus-realizable: " + to_string(s));
  }
  d.degenerate = d.left.is_zero() || d.right.is_zero();
  return d;
}

}  // namespace

std::variant<Decomposition, AlreadyTorus> decompose_3scheme(const Scheme& s) {
  if (s.size() != 3) throw InvalidShape("decompose_3scheme takes a 3-scheme");
  if (decide_torus(s).realizable()) return AlreadyTorus{};

  for (const auto& order : kOrders) {
    const Permutation sigma(order.begin(), order.end());
    const Scheme t = permute(s, sigma);
    const Integer &a = t.upper(1, 2), &b = t.upper(1, 3), &c = t.upper(2, 3);
    Scheme left, right;
    if (s.has_zero_entry()) {
      if (c != 0) continue;
      // (a; b, 0) = (b; b, 0) + (a - b; 0, 0)
      left = Scheme(3, {b, b, 0});
      right = Scheme(3, {a - b, 0, 0});
    } else {
      if (mod_floor(a - b, 2) != 0) continue;
      const Integer kappa = coprime_shift(a, b, c);
      left = Scheme(3, {a - kappa, b - kappa, c});
      right = Scheme(3, {kappa, kappa, 0});
    }
    const Permutation back = inverse(sigma);
    return finish(s, permute(left, back), permute(right, back));
  }
  throw InternalFault("no ordering of the 3-scheme admits a split");
}

Scheme endemic_family(const Integer& p, const Integer& q) {
  for (const Integer* v : {&p, &q}) {
    if (*v <= 2 || !is_probable_prime(*v)) throw DomainError(to_string(*v) + " is not an odd prime");
  }
  if (p == q) throw DomainError("endemic_family requires distinct primes");
  const Integer pq = p * q;
  return Scheme(4, {q, pq, pq, pq, pq, p});
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::int64_t kSearchEntryLimit = std::int64_t{1} << 30;

/// Depth-first enumeration of m' in column order. Positions whose value is
/// pinned by a Pluecker relation on either summand are not branched on.
class DecompositionSearch {
 public:
  DecompositionSearch(const Scheme& target, int bound) : target_(target), bound_(bound) {
    if (bound < 0) throw DomainError("search bound must be >= 0");
    if (bound > (1 << 20)) throw DomainError("search bound too large");
    const std::size_t n = target.size();
    for (const auto& e : target.entries()) {
      if (abs_value(e) > kSearchEntryLimit) throw DomainError("entries too large for the bounded search");
      target_words_.push_back(static_cast<std::int64_t>(e));
    }
    slots_.resize(target_words_.size());
    for (CurveIndex l = 2; l <= n; ++l) {
      for (CurveIndex k = 1; k < l; ++k) {
        Slot& slot = slots_[Scheme::position(k, l)];
        for (CurveIndex j = 2; j < k; ++j)
          for (CurveIndex i = 1; i < j; ++i)
            slot.quads.push_back({Scheme::position(i, j), Scheme::position(i, k), Scheme::position(i, l),
                                  Scheme::position(j, k), Scheme::position(j, l), Scheme::position(k, l)});
      }
    }
  }

  std::size_t slot_count() const { return slots_.size(); }

  /// Searches with the first entry fixed to `first` (ignored for empty schemes).
  std::optional<Scheme> run(std::int64_t first, const std::atomic<bool>* cancel = nullptr) {
    cancel_ = cancel;
    left_.assign(slots_.size(), 0);
    if (slots_.empty()) return leaf() ? std::optional<Scheme>(found_) : std::nullopt;
    left_[0] = first;
    if (dfs(1)) return found_;
    return std::nullopt;
  }

 private:
  struct Quad {
    // positions of m_ij, m_ik, m_il, m_jk, m_jl, m_kl
    std::size_t ij, ik, il, jk, jl, kl;
  };
  struct Slot {
    std::vector<Quad> quads;
  };

  std::int64_t right(std::size_t pos) const { return target_words_[pos] - left_[pos]; }

  template <typename Get>
  static std::int64_t mu(const Quad& q, Get v) {
    return v(q.ij) * v(q.kl) - v(q.ik) * v(q.jl) + v(q.il) * v(q.jk);
  }

  bool relations_hold(const Slot& slot) const {
    for (const auto& q : slot.quads) {
      if (mu(q, [&](std::size_t p) { return left_[p]; }) != 0) return false;
      if (mu(q, [&](std::size_t p) { return right(p); }) != 0) return false;
    }
    return true;
  }

  bool dfs(std::size_t pos) {
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) return false;
    if (pos == slots_.size()) return leaf();
    const Slot& slot = slots_[pos];

    std::optional<std::int64_t> forced;
    const auto pin = [&](std::int64_t v) {
      if (forced && *forced != v) return false;
      forced = v;
      return true;
    };
    for (const auto& q : slot.quads) {
      // mu is linear in the last entry with coefficient m_ij.
      if (left_[q.ij] != 0) {
        const std::int64_t num = left_[q.ik] * left_[q.jl] - left_[q.il] * left_[q.jk];
        if (num % left_[q.ij] != 0 || !pin(num / left_[q.ij])) return false;
      }
      if (right(q.ij) != 0) {
        const std::int64_t num = right(q.ik) * right(q.jl) - right(q.il) * right(q.jk);
        if (num % right(q.ij) != 0 || !pin(target_words_[pos] - num / right(q.ij))) return false;
      }
    }
    if (forced) {
      if (*forced < -bound_ || *forced > bound_) return false;
      left_[pos] = *forced;
      return relations_hold(slot) && dfs(pos + 1);
    }
    for (std::int64_t v = -bound_; v <= bound_; ++v) {
      left_[pos] = v;
      if (relations_hold(slot) && dfs(pos + 1)) return true;
    }
    return false;
  }

  bool leaf() {
    std::vector<Integer> entries(left_.begin(), left_.end());
    Scheme left(target_.size(), std::move(entries));
    if (!decide_torus(left).realizable()) return false;
    if (!decide_torus(scheme_difference(target_, left)).realizable()) return false;
    found_ = std::move(left);
    return true;
  }

  const Scheme& target_;
  std::int64_t bound_;
  std::vector<std::int64_t> target_words_;
  std::vector<Slot> slots_;
  std::vector<std::int64_t> left_;
  Scheme found_;
  const std::atomic<bool>* cancel_ = nullptr;
};

std::optional<Decomposition> wrap(const Scheme& s, const std::optional<Scheme>& left) {
  if (!left) return std::nullopt;
  return finish(s, *left, scheme_difference(s, *left));
}

}  // namespace

std::optional<Decomposition> bounded_decomposition_search(const Scheme& s, int bound) {
  DecompositionSearch search(s, bound);
  if (search.slot_count() == 0) return wrap(s, search.run(0));
  for (std::int64_t first = -bound; first <= bound; ++first) {
    if (auto left = search.run(first)) return wrap(s, left);
  }
  return std::nullopt;
}

std::optional<Decomposition> bounded_decomposition_search_parallel(const Scheme& s, int bound, int jobs) {
  if (DecompositionSearch(s, bound).slot_count() == 0) return bounded_decomposition_search(s, bound);
  const int tasks = 2 * bound + 1;
  std::vector<std::optional<Scheme>> results(tasks);
  // Smallest task index that has produced a hit; later tasks stop early.
  std::atomic<int> best{tasks};
  std::vector<std::atomic<bool>> cancel(tasks);
  for (auto& c : cancel) c.store(false);

#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (int t = 0; t < tasks; ++t) {
    if (t > best.load()) continue;
    DecompositionSearch search(s, bound);
    results[t] = search.run(t - bound, &cancel[t]);
    if (results[t]) {
      int current = best.load();
      while (t < current && !best.compare_exchange_weak(current, t)) {
      }
      for (int later = t + 1; later < tasks; ++later) cancel[later].store(true);
    }
  }
  (void)jobs;
  const int winner = best.load();
  if (winner == tasks) return std::nullopt;
  return wrap(s, results[winner]);
}

}  // namespace curvesys
