#include "curvesys/farey.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "curvesys/error.hpp"

namespace curvesys {

SlopeClass SlopeClass::canonical(std::int64_t p, std::int64_t q) {
  if (q < 0 || (q == 0 && p < 0)) return {-p, -q};
  return {p, q};
}

std::int64_t geometric_intersection(const SlopeClass& a, const SlopeClass& b) {
  const std::int64_t det = a.p * b.q - b.p * a.q;
  return det < 0 ? -det : det;
}

bool is_clique(const std::vector<SlopeClass>& classes, const EdgeRule& rule) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i] == classes[j] || !rule.adjacent(classes[i], classes[j])) return false;
    }
  }
  return true;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void validate_rule(const EdgeRule& rule) {
  if (rule.min_det < 1 || rule.max_det < rule.min_det) throw DomainError("edge rule needs 1 <= min_det <= max_det");
}

std::vector<SlopeClass> anchors(const EdgeRule& rule) {
  std::vector<SlopeClass> out;
  for (std::int64_t q = rule.min_det; q <= rule.max_det; ++q)
    for (std::int64_t p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1) out.push_back({p, q});
  return out;
}

// Bitset helpers for the clique search.
using Bits = std::vector<std::uint64_t>;

void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
void reset(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<std::vector<bool>>& adjacency) : n_(adjacency.size()) {
    // Vertices are relabeled by decreasing degree (ties by original index);
    // the coloring bound is tighter with high-degree vertices first.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::size_t> degree(n_);
    for (std::size_t i = 0; i < n_; ++i) degree[i] = std::count(adjacency[i].begin(), adjacency[i].end(), true);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    words_ = (n_ + 63) / 64;
    neighbors_.assign(n_, Bits(words_, 0));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (a != b && adjacency[order_[a]][order_[b]]) set(neighbors_[a], b);
  }

  std::vector<std::size_t> solve() {
    Bits all(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) set(all, i);
    std::vector<std::size_t> current;
    if (n_ > 0) expand(all, current);
    std::vector<std::size_t> out;
    for (std::size_t v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Greedy sequential coloring of `candidates`; vertices come out ordered by
  // nondecreasing color, and color k bounds the clique size reachable from
  // the first vertices up to that one.
  void color_sort(const Bits& candidates, std::vector<std::size_t>& verts, std::vector<std::size_t>& colors) const {
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (any(uncolored)) {
      ++color;
      Bits available = uncolored;
      while (any(available)) {
        std::size_t v = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          if (available[w]) {
            v = w * 64 + static_cast<std::size_t>(std::countr_zero(available[w]));
            break;
          }
        }
        reset(available, v);
        reset(uncolored, v);
        for (std::size_t w = 0; w < words_; ++w) available[w] &= ~neighbors_[v][w];
        verts.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(Bits candidates, std::vector<std::size_t>& current) {
    std::vector<std::size_t> verts, colors;
    color_sort(candidates, verts, colors);
    for (std::size_t idx = verts.size(); idx-- > 0;) {
      if (current.size() + colors[idx] <= best_.size()) return;
      const std::size_t v = verts[idx];
      current.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & neighbors_[v][w];
      if (any(next)) {
        expand(next, current);
      } else if (current.size() > best_.size()) {
        best_ = current;
      }
      current.pop_back();
      reset(candidates, v);
    }
  }

  std::size_t n_;
  std::size_t words_ = 0;
  std::vector<std::size_t> order_;
  std::vector<Bits> neighbors_;
  std::vector<std::size_t> best_;
};

CliqueResult solve_anchor(const EdgeRule& rule, const SlopeClass& anchor) {
  const auto vertices = candidate_vertices(rule, anchor);
  const std::vector<SlopeClass> rest(vertices.begin() + 2, vertices.end());
  std::vector<std::vector<bool>> adjacency(rest.size(), std::vector<bool>(rest.size(), false));
  for (std::size_t a = 0; a < rest.size(); ++a)
    for (std::size_t b = a + 1; b < rest.size(); ++b)
      adjacency[a][b] = adjacency[b][a] = rule.adjacent(rest[a], rest[b]);
  CliqueResult r;
  r.d = rule.max_det;
  r.witness = {vertices[0], vertices[1]};
  for (std::size_t v : maximum_clique(adjacency)) r.witness.push_back(rest[v]);
  r.size = r.witness.size();
  return r;
}

CliqueResult trivial_result(const EdgeRule& rule) {
  CliqueResult r;
  r.d = rule.max_det;
  r.witness = {SlopeClass{1, 0}};
  r.size = 1;
  return r;
}

}  // namespace

std::vector<SlopeClass> candidate_vertices(const EdgeRule& rule, const SlopeClass& anchor) {
  validate_rule(rule);
  const auto [p0, q0] = anchor;
  if (q0 < rule.min_det || q0 > rule.max_det || p0 < 0 || p0 >= q0 || std::gcd(p0, q0) != 1) {
    throw DomainError("anchor must be primitive with 0 <= p < q within the edge rule range");
  }
  std::vector<SlopeClass> out{{1, 0}, anchor};
  for (std::int64_t q = q0; q <= rule.max_det; ++q) {
    // |p0 q - p q0| <= max_det
    const std::int64_t lo = -floor_div(rule.max_det - p0 * q, q0);
    const std::int64_t hi = floor_div(p0 * q + rule.max_det, q0);
    for (std::int64_t p = lo; p <= hi; ++p) {
      const SlopeClass c{p, q};
      if (std::gcd(p, q) != 1 || c == anchor || !rule.adjacent(c, anchor)) continue;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<SlopeClass> candidate_vertices(std::int64_t d, const SlopeClass& anchor) {
  return candidate_vertices(EdgeRule{1, d}, anchor);
}

std::vector<std::size_t> maximum_clique(const std::vector<std::vector<bool>>& adjacency) {
  return CliqueSearch(adjacency).solve();
}

CliqueResult max_packing(const EdgeRule& rule) {
  validate_rule(rule);
  CliqueResult best = trivial_result(rule);
  for (const auto& anchor : anchors(rule)) {
    CliqueResult r = solve_anchor(rule, anchor);
    if (r.size > best.size) best = std::move(r);
  }
  return best;
}

CliqueResult max_packing(std::int64_t d) { return max_packing(EdgeRule{1, d}); }

CliqueResult max_packing_parallel(const EdgeRule& rule, int jobs) {
  validate_rule(rule);
  const auto all = anchors(rule);
  std::vector<CliqueResult> results(all.size());
  const auto count = static_cast<std::int64_t>(all.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (std::int64_t i = 0; i < count; ++i) results[i] = solve_anchor(rule, all[i]);
  (void)jobs;
  // Ordered reduction: the earliest anchor wins ties, as in the serial loop.
  CliqueResult best = trivial_result(rule);
  for (auto& r : results)
    if (r.size > best.size) best = std::move(r);
  return best;
}

CliqueResult max_packing_parallel(std::int64_t d, int jobs) { return max_packing_parallel(EdgeRule{1, d}, jobs); }

}  // namespace curvesys
