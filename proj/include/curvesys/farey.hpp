#pragma once

#include <cstdint>
#include <vector>

namespace curvesys {

/// Unoriented primitive class on the torus, sign-normalized so q > 0 or (p, q) = (1, 0).
struct SlopeClass {
  std::int64_t p = 1;
  std::int64_t q = 0;

  static SlopeClass canonical(std::int64_t p, std::int64_t q);
  friend bool operator==(const SlopeClass&, const SlopeClass&) = default;
  friend auto operator<=>(const SlopeClass&, const SlopeClass&) = default;
};

/// |p_a q_b - p_b q_a|, the geometric intersection number of two classes.
std::int64_t geometric_intersection(const SlopeClass& a, const SlopeClass& b);

/// Two distinct classes are adjacent when their intersection lies in [min_det, max_det].
struct EdgeRule {
  std::int64_t min_det = 1;
  std::int64_t max_det = 1;

  bool adjacent(const SlopeClass& a, const SlopeClass& b) const {
    const auto det = geometric_intersection(a, b);
    return det >= min_det && det <= max_det;
  }
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<SlopeClass> witness;
  std::int64_t d = 0;
};

/// {(1,0), anchor} followed by every class that can join a normalized clique in
/// which (1,0) is present and `anchor` (0 <= p < q <= d) has the least q.
std::vector<SlopeClass> candidate_vertices(std::int64_t d, const SlopeClass& anchor);
std::vector<SlopeClass> candidate_vertices(const EdgeRule& rule, const SlopeClass& anchor);

/// Exact maximum clique by branch and bound with greedy-coloring bounds.
/// Returns vertex indices in increasing order.
std::vector<std::size_t> maximum_clique(const std::vector<std::vector<bool>>& adjacency);

/// Largest set of distinct classes with pairwise 1 <= |det| <= d. Serial reference.
CliqueResult max_packing(std::int64_t d);
CliqueResult max_packing(const EdgeRule& rule);

/// Same search with anchors distributed over OpenMP threads; identical result.
CliqueResult max_packing_parallel(std::int64_t d, int jobs = 0);
CliqueResult max_packing_parallel(const EdgeRule& rule, int jobs = 0);

/// Every pair distinct and adjacent under the rule.
bool is_clique(const std::vector<SlopeClass>& classes, const EdgeRule& rule);

}  // namespace curvesys
