#include <doctest.h>

#include <algorithm>
#include <set>

#include "curvesys/error.hpp"
#include "curvesys/farey.hpp"
#include "support.hpp"

using namespace curvesys;

namespace {

bool contains(const std::vector<SlopeClass>& v, SlopeClass c) { return std::find(v.begin(), v.end(), c) != v.end(); }

// Exhaustive maximum clique for tiny graphs.
std::size_t brute_clique(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = i + 1; ok && j < n; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !adj[i][j]) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

SlopeClass act(long a, long b, long c, long d, SlopeClass v) {
  return SlopeClass::canonical(a * v.p + b * v.q, c * v.p + d * v.q);
}

}  // namespace

TEST_CASE("slope classes") {
  CHECK(SlopeClass::canonical(-1, -2) == SlopeClass{1, 2});
  CHECK(SlopeClass::canonical(-1, 0) == SlopeClass{1, 0});
  CHECK(SlopeClass::canonical(-3, 2) == SlopeClass{-3, 2});
  CHECK(geometric_intersection({1, 0}, {3, 2}) == 2);
  CHECK(geometric_intersection({3, 2}, {1, 0}) == 2);
  CHECK(EdgeRule{1, 2}.adjacent({1, 0}, {1, 2}));
  CHECK_FALSE(EdgeRule{1, 2}.adjacent({1, 0}, {1, 0}));
}

TEST_CASE("candidate vertices") {
  const auto a = candidate_vertices(1, {0, 1});
  CHECK(std::set<SlopeClass>(a.begin(), a.end()) == std::set<SlopeClass>{{1, 0}, {0, 1}, {1, 1}, {-1, 1}});
  CHECK(a[0] == SlopeClass{1, 0});
  CHECK(a[1] == SlopeClass{0, 1});
  CHECK(contains(candidate_vertices(2, {0, 1}), {1, 2}));
  const auto b = candidate_vertices(1, {0, 1});
  for (const auto& v : b) CHECK(v.q <= 1);
  CHECK_THROWS_AS(candidate_vertices(1, {1, 1}), DomainError);
  CHECK_THROWS_AS(candidate_vertices(3, {2, 4}), DomainError);
  CHECK_THROWS_AS(candidate_vertices(3, {1, 5}), DomainError);
  for (std::int64_t d = 2; d <= 6; ++d)
    for (const auto& v : candidate_vertices(d, {1, 2}))
      if (v != SlopeClass{1, 0}) CHECK((v.q >= 2 && v.q <= d));
}

TEST_CASE("maximum clique matches brute force") {
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing_support::uniform(0, 14);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    const long density = testing_support::uniform(1, 9);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = testing_support::uniform(0, 9) < density;
    const auto clique = maximum_clique(adj);
    CHECK(clique.size() == brute_clique(adj));
    CHECK(std::is_sorted(clique.begin(), clique.end()));
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) CHECK(adj[clique[i]][clique[j]]);
  }
}

TEST_CASE("packings") {
  const auto one = max_packing(1);
  CHECK(one.size == 3);
  CHECK(std::set<SlopeClass>(one.witness.begin(), one.witness.end()) == std::set<SlopeClass>{{1, 0}, {0, 1}, {1, 1}});
  const auto two = max_packing(2);
  CHECK(two.size == 4);
  CHECK(is_clique({{1, 0}, {0, 1}, {1, 1}, {-1, 1}}, EdgeRule{1, 2}));
  const std::vector<std::size_t> expected{3, 4, 6, 6, 8, 8, 10};
  std::size_t previous = 0;
  for (std::int64_t d = 1; d <= 7; ++d) {
    const auto r = max_packing(d);
    CHECK(r.size == expected[d - 1]);
    CHECK(r.witness.size() == r.size);
    CHECK(is_clique(r.witness, EdgeRule{1, d}));
    CHECK(r.size >= previous);
    previous = r.size;
    const auto par = max_packing_parallel(d, 3);
    CHECK(par.size == r.size);
    CHECK(par.witness == r.witness);
  }
}

TEST_CASE("packings survive SL(2,Z) moves") {
  const auto r = max_packing(5);
  for (int t = 0; t < 50; ++t) {
    const long a = testing_support::uniform(-4, 4), b = testing_support::uniform(-4, 4);
    std::vector<SlopeClass> moved;
    for (const auto& v : r.witness) moved.push_back(act(1, 0, b, 1, act(1, a, 0, 1, v)));
    CHECK(is_clique(moved, EdgeRule{1, 5}));
    CHECK(std::set<SlopeClass>(moved.begin(), moved.end()).size() == r.size);
  }
}

TEST_CASE("exact-k relations") {
  for (std::int64_t k : {1, 2, 3, 5}) {
    const auto r = max_packing(EdgeRule{k, k});
    CHECK(r.size <= (k % 2 ? 3u : 2u));
    CHECK(is_clique(r.witness, EdgeRule{k, k}));
    CHECK(max_packing_parallel(EdgeRule{k, k}, 2).size == r.size);
  }
  CHECK_THROWS_AS(max_packing(EdgeRule{0, 3}), DomainError);
  CHECK_THROWS_AS(max_packing(EdgeRule{3, 2}), DomainError);
}
