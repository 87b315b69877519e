#include <doctest.h>

#include "curvesys/error.hpp"
#include "curvesys/genus.hpp"
#include "support.hpp"

using namespace curvesys;
using testing_support::S;

namespace {

void check_decomposition(const Scheme& s, const Decomposition& d) {
  CHECK(scheme_sum(d.left, d.right) == s);
  CHECK(d.left_verdict.realizable());
  CHECK(d.right_verdict.realizable());
  CHECK(decide_torus(d.left).realizable());
  CHECK(decide_torus(d.right).realizable());
  CHECK(verify_system(d.left, *d.left_verdict.witness));
  CHECK(verify_system(d.right, *d.right_verdict.witness));
}

bool pairwise_coprime(const Integer& a, const Integer& b, const Integer& c) {
  return gcd(a, b) == 1 && gcd(a, c) == 1 && gcd(b, c) == 1;
}

}  // namespace

TEST_CASE("genus upper bound") {
  CHECK(genus_upper_bound(4) == 8);
  CHECK(genus_upper_bound(2) == 1);
  CHECK(genus_upper_bound(3) == 4);
  CHECK_THROWS_AS(genus_upper_bound(1), DomainError);
}

TEST_CASE("coprime shift") {
  CHECK(coprime_shift(6, 10, 14) == 1);
  // The shift 5 used for (1;5,14) + (5;5,0) is another valid answer.
  CHECK(pairwise_coprime(6 - 5, 10 - 5, 14));
  CHECK(coprime_shift(2, 4, 7) == 1);
  CHECK(coprime_shift(3, 5, 4) == 0);
  CHECK(coprime_shift(4, 4, 9) == 3);
  CHECK_THROWS_AS(coprime_shift(2, 3, 5), PreconditionViolated);
  CHECK_THROWS_AS(coprime_shift(2, 4, 0), PreconditionViolated);
  for (int t = 0; t < 2000; ++t) {
    const Integer a = testing_support::uniform(-200, 200);
    const Integer b = a + 2 * testing_support::uniform(-100, 100);
    const Integer c = testing_support::nonzero(300);
    const Integer k = coprime_shift(a, b, c);
    CHECK(pairwise_coprime(a - k, b - k, c));
  }
}

TEST_CASE("3-scheme decomposition") {
  SUBCASE("toz failure") {
    const Scheme s = S(3, {6, 10, 14});
    const auto r = decompose_3scheme(s);
    REQUIRE(std::holds_alternative<Decomposition>(r));
    check_decomposition(s, std::get<Decomposition>(r));
  }
  SUBCASE("zero entry") {
    const Scheme s = S(3, {3, 2, 0});
    const auto r = decompose_3scheme(s);
    REQUIRE(std::holds_alternative<Decomposition>(r));
    const auto& d = std::get<Decomposition>(r);
    CHECK(d.left == S(3, {2, 2, 0}));
    CHECK(d.right == S(3, {1, 0, 0}));
    check_decomposition(s, d);
  }
  SUBCASE("already a torus scheme") {
    CHECK(std::holds_alternative<AlreadyTorus>(decompose_3scheme(S(3, {1, 1, 1}))));
  }
  CHECK_THROWS_AS(decompose_3scheme(S(2, {1})), InvalidShape);
}

TEST_CASE("every 3-scheme splits into two torus schemes") {
  for (int t = 0; t < 2000; ++t) {
    const Scheme s = testing_support::random_scheme(3, 40);
    const auto r = decompose_3scheme(s);
    if (const auto* d = std::get_if<Decomposition>(&r)) {
      CHECK_FALSE(decide_torus(s).realizable());
      check_decomposition(s, *d);
    } else {
      CHECK(decide_torus(s).realizable());
    }
  }
}

TEST_CASE("endemic family") {
  CHECK(endemic_family(3, 5) == S(4, {5, 15, 15, 15, 15, 3}));
  CHECK(endemic_family(5, 7) == S(4, {7, 35, 35, 35, 35, 5}));
  CHECK_THROWS_AS(endemic_family(2, 5), DomainError);
  CHECK_THROWS_AS(endemic_family(9, 5), DomainError);
  CHECK_THROWS_AS(endemic_family(5, 5), DomainError);
  for (long p : {3, 5, 7, 11, 13})
    for (long q : {3, 5, 7, 11, 13})
      if (p != q) {
        const Scheme s = endemic_family(p, q);
        CHECK_FALSE(decide_torus(s).realizable());
        CHECK(check_pluecker_full(s).has_value());
      }
}

TEST_CASE("bounded decomposition search") {
  const Scheme s = S(3, {6, 10, 14});
  const auto found = bounded_decomposition_search(s, 15);
  REQUIRE(found);
  check_decomposition(s, *found);
  const auto par = bounded_decomposition_search_parallel(s, 15, 4);
  REQUIRE(par);
  CHECK(par->left == found->left);

  const auto trivial = bounded_decomposition_search(S(3, {1, 1, 1}), 0);
  REQUIRE(trivial);
  CHECK(trivial->degenerate);
  CHECK(trivial->left.is_zero());

  CHECK_FALSE(bounded_decomposition_search(endemic_family(3, 5), 6));
  CHECK_FALSE(bounded_decomposition_search_parallel(endemic_family(3, 5), 6, 3));
  CHECK_THROWS_AS(bounded_decomposition_search(s, -1), DomainError);
}

TEST_CASE("serial and parallel searches agree") {
  for (int t = 0; t < 30; ++t) {
    const Scheme s = testing_support::random_nonzero_scheme(testing_support::uniform(3, 4), 6);
    const int bound = static_cast<int>(testing_support::uniform(1, 3));
    const auto a = bounded_decomposition_search(s, bound);
    const auto b = bounded_decomposition_search_parallel(s, bound, 3);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(a->left == b->left);
      check_decomposition(s, *a);
    }
  }
}
