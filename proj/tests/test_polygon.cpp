#include <doctest.h>
#include <algorithm>

#include "fcr/polygon.hpp"
#include "fcr/rng.hpp"

using namespace fcr;

namespace {

SlopePolygon poly(std::vector<long long> nums, long long den = 1) {
  std::vector<Rat> s;
  for (long long n : nums) s.push_back(ratMake(n, den));
  return SlopePolygon(std::move(s));
}

}  // namespace

TEST_CASE("fromValuations: worked hulls") {
  // x^2 - (1+p)x + p: vals (1,0,0) -> slopes (0,1)
  SlopePolygon P = polygonFromValuations({1, 0, 0}, 32);
  CHECK(P.slopes() == std::vector<Rat>{ratMake(0), ratMake(1)});
  // x^2 - p: vals (1, >=N, 0) -> slopes (1/2, 1/2)
  SlopePolygon Q = polygonFromValuations({1, 32, 0}, 32);
  CHECK(Q.slopes() == std::vector<Rat>{ratMake(1, 2), ratMake(1, 2)});
  // uncertified constant term rejected
  CHECK_THROWS_AS(polygonFromValuations({32, 32, 0}, 32), Error);
}

TEST_CASE("fromValuations: capped interior point can invalidate the hull") {
  // point (1, >=4) with hull forced through (0,0)-(2,10): hull value 5 > N=4
  CHECK_THROWS_AS(polygonFromValuations({10, 4, 0}, 4), Error);
  // same shape at high N certifies fine
  SlopePolygon P = polygonFromValuations({10, 32, 0}, 32);
  CHECK(P.slopes() == std::vector<Rat>{ratMake(5), ratMake(5)});
}

TEST_CASE("isBreakPoint and liesOn") {
  CHECK(isBreakPoint(poly({0, 1}), 1, ratMake(0)));
  CHECK_FALSE(isBreakPoint(poly({1, 1}, 2), 1, ratMake(1, 2)));
  SlopePolygon P = poly({0, 1, 2, 3});
  CHECK(isBreakPoint(P, 1, ratMake(0)));
  CHECK(isBreakPoint(P, 2, ratMake(1)));
  CHECK_FALSE(isBreakPoint(P, 2, ratMake(2)));

  CHECK(liesOn(poly({0, 2}), 1, ratMake(0)));
  CHECK_FALSE(liesOn(poly({1, 1}), 1, ratMake(0)));
  CHECK(liesOn(P, 2, ratMake(1)));
  // a break point always lies on the polygon
  for (long A = 1; A < 4; ++A)
    if (isBreakPoint(P, A, P.value((int)A))) CHECK(liesOn(P, A, P.value((int)A)));
}

TEST_CASE("dominates") {
  CHECK(dominates(poly({1, 1}), poly({0, 2})).ok);
  SlopePolygon P = poly({0, 1, 3});
  CHECK(dominates(P, P).ok);
  auto r = dominates(poly({0, 1}), poly({1, 1}));
  CHECK_FALSE(r.ok);
  CHECK(r.why == DominanceResult::Why::EndpointMismatch);
  auto r2 = dominates(poly({0, 2}), poly({1, 1}));
  CHECK_FALSE(r2.ok);
  CHECK(r2.why == DominanceResult::Why::Interior);
  CHECK(r2.index == 1);
}

namespace {

// random nondecreasing integer slope list of length n with fixed sum;
// built by repeatedly flattening a sorted random list
SlopePolygon randomConvex(Rng& rng, int n, int total) {
  std::vector<long long> s(n, 0);
  int left = total;
  for (int i = 0; i < n && left > 0; ++i) {
    int take = (int)rng.below((uint64_t)(left + 1));
    s[i] = take;
    left -= take;
  }
  s[n - 1] += left;
  std::sort(s.begin(), s.end());
  std::vector<Rat> rs;
  for (long long v : s) rs.push_back(ratMake(v));
  return SlopePolygon(std::move(rs));
}

}  // namespace

TEST_CASE("dominance is a partial order on shared-endpoint polygons") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + (int)rng.below(4);
    int total = (int)rng.below(9);
    SlopePolygon A = randomConvex(rng, n, total);
    SlopePolygon B = randomConvex(rng, n, total);
    SlopePolygon C = randomConvex(rng, n, total);
    CHECK(dominates(A, A).ok);  // reflexive
    if (dominates(A, B).ok && dominates(B, A).ok) CHECK(A == B);  // antisymmetric
    if (dominates(A, B).ok && dominates(B, C).ok) CHECK(dominates(A, C).ok);  // transitive
  }
}

TEST_CASE("symmetrize-check") {
  CHECK(symmetrizeCheck(poly({0, 1, 2, 3}), ratMake(3)));
  CHECK(symmetrizeCheck(poly({0, 0}), ratMake(0)));
  CHECK_FALSE(symmetrizeCheck(poly({0, 1}), ratMake(3)));
  int w = -1;
  CHECK_FALSE(symmetrizeCheck(poly({0, 1, 1, 3}), ratMake(3), &w));
  CHECK(w == 1);
}

TEST_CASE("rational helpers") {
  CHECK(ratMake(2, 4) == ratMake(1, 2));
  CHECK(ratMake(-2, -4) == ratMake(1, 2));
  CHECK(ratStr(ratMake(0)) == "0/1");
  CHECK(ratStr(ratMake(1, 2)) == "1/2");
  CHECK(ratMake(1, 3) < ratMake(2, 5));
  CHECK(ratDivInt(ratMake(3), 2) == ratMake(3, 2));
}
