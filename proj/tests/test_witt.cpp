#include <doctest.h>

#include "fcr/witt.hpp"

using namespace fcr;

TEST_CASE("valuation basics") {
  Ring r = RingParams::make(5, 1, 4);
  CHECK(WittScalar(r, 5).val() == 1);
  CHECK(WittScalar(r, 1).val() == 0);
  CHECK(WittScalar(r, 0).val() == 4);  // AtLeastN
  CHECK(WittScalar(r, 625).val() == 4);
  CHECK(WittScalar(r, 50).val() == 2);
}

TEST_CASE("inverse: frozen value mod 5^4") {
  Ring r = RingParams::make(5, 1, 4);
  WittScalar two(r, 2);
  CHECK(two.inverse() == WittScalar(r, 313));
  CHECK(two * WittScalar(r, 313) == WittScalar(r, 1));
  CHECK(WittScalar(r, 1).inverse() == WittScalar(r, 1));
  CHECK_THROWS_AS(WittScalar(r, 5).inverse(), Error);
}

TEST_CASE("frobenius on Z_p is the identity") {
  Ring r = RingParams::make(7, 1, 6);
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    WittScalar s = randomScalar(r, rng);
    CHECK(s.frobenius() == s);
  }
}

TEST_CASE("frobenius for p=2, a=2, modulus x^2+x+1") {
  Ring r = RingParams::make(2, 2, 8, {mpz_class(1), mpz_class(1), mpz_class(1)});
  WittScalar x(r, {mpz_class(0), mpz_class(1)});
  WittScalar sx = x.frobenius();
  // sigma(x) is congruent to x^2 = x+1 mod 2
  CHECK(sx.coeffs()[0] % 2 == 1);
  CHECK(sx.coeffs()[1] % 2 == 1);
  // and is the other exact root: x + sigma(x) = -1 for this modulus
  CHECK(sx + x == -WittScalar(r, 1));
  CHECK(sx.frobenius() == x);  // sigma^2 = id
}

TEST_CASE("sigma^a = id and sigma is a ring homomorphism") {
  for (int a : {2, 3}) {
    Ring r = RingParams::make(3, a, 10);
    Rng rng(42 + a);
    for (int i = 0; i < 50; ++i) {
      WittScalar s = randomScalar(r, rng);
      WittScalar t = randomScalar(r, rng);
      CHECK(s.frobenius(a) == s);
      CHECK((s + t).frobenius() == s.frobenius() + t.frobenius());
      CHECK((s * t).frobenius() == s.frobenius() * t.frobenius());
      CHECK(s.frobenius().val() == s.val());
    }
    // sigma fixes the prime subring
    for (long m : {-3L, 0L, 1L, 17L}) CHECK(WittScalar(r, m).frobenius() == WittScalar(r, m));
  }
}

TEST_CASE("ring axioms on random triples") {
  Ring r = RingParams::make(2, 3, 12);
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    WittScalar s = randomScalar(r, rng), t = randomScalar(r, rng), u = randomScalar(r, rng);
    CHECK((s * t) * u == s * (t * u));
    CHECK(s * (t + u) == s * t + s * u);
    CHECK(s + t == t + s);
    int vs = s.val(), vt = t.val();
    if (vs + vt < 12) CHECK((s * t).val() == vs + vt);
  }
}

TEST_CASE("unit inverses on random units") {
  Ring r = RingParams::make(5, 2, 8);
  Rng rng(9);
  for (int i = 0; i < 25; ++i) {
    WittScalar s = randomUnitScalar(r, rng);
    CHECK(s * s.inverse() == WittScalar(r, 1));
  }
}

TEST_CASE("default modulus is deterministic and irreducible") {
  Ring r1 = RingParams::make(2, 2, 8);
  CHECK(r1->modulus == std::vector<mpz_class>{mpz_class(1), mpz_class(1), mpz_class(1)});
  Ring r2 = RingParams::make(5, 2, 8);
  CHECK(r2->modulus == std::vector<mpz_class>{mpz_class(2), mpz_class(0), mpz_class(1)});
  CHECK_THROWS_AS(RingParams::make(4, 1, 8), Error);   // p not prime
  CHECK_THROWS_AS(RingParams::make(2, 2, 8, {mpz_class(1), mpz_class(0), mpz_class(1)}), Error);
}

TEST_CASE("exact division tracking") {
  Ring r = RingParams::make(3, 1, 6);
  WittScalar s(r, 27);
  CHECK(s.divByP(3) == WittScalar(r, 1));
  CHECK_THROWS_AS(s.divByP(4), Error);
  CHECK(WittScalar(r, 18).unitPart() == WittScalar(r, 2));
}
