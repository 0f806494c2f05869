#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "fcr/errors.hpp"
#include "fcr/rng.hpp"

namespace fcr {

// W(F_{p^a}) truncated at p^N, realized as Z_p[x]/(modulus) with all
// coefficients reduced mod p^N.  The modulus is a monic degree-a integer
// polynomial, irreducible mod p; sigma is the unique automorphism lifting
// x -> x^p, cached as the coordinate images of the power basis.
struct RingParams {
  long p = 0;
  int a = 0;
  int N = 0;
  std::vector<mpz_class> modulus;            // ascending, length a+1, monic
  mpz_class pN;                              // p^N
  std::vector<std::vector<mpz_class>> frob;  // frob[i] = coordinates of sigma(x^i)

  // modulus may be empty: the lift of the lexicographically smallest
  // irreducible monic polynomial mod p is used.
  static std::shared_ptr<const RingParams> make(long p, int a, int N,
                                                std::vector<mpz_class> modulus = {});

  bool sameRing(const RingParams& o) const;
  mpz_class pPow(int k) const;  // p^k for 0 <= k <= N
};

using Ring = std::shared_ptr<const RingParams>;

class WittScalar {
 public:
  WittScalar() = default;
  explicit WittScalar(Ring r);                              // zero
  WittScalar(Ring r, long v);
  WittScalar(Ring r, const mpz_class& v);
  WittScalar(Ring r, std::vector<mpz_class> coeffs);

  const Ring& ring() const { return ring_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  bool isZero() const;
  // min over coefficients of their p-adic valuation, capped at N.
  // val() == N means "indistinguishable from 0 at this precision".
  int val() const;
  bool isUnit() const { return val() == 0; }

  WittScalar operator+(const WittScalar& o) const;
  WittScalar operator-(const WittScalar& o) const;
  WittScalar operator*(const WittScalar& o) const;
  WittScalar operator-() const;
  bool operator==(const WittScalar& o) const;
  bool operator!=(const WittScalar& o) const { return !(*this == o); }

  WittScalar frobenius(int k = 1) const;  // sigma^k
  WittScalar inverse() const;             // throws NotAUnit if val > 0
  WittScalar pow(unsigned long e) const;

  // exact division by p^k; throws NotIntegral unless val >= k.  The result
  // is the canonical representative's quotient, determined mod p^{N-k}.
  WittScalar divByP(int k) const;
  WittScalar timesP(int k) const;
  // this = p^d * unit; returns the unit for d = val().  Zero is rejected.
  WittScalar unitPart() const;

  WittScalar reduceMod(int k) const;  // reduce coefficients mod p^k
  std::string str() const;

 private:
  void reduce();
  Ring ring_;
  std::vector<mpz_class> c_;
};

WittScalar randomScalar(const Ring& r, Rng& rng);
WittScalar randomUnitScalar(const Ring& r, Rng& rng);

}  // namespace fcr
