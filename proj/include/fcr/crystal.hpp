#pragma once

#include "fcr/matlat.hpp"
#include "fcr/polygon.hpp"

namespace fcr {

// rank-n F-crystal over F_{p^a} given by the matrix A of the sigma-linear F
// in a fixed basis: F(v) = A * sigma(v) in coordinates
struct FCrystal {
  Ring ring;
  int n = 0;
  MatrixW A;
  int detVal = 0;  // valuation of det A, certified < N at construction

  FCrystal(Ring r, MatrixW mat);
};

SlopePolygon hodgeSlopes(const FCrystal& C);

// matrix of the linear map F^a: Pi = A * sigma(A) * ... * sigma^{a-1}(A)
MatrixW twistedPower(const FCrystal& C);

// Newton slopes via the p-adic Newton polygon of charpoly(Pi), divided by a
SlopePolygon newtonSlopes(const FCrystal& C);

// crystal with matrix c * (A^{-1})^t; throws NotIntegral when some entry
// has negative valuation
FCrystal dualCrystal(const FCrystal& C, const WittScalar& c);

// change of basis: matrix becomes U^{-1} * A * sigma(U)
FCrystal conjugate(const FCrystal& C, const MatrixW& U);

struct MazurReport {
  bool pass = false;
  DominanceResult dom;
  int detVal = 0;
  bool hodgeEndpointOk = false;
  bool newtonEndpointOk = false;
  SlopePolygon newton, hodge;
};
MazurReport mazurCheck(const FCrystal& C);

}  // namespace fcr
