#include "fcr/crystal.hpp"

namespace fcr {

FCrystal::FCrystal(Ring r, MatrixW mat) : ring(std::move(r)), n(mat.rows()), A(std::move(mat)) {
  if (A.rows() != A.cols() || A.rows() < 1) throw Error(ErrKind::Invalid, "crystal matrix must be square");
  detVal = matrixDet(A).val();
  if (detVal >= ring->N)
    throw Error(ErrKind::Precision, "det(A) is zero at precision N; F not certifiably injective");
}

SlopePolygon hodgeSlopes(const FCrystal& C) {
  SmithForm sf = smith(C.A);
  std::vector<Rat> s;
  s.reserve(sf.divisorExps.size());
  for (int d : sf.divisorExps) s.push_back(ratMake(d));
  return SlopePolygon(std::move(s));
}

MatrixW twistedPower(const FCrystal& C) {
  MatrixW P = C.A;
  for (int k = 1; k < C.ring->a; ++k) P = P * C.A.frobenius(k);
  return P;
}

SlopePolygon newtonSlopes(const FCrystal& C) {
  int a = C.ring->a;
  if (a * C.detVal >= C.ring->N)
    throw Error(ErrKind::Precision, "det(F^a) valuation reaches precision N; Newton polygon uncertified");
  MatrixW P = twistedPower(C);
  PolyW f = charpoly(P);
  SlopePolygon hull = polygonFromValuations(polyValuations(f), C.ring->N);
  return scaleSlopesDiv(hull, a);
}

FCrystal dualCrystal(const FCrystal& C, const WittScalar& c) {
  InverseResult inv = inverseMatrix(C.A);
  MatrixW B = inv.inv.mat.transpose().scaled(c);
  int e = inv.inv.denomExp;
  // every entry of c * (A^{-1})^t must be integral
  for (int i = 0; i < C.n; ++i)
    for (int j = 0; j < C.n; ++j)
      if (B.at(i, j).val() < e)
        throw Error(ErrKind::NotIntegral, "dual Frobenius matrix has a negative-valuation entry");
  return FCrystal(C.ring, B.divByP(e));
}

FCrystal conjugate(const FCrystal& C, const MatrixW& U) {
  if (matrixDet(U).val() != 0) throw Error(ErrKind::NotAUnit, "conjugation needs a unit-determinant matrix");
  return FCrystal(C.ring, unitInverse(U) * C.A * U.frobenius());
}

MazurReport mazurCheck(const FCrystal& C) {
  MazurReport rep;
  rep.newton = newtonSlopes(C);
  rep.hodge = hodgeSlopes(C);
  rep.detVal = C.detVal;
  rep.dom = dominates(rep.newton, rep.hodge);
  rep.hodgeEndpointOk = rep.hodge.value(C.n) == ratMake(C.detVal);
  rep.newtonEndpointOk = rep.newton.value(C.n) == ratMake(C.detVal);
  rep.pass = rep.dom.ok && rep.hodgeEndpointOk && rep.newtonEndpointOk;
  return rep;
}

}  // namespace fcr
