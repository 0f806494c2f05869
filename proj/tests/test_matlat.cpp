#include <doctest.h>

#include "fcr/matlat.hpp"
#include "fcr/selfdual.hpp"

using namespace fcr;

namespace {

Ring ringP(long p, int N, int a = 1) { return RingParams::make(p, a, N); }

MatrixW fromLongs(const Ring& r, std::vector<std::vector<long>> rows) {
  MatrixW m(r, (int)rows.size(), (int)rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at((int)i, (int)j) = WittScalar(r, rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("smith: worked examples") {
  Ring r = ringP(3, 10);
  long p = 3;
  CHECK(smith(MatrixW::identity(r, 3)).divisorExps == std::vector<int>{0, 0, 0});

  MatrixW A = fromLongs(r, {{p, 1}, {0, p}});
  SmithForm sf = smith(A);
  CHECK(sf.divisorExps == std::vector<int>{0, 2});
  CHECK(sf.U * A * sf.V == sf.D);

  MatrixW D = MatrixW::diagonalPPowers(r, {2, 0, 1});
  CHECK(smith(D).divisorExps == std::vector<int>{0, 1, 2});
}

TEST_CASE("smith: reconstruction on random matrices") {
  Ring r = ringP(2, 16, 2);
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    MatrixW A(r, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) A.at(i, j) = randomScalar(r, rng).timesP((int)rng.below(3));
    SmithForm sf = smith(A);
    CHECK(sf.U * A * sf.V == sf.D);
    CHECK(unitInverse(sf.U) * sf.D * unitInverse(sf.V) == A);
    for (size_t k = 0; k + 1 < sf.divisorExps.size(); ++k)
      CHECK(sf.divisorExps[k] <= sf.divisorExps[k + 1]);
  }
}

TEST_CASE("charpoly: worked examples") {
  Ring r = ringP(5, 8);
  long p = 5;
  auto f = charpoly(fromLongs(r, {{1, 0}, {0, p}}));
  CHECK(f[2] == WittScalar(r, 1));
  CHECK(f[1] == -WittScalar(r, 1 + p));
  CHECK(f[0] == WittScalar(r, p));

  auto g = charpoly(fromLongs(r, {{0, 1}, {p, 0}}));
  CHECK(g[1] == WittScalar(r, 0));
  CHECK(g[0] == -WittScalar(r, p));

  auto h = charpoly(fromLongs(r, {{p, 1}, {0, p}}));
  CHECK(h[1] == -WittScalar(r, 2 * p));
  CHECK(h[0] == WittScalar(r, p * p));
}

TEST_CASE("charpoly: conjugation invariance and det multiplicativity") {
  Ring r = ringP(3, 12);
  Rng rng(5);
  for (int t = 0; t < 15; ++t) {
    MatrixW A(r, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A.at(i, j) = randomScalar(r, rng);
    MatrixW U = randomUnitMatrix(r, 4, rng);
    MatrixW B = unitInverse(U) * A * U;
    auto fa = charpoly(A), fb = charpoly(B);
    for (size_t k = 0; k < fa.size(); ++k) CHECK(fa[k] == fb[k]);
    MatrixW V = randomUnitMatrix(r, 4, rng);
    CHECK(matrixDet(A * V) == matrixDet(A) * matrixDet(V));
  }
}

TEST_CASE("inverse: identity, diagonal, and composition property") {
  Ring r = ringP(2, 10);
  InverseResult inv = inverseMatrix(MatrixW::identity(r, 3));
  CHECK(inv.inv.denomExp == 0);
  CHECK(inv.inv.mat == MatrixW::identity(r, 3));

  InverseResult d = inverseMatrix(MatrixW::diagonalPPowers(r, {0, 1}));
  CHECK(d.inv.denomExp == 1);            // p^{-1} * diag(p, 1)
  CHECK(d.inv.mat == MatrixW::diagonalPPowers(r, {1, 0}));
  CHECK(d.detVal == 1);

  Rng rng(19);
  for (int t = 0; t < 10; ++t) {
    MatrixW U = randomUnitMatrix(r, 3, rng);
    InverseResult iu = inverseMatrix(U);
    CHECK(iu.inv.denomExp == 0);
    CHECK(U * iu.inv.mat == MatrixW::identity(r, 3));
  }
  CHECK_THROWS_AS(inverseMatrix(MatrixW(r, 2, 2)), Error);  // zero matrix
}

TEST_CASE("lattice invariants") {
  Ring r = ringP(3, 12);
  Lattice M = Lattice::standard(r, 2);
  CHECK(latticeInvariants(M, M) == std::vector<int>{0, 0});

  Lattice N(0, MatrixW::diagonalPPowers(r, {0, 1}));  // span(e1, p e2)
  CHECK(latticeInvariants(N, M) == std::vector<int>{0, 1});

  // negative invariants via denominators
  Lattice Nneg(1, MatrixW::diagonalPPowers(r, {0, 1}));  // span(p^{-1} e1, e2)
  CHECK(latticeInvariants(Nneg, M) == std::vector<int>{-1, 0});
}

TEST_CASE("lattice invariants: antisymmetry on random pairs") {
  Ring r = ringP(2, 20);
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    int n = 3;
    MatrixW U1 = randomUnitMatrix(r, n, rng), U2 = randomUnitMatrix(r, n, rng);
    std::vector<int> e1, e2;
    for (int i = 0; i < n; ++i) e1.push_back((int)rng.below(4));
    for (int i = 0; i < n; ++i) e2.push_back((int)rng.below(4));
    Lattice L1((int)rng.below(3), U1 * MatrixW::diagonalPPowers(r, e1));
    Lattice L2((int)rng.below(3), U2 * MatrixW::diagonalPPowers(r, e2));
    auto a = latticeInvariants(L1, L2);
    auto b = latticeInvariants(L2, L1);
    std::vector<int> nr;
    for (auto it = b.rbegin(); it != b.rend(); ++it) nr.push_back(-*it);
    CHECK(a == nr);
  }
}

TEST_CASE("perp lattice: worked example and involution") {
  Ring r = ringP(5, 12);
  MatrixW J = standardSymplecticForm(r, 2);
  Lattice N(0, MatrixW::diagonalPPowers(r, {0, 1}));  // span(e1, p e2)
  Lattice perp = perpLattice(N, J);
  // N^perp = span(p^{-1} e1, e2)
  Lattice expect(1, MatrixW::diagonalPPowers(r, {0, 1}));
  CHECK(perp.equalsAsLattice(expect));

  // M^perp = M for a unimodular form
  Lattice M = Lattice::standard(r, 2);
  CHECK(perpLattice(M, J).equalsAsLattice(M));

  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    int n = 4;
    MatrixW G = randomUnitMatrix(r, n, rng);
    MatrixW U = randomUnitMatrix(r, n, rng);
    std::vector<int> e;
    for (int i = 0; i < n; ++i) e.push_back((int)rng.below(3));
    Lattice L((int)rng.below(2), U * MatrixW::diagonalPPowers(r, e));
    Lattice pp = perpLattice(perpLattice(L, G), G);
    CHECK(pp.equalsAsLattice(L));
  }
}

TEST_CASE("perp lattice: invariants negate (lemma)") {
  Ring r = ringP(2, 16);
  Rng rng(37);
  Lattice M = Lattice::standard(r, 3);
  for (int t = 0; t < 30; ++t) {
    MatrixW G = randomUnitMatrix(r, 3, rng);
    MatrixW U = randomUnitMatrix(r, 3, rng);
    std::vector<int> e;
    for (int i = 0; i < 3; ++i) e.push_back((int)rng.below(4));
    Lattice N(0, U * MatrixW::diagonalPPowers(r, e));
    auto inv = latticeInvariants(N, M);
    auto invPerp = latticeInvariants(perpLattice(N, G), M);
    std::vector<int> neg;
    for (auto it = inv.rbegin(); it != inv.rend(); ++it) neg.push_back(-*it);
    CHECK(invPerp == neg);
  }
}

TEST_CASE("saturate") {
  Ring r = ringP(3, 10);
  long p = 3;
  Lattice M = Lattice::standard(r, 2);

  Lattice S1(0, fromLongs(r, {{p}, {0}}));
  CHECK(saturate(S1, M).equalsAsLattice(Lattice(0, fromLongs(r, {{1}, {0}}))));

  Lattice S2(0, fromLongs(r, {{p}, {p * p}}));
  CHECK(saturate(S2, M).equalsAsLattice(Lattice(0, fromLongs(r, {{1}, {p}}))));

  // unit-index full-rank sublattice saturates to itself; and idempotence
  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    MatrixW U = randomUnitMatrix(r, 3, rng);
    Lattice S(0, U);
    CHECK(saturate(S, Lattice::standard(r, 3)).equalsAsLattice(S));
    std::vector<int> e = {(int)rng.below(3), (int)rng.below(3), 0};
    Lattice T(0, U * MatrixW::diagonalPPowers(r, e));
    Lattice sat1 = saturate(T, Lattice::standard(r, 3));
    CHECK(saturate(sat1, Lattice::standard(r, 3)).equalsAsLattice(sat1));
  }
}

TEST_CASE("lattice equality is mutual containment") {
  Ring r = ringP(2, 12);
  Lattice A(0, fromLongs(r, {{1, 0}, {0, 2}}));
  Lattice B(0, fromLongs(r, {{1, 2}, {0, 2}}));  // same lattice, different basis
  CHECK(A.equalsAsLattice(B));
  Lattice C(0, fromLongs(r, {{1, 0}, {0, 4}}));
  CHECK_FALSE(A.equalsAsLattice(C));
  CHECK(A.contains(C));
  CHECK_FALSE(C.contains(A));
}

TEST_CASE("polynomial helpers") {
  Ring r = ringP(5, 8);
  WittScalar one(r, 1);
  PolyW f = {WittScalar(r, 5), -WittScalar(r, 6), one};  // (x-1)(x-5)
  PolyW g = {-one, one};
  PolyW q, rem;
  polyDivModMonic(f, g, q, rem);
  CHECK(q == PolyW{-WittScalar(r, 5), one});
  CHECK(rem[0].isZero());

  MatrixW C = companionMatrix(f);
  auto back = charpoly(C);
  for (size_t i = 0; i < f.size(); ++i) CHECK(back[i] == f[i]);
  // Cayley-Hamilton via evaluation
  CHECK(polyEvalMatrix(f, C).isZero());
}
