#include "fcr/selfdual.hpp"

namespace fcr {

CheckReport validate(const SelfDualCrystal& S) {
  CheckReport rep;
  const Ring& ring = S.base.ring;
  const MatrixW& A = S.base.A;
  const MatrixW& G = S.G;
  int n = S.base.n;

  bool kindOk = (S.kind == FormKind::Symplectic) ? (G.transpose() == MatrixW(ring, n, n) - G)
                                                 : (G.transpose() == G);
  rep.add("kind_consistency", kindOk,
          S.kind == FormKind::Symplectic ? "G^t = -G" : "G^t = G");

  int gden = matrixDet(G).val();
  rep.add("form_unimodular", gden == 0, "val(det G) = " + std::to_string(gden));

  int cv = S.c.val();
  rep.add("c_certified", cv < ring->N, "val(c) = " + std::to_string(cv));

  bool sim = (A.transpose() * G * A) == G.frobenius().scaled(S.c);
  rep.add("similitude", sim, "A^t G A = c sigma(G)");

  bool dualOk = true;
  std::string dualMsg = "c (A^{-1})^t integral";
  try {
    dualCrystal(S.base, S.c);
  } catch (const Error& e) {
    dualOk = false;
    dualMsg = e.what();
  }
  rep.add("dual_integrality", dualOk, dualMsg);

  if (kindOk && gden == 0 && cv < ring->N && sim && dualOk) {
    rep.merge(slopeSymmetryCheck(S));
  }
  return rep;
}

CheckReport slopeSymmetryCheck(const SelfDualCrystal& S) {
  CheckReport rep;
  Rat m = ratMake(S.c.val());
  int w = -1;
  SlopePolygon newton = newtonSlopes(S.base);
  bool nOk = symmetrizeCheck(newton, m, &w);
  rep.add("newton_symmetry", nOk,
          nOk ? "lambda_i + lambda_{n-i+1} = " + ratStr(m) : "failing index " + std::to_string(w));
  SlopePolygon hodge = hodgeSlopes(S.base);
  bool hOk = symmetrizeCheck(hodge, m, &w);
  rep.add("hodge_symmetry", hOk,
          hOk ? "a_i + a_{n-i+1} = " + ratStr(m) : "failing index " + std::to_string(w));
  return rep;
}

CheckReport frobeniusLatticePerp(const SelfDualCrystal& S) {
  CheckReport rep;
  Lattice FM(0, S.base.A);
  Lattice perp = perpLattice(FM, S.G);
  Lattice target = FM.scaledByP(-S.c.val());  // (1/c) F(M); the unit part does not move the lattice
  bool eq = perp.equalsAsLattice(target);
  rep.add("frobenius_lattice_perp", eq, "F(M)^perp = (1/c) F(M)");
  return rep;
}

FormEvaluator::FormEvaluator(MatrixW G, MatrixW A, WittScalar c)
    : G_(std::move(G)), A_(std::move(A)), c_(std::move(c)) {}

WittScalar FormEvaluator::pair(const MatrixW& x, const MatrixW& y) const {
  MatrixW r = x.transpose() * G_ * y;
  return r.at(0, 0);
}

bool FormEvaluator::similitudeLaw(const MatrixW& x, const MatrixW& y) const {
  MatrixW Fx = A_ * x.frobenius();
  MatrixW Fy = A_ * y.frobenius();
  return pair(Fx, Fy) == c_ * pair(x, y).frobenius();
}

FormEvaluator formFromQuintuple(const SelfDualCrystal& S) {
  return FormEvaluator(S.G, S.base.A, S.c);
}

MatrixW standardSymplecticForm(const Ring& r, int n) {
  if (n % 2 != 0) throw Error(ErrKind::Invalid, "symplectic form needs even rank");
  MatrixW J(r, n, n);
  for (int i = 0; i < n; ++i) J.at(i, n - 1 - i) = WittScalar(r, i < n / 2 ? 1 : -1);
  return J;
}

MatrixW standardOrthogonalForm(const Ring& r, int n) {
  MatrixW G(r, n, n);
  for (int i = 0; i < n; ++i) G.at(i, n - 1 - i) = WittScalar(r, 1);
  return G;
}

namespace {

// sign of the standard form at row i
int eps(int i, int n) { return i < n / 2 ? 1 : -1; }

}  // namespace

MatrixW randomSymplecticUnit(const Ring& r, int n, Rng& rng) {
  MatrixW K = MatrixW::identity(r, n);
  int steps = 6 * n;
  for (int s = 0; s < steps; ++s) {
    MatrixW T = MatrixW::identity(r, n);
    switch (rng.below(3)) {
      case 0: {  // long-root transvection: I + u E_{i, n-1-i}
        int i = (int)rng.below((uint64_t)n);
        WittScalar u = randomScalar(r, rng);
        T.at(i, n - 1 - i) = T.at(i, n - 1 - i) + u;
        break;
      }
      case 1: {  // short-root pair: I + u E_{ij} - eps_i eps_j u E_{n-1-j, n-1-i}
        if (n == 2) continue;
        int i = (int)rng.below((uint64_t)n);
        int j = (int)rng.below((uint64_t)n);
        if (j == i || j == n - 1 - i) continue;
        WittScalar u = randomScalar(r, rng);
        T.at(i, j) = T.at(i, j) + u;
        WittScalar v = (eps(i, n) * eps(j, n) == 1) ? -u : u;
        T.at(n - 1 - j, n - 1 - i) = T.at(n - 1 - j, n - 1 - i) + v;
        break;
      }
      default: {  // torus: d_i d_{n-1-i} = 1
        int i = (int)rng.below((uint64_t)(n / 2));
        WittScalar t = randomUnitScalar(r, rng);
        T.at(i, i) = t;
        T.at(n - 1 - i, n - 1 - i) = t.inverse();
        break;
      }
    }
    K = K * T;
  }
  return K;
}

MatrixW randomUnitMatrix(const Ring& r, int n, Rng& rng) {
  MatrixW K = MatrixW::identity(r, n);
  if (n == 1) {
    K.at(0, 0) = randomUnitScalar(r, rng);
    return K;
  }
  int steps = 6 * n;
  for (int s = 0; s < steps; ++s) {
    MatrixW T = MatrixW::identity(r, n);
    if (rng.below(4) == 0) {
      int i = (int)rng.below((uint64_t)n);
      T.at(i, i) = randomUnitScalar(r, rng);
    } else {
      int i = (int)rng.below((uint64_t)n);
      int j = (int)rng.below((uint64_t)n);
      if (j == i) continue;
      T.at(i, j) = randomScalar(r, rng);
    }
    K = K * T;
  }
  return K;
}

SelfDualCrystal generateSelfDual(const Ring& r, int n, const std::vector<int>& mu, uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw Error(ErrKind::Invalid, "generator needs even rank n >= 2");
  if ((int)mu.size() != n) throw Error(ErrKind::Invalid, "mu must list n exponents");
  int m = mu.front() + mu.back();
  for (int i = 0; i < n; ++i) {
    if (mu[i] < 0) throw Error(ErrKind::Invalid, "mu exponents must be nonnegative");
    if (i + 1 < n && mu[i] > mu[i + 1]) throw Error(ErrKind::Invalid, "mu must be nondecreasing");
    if (mu[i] + mu[n - 1 - i] != m) throw Error(ErrKind::Invalid, "mu must satisfy mu_i + mu_{n-i+1} = m");
  }
  if (m >= r->N) throw Error(ErrKind::Precision, "similitude exponent m must be < N");

  Rng rng(seed);
  MatrixW K1 = randomSymplecticUnit(r, n, rng);
  MatrixW K2 = randomSymplecticUnit(r, n, rng);
  MatrixW A = K1 * MatrixW::diagonalPPowers(r, mu) * K2;
  MatrixW J = standardSymplecticForm(r, n);
  WittScalar c = WittScalar(r, 1).timesP(m);

  SelfDualCrystal S{FCrystal(r, A), J, c, FormKind::Symplectic};
  if (!((A.transpose() * J * A) == J.scaled(c)))
    throw Error(ErrKind::Invalid, "generator produced a non-similitude matrix");
  return S;
}

}  // namespace fcr
