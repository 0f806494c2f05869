#include "fcr/newton_hodge.hpp"

#include <algorithm>

namespace fcr {

namespace {

constexpr int kMinWorkingPrec = 4;
constexpr int kSeparationMargin = 2;

int budgetOf(const Ring& ring, const DecomposeOptions& opts) {
  if (opts.budget >= 0) return opts.budget;
  return std::max(2, ring->N / 4);
}

PolyW polySub(const PolyW& f, const PolyW& g) {
  PolyW r = f;
  for (size_t i = 0; i < g.size(); ++i) {
    if (i < r.size())
      r[i] = r[i] - g[i];
    else
      r.push_back(-g[i]);
  }
  return r;
}

// f monic with reduction mod p equal to y^{m-b} * ubar, ubar(0) a unit.
// Splits f = pos * unit mod p^K by digitwise Hensel lifting from that coprime
// factorization; pos is monic of degree m-b, unit is monic of degree b.
void henselUnitSplit(const PolyW& f, int b, int K, PolyW& pos, PolyW& unit) {
  const Ring& ring = f.at(0).ring();
  int m = (int)f.size() - 1;
  if (b <= 0 || b >= m) throw Error(ErrKind::Invalid, "unit split needs 0 < b < deg f");

  WittScalar one(ring, 1);
  pos.assign(m - b + 1, WittScalar(ring));
  pos[m - b] = one;
  unit.assign(b + 1, WittScalar(ring));
  for (int j = 0; j <= b; ++j) unit[j] = f[m - b + j].reduceMod(1);
  unit[b] = one;
  if (unit[0].val() != 0)
    throw Error(ErrKind::HenselFailure, "unit factor has non-unit constant term");

  // power series inverse of the unit factor mod (p, y^{m-b})
  PolyW tser(m - b, WittScalar(ring));
  WittScalar u0inv = unit[0].inverse().reduceMod(1);
  tser[0] = u0inv;
  for (int k = 1; k < m - b; ++k) {
    WittScalar acc(ring);
    for (int i = 1; i <= k && i <= b; ++i) acc = acc + unit[i] * tser[k - i];
    tser[k] = (-(u0inv * acc)).reduceMod(1);
  }

  for (int k = 1; k < K; ++k) {
    PolyW e = polyReduceMod(polySub(f, polyMul(pos, unit)), K);
    bool done = true;
    for (const auto& cE : e)
      if (cE.val() < K) done = false;
    if (done) break;
    for (const auto& cE : e)
      if (cE.val() < k) throw Error(ErrKind::HenselFailure, "Hensel digit invariant broken");
    PolyW c(m, WittScalar(ring));
    for (int i = 0; i < m && i < (int)e.size(); ++i) c[i] = e[i].divByP(k).reduceMod(1);

    // delta_pos = rem(tser * c, y^{m-b}); delta_unit = quo(c - delta_pos*unit0, y^{m-b}),
    // all mod p; any lift of the mod-p correction clears digit k
    PolyW dpos(m - b, WittScalar(ring));
    for (int i = 0; i < m - b; ++i) {
      WittScalar acc(ring);
      for (int j = 0; j <= i && j < (int)c.size(); ++j) acc = acc + tser[i - j] * c[j];
      dpos[i] = acc.reduceMod(1);
    }
    PolyW prod = polyMul(dpos, unit);
    PolyW dunit(b, WittScalar(ring));
    for (int i = 0; i < b; ++i) {
      WittScalar x = (m - b + i) < (int)c.size() ? c[m - b + i] : WittScalar(ring);
      if ((m - b + i) < (int)prod.size()) x = x - prod[m - b + i];
      dunit[i] = x.reduceMod(1);
    }
    for (int i = 0; i < m - b; ++i) pos[i] = pos[i] + dpos[i].timesP(k);
    for (int i = 0; i < b; ++i) unit[i] = unit[i] + dunit[i].timesP(k);
  }

  PolyW check = polyReduceMod(polySub(f, polyMul(pos, unit)), K);
  for (const auto& cE : check)
    if (cE.val() < K) throw Error(ErrKind::HenselFailure, "Hensel lift did not converge");
}

MatrixW satKernelBasis(const MatrixW& Q, int expected, int threshold) {
  SmithForm sf = smith(Q);
  int n = Q.rows();
  std::vector<int> idx;
  int maxBelow = -1;
  for (int j = 0; j < n; ++j) {
    if (sf.divisorExps[j] >= threshold)
      idx.push_back(j);
    else
      maxBelow = std::max(maxBelow, sf.divisorExps[j]);
  }
  if ((int)idx.size() != expected)
    throw Error(ErrKind::Precision,
                "kernel rank not certified: expected " + std::to_string(expected) + ", found " +
                    std::to_string(idx.size()) + " at threshold " + std::to_string(threshold));
  if (maxBelow >= 0 && maxBelow > threshold - kSeparationMargin)
    throw Error(ErrKind::Precision, "kernel separation margin too small at this precision");
  return sf.V.submatrixCols(idx);
}

// left inverse of a saturated full-column-rank basis (all divisor exps 0)
MatrixW leftInverseSaturated(const MatrixW& B) {
  SmithForm sf = smith(B);
  for (int d : sf.divisorExps)
    if (d != 0) throw Error(ErrKind::Precision, "basis is not saturated/unimodular");
  int r = B.cols();
  MatrixW Utop(B.ring(), r, B.rows());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < B.rows(); ++j) Utop.at(i, j) = sf.U.at(i, j);
  return sf.V * Utop;
}

// coordinates of T*B in the basis B, with a stability certificate
MatrixW restrictionMatrix(const MatrixW& T, const MatrixW& B, int certPrec, const char* what) {
  MatrixW TB = T * B;
  MatrixW L = leftInverseSaturated(B);
  MatrixW R = L * TB;
  MatrixW residual = TB - B * R;
  if (residual.minVal() < certPrec)
    throw Error(ErrKind::Precision,
                std::string(what) + " not stable at working precision (residual valuation " +
                    std::to_string(residual.minVal()) + " < " + std::to_string(certPrec) + ")");
  return R;
}

struct Block {
  Rat slope;
  int size;
  PolyW f;
};

// full slope-block factorization data of an integral matrix: one entry per
// distinct Newton slope, each carrying the monic factor of charpoly(T) whose
// roots have exactly that valuation
std::vector<Block> slopeBlocks(const MatrixW& T0, const DecomposeOptions& opts, int& achieved) {
  const Ring& ring = T0.ring();
  int N = ring->N;
  int budget = budgetOf(ring, opts);
  std::vector<Block> blocks;
  MatrixW T = T0;
  achieved = N;

  while (true) {
    int m = T.rows();
    PolyW f = charpoly(T);
    SlopePolygon hull = polygonFromValuations(polyValuations(f), N);
    for (int i = 0; i <= m; ++i)
      if (ratMake(achieved - 1) < hull.value(i))
        throw Error(ErrKind::Precision, "slope data exceeds certified precision");

    Rat s0 = hull.slopes()[0];
    int b = 0;
    while (b < m && hull.slopes()[b] == s0) ++b;
    if (b == m) {
      blocks.push_back({s0, m, f});
      break;
    }

    int u = (int)s0.den;
    int t = (int)s0.num;
    MatrixW P = (u == 1) ? T : T.power(u);
    PolyW g = (u == 1) ? f : charpoly(P);

    PolyW h = g;
    if (t > 0) {
      for (int j = 0; j <= m; ++j) h[j] = g[j].divByP(t * (m - j));
      achieved -= t * m;
      if (achieved < kMinWorkingPrec)
        throw Error(ErrKind::Precision,
                    "variable scaling exhausts precision (achieved " + std::to_string(achieved) + ")");
    }

    int Kh = std::min(N, achieved);
    PolyW hPos, hUnit;
    henselUnitSplit(h, b, Kh, hPos, hUnit);

    // undo the scaling: monic degree-b factor of g with the bottom roots
    PolyW gBot(b + 1, WittScalar(ring));
    for (int j = 0; j <= b; ++j) gBot[j] = hUnit[j].timesP(t * (b - j));
    PolyW gRest, rem;
    polyDivModMonic(g, gBot, gRest, rem);
    int threshold = std::max(1, Kh - budget);
    for (const auto& cR : rem)
      if (cR.val() < threshold)
        throw Error(ErrKind::Precision, "slope factor division remainder above threshold");

    MatrixW Bbot = satKernelBasis(polyEvalMatrix(gBot, P), b, threshold);
    MatrixW Brest = satKernelBasis(polyEvalMatrix(gRest, P), m - b, threshold);
    MatrixW Rbot = restrictionMatrix(T, Bbot, threshold, "bottom slope block");
    MatrixW Rrest = restrictionMatrix(T, Brest, threshold, "complementary slope block");

    blocks.push_back({s0, b, charpoly(Rbot)});
    T = Rrest;
  }
  return blocks;
}

PolyW productOfBlocks(const std::vector<Block>& blocks, int upto, const Ring& ring) {
  PolyW f = {WittScalar(ring, 1)};
  for (int k = 0; k < upto; ++k) f = polyMul(f, blocks[k].f);
  return f;
}

}  // namespace

SlopeFactorResult slopeFactor(const PolyW& f, int cutIndex, const DecomposeOptions& opts) {
  const Ring& ring = f.at(0).ring();
  int n = (int)f.size() - 1;
  if (!(f.back() == WittScalar(ring, 1))) throw Error(ErrKind::Invalid, "slopeFactor needs a monic polynomial");
  SlopePolygon hull = polygonFromValuations(polyValuations(f), ring->N);
  if (cutIndex <= 0 || cutIndex >= n || !(hull.slopes()[cutIndex - 1] < hull.slopes()[cutIndex]))
    throw Error(ErrKind::NoBreak,
                "Newton polygon has no break at abscissa " + std::to_string(cutIndex));

  int achieved = 0;
  std::vector<Block> blocks = slopeBlocks(companionMatrix(f), opts, achieved);

  int acc = 0, k = 0;
  while (k < (int)blocks.size() && acc < cutIndex) acc += blocks[k++].size;
  if (acc != cutIndex) throw Error(ErrKind::NoBreak, "cut does not align with a slope block boundary");

  SlopeFactorResult res;
  res.low = productOfBlocks(blocks, k, ring);
  PolyW rem;
  polyDivModMonic(f, res.low, res.high, rem);
  int budget = budgetOf(ring, opts);
  int threshold = std::max(1, std::min(ring->N, achieved) - budget);
  for (const auto& cR : rem)
    if (cR.val() < threshold)
      throw Error(ErrKind::Precision, "slope factorization remainder above threshold");
  res.low = polyReduceMod(res.low, achieved);
  res.high = polyReduceMod(res.high, achieved);
  res.achieved = achieved;
  return res;
}

namespace {

void checkSlopeSplit(CheckReport& rep, const char* name, const SlopePolygon& part,
                     const std::vector<Rat>& expected) {
  bool ok = part.slopes() == expected;
  std::string msg;
  if (!ok) {
    msg = "got [";
    for (Rat r : part.slopes()) msg += ratStr(r) + " ";
    msg += "]";
  }
  rep.add(name, ok, msg);
  if (!ok) throw Error(ErrKind::Precision, std::string("slope split mismatch in ") + name + ": " + msg);
}

}  // namespace

Decomposition decompose(const FCrystal& C, long A, Rat B, const DecomposeOptions& opts) {
  const Ring& ring = C.ring;
  int n = C.n;
  SlopePolygon newton = newtonSlopes(C);
  SlopePolygon hodge = hodgeSlopes(C);
  if (!isBreakPoint(newton, A, B))
    throw Error(ErrKind::Hypothesis,
                "(" + std::to_string(A) + "," + ratStr(B) + ") is not a break point of the Newton polygon");
  if (!liesOn(hodge, A, B))
    throw Error(ErrKind::Hypothesis,
                "(" + std::to_string(A) + "," + ratStr(B) + ") does not lie on the Hodge polygon");

  MatrixW Pi = twistedPower(C);
  PolyW f = charpoly(Pi);
  SlopeFactorResult sfr = slopeFactor(f, (int)A, opts);
  int budget = budgetOf(ring, opts);
  int threshold = std::max(1, std::min(ring->N, sfr.achieved) - budget);

  MatrixW B1 = satKernelBasis(polyEvalMatrix(sfr.low, Pi), (int)A, threshold);
  MatrixW B2 = satKernelBasis(polyEvalMatrix(sfr.high, Pi), n - (int)A, threshold);

  Lattice M1 = Lattice(0, B1).hermiteNormalized();
  Lattice M2 = Lattice(0, B2).hermiteNormalized();
  B1 = M1.basis();
  B2 = M2.basis();

  Decomposition dec{M1, M2, MatrixW(), MatrixW(), MatrixW(), sfr.achieved, {}};
  dec.adapted = B1.concatCols(B2);
  int dv = matrixDet(dec.adapted).val();
  if (dv != 0)
    throw Error(ErrKind::Precision,
                "SplitNotDirect: adapted basis determinant has valuation " + std::to_string(dv));
  dec.certificates.add("direct_sum_unit_det", true, "val(det [B1|B2]) = 0");

  // F-stability under the sigma-linear F itself, not just under Pi:
  // F(B xi) = A sigma(B) sigma(xi), so the restricted matrix solves
  // A sigma(B) = B R
  {
    MatrixW L1 = leftInverseSaturated(B1);
    MatrixW T1 = C.A * B1.frobenius();
    dec.F1 = L1 * T1;
    MatrixW res1 = T1 - B1 * dec.F1;
    if (res1.minVal() < threshold) throw Error(ErrKind::Precision, "M1 not F-stable at working precision");
    MatrixW L2 = leftInverseSaturated(B2);
    MatrixW T2 = C.A * B2.frobenius();
    dec.F2 = L2 * T2;
    MatrixW res2 = T2 - B2 * dec.F2;
    if (res2.minVal() < threshold) throw Error(ErrKind::Precision, "M2 not F-stable at working precision");
  }
  dec.certificates.add("f_stability", true, "A sigma(B_i) has integral coordinates in B_i");

  FCrystal C1(ring, dec.F1), C2(ring, dec.F2);
  std::vector<Rat> hLow(hodge.slopes().begin(), hodge.slopes().begin() + A);
  std::vector<Rat> hHigh(hodge.slopes().begin() + A, hodge.slopes().end());
  std::vector<Rat> nLow(newton.slopes().begin(), newton.slopes().begin() + A);
  std::vector<Rat> nHigh(newton.slopes().begin() + A, newton.slopes().end());
  checkSlopeSplit(dec.certificates, "hodge_slopes_M1", hodgeSlopes(C1), hLow);
  checkSlopeSplit(dec.certificates, "hodge_slopes_M2", hodgeSlopes(C2), hHigh);
  checkSlopeSplit(dec.certificates, "newton_slopes_M1", newtonSlopes(C1), nLow);
  checkSlopeSplit(dec.certificates, "newton_slopes_M2", newtonSlopes(C2), nHigh);
  return dec;
}

SelfDualDecomposition selfDualDecompose(const SelfDualCrystal& S, long A, Rat B,
                                        const DecomposeOptions& opts) {
  const Ring& ring = S.base.ring;
  int n = S.base.n;
  if (S.kind == FormKind::Orthogonal && n % 2 != 0)
    throw Error(ErrKind::Hypothesis, "odd-rank orthogonal crystals are not decomposed");
  if (2 * A >= n)
    throw Error(ErrKind::RankTooLarge, "self-dual decomposition needs A < n/2");
  if (!validate(S).allPass())
    throw Error(ErrKind::Hypothesis, "input is not a valid self-dual crystal");

  int m = S.c.val();
  long symA = n - A;
  Rat symB = ratMake((long long)m * (n / 2 - A)) - B;

  SlopePolygon newton = newtonSlopes(S.base);
  SlopePolygon hodge = hodgeSlopes(S.base);
  if (!isBreakPoint(newton, A, B) || !liesOn(hodge, A, B))
    throw Error(ErrKind::Hypothesis,
                "(" + std::to_string(A) + "," + ratStr(B) + ") is not a Newton break on the Hodge polygon");

  SelfDualDecomposition out{Lattice::standard(ring, n), Lattice::standard(ring, n),
                            Lattice::standard(ring, n), Lattice::standard(ring, n),
                            Lattice::standard(ring, n), Lattice::standard(ring, n),
                            MatrixW(), MatrixW(), MatrixW(), MatrixW(), symA, symB, 0, {}};

  // the symmetric break point is forced by the slope symmetry
  bool symBreak = isBreakPoint(newton, symA, symB) && liesOn(hodge, symA, symB);
  out.certificates.add("symmetric_break_point", symBreak,
                       "(" + std::to_string(symA) + "," + ratStr(symB) + ")");
  if (!symBreak)
    throw Error(ErrKind::Precision, "symmetric break point missing despite valid symmetry");

  Decomposition d1 = decompose(S.base, A, B, opts);
  Decomposition d2 = decompose(S.base, symA, symB, opts);
  out.achieved = std::min(d1.achieved, d2.achieved);
  int budget = budgetOf(ring, opts);
  int threshold = std::max(1, std::min(ring->N, out.achieved) - budget);

  // middle factor = quotient of the two nested low factors
  MatrixW Pi = twistedPower(S.base);
  PolyW f = charpoly(Pi);
  SlopeFactorResult s1 = slopeFactor(f, (int)A, opts);
  SlopeFactorResult s2 = slopeFactor(f, (int)symA, opts);
  PolyW fMid, rem;
  polyDivModMonic(s2.low, s1.low, fMid, rem);
  for (const auto& cR : rem)
    if (cR.val() < threshold) throw Error(ErrKind::Precision, "nested low factors do not divide");

  out.M1 = d1.M1;
  out.M3 = d2.M2;
  out.Mmid = Lattice(0, satKernelBasis(polyEvalMatrix(fMid, Pi), n - 2 * (int)A, threshold))
                 .hermiteNormalized();
  out.flagM2 = d2.M1;

  bool flagOk = latticeSum(out.M1, out.Mmid).equalsAsLattice(out.flagM2);
  out.certificates.add("flag_M2_consistent", flagOk, "M1 + Mmid = M2 as lattices");
  if (!flagOk) throw Error(ErrKind::Precision, "filtration step M1 + Mmid != M2");

  const MatrixW& B1 = out.M1.basis();
  const MatrixW& Bm = out.Mmid.basis();
  const MatrixW& B3 = out.M3.basis();
  MatrixW adapted = B1.concatCols(Bm).concatCols(B3);
  int dv = matrixDet(adapted).val();
  out.certificates.add("three_way_direct_sum", dv == 0, "val(det [B1|Bmid|B3]) = " + std::to_string(dv));
  if (dv != 0) throw Error(ErrKind::Precision, "SplitNotDirect: three-way adapted basis is not unimodular");

  out.MS1 = Lattice(0, B1.concatCols(B3));
  out.MS2 = out.Mmid;
  out.certificates.add("rank_MS1", out.MS1.rank() == 2 * A,
                       "rank " + std::to_string(out.MS1.rank()) + " = 2A");

  // pairing vanishing forced by lambda_i + lambda_j != nu(c)
  auto vanishes = [&](const MatrixW& X, const MatrixW& Y) {
    return (X.transpose() * S.G * Y).minVal() >= threshold;
  };
  bool perp11 = vanishes(B1, B1), perp1m = vanishes(B1, Bm) && vanishes(Bm, B1);
  bool perp33 = vanishes(B3, B3), perp3m = vanishes(Bm, B3) && vanishes(B3, Bm);
  out.certificates.add("pairing_M1_M1_zero", perp11);
  out.certificates.add("pairing_M1_Mmid_zero", perp1m);
  out.certificates.add("pairing_M3_M3_zero", perp33);
  out.certificates.add("pairing_Mmid_M3_zero", perp3m);
  bool flagPerp = perp11 && perp1m;
  out.certificates.add("flag_perpendicular", flagPerp, "Psi(M1)(M2) = Psi(M2)(M1) = 0");
  if (!(perp11 && perp1m && perp33 && perp3m))
    throw Error(ErrKind::Precision, "expected pairing vanishing fails at working precision");

  // induced self-dual structures on MS1 and MS2
  const MatrixW& BS1 = out.MS1.basis();
  out.GS1 = BS1.transpose() * S.G * BS1;
  out.GS2 = Bm.transpose() * S.G * Bm;
  int g1v = matrixDet(out.GS1).val(), g2v = matrixDet(out.GS2).val();
  out.certificates.add("restricted_form_MS1_unimodular", g1v == 0, "val(det GS1) = " + std::to_string(g1v));
  out.certificates.add("restricted_form_MS2_unimodular", g2v == 0, "val(det GS2) = " + std::to_string(g2v));
  if (g1v != 0 || g2v != 0)
    throw Error(ErrKind::Precision, "restricted form is not unimodular at working precision");

  // outer pieces pair perfectly: M1 against M3 through G
  MatrixW outer = B1.transpose() * S.G * B3;
  int ov = matrixDet(outer).val();
  out.certificates.add("outer_duality_perfect", ov == 0, "val(det B1^t G B3) = " + std::to_string(ov));
  if (ov != 0) throw Error(ErrKind::Precision, "outer pieces do not pair perfectly");

  {
    MatrixW LS1 = leftInverseSaturated(BS1);
    MatrixW TS1 = S.base.A * BS1.frobenius();
    out.FS1 = LS1 * TS1;
    if ((TS1 - BS1 * out.FS1).minVal() < threshold)
      throw Error(ErrKind::Precision, "MS1 not F-stable at working precision");
    MatrixW LS2 = leftInverseSaturated(Bm);
    MatrixW TS2 = S.base.A * Bm.frobenius();
    out.FS2 = LS2 * TS2;
    if ((TS2 - Bm * out.FS2).minVal() < threshold)
      throw Error(ErrKind::Precision, "MS2 not F-stable at working precision");
  }
  out.certificates.add("f_stability_MS1_MS2", true);

  SelfDualCrystal S1{FCrystal(ring, out.FS1), out.GS1, S.c, S.kind};
  SelfDualCrystal S2{FCrystal(ring, out.FS2), out.GS2, S.c, S.kind};
  bool v1 = validate(S1).allPass(), v2 = validate(S2).allPass();
  out.certificates.add("restricted_self_dual_MS1", v1);
  out.certificates.add("restricted_self_dual_MS2", v2);
  if (!v1 || !v2) throw Error(ErrKind::Precision, "restricted piece fails self-dual validation");

  // slope statements of the theorem
  auto pick = [](const std::vector<Rat>& s, int from, int to) {
    return std::vector<Rat>(s.begin() + from, s.begin() + to);
  };
  std::vector<Rat> hOuter = pick(hodge.slopes(), 0, (int)A);
  {
    auto top = pick(hodge.slopes(), n - (int)A, n);
    hOuter.insert(hOuter.end(), top.begin(), top.end());
  }
  std::vector<Rat> nOuter = pick(newton.slopes(), 0, (int)A);
  {
    auto top = pick(newton.slopes(), n - (int)A, n);
    nOuter.insert(nOuter.end(), top.begin(), top.end());
  }
  checkSlopeSplit(out.certificates, "hodge_slopes_MS1", hodgeSlopes(S1.base), hOuter);
  checkSlopeSplit(out.certificates, "newton_slopes_MS1", newtonSlopes(S1.base), nOuter);
  checkSlopeSplit(out.certificates, "hodge_slopes_MS2", hodgeSlopes(S2.base),
                  pick(hodge.slopes(), (int)A, n - (int)A));
  checkSlopeSplit(out.certificates, "newton_slopes_MS2", newtonSlopes(S2.base),
                  pick(newton.slopes(), (int)A, n - (int)A));
  return out;
}

ProbeReport uniquenessProbe(const FCrystal& C, long A, Rat B, int trials, uint64_t seed,
                            const DecomposeOptions& opts) {
  ProbeReport rep;
  rep.trials = trials;
  Decomposition base = decompose(C, A, B, opts);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Rng sub = rng.fork((uint64_t)t);
    MatrixW U = randomUnitMatrix(C.ring, C.n, sub);
    FCrystal C2 = conjugate(C, U);
    Decomposition d = decompose(C2, A, B, opts);
    Lattice transported(d.M1.denomExp(), U * d.M1.basis());
    bool ok = transported.equalsAsLattice(base.M1);
    rep.items.add("trial_" + std::to_string(t), ok,
                  ok ? "recovered M1 coincides" : "recovered M1 differs after transport");
    if (!ok && rep.allCoincide) {
      rep.allCoincide = false;
      rep.failingTrial = t;
    }
  }
  return rep;
}

}  // namespace fcr
