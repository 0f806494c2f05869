#include "fcr/matlat.hpp"

#include <algorithm>

namespace fcr {

MatrixW::MatrixW(Ring r, int rows, int cols)
    : rows_(rows), cols_(cols), ring_(std::move(r)), e_((size_t)rows * cols, WittScalar(ring_)) {}

MatrixW MatrixW::identity(Ring r, int n) {
  MatrixW m(r, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = WittScalar(r, 1);
  return m;
}

MatrixW MatrixW::diagonalPPowers(Ring r, const std::vector<int>& exps) {
  int n = (int)exps.size();
  MatrixW m(r, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = WittScalar(r, 1).timesP(exps[i]);
  return m;
}

MatrixW MatrixW::operator+(const MatrixW& o) const {
  MatrixW m(ring_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
  return m;
}

MatrixW MatrixW::operator-(const MatrixW& o) const {
  MatrixW m(ring_, rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
  return m;
}

MatrixW MatrixW::operator*(const MatrixW& o) const {
  if (cols_ != o.rows_) throw Error(ErrKind::Invalid, "matrix dimension mismatch");
  MatrixW m(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const WittScalar& aik = at(i, k);
      if (aik.isZero()) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) = m.at(i, j) + aik * o.at(k, j);
    }
  return m;
}

bool MatrixW::operator==(const MatrixW& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

MatrixW MatrixW::transpose() const {
  MatrixW m(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

MatrixW MatrixW::frobenius(int k) const {
  MatrixW m(ring_, rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) m.e_[t] = e_[t].frobenius(k);
  return m;
}

MatrixW MatrixW::scaled(const WittScalar& s) const {
  MatrixW m(ring_, rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) m.e_[t] = e_[t] * s;
  return m;
}

MatrixW MatrixW::timesP(int k) const {
  MatrixW m(ring_, rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) m.e_[t] = e_[t].timesP(k);
  return m;
}

MatrixW MatrixW::divByP(int k) const {
  MatrixW m(ring_, rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) m.e_[t] = e_[t].divByP(k);
  return m;
}

MatrixW MatrixW::power(int u) const {
  if (rows_ != cols_) throw Error(ErrKind::Invalid, "power of a non-square matrix");
  MatrixW r = identity(ring_, rows_);
  MatrixW b = *this;
  while (u > 0) {
    if (u & 1) r = r * b;
    b = b * b;
    u >>= 1;
  }
  return r;
}

MatrixW MatrixW::submatrixCols(const std::vector<int>& colIdx) const {
  MatrixW m(ring_, rows_, (int)colIdx.size());
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < colIdx.size(); ++j) m.at(i, (int)j) = at(i, colIdx[j]);
  return m;
}

MatrixW MatrixW::concatCols(const MatrixW& o) const {
  if (rows_ != o.rows_) throw Error(ErrKind::Invalid, "concat of mismatched row counts");
  MatrixW m(ring_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

MatrixW MatrixW::column(int j) const {
  MatrixW m(ring_, rows_, 1);
  for (int i = 0; i < rows_; ++i) m.at(i, 0) = at(i, j);
  return m;
}

int MatrixW::minVal() const {
  int best = ring_->N;
  for (const auto& s : e_) best = std::min(best, s.val());
  return best;
}

bool MatrixW::isZero() const {
  for (const auto& s : e_)
    if (!s.isZero()) return false;
  return true;
}

// --- Smith normal form over the local ring ---
// pivot: entry of minimal valuation, ties broken row-major (deterministic
// golden outputs depend on this order)

SmithForm smith(const MatrixW& A) {
  const Ring& ring = A.ring();
  int N = ring->N;
  int rows = A.rows(), cols = A.cols();
  int steps = std::min(rows, cols);
  SmithForm sf;
  sf.D = A;
  sf.U = MatrixW::identity(ring, rows);
  sf.V = MatrixW::identity(ring, cols);
  sf.divisorExps.assign(steps, N);

  for (int k = 0; k < steps; ++k) {
    int bi = -1, bj = -1, bv = N;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        int v = sf.D.at(i, j).val();
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;  // remaining block is zero mod p^N

    if (bi != k) {
      for (int j = 0; j < cols; ++j) std::swap(sf.D.at(k, j), sf.D.at(bi, j));
      for (int j = 0; j < rows; ++j) std::swap(sf.U.at(k, j), sf.U.at(bi, j));
    }
    if (bj != k) {
      for (int i = 0; i < rows; ++i) std::swap(sf.D.at(i, k), sf.D.at(i, bj));
      for (int i = 0; i < cols; ++i) std::swap(sf.V.at(i, k), sf.V.at(i, bj));
    }

    // normalize the pivot row so the pivot becomes exactly p^bv
    WittScalar w = sf.D.at(k, k).unitPart().inverse();
    for (int j = 0; j < cols; ++j) sf.D.at(k, j) = sf.D.at(k, j) * w;
    for (int j = 0; j < rows; ++j) sf.U.at(k, j) = sf.U.at(k, j) * w;

    for (int i = k + 1; i < rows; ++i) {
      if (sf.D.at(i, k).isZero()) continue;
      WittScalar q = sf.D.at(i, k).divByP(bv);
      for (int j = 0; j < cols; ++j) sf.D.at(i, j) = sf.D.at(i, j) - q * sf.D.at(k, j);
      for (int j = 0; j < rows; ++j) sf.U.at(i, j) = sf.U.at(i, j) - q * sf.U.at(k, j);
    }
    for (int j = k + 1; j < cols; ++j) {
      if (sf.D.at(k, j).isZero()) continue;
      WittScalar q = sf.D.at(k, j).divByP(bv);
      for (int i = 0; i < rows; ++i) sf.D.at(i, j) = sf.D.at(i, j) - sf.D.at(i, k) * q;
      for (int i = 0; i < cols; ++i) sf.V.at(i, j) = sf.V.at(i, j) - sf.V.at(i, k) * q;
    }
    sf.divisorExps[k] = bv;
  }
  return sf;
}

std::vector<WittScalar> charpoly(const MatrixW& A) {
  if (A.rows() != A.cols()) throw Error(ErrKind::Invalid, "charpoly of a non-square matrix");
  const Ring& ring = A.ring();
  int n = A.rows();
  WittScalar one(ring, 1);
  // Samuelson-Berkowitz; poly kept in descending order during the sweep
  std::vector<WittScalar> poly = {one};
  for (int r = 1; r <= n; ++r) {
    std::vector<WittScalar> c(r + 1, WittScalar(ring));
    c[0] = one;
    c[1] = -A.at(r - 1, r - 1);
    std::vector<WittScalar> w(r - 1, WittScalar(ring));
    for (int i = 0; i < r - 1; ++i) w[i] = A.at(i, r - 1);
    for (int k = 1; k <= r - 1; ++k) {
      WittScalar dot(ring);
      for (int i = 0; i < r - 1; ++i) dot = dot + A.at(r - 1, i) * w[i];
      c[k + 1] = -dot;
      if (k < r - 1) {
        std::vector<WittScalar> w2(r - 1, WittScalar(ring));
        for (int i = 0; i < r - 1; ++i) {
          for (int j = 0; j < r - 1; ++j) w2[i] = w2[i] + A.at(i, j) * w[j];
        }
        w = std::move(w2);
      }
    }
    std::vector<WittScalar> next(r + 1, WittScalar(ring));
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < (int)poly.size(); ++j) {
        int d = i - j;
        if (d >= 0 && d <= r) next[i] = next[i] + c[d] * poly[j];
      }
    poly = std::move(next);
  }
  std::vector<WittScalar> asc(n + 1, WittScalar(ring));
  for (int i = 0; i <= n; ++i) asc[i] = poly[n - i];
  return asc;
}

WittScalar matrixDet(const MatrixW& A) {
  auto f = charpoly(A);
  WittScalar c0 = f[0];
  return (A.rows() % 2 == 0) ? c0 : -c0;
}

MatrixW unitInverse(const MatrixW& U) {
  SmithForm sf = smith(U);
  for (int d : sf.divisorExps)
    if (d != 0) throw Error(ErrKind::NotAUnit, "matrix determinant is not a unit");
  return sf.V * sf.U;
}

InverseResult inverseMatrix(const MatrixW& A) {
  if (A.rows() != A.cols()) throw Error(ErrKind::Invalid, "inverse of a non-square matrix");
  const Ring& ring = A.ring();
  int n = A.rows(), N = ring->N;
  SmithForm sf = smith(A);
  int detVal = 0, dmax = 0;
  for (int d : sf.divisorExps) {
    if (d >= N) throw Error(ErrKind::Precision, "matrix not invertible at precision N");
    detVal += d;
    dmax = std::max(dmax, d);
  }
  MatrixW mid(ring, n, n);
  for (int i = 0; i < n; ++i) mid.at(i, i) = WittScalar(ring, 1).timesP(dmax - sf.divisorExps[i]);
  InverseResult res;
  res.inv = ScaledMatrix{dmax, sf.V * mid * sf.U};
  res.detVal = detVal;
  res.maxDivisor = dmax;
  return res;
}

// --- Lattice ---

Lattice::Lattice(int denomExp, MatrixW basis) : denomExp_(denomExp), basis_(std::move(basis)) {
  if (denomExp_ < 0) throw Error(ErrKind::Invalid, "negative lattice denominator");
  if (basis_.cols() < 1 || basis_.cols() > basis_.rows())
    throw Error(ErrKind::Invalid, "lattice basis must have 1..n columns");
  const auto& sf = snf();
  for (int d : sf.divisorExps)
    if (d >= basis_.ring()->N - denomExp_)
      throw Error(ErrKind::Precision, "lattice basis columns not certifiably independent");
}

Lattice Lattice::standard(Ring r, int n) { return Lattice(0, MatrixW::identity(std::move(r), n)); }

const SmithForm& Lattice::snf() const {
  if (!snf_) snf_ = smith(basis_);
  return *snf_;
}

bool Lattice::contains(const Lattice& other) const {
  if (dim() != other.dim()) throw Error(ErrKind::Invalid, "lattices in different ambient spaces");
  const Ring& ring = basis_.ring();
  int N = ring->N;
  const SmithForm& sf = snf();
  int r = rank();
  // column w of other is in this lattice iff basis*y = p^{denom-odenom} w has
  // an integral solution; read divisibility off the Smith form
  MatrixW Uw = sf.U * other.basis();
  int shift = denomExp_ - other.denomExp();
  for (int j = 0; j < other.rank(); ++j) {
    for (int i = 0; i < dim(); ++i) {
      int need = (i < r ? sf.divisorExps[i] : N) - shift;
      if (need <= 0) continue;
      if (need > N)
        throw Error(ErrKind::Precision, "lattice membership not certifiable at precision N");
      if (Uw.at(i, j).val() < need) return false;
    }
  }
  return true;
}

bool Lattice::equalsAsLattice(const Lattice& other) const {
  return rank() == other.rank() && contains(other) && other.contains(*this);
}

Lattice Lattice::scaledByP(int k) const {
  // p^k * (p^{-e} B) = p^{-(e-k)} B
  int e = denomExp_ - k;
  if (e >= 0) return Lattice(e, basis_);
  return Lattice(0, basis_.timesP(-e));
}

Lattice Lattice::hermiteNormalized() const {
  const Ring& ring = basis_.ring();
  int N = ring->N;
  MatrixW B = basis_;
  int e = denomExp_;
  // strip common p-content against the denominator
  while (e > 0 && B.minVal() >= 1) {
    B = B.divByP(1);
    --e;
  }
  // column echelon with pivots p^k, later columns cleared, earlier columns
  // reduced mod the pivot
  int n = B.rows(), r = B.cols();
  int j = 0;
  for (int i = 0; i < n && j < r; ++i) {
    int bt = -1, bv = N;
    for (int t = j; t < r; ++t) {
      int v = B.at(i, t).val();
      if (v < bv) {
        bv = v;
        bt = t;
      }
    }
    if (bt < 0) continue;
    if (bt != j)
      for (int q = 0; q < n; ++q) std::swap(B.at(q, j), B.at(q, bt));
    WittScalar w = B.at(i, j).unitPart().inverse();
    for (int q = 0; q < n; ++q) B.at(q, j) = B.at(q, j) * w;
    for (int t = j + 1; t < r; ++t) {
      if (B.at(i, t).isZero()) continue;
      WittScalar q = B.at(i, t).divByP(bv);
      for (int s = 0; s < n; ++s) B.at(s, t) = B.at(s, t) - q * B.at(s, j);
    }
    // reduce earlier columns mod p^bv at this row (coefficientwise canonical quotient)
    mpz_class pk = ring->pPow(bv);
    for (int t = 0; t < j; ++t) {
      std::vector<mpz_class> qc(ring->a);
      bool nz = false;
      for (int ci = 0; ci < ring->a; ++ci) {
        mpz_fdiv_q(qc[ci].get_mpz_t(), B.at(i, t).coeffs()[ci].get_mpz_t(), pk.get_mpz_t());
        if (qc[ci] != 0) nz = true;
      }
      if (!nz) continue;
      WittScalar q(ring, std::move(qc));
      for (int s = 0; s < n; ++s) B.at(s, t) = B.at(s, t) - q * B.at(s, j);
    }
    ++j;
  }
  return Lattice(e, B);
}

std::vector<int> latticeInvariants(const Lattice& NL, const Lattice& ML) {
  if (NL.dim() != ML.dim() || NL.rank() != NL.dim() || ML.rank() != ML.dim())
    throw Error(ErrKind::Invalid, "lattice invariants need two full-rank lattices");
  const Ring& ring = ML.basis().ring();
  InverseResult inv = inverseMatrix(ML.basis());
  MatrixW X = inv.inv.mat * NL.basis();
  SmithForm sf = smith(X);
  int offset = ML.denomExp() - NL.denomExp() - inv.inv.denomExp;
  std::vector<int> out;
  out.reserve(sf.divisorExps.size());
  for (int d : sf.divisorExps) {
    if (d >= ring->N) throw Error(ErrKind::Precision, "lattice invariant not certified at precision N");
    out.push_back(d + offset);
  }
  return out;
}

Lattice perpLattice(const Lattice& N, const MatrixW& G) {
  if (N.rank() != N.dim()) throw Error(ErrKind::Invalid, "perp of a non-full-rank lattice");
  // x in N^perp iff B^t G^t x lies in p^e W^n
  MatrixW M = N.basis().transpose() * G.transpose();
  InverseResult inv = inverseMatrix(M);
  int k = N.denomExp() - inv.inv.denomExp;
  if (k >= 0) return Lattice(0, inv.inv.mat.timesP(k));
  return Lattice(-k, inv.inv.mat);
}

Lattice saturate(const Lattice& S, const Lattice& ambient) {
  if (S.dim() != ambient.dim() || ambient.rank() != ambient.dim())
    throw Error(ErrKind::Invalid, "saturate needs a full-rank ambient lattice");
  const Ring& ring = ambient.basis().ring();
  InverseResult inv = inverseMatrix(ambient.basis());
  MatrixW Y = inv.inv.mat * S.basis();
  SmithForm sf = smith(Y);
  for (int d : sf.divisorExps)
    if (d >= ring->N)
      throw Error(ErrKind::Precision, "saturation subspace not certified at precision N");
  MatrixW Uinv = unitInverse(sf.U);
  std::vector<int> idx(S.rank());
  for (int i = 0; i < S.rank(); ++i) idx[i] = i;
  MatrixW cols = Uinv.submatrixCols(idx);
  return Lattice(ambient.denomExp(), ambient.basis() * cols);
}

Lattice latticeSum(const Lattice& x, const Lattice& y) {
  if (x.dim() != y.dim()) throw Error(ErrKind::Invalid, "sum of lattices in different spaces");
  int e = std::max(x.denomExp(), y.denomExp());
  MatrixW bx = x.basis().timesP(e - x.denomExp());
  MatrixW by = y.basis().timesP(e - y.denomExp());
  return Lattice(e, bx.concatCols(by));
}

// --- polynomial helpers ---

PolyW polyMul(const PolyW& f, const PolyW& g) {
  const Ring& ring = f.at(0).ring();
  PolyW r(f.size() + g.size() - 1, WittScalar(ring));
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].isZero()) continue;
    for (size_t j = 0; j < g.size(); ++j) r[i + j] = r[i + j] + f[i] * g[j];
  }
  return r;
}

void polyDivModMonic(const PolyW& f, const PolyW& g, PolyW& quo, PolyW& rem) {
  const Ring& ring = f.at(0).ring();
  int df = (int)f.size() - 1, dg = (int)g.size() - 1;
  if (!(g.back() == WittScalar(ring, 1))) throw Error(ErrKind::Invalid, "division by a non-monic polynomial");
  rem = f;
  if (df < dg) {
    quo = {WittScalar(ring)};
    return;
  }
  quo.assign(df - dg + 1, WittScalar(ring));
  for (int k = df; k >= dg; --k) {
    WittScalar c = rem[k];
    if (c.isZero()) continue;
    quo[k - dg] = c;
    for (int i = 0; i <= dg; ++i) rem[k - dg + i] = rem[k - dg + i] - c * g[i];
  }
  rem.resize(std::max(dg, 1));
}

MatrixW polyEvalMatrix(const PolyW& f, const MatrixW& M) {
  const Ring& ring = M.ring();
  int n = M.rows();
  MatrixW acc = MatrixW::identity(ring, n).scaled(f.back());
  for (int k = (int)f.size() - 2; k >= 0; --k) {
    acc = acc * M;
    for (int i = 0; i < n; ++i) acc.at(i, i) = acc.at(i, i) + f[k];
  }
  return acc;
}

MatrixW companionMatrix(const PolyW& f) {
  const Ring& ring = f.at(0).ring();
  int n = (int)f.size() - 1;
  MatrixW C(ring, n, n);
  for (int i = 1; i < n; ++i) C.at(i, i - 1) = WittScalar(ring, 1);
  for (int i = 0; i < n; ++i) C.at(i, n - 1) = -f[i];
  return C;
}

std::vector<int> polyValuations(const PolyW& f) {
  std::vector<int> v(f.size());
  for (size_t i = 0; i < f.size(); ++i) v[i] = f[i].val();
  return v;
}

PolyW polyReduceMod(const PolyW& f, int k) {
  PolyW r = f;
  for (auto& c : r) c = c.reduceMod(k);
  return r;
}

}  // namespace fcr
