#pragma once

#include <optional>
#include <vector>

#include "fcr/witt.hpp"

namespace fcr {

class MatrixW {
 public:
  MatrixW() = default;
  MatrixW(Ring r, int rows, int cols);  // zero matrix

  static MatrixW identity(Ring r, int n);
  static MatrixW diagonalPPowers(Ring r, const std::vector<int>& exps);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  const WittScalar& at(int i, int j) const { return e_[(size_t)i * cols_ + j]; }
  WittScalar& at(int i, int j) { return e_[(size_t)i * cols_ + j]; }

  MatrixW operator+(const MatrixW& o) const;
  MatrixW operator-(const MatrixW& o) const;
  MatrixW operator*(const MatrixW& o) const;
  bool operator==(const MatrixW& o) const;
  bool operator!=(const MatrixW& o) const { return !(*this == o); }

  MatrixW transpose() const;
  MatrixW frobenius(int k = 1) const;  // sigma^k entrywise
  MatrixW scaled(const WittScalar& s) const;
  MatrixW timesP(int k) const;
  MatrixW divByP(int k) const;  // exact, throws NotIntegral
  MatrixW power(int u) const;
  MatrixW submatrixCols(const std::vector<int>& colIdx) const;
  MatrixW concatCols(const MatrixW& o) const;
  MatrixW column(int j) const;

  int minVal() const;  // min entry valuation (capped at N)
  bool isZero() const;

 private:
  int rows_ = 0, cols_ = 0;
  Ring ring_;
  std::vector<WittScalar> e_;
};

struct SmithForm {
  std::vector<int> divisorExps;  // nondecreasing, capped at N
  MatrixW U, V, D;               // U*A*V == D, U and V unit determinant
};
SmithForm smith(const MatrixW& A);

// coefficients of det(xI - A), ascending degree, Samuelson-Berkowitz
// (division-free; the base ring has zero divisors mod p^N)
std::vector<WittScalar> charpoly(const MatrixW& A);
WittScalar matrixDet(const MatrixW& A);

MatrixW unitInverse(const MatrixW& U);  // exact; requires val(det U) == 0

// p^{-denomExp} * mat; K-level objects never store negative valuations
struct ScaledMatrix {
  int denomExp = 0;
  MatrixW mat;
};

struct InverseResult {
  ScaledMatrix inv;     // A^{-1} = p^{-denomExp} * mat
  int detVal = 0;       // valuation of det A (sum of divisor exponents)
  int maxDivisor = 0;   // largest divisor exponent; actual precision loss
};
InverseResult inverseMatrix(const MatrixW& A);

// column span of p^{-denomExp} * basis inside V = W^n (x) K
class Lattice {
 public:
  Lattice(int denomExp, MatrixW basis);
  static Lattice standard(Ring r, int n);

  int denomExp() const { return denomExp_; }
  const MatrixW& basis() const { return basis_; }
  int rank() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }

  bool contains(const Lattice& other) const;
  bool equalsAsLattice(const Lattice& other) const;
  Lattice scaledByP(int k) const;  // multiply the lattice by p^k (k may be negative)
  Lattice hermiteNormalized() const;

 private:
  const SmithForm& snf() const;
  int denomExp_;
  MatrixW basis_;
  mutable std::optional<SmithForm> snf_;
};

// the unique a_1 <= ... <= a_n (possibly negative) such that some basis of M
// scaled by p^{a_i} is a basis of N; both lattices full rank
std::vector<int> latticeInvariants(const Lattice& N, const Lattice& M);

// N^perp = { x in V | x^t G y in W for all y in N }, N full rank
Lattice perpLattice(const Lattice& N, const MatrixW& G);

// largest sublattice of ambient spanning the same K-subspace as S
Lattice saturate(const Lattice& S, const Lattice& ambient);

Lattice latticeSum(const Lattice& x, const Lattice& y);

// --- monic polynomial helpers over W (ascending coefficients) ---

using PolyW = std::vector<WittScalar>;

PolyW polyMul(const PolyW& f, const PolyW& g);
// divisor monic: exact quotient/remainder
void polyDivModMonic(const PolyW& f, const PolyW& g, PolyW& quo, PolyW& rem);
MatrixW polyEvalMatrix(const PolyW& f, const MatrixW& M);
MatrixW companionMatrix(const PolyW& f);
std::vector<int> polyValuations(const PolyW& f);
PolyW polyReduceMod(const PolyW& f, int k);

}  // namespace fcr
