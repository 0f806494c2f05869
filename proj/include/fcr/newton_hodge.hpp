#pragma once

#include "fcr/selfdual.hpp"

namespace fcr {

struct DecomposeOptions {
  // kernel membership threshold: divisor exponent >= achieved - budget.
  // budget < 0 selects the default N/4 (at least 2).
  int budget = -1;
};

struct SlopeFactorResult {
  PolyW low;     // monic, degree = cut index, carries the smaller slopes
  PolyW high;    // monic complement
  int achieved;  // f = low * high holds mod p^achieved
};

// splits a monic f at a break of its Newton polygon; cutIndex counts roots of
// smallest valuation.  Throws NoBreak when the polygon has no corner there.
SlopeFactorResult slopeFactor(const PolyW& f, int cutIndex, const DecomposeOptions& opts = {});

struct BreakPointHypothesis {
  long A = 0;
  Rat B;
  bool breakOnNewton = false;
  bool liesOnHodge = false;
};

struct Decomposition {
  Lattice M1, M2;
  MatrixW F1, F2;    // matrices of F restricted to each summand, adapted bases
  MatrixW adapted;   // [basis(M1) | basis(M2)], unit determinant
  int achieved = 0;
  CheckReport certificates;
};

// Newton-Hodge decomposition at a break point (A,B) of the Newton polygon
// lying on the Hodge polygon.  Throws Hypothesis when the precondition
// fails and Precision when a certificate cannot be established.
Decomposition decompose(const FCrystal& C, long A, Rat B, const DecomposeOptions& opts = {});

struct SelfDualDecomposition {
  Lattice M1, Mmid, M3;  // low / middle / top slope pieces
  Lattice MS1, MS2;      // outer piece M1 + M3 (rank 2A) and middle piece
  Lattice flagM2;        // M1 + Mmid, the rank n-A filtration step
  MatrixW FS1, FS2;      // restricted Frobenius matrices
  MatrixW GS1, GS2;      // restricted forms, unit determinant
  long symA = 0;         // symmetric break abscissa n-A
  Rat symB;              // and ordinate nu(c)(n/2 - A) - B
  int achieved = 0;
  CheckReport certificates;
};

SelfDualDecomposition selfDualDecompose(const SelfDualCrystal& S, long A, Rat B,
                                        const DecomposeOptions& opts = {});

struct ProbeReport {
  int trials = 0;
  bool allCoincide = true;
  int failingTrial = -1;
  CheckReport items;
};

// re-runs decompose after random unit conjugations, transports the recovered
// M1 back and checks mutual containment against the base result
ProbeReport uniquenessProbe(const FCrystal& C, long A, Rat B, int trials, uint64_t seed,
                            const DecomposeOptions& opts = {});

}  // namespace fcr
