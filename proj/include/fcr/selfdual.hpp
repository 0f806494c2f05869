#pragma once

#include "fcr/crystal.hpp"
#include "fcr/rng.hpp"

namespace fcr {

enum class FormKind { Symplectic, Orthogonal };

inline const char* formKindName(FormKind k) {
  return k == FormKind::Symplectic ? "symplectic" : "orthogonal";
}

// self-dual F-crystal in collapsed matrix form: the quintuple
// (M, F_M, F_{M*}, Psi, c) is determined by (A, G, c) since the dual
// Frobenius is recoverable as c * (A^{-1})^t
struct SelfDualCrystal {
  FCrystal base;
  MatrixW G;      // matrix of Psi, <x,y> = x^t G y, unit determinant
  WittScalar c;   // similitude scalar, c = p^m * unit
  FormKind kind;
};

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string details;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool allPass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string details = "") {
    items.push_back({std::move(name), pass, std::move(details)});
  }
  void merge(const CheckReport& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
};

// checks the defining identities: kind consistency, unimodular form,
// similitude A^t G A = c sigma(G), integrality of the dual Frobenius, and
// the Newton/Hodge slope symmetries
CheckReport validate(const SelfDualCrystal& S);

// lambda_i + lambda_{n-i+1} = nu(c) and a_i + a_{n-i+1} = nu(c)
CheckReport slopeSymmetryCheck(const SelfDualCrystal& S);

// F(M)^perp = (1/c) F(M) by mutual containment
CheckReport frobeniusLatticePerp(const SelfDualCrystal& S);

class FormEvaluator {
 public:
  FormEvaluator(MatrixW G, MatrixW A, WittScalar c);
  WittScalar pair(const MatrixW& x, const MatrixW& y) const;  // x^t G y for column vectors
  // re-verifies <Fx,Fy> = c sigma(<x,y>) on the given vectors
  bool similitudeLaw(const MatrixW& x, const MatrixW& y) const;

 private:
  MatrixW G_, A_;
  WittScalar c_;
};
FormEvaluator formFromQuintuple(const SelfDualCrystal& S);

// antidiagonal forms fixed by sigma; n even for the symplectic one
MatrixW standardSymplecticForm(const Ring& r, int n);
MatrixW standardOrthogonalForm(const Ring& r, int n);

// random element of Sp_n(W) w.r.t. the standard antidiagonal form
// (product of symplectic transvections and torus factors)
MatrixW randomSymplecticUnit(const Ring& r, int n, Rng& rng);
// random unit-determinant matrix in GL_n(W)
MatrixW randomUnitMatrix(const Ring& r, int n, Rng& rng);

// Cartan-form test instance A = K1 * diag(p^mu) * K2 with K1, K2 symplectic,
// G the standard antidiagonal symplectic form and c = p^m.  Requires mu
// nondecreasing with mu_i + mu_{n-1-i} constant, n even.
SelfDualCrystal generateSelfDual(const Ring& r, int n, const std::vector<int>& mu, uint64_t seed);

}  // namespace fcr
