#pragma once

#include "fcr/newton_hodge.hpp"

namespace fcr {

// finite family of self-dual crystals sharing ring parameters, rank, kind,
// val(c) and a common break-point hypothesis; the fiberwise incarnation of
// the filtration statement over a base
struct CrystalFamily {
  Ring ring;
  int n = 0;
  FormKind kind = FormKind::Symplectic;
  int cVal = 0;
  long A = 0;
  Rat B;
  std::vector<SelfDualCrystal> fibers;
};

// checks shared parameters and that every fiber validates
void checkFamilyStructure(const CrystalFamily& F);

struct FiberOutcome {
  int index = 0;
  enum class Status { Decomposed, HypothesisViolation } status = Status::Decomposed;
  std::string message;
  CheckReport certificates;
  int achieved = 0;
};

struct FamilyReport {
  std::vector<FiberOutcome> fibers;
  bool allDecomposed = true;
  int achieved = 0;
};

// per fiber: verifies the break-point hypothesis and runs the self-dual
// decomposition; a fiber failing the hypothesis is a hypothesis violation,
// not an error
FamilyReport familyFilterCheck(const CrystalFamily& F, const DecomposeOptions& opts = {});

}  // namespace fcr
