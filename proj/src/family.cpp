#include "fcr/family.hpp"

namespace fcr {

void checkFamilyStructure(const CrystalFamily& F) {
  if (F.fibers.empty()) throw Error(ErrKind::Invalid, "family must have at least one fiber");
  for (size_t i = 0; i < F.fibers.size(); ++i) {
    const SelfDualCrystal& S = F.fibers[i];
    if (!S.base.ring->sameRing(*F.ring) || S.base.n != F.n || S.kind != F.kind)
      throw Error(ErrKind::Invalid, "fiber " + std::to_string(i) + " has mismatched family parameters");
    if (S.c.val() != F.cVal)
      throw Error(ErrKind::Invalid, "fiber " + std::to_string(i) + " has mismatched val(c)");
    if (!validate(S).allPass())
      throw Error(ErrKind::Invalid, "fiber " + std::to_string(i) + " is not a valid self-dual crystal");
  }
}

FamilyReport familyFilterCheck(const CrystalFamily& F, const DecomposeOptions& opts) {
  checkFamilyStructure(F);
  FamilyReport rep;
  rep.achieved = F.ring->N;
  for (size_t i = 0; i < F.fibers.size(); ++i) {
    const SelfDualCrystal& S = F.fibers[i];
    FiberOutcome out;
    out.index = (int)i;

    SlopePolygon newton = newtonSlopes(S.base);
    SlopePolygon hodge = hodgeSlopes(S.base);
    bool isBreak = isBreakPoint(newton, F.A, F.B);
    bool onHodge = liesOn(hodge, F.A, F.B);
    out.certificates.add("break_on_newton", isBreak);
    out.certificates.add("lies_on_hodge", onHodge);
    if (!isBreak || !onHodge || 2 * F.A >= F.n) {
      out.status = FiberOutcome::Status::HypothesisViolation;
      out.message = !isBreak ? "no break point of the Newton polygon at (A,B)"
                   : !onHodge ? "(A,B) does not lie on the Hodge polygon"
                              : "A >= n/2";
      rep.allDecomposed = false;
      rep.fibers.push_back(std::move(out));
      continue;
    }

    SelfDualDecomposition d = selfDualDecompose(S, F.A, F.B, opts);
    out.status = FiberOutcome::Status::Decomposed;
    out.certificates.merge(d.certificates);
    out.achieved = d.achieved;
    rep.achieved = std::min(rep.achieved, d.achieved);
    out.message = "decomposed; middle rank " + std::to_string(d.MS2.rank());
    rep.fibers.push_back(std::move(out));
  }
  return rep;
}

}  // namespace fcr
