#include "fcr/report.hpp"

#include <fstream>
#include <sstream>

namespace fcr {

int exitCodeForError(ErrKind kind) {
  switch (kind) {
    case ErrKind::Precision:
      return kExitPrecision;
    case ErrKind::Hypothesis:
    case ErrKind::NoBreak:
    case ErrKind::RankTooLarge:
      return kExitHypothesis;
    case ErrKind::Parse:
    case ErrKind::Invalid:
      return kExitUsage;
    default:
      return kExitVerdictFailure;
  }
}

std::string fnv1a64Hex(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

std::string fileDigest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrKind::Parse, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return "fnv1a64:" + fnv1a64Hex(ss.str());
}

void Report::finalizeExitCode() {
  if (exitCode != kExitPass) return;
  for (const auto& v : verdicts)
    if (!v.pass) {
      exitCode = kExitVerdictFailure;
      return;
    }
}

json Report::toJson() const {
  json j;
  j["command"] = command;
  if (!inputPath.empty()) {
    j["input"] = json{{"path", inputPath}, {"digest", digest}};
  }
  if (achievedPrecision >= 0) j["achievedPrecision"] = achievedPrecision;
  json vs = json::array();
  for (const auto& v : verdicts) {
    json vj;
    vj["name"] = v.name;
    vj["pass"] = v.pass;
    if (!v.details.empty()) vj["details"] = v.details;
    vs.push_back(std::move(vj));
  }
  j["verdicts"] = std::move(vs);
  for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
  j["exitCode"] = exitCode;
  return j;
}

std::string Report::dump() const { return canonicalDump(toJson()); }

Report errorReport(const std::string& command, const std::string& inputPath, const Error& e) {
  Report rep;
  rep.command = command;
  rep.inputPath = inputPath;
  if (!inputPath.empty()) {
    try {
      rep.digest = fileDigest(inputPath);
    } catch (const Error&) {
      rep.digest = "unavailable";
    }
  }
  rep.payload["error"] = json{{"kind", errKindName(e.kind())}, {"message", e.what()}};
  rep.exitCode = exitCodeForError(e.kind());
  return rep;
}

Report cmdInfo(const std::string& path) {
  Report rep;
  rep.command = "info";
  rep.inputPath = path;
  rep.digest = fileDigest(path);
  json j = loadJsonFile(path);
  Ring ring;
  FCrystal C = crystalFromJson(j, &ring);
  rep.achievedPrecision = ring->N;
  rep.payload["ring"] = ringToJson(ring);
  rep.payload["rank"] = C.n;
  rep.payload["detValuation"] = C.detVal;
  rep.payload["hodge"] = polygonToJson(hodgeSlopes(C));
  rep.payload["newton"] = polygonToJson(newtonSlopes(C));
  if (j.contains("kind")) {
    SelfDualCrystal S = selfDualFromJson(j);
    rep.payload["kind"] = formKindName(S.kind);
    rep.payload["similitudeValuation"] = S.c.val();
  }
  rep.verdicts.push_back({"parsed", true, ""});
  rep.finalizeExitCode();
  return rep;
}

Report cmdValidate(const std::string& path) {
  Report rep;
  rep.command = "validate";
  rep.inputPath = path;
  rep.digest = fileDigest(path);
  json j = loadJsonFile(path);
  SelfDualCrystal S = selfDualFromJson(j);
  rep.achievedPrecision = S.base.ring->N;

  CheckReport v = validate(S);
  rep.addVerdicts(v);
  if (v.allPass()) {
    rep.addVerdicts(frobeniusLatticePerp(S));
    MazurReport mz = mazurCheck(S.base);
    rep.verdicts.push_back(
        {"mazur_dominance", mz.pass,
         mz.pass ? "Newton lies above Hodge with matching endpoints"
                 : (mz.dom.why == DominanceResult::Why::EndpointMismatch ? "endpoint mismatch"
                                                                         : "interior failure at abscissa " +
                                                                               std::to_string(mz.dom.index))});
    rep.payload["hodge"] = polygonToJson(mz.hodge);
    rep.payload["newton"] = polygonToJson(mz.newton);
  }
  rep.finalizeExitCode();
  return rep;
}

namespace {

json decompositionToJson(const Decomposition& d) {
  json j;
  j["M1"] = latticeToJson(d.M1);
  j["M2"] = latticeToJson(d.M2);
  j["F1"] = matrixToJson(d.F1);
  j["F2"] = matrixToJson(d.F2);
  j["adaptedBasis"] = matrixToJson(d.adapted);
  return j;
}

}  // namespace

Report cmdDecompose(const std::string& path, long A, long long B, bool selfDual, int probeTrials,
                    uint64_t seed, int budget) {
  Report rep;
  rep.command = selfDual ? "decompose --self-dual" : "decompose";
  rep.inputPath = path;
  rep.digest = fileDigest(path);
  json j = loadJsonFile(path);
  DecomposeOptions opts;
  opts.budget = budget;
  Rat Brat = ratMake(B);

  if (selfDual) {
    SelfDualCrystal S = selfDualFromJson(j);
    SelfDualDecomposition d = selfDualDecompose(S, A, Brat, opts);
    rep.achievedPrecision = d.achieved;
    rep.addVerdicts(d.certificates);
    json pj;
    pj["breakpoint"] = json::array({(int64_t)A, (int64_t)B});
    pj["symmetricBreakpoint"] = json::array({(int64_t)d.symA, ratStr(d.symB)});
    pj["MS1"] = latticeToJson(d.MS1);
    pj["MS2"] = latticeToJson(d.MS2);
    pj["flag"] = json::array(
        {latticeToJson(d.M1), latticeToJson(d.flagM2)});
    pj["FS1"] = matrixToJson(d.FS1);
    pj["FS2"] = matrixToJson(d.FS2);
    pj["GS1"] = matrixToJson(d.GS1);
    pj["GS2"] = matrixToJson(d.GS2);
    rep.payload["selfDualDecomposition"] = std::move(pj);
  } else {
    FCrystal C = crystalFromJson(j);
    Decomposition d = decompose(C, A, Brat, opts);
    rep.achievedPrecision = d.achieved;
    rep.addVerdicts(d.certificates);
    rep.payload["breakpoint"] = json::array({(int64_t)A, (int64_t)B});
    rep.payload["decomposition"] = decompositionToJson(d);
    if (probeTrials > 0) {
      ProbeReport pr = uniquenessProbe(C, A, Brat, probeTrials, seed, opts);
      rep.addVerdicts(pr.items);
      rep.payload["uniquenessProbe"] =
          json{{"trials", pr.trials}, {"allCoincide", pr.allCoincide}};
    }
  }
  rep.finalizeExitCode();
  return rep;
}

Report cmdGenerate(long p, int a, int N, int n, const std::vector<int>& mu, uint64_t seed,
                   const std::string& outPath) {
  Report rep;
  rep.command = "generate";
  Ring ring = RingParams::make(p, a, N);
  SelfDualCrystal S = generateSelfDual(ring, n, mu, seed);
  json j = selfDualToJson(S);
  writeJsonFile(outPath, j);
  rep.achievedPrecision = N;
  rep.inputPath = outPath;
  rep.digest = fileDigest(outPath);
  rep.verdicts.push_back({"generated", true, "seed " + std::to_string(seed)});
  CheckReport v = validate(S);
  rep.verdicts.push_back({"validates", v.allPass(), ""});
  rep.payload["hodge"] = polygonToJson(hodgeSlopes(S.base));
  rep.finalizeExitCode();
  return rep;
}

Report cmdFamily(const std::string& path, int budget) {
  Report rep;
  rep.command = "family";
  rep.inputPath = path;
  rep.digest = fileDigest(path);
  json j = loadJsonFile(path);
  CrystalFamily F = familyFromJson(j);
  DecomposeOptions opts;
  opts.budget = budget;
  FamilyReport fr = familyFilterCheck(F, opts);
  rep.achievedPrecision = fr.achieved;

  json fibers = json::array();
  for (const auto& f : fr.fibers) {
    json fj;
    fj["index"] = f.index;
    fj["status"] = f.status == FiberOutcome::Status::Decomposed ? "decomposed" : "hypothesis-violation";
    fj["message"] = f.message;
    json certs = json::array();
    for (const auto& c : f.certificates.items)
      certs.push_back(json{{"name", c.name}, {"pass", c.pass}});
    fj["certificates"] = std::move(certs);
    fibers.push_back(std::move(fj));
    rep.verdicts.push_back({"fiber_" + std::to_string(f.index),
                            f.status == FiberOutcome::Status::Decomposed, f.message});
  }
  rep.payload["fibers"] = std::move(fibers);
  if (!fr.allDecomposed) rep.exitCode = kExitHypothesis;
  rep.finalizeExitCode();
  return rep;
}

}  // namespace fcr
