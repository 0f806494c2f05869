#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcr/io.hpp"

namespace fcr {

// exit codes: 0 pass, 1 verdict failure, 2 hypothesis violation,
// 3 precision exhausted, 64 usage/parse error
enum ExitCode : int {
  kExitPass = 0,
  kExitVerdictFailure = 1,
  kExitHypothesis = 2,
  kExitPrecision = 3,
  kExitUsage = 64,
};

int exitCodeForError(ErrKind kind);

std::string fnv1a64Hex(const std::string& bytes);
std::string fileDigest(const std::string& path);

struct Report {
  std::string command;
  std::string inputPath;
  std::string digest;
  int achievedPrecision = -1;
  std::vector<CheckItem> verdicts;
  json payload = json::object();
  int exitCode = kExitPass;

  void addVerdicts(const CheckReport& r) {
    verdicts.insert(verdicts.end(), r.items.begin(), r.items.end());
  }
  void finalizeExitCode();  // 0 iff all verdicts pass, else 1 (unless already nonzero)
  json toJson() const;
  std::string dump() const;
};

// builds the error report printed when a command throws
Report errorReport(const std::string& command, const std::string& inputPath, const Error& e);

Report cmdInfo(const std::string& path);
Report cmdValidate(const std::string& path);
Report cmdDecompose(const std::string& path, long A, long long B, bool selfDual, int probeTrials,
                    uint64_t seed, int budget);
Report cmdGenerate(long p, int a, int N, int n, const std::vector<int>& mu, uint64_t seed,
                   const std::string& outPath);
Report cmdFamily(const std::string& path, int budget);

}  // namespace fcr
