#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "fcr/report.hpp"

namespace {

int emit(const fcr::Report& rep) {
  std::cout << rep.dump();
  return rep.exitCode;
}

int runGuarded(const std::string& command, const std::string& inputPath,
               const std::function<fcr::Report()>& fn) {
  try {
    return emit(fn());
  } catch (const fcr::Error& e) {
    return emit(fcr::errorReport(command, inputPath, e));
  } catch (const std::exception& e) {
    return emit(fcr::errorReport(command, inputPath, fcr::Error(fcr::ErrKind::Invalid, e.what())));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-dual F-crystal toolkit: polygons, validation, Newton-Hodge decomposition"};
  app.require_subcommand(1);

  std::string file;
  auto* info = app.add_subcommand("info", "ring parameters, rank, det valuation, both polygons");
  info->add_option("file", file, "crystal file (JSON)")->required();

  auto* validate = app.add_subcommand("validate", "self-dual identities, slope symmetry, Mazur, F(M)-perp lemma");
  validate->add_option("file", file, "self-dual crystal file (JSON)")->required();

  auto* decompose = app.add_subcommand("decompose", "Newton-Hodge decomposition at a break point");
  std::vector<long long> brk;
  bool selfDual = false;
  int probe = 0;
  uint64_t seed = 0;
  int budget = -1;
  decompose->add_option("file", file, "crystal file (JSON)")->required();
  decompose->add_option("--break", brk, "break point A,B")->required()->delimiter(',')->expected(2);
  decompose->add_flag("--self-dual", selfDual, "use the self-dual decomposition");
  decompose->add_option("--probe", probe, "uniqueness probe trials");
  decompose->add_option("--seed", seed, "seed for probe conjugations");
  decompose->add_option("--budget", budget, "kernel loss budget (default N/4)");

  auto* generate = app.add_subcommand("generate", "emit a generated self-dual instance");
  long p = 2;
  int a = 1, N = -1, n = 4;
  std::vector<int> mu;
  uint64_t gseed = 0;
  std::string out;
  generate->add_option("--p", p, "prime")->required();
  generate->add_option("--a", a, "extension degree");
  generate->add_option("--N", N, "working precision (default FCRYSTAL_DEFAULT_N or 32)");
  generate->add_option("--n", n, "rank (even)")->required();
  generate->add_option("--mu", mu, "Hodge exponents, comma separated")->required()->delimiter(',');
  generate->add_option("--seed", gseed, "generator seed");
  generate->add_option("--out", out, "output file")->required();

  auto* family = app.add_subcommand("family", "fiberwise break-point hypothesis and decomposition");
  int fbudget = -1;
  family->add_option("file", file, "family file (JSON)")->required();
  family->add_option("--budget", fbudget, "kernel loss budget (default N/4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return fcr::kExitUsage;
  }

  if (info->parsed()) return runGuarded("info", file, [&] { return fcr::cmdInfo(file); });
  if (validate->parsed()) return runGuarded("validate", file, [&] { return fcr::cmdValidate(file); });
  if (decompose->parsed())
    return runGuarded("decompose", file, [&] {
      return fcr::cmdDecompose(file, (long)brk[0], brk[1], selfDual, probe, seed, budget);
    });
  if (generate->parsed())
    return runGuarded("generate", out, [&] {
      int prec = N;
      if (prec < 0) {
        const char* env = std::getenv("FCRYSTAL_DEFAULT_N");
        prec = env ? std::atoi(env) : 32;
      }
      return fcr::cmdGenerate(p, a, prec, n, mu, gseed, out);
    });
  if (family->parsed()) return runGuarded("family", file, [&] { return fcr::cmdFamily(file, fbudget); });
  return fcr::kExitUsage;
}
