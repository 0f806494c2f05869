#include "fcr/io.hpp"

#include <fstream>
#include <sstream>

namespace fcr {

mpz_class mpzFromJson(const json& j) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<uint64_t>()));
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 0) throw Error(ErrKind::Parse, "negative scalar coefficient");
    return mpz_class(std::to_string(v));
  }
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrKind::Parse, "scalar coefficient string must be a nonnegative decimal: " + s);
    return mpz_class(s);
  }
  throw Error(ErrKind::Parse, "scalar coefficient must be an integer or decimal string");
}

json mpzToJson(const mpz_class& v) {
  if (v.fits_ulong_p()) return json((uint64_t)v.get_ui());
  if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 64) {
    // fits an unsigned 64-bit value even when ulong is narrower
    return json(std::stoull(v.get_str()));
  }
  return json(v.get_str());
}

WittScalar scalarFromJson(const Ring& r, const json& j) {
  if (j.is_array()) {
    if ((int)j.size() != r->a)
      throw Error(ErrKind::Parse, "scalar literal must have exactly a entries");
    std::vector<mpz_class> c(r->a);
    for (int i = 0; i < r->a; ++i) c[i] = mpzFromJson(j[i]);
    return WittScalar(r, std::move(c));
  }
  if (r->a == 1) return WittScalar(r, mpzFromJson(j));
  throw Error(ErrKind::Parse, "scalar literal must be an array for a > 1");
}

json scalarToJson(const WittScalar& s) {
  if (s.ring()->a == 1) return mpzToJson(s.coeffs()[0]);
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(mpzToJson(c));
  return arr;
}

MatrixW matrixFromJson(const Ring& r, const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrKind::Parse, "matrix must be a nonempty array of rows");
  int rows = (int)j.size();
  int cols = (int)j[0].size();
  MatrixW m(r, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || (int)j[i].size() != cols)
      throw Error(ErrKind::Parse, "ragged matrix rows");
    for (int k = 0; k < cols; ++k) m.at(i, k) = scalarFromJson(r, j[i][k]);
  }
  return m;
}

json matrixToJson(const MatrixW& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(scalarToJson(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json latticeToJson(const Lattice& L) {
  json j;
  j["denomExp"] = L.denomExp();
  j["basis"] = matrixToJson(L.basis());
  return j;
}

json polygonToJson(const SlopePolygon& P) {
  json arr = json::array();
  for (Rat s : P.slopes()) arr.push_back(ratStr(s));
  return arr;
}

Ring ringFromJson(const json& j) {
  for (const char* key : {"p", "a", "N", "n"})
    if (!j.contains(key)) throw Error(ErrKind::Parse, std::string("missing field: ") + key);
  long p = j["p"].get<long>();
  int a = j["a"].get<int>();
  int N = j["N"].get<int>();
  std::vector<mpz_class> modulus;
  if (j.contains("modulus")) {
    for (const auto& c : j["modulus"]) modulus.push_back(mpzFromJson(c));
  }
  try {
    return RingParams::make(p, a, N, std::move(modulus));
  } catch (const Error& e) {
    if (e.kind() == ErrKind::Invalid) throw Error(ErrKind::Parse, e.what());
    throw;
  }
}

json ringToJson(const Ring& r, json into) {
  into["p"] = (int64_t)r->p;
  into["a"] = r->a;
  into["N"] = r->N;
  json mod = json::array();
  for (const auto& c : r->modulus) mod.push_back(mpzToJson(c));
  into["modulus"] = std::move(mod);
  return into;
}

FCrystal crystalFromJson(const json& j, Ring* ringOut) {
  Ring r = ringFromJson(j);
  int n = j["n"].get<int>();
  if (!j.contains("matrix")) throw Error(ErrKind::Parse, "missing field: matrix");
  MatrixW A = matrixFromJson(r, j["matrix"]);
  if (A.rows() != n || A.cols() != n) throw Error(ErrKind::Parse, "matrix does not match rank n");
  if (ringOut) *ringOut = r;
  return FCrystal(r, std::move(A));
}

json crystalToJson(const FCrystal& C) {
  json j = ringToJson(C.ring);
  j["n"] = C.n;
  j["matrix"] = matrixToJson(C.A);
  return j;
}

namespace {

FormKind kindFromString(const std::string& s) {
  if (s == "symplectic") return FormKind::Symplectic;
  if (s == "orthogonal") return FormKind::Orthogonal;
  throw Error(ErrKind::Parse, "kind must be \"symplectic\" or \"orthogonal\"");
}

}  // namespace

SelfDualCrystal selfDualFromJson(const json& j, Ring* ringOut) {
  Ring r;
  FCrystal base = crystalFromJson(j, &r);
  for (const char* key : {"form", "c", "kind"})
    if (!j.contains(key)) throw Error(ErrKind::Parse, std::string("missing field: ") + key);
  MatrixW G = matrixFromJson(r, j["form"]);
  if (G.rows() != base.n || G.cols() != base.n) throw Error(ErrKind::Parse, "form does not match rank n");
  WittScalar c = scalarFromJson(r, j["c"]);
  FormKind kind = kindFromString(j["kind"].get<std::string>());
  if (ringOut) *ringOut = r;
  return SelfDualCrystal{std::move(base), std::move(G), std::move(c), kind};
}

json selfDualToJson(const SelfDualCrystal& S) {
  json j = crystalToJson(S.base);
  j["form"] = matrixToJson(S.G);
  j["c"] = scalarToJson(S.c);
  j["kind"] = formKindName(S.kind);
  return j;
}

CrystalFamily familyFromJson(const json& j) {
  if (!j.contains("shared") || !j.contains("fibers"))
    throw Error(ErrKind::Parse, "family file needs \"shared\" and \"fibers\"");
  const json& sh = j["shared"];
  CrystalFamily F;
  F.ring = ringFromJson(sh);
  F.n = sh["n"].get<int>();
  F.kind = kindFromString(sh["kind"].get<std::string>());
  if (!sh.contains("breakpoint") || !sh["breakpoint"].is_array() || sh["breakpoint"].size() != 2)
    throw Error(ErrKind::Parse, "shared.breakpoint must be [A, B]");
  F.A = sh["breakpoint"][0].get<long>();
  F.B = ratMake(sh["breakpoint"][1].get<long long>());
  const json& fibers = j["fibers"];
  if (!fibers.is_array() || fibers.empty()) throw Error(ErrKind::Parse, "fibers must be a nonempty array");
  bool first = true;
  for (const auto& fj : fibers) {
    for (const char* key : {"matrix", "form", "c"})
      if (!fj.contains(key)) throw Error(ErrKind::Parse, std::string("fiber missing field: ") + key);
    MatrixW A = matrixFromJson(F.ring, fj["matrix"]);
    if (A.rows() != F.n || A.cols() != F.n) throw Error(ErrKind::Parse, "fiber matrix does not match rank n");
    MatrixW G = matrixFromJson(F.ring, fj["form"]);
    WittScalar c = scalarFromJson(F.ring, fj["c"]);
    SelfDualCrystal S{FCrystal(F.ring, std::move(A)), std::move(G), std::move(c), F.kind};
    if (first) {
      F.cVal = S.c.val();
      first = false;
    }
    F.fibers.push_back(std::move(S));
  }
  checkFamilyStructure(F);
  return F;
}

json familyToJson(const CrystalFamily& F) {
  json sh = ringToJson(F.ring);
  sh["n"] = F.n;
  sh["kind"] = formKindName(F.kind);
  sh["breakpoint"] = json::array({(int64_t)F.A, (int64_t)F.B.num});
  json fibers = json::array();
  for (const auto& S : F.fibers) {
    json fj;
    fj["matrix"] = matrixToJson(S.base.A);
    fj["form"] = matrixToJson(S.G);
    fj["c"] = scalarToJson(S.c);
    fibers.push_back(std::move(fj));
  }
  json j;
  j["shared"] = std::move(sh);
  j["fibers"] = std::move(fibers);
  return j;
}

json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrKind::Parse, "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrKind::Parse, "JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void writeJsonFile(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrKind::Parse, "cannot open file for writing: " + path);
  out << canonicalDump(j);
}

std::string canonicalDump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fcr
