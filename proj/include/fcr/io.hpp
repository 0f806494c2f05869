#pragma once

#include <json.hpp>

#include "fcr/family.hpp"

namespace fcr {

using json = nlohmann::ordered_json;

// Scalar literal: bare integer (a = 1) or length-a array of nonnegative
// integers [c0, ..., c_{a-1}], each < p^N.  Values beyond the exact range of
// JSON numbers (2^64) are written as decimal strings; both forms are read.
mpz_class mpzFromJson(const json& j);
json mpzToJson(const mpz_class& v);
WittScalar scalarFromJson(const Ring& r, const json& j);
json scalarToJson(const WittScalar& s);

MatrixW matrixFromJson(const Ring& r, const json& j);
json matrixToJson(const MatrixW& m);

json latticeToJson(const Lattice& L);
json polygonToJson(const SlopePolygon& P);

Ring ringFromJson(const json& j);
json ringToJson(const Ring& r, json into = json::object());

FCrystal crystalFromJson(const json& j, Ring* ringOut = nullptr);
json crystalToJson(const FCrystal& C);

SelfDualCrystal selfDualFromJson(const json& j, Ring* ringOut = nullptr);
json selfDualToJson(const SelfDualCrystal& S);

CrystalFamily familyFromJson(const json& j);
json familyToJson(const CrystalFamily& F);

json loadJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const json& j);
std::string canonicalDump(const json& j);  // 2-space indent plus trailing newline

}  // namespace fcr
