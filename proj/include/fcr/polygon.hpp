#pragma once

#include <string>
#include <vector>

#include "fcr/errors.hpp"

namespace fcr {

// exact rational with small components; slope denominators divide a*n! at
// desk scale, so long long is ample (guarded in ratMake)
struct Rat {
  long long num = 0;
  long long den = 1;
};

Rat ratMake(long long num, long long den = 1);
Rat operator+(Rat x, Rat y);
Rat operator-(Rat x, Rat y);
bool operator==(Rat x, Rat y);
bool operator!=(Rat x, Rat y);
bool operator<(Rat x, Rat y);
bool operator<=(Rat x, Rat y);
Rat ratDivInt(Rat x, long long k);
std::string ratStr(Rat x);  // "num/den", always with denominator
bool ratIsInt(Rat x);

// convex polygonal graph over [0,n] given by nondecreasing rational slopes;
// vertex i has ordinate slopes[0]+...+slopes[i-1]
class SlopePolygon {
 public:
  SlopePolygon() = default;
  explicit SlopePolygon(std::vector<Rat> slopes);

  int n() const { return (int)slopes_.size(); }
  const std::vector<Rat>& slopes() const { return slopes_; }
  Rat value(int i) const;

  bool operator==(const SlopePolygon& o) const { return slopes_ == o.slopes_; }

 private:
  std::vector<Rat> slopes_;
};

// Newton polygon of a monic polynomial from its coefficient valuations.
// vals[j] = valuation of the x^j coefficient, capped at N (vals[j] >= N means
// "at least N").  vals[n] must be 0.  Throws Precision when the hull cannot
// be certified at precision N.
SlopePolygon polygonFromValuations(const std::vector<int>& vals, int N);

bool isBreakPoint(const SlopePolygon& P, long A, Rat B);
bool liesOn(const SlopePolygon& P, long A, Rat B);

struct DominanceResult {
  bool ok = false;
  enum class Why { Ok, Interior, EndpointMismatch } why = Why::Ok;
  int index = -1;  // witnessing abscissa on failure
};
DominanceResult dominates(const SlopePolygon& upper, const SlopePolygon& lower);

// slopes[i] + slopes[n-1-i] == m for all i
bool symmetrizeCheck(const SlopePolygon& P, Rat m, int* witness = nullptr);

SlopePolygon scaleSlopesDiv(const SlopePolygon& P, int a);

}  // namespace fcr
