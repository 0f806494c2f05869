#include "fcr/polygon.hpp"

#include <numeric>

namespace fcr {

Rat ratMake(long long num, long long den) {
  if (den == 0) throw Error(ErrKind::Invalid, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rat{num, den};
}

Rat operator+(Rat x, Rat y) { return ratMake(x.num * y.den + y.num * x.den, x.den * y.den); }
Rat operator-(Rat x, Rat y) { return ratMake(x.num * y.den - y.num * x.den, x.den * y.den); }
bool operator==(Rat x, Rat y) { return x.num == y.num && x.den == y.den; }
bool operator!=(Rat x, Rat y) { return !(x == y); }
bool operator<(Rat x, Rat y) { return (__int128)x.num * y.den < (__int128)y.num * x.den; }
bool operator<=(Rat x, Rat y) { return (__int128)x.num * y.den <= (__int128)y.num * x.den; }
Rat ratDivInt(Rat x, long long k) { return ratMake(x.num, x.den * k); }
bool ratIsInt(Rat x) { return x.den == 1; }

std::string ratStr(Rat x) { return std::to_string(x.num) + "/" + std::to_string(x.den); }

SlopePolygon::SlopePolygon(std::vector<Rat> slopes) : slopes_(std::move(slopes)) {
  for (size_t i = 0; i + 1 < slopes_.size(); ++i)
    if (slopes_[i + 1] < slopes_[i]) throw Error(ErrKind::Invalid, "slopes must be nondecreasing");
}

Rat SlopePolygon::value(int i) const {
  if (i < 0 || i > n()) throw Error(ErrKind::Invalid, "polygon abscissa out of range");
  Rat v = ratMake(0);
  for (int k = 0; k < i; ++k) v = v + slopes_[k];
  return v;
}

SlopePolygon polygonFromValuations(const std::vector<int>& vals, int N) {
  int n = (int)vals.size() - 1;
  if (n < 1) throw Error(ErrKind::Invalid, "polynomial of degree >= 1 required");
  if (vals[n] != 0) throw Error(ErrKind::Invalid, "polynomial must be monic (vals[n] == 0)");
  if (vals[0] >= N)
    throw Error(ErrKind::Precision, "constant-term valuation not certified at precision N");

  // lower convex hull of points (i, vals[n-i]); capped points are omitted
  struct Pt {
    long long x, y;
  };
  std::vector<Pt> pts;
  for (int i = 0; i <= n; ++i) {
    int v = vals[n - i];
    if (v >= N && i != 0 && i != n) continue;
    pts.push_back({i, v});
  }
  std::vector<Pt> hull;
  for (const Pt& q : pts) {
    while (hull.size() >= 2) {
      const Pt& b = hull[hull.size() - 1];
      const Pt& a = hull[hull.size() - 2];
      // keep strictly convex turns only
      if ((__int128)(b.y - a.y) * (q.x - a.x) >= (__int128)(q.y - a.y) * (b.x - a.x))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }

  auto hullValue = [&](long long x) -> Rat {
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
      if (x >= hull[s].x && x <= hull[s + 1].x) {
        Rat slope = ratMake(hull[s + 1].y - hull[s].y, hull[s + 1].x - hull[s].x);
        return ratMake(hull[s].y) + ratMake(slope.num * (x - hull[s].x), slope.den);
      }
    }
    throw Error(ErrKind::Invalid, "hull evaluation out of range");
  };

  // an omitted point with valuation >= N could lower the hull only if the
  // hull rises above N at its abscissa
  for (int i = 1; i < n; ++i) {
    if (vals[n - i] >= N) {
      if (ratMake(N) < hullValue(i))
        throw Error(ErrKind::Precision, "Newton polygon not certified: hull exceeds precision at abscissa " +
                                            std::to_string(i));
    }
  }

  std::vector<Rat> slopes;
  for (size_t s = 0; s + 1 < hull.size(); ++s) {
    Rat slope = ratMake(hull[s + 1].y - hull[s].y, hull[s + 1].x - hull[s].x);
    for (long long k = hull[s].x; k < hull[s + 1].x; ++k) slopes.push_back(slope);
  }
  return SlopePolygon(std::move(slopes));
}

bool isBreakPoint(const SlopePolygon& P, long A, Rat B) {
  if (A <= 0 || A >= P.n()) return false;
  if (P.value((int)A) != B) return false;
  return P.slopes()[A - 1] < P.slopes()[A];
}

bool liesOn(const SlopePolygon& P, long A, Rat B) {
  if (A < 0 || A > P.n()) return false;
  return P.value((int)A) == B;
}

DominanceResult dominates(const SlopePolygon& upper, const SlopePolygon& lower) {
  if (upper.n() != lower.n()) throw Error(ErrKind::Invalid, "polygons of different rank");
  int n = upper.n();
  if (upper.value(n) != lower.value(n)) return {false, DominanceResult::Why::EndpointMismatch, n};
  for (int i = 1; i < n; ++i) {
    if (upper.value(i) < lower.value(i)) return {false, DominanceResult::Why::Interior, i};
  }
  return {true, DominanceResult::Why::Ok, -1};
}

bool symmetrizeCheck(const SlopePolygon& P, Rat m, int* witness) {
  int n = P.n();
  for (int i = 0; i < n; ++i) {
    if (P.slopes()[i] + P.slopes()[n - 1 - i] != m) {
      if (witness) *witness = i;
      return false;
    }
  }
  return true;
}

SlopePolygon scaleSlopesDiv(const SlopePolygon& P, int a) {
  std::vector<Rat> s;
  s.reserve(P.n());
  for (Rat r : P.slopes()) s.push_back(ratDivInt(r, a));
  return SlopePolygon(std::move(s));
}

}  // namespace fcr
