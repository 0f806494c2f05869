#include "fcr/witt.hpp"

#include <algorithm>

namespace fcr {

namespace {

bool isPrime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- small F_p[x] arithmetic on long coefficients, ascending order ---

using PolyP = std::vector<long>;

void ptrim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP pmul(const PolyP& x, const PolyP& y, long p) {
  if (x.empty() || y.empty()) return {};
  PolyP r(x.size() + y.size() - 1, 0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
  ptrim(r);
  return r;
}

// remainder of x mod monic f
PolyP pmod(PolyP x, const PolyP& f, long p) {
  ptrim(x);
  int df = (int)f.size() - 1;
  while ((int)x.size() - 1 >= df) {
    long lead = x.back();
    int shift = (int)x.size() - 1 - df;
    for (int i = 0; i <= df; ++i) {
      x[i + shift] = ((x[i + shift] - lead * f[i]) % p + p) % p;
    }
    ptrim(x);
  }
  return x;
}

PolyP pmulmod(const PolyP& x, const PolyP& y, const PolyP& f, long p) {
  return pmod(pmul(x, y, p), f, p);
}

PolyP ppowmod(PolyP x, long e, const PolyP& f, long p) {
  PolyP r = {1};
  x = pmod(std::move(x), f, p);
  while (e > 0) {
    if (e & 1) r = pmulmod(r, x, f, p);
    x = pmulmod(x, x, f, p);
    e >>= 1;
  }
  return r;
}

PolyP pgcd(PolyP x, PolyP y, long p) {
  ptrim(x);
  ptrim(y);
  while (!y.empty()) {
    // make y monic
    long inv = 1;
    {
      long lead = y.back(), t = 1, e = p - 2;
      long b = lead;
      while (e > 0) {
        if (e & 1) t = (t * b) % p;
        b = (b * b) % p;
        e >>= 1;
      }
      inv = t;
    }
    for (auto& c : y) c = (c * inv) % p;
    PolyP r = pmod(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

// x^{p^k} mod f
PolyP frobPowerModP(const PolyP& f, long p, int k) {
  PolyP t = {0, 1};
  for (int i = 0; i < k; ++i) t = ppowmod(t, p, f, p);
  return t;
}

bool irreducibleModP(const PolyP& f, long p) {
  int a = (int)f.size() - 1;
  if (a < 1) return false;
  if (a == 1) return true;
  // x^{p^a} == x mod f
  PolyP xq = frobPowerModP(f, p, a);
  PolyP x = {0, 1};
  if (pmod(PolyP{xq}, f, p) != x) {
    PolyP diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    ptrim(diff);
    if (!diff.empty()) return false;
  }
  // gcd(x^{p^{a/q}} - x, f) = 1 for every prime q | a
  for (int q = 2; q <= a; ++q) {
    if (a % q != 0) continue;
    bool qprime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) qprime = false;
    if (!qprime) continue;
    PolyP t = frobPowerModP(f, p, a / q);
    if (t.size() < 2) t.resize(2, 0);
    t[1] = ((t[1] - 1) % p + p) % p;
    ptrim(t);
    PolyP g = pgcd(f, t, p);
    if ((int)g.size() - 1 != 0) return false;
  }
  return true;
}

// smallest coefficient vector (c0, c1, ...) in base-p counting order such
// that x^a + sum c_i x^i is irreducible mod p
std::vector<mpz_class> defaultModulus(long p, int a) {
  std::vector<long> c(a, 0);
  while (true) {
    PolyP f(a + 1, 0);
    for (int i = 0; i < a; ++i) f[i] = c[i];
    f[a] = 1;
    if (irreducibleModP(f, p)) {
      std::vector<mpz_class> m(a + 1);
      for (int i = 0; i < a; ++i) m[i] = c[i];
      m[a] = 1;
      return m;
    }
    int i = 0;
    while (i < a && ++c[i] == p) c[i++] = 0;
    if (i == a) throw Error(ErrKind::Invalid, "no irreducible modulus found");
  }
}

}  // namespace

mpz_class RingParams::pPow(int k) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)p, (unsigned long)k);
  return r;
}

bool RingParams::sameRing(const RingParams& o) const {
  return p == o.p && a == o.a && N == o.N && modulus == o.modulus;
}

// --- WittScalar ---

WittScalar::WittScalar(Ring r) : ring_(std::move(r)), c_(ring_->a, mpz_class(0)) {}

WittScalar::WittScalar(Ring r, long v) : ring_(std::move(r)), c_(ring_->a, mpz_class(0)) {
  c_[0] = v;
  reduce();
}

WittScalar::WittScalar(Ring r, const mpz_class& v) : ring_(std::move(r)), c_(ring_->a, mpz_class(0)) {
  c_[0] = v;
  reduce();
}

WittScalar::WittScalar(Ring r, std::vector<mpz_class> coeffs) : ring_(std::move(r)), c_(std::move(coeffs)) {
  if ((int)c_.size() != ring_->a) throw Error(ErrKind::Invalid, "scalar literal must have a coefficients");
  reduce();
}

void WittScalar::reduce() {
  for (auto& x : c_) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), ring_->pN.get_mpz_t());
  }
}

bool WittScalar::isZero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

int WittScalar::val() const {
  int best = ring_->N;
  for (const auto& x : c_) {
    if (x == 0) continue;
    mpz_class t = x;
    int v = 0;
    while (v < best && mpz_divisible_ui_p(t.get_mpz_t(), (unsigned long)ring_->p)) {
      mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), (unsigned long)ring_->p);
      ++v;
      if (t == 0) break;
    }
    best = std::min(best, v);
    if (best == 0) return 0;
  }
  return best;
}

WittScalar WittScalar::operator+(const WittScalar& o) const {
  WittScalar r(ring_);
  for (int i = 0; i < ring_->a; ++i) r.c_[i] = c_[i] + o.c_[i];
  r.reduce();
  return r;
}

WittScalar WittScalar::operator-(const WittScalar& o) const {
  WittScalar r(ring_);
  for (int i = 0; i < ring_->a; ++i) r.c_[i] = c_[i] - o.c_[i];
  r.reduce();
  return r;
}

WittScalar WittScalar::operator-() const {
  WittScalar r(ring_);
  for (int i = 0; i < ring_->a; ++i) r.c_[i] = -c_[i];
  r.reduce();
  return r;
}

WittScalar WittScalar::operator*(const WittScalar& o) const {
  int a = ring_->a;
  std::vector<mpz_class> t(2 * a - 1, mpz_class(0));
  for (int i = 0; i < a; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < a; ++j) t[i + j] += c_[i] * o.c_[j];
  }
  // reduce by the monic modulus
  for (int d = 2 * a - 2; d >= a; --d) {
    if (t[d] == 0) continue;
    mpz_class lead = t[d];
    for (int i = 0; i < a; ++i) t[d - a + i] -= lead * ring_->modulus[i];
    t[d] = 0;
  }
  t.resize(a);
  WittScalar r(ring_);
  r.c_ = std::move(t);
  r.reduce();
  return r;
}

bool WittScalar::operator==(const WittScalar& o) const { return c_ == o.c_; }

WittScalar WittScalar::frobenius(int k) const {
  int a = ring_->a;
  k = ((k % a) + a) % a;
  WittScalar r = *this;
  for (int step = 0; step < k; ++step) {
    std::vector<mpz_class> nc(a, mpz_class(0));
    for (int i = 0; i < a; ++i) {
      if (r.c_[i] == 0) continue;
      for (int j = 0; j < a; ++j) nc[j] += r.c_[i] * ring_->frob[i][j];
    }
    r.c_ = std::move(nc);
    r.reduce();
  }
  return r;
}

WittScalar WittScalar::pow(unsigned long e) const {
  WittScalar r(ring_, 1);
  WittScalar b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

WittScalar WittScalar::inverse() const {
  if (val() != 0) throw Error(ErrKind::NotAUnit, "inverse of a non-unit scalar");
  long p = ring_->p;
  int a = ring_->a;
  // inverse mod p via extended Euclid in F_p[x]/(modulus)
  PolyP u(a), m(a + 1);
  for (int i = 0; i < a; ++i) u[i] = (long)mpz_fdiv_ui(c_[i].get_mpz_t(), (unsigned long)p);
  for (int i = 0; i <= a; ++i) m[i] = (long)mpz_fdiv_ui(ring_->modulus[i].get_mpz_t(), (unsigned long)p);
  ptrim(u);
  // extended gcd: find s with s*u + t*m = 1
  PolyP r0 = m, r1 = u, s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1
    PolyP q;
    PolyP rem = r0;
    ptrim(rem);
    int d1 = (int)r1.size() - 1;
    long lead = r1.back();
    long leadInv;
    {
      long t = 1, b = lead, e = p - 2;
      while (e > 0) {
        if (e & 1) t = (t * b) % p;
        b = (b * b) % p;
        e >>= 1;
      }
      leadInv = t;
    }
    q.assign(std::max<int>((int)rem.size() - d1, 0), 0);
    while ((int)rem.size() - 1 >= d1 && !rem.empty()) {
      int shift = (int)rem.size() - 1 - d1;
      long f = (rem.back() * leadInv) % p;
      q[shift] = f;
      for (int i = 0; i <= d1; ++i) rem[i + shift] = ((rem[i + shift] - f * r1[i]) % p + p) % p;
      ptrim(rem);
    }
    PolyP s2 = s0;
    {
      PolyP qs = pmul(q, s1, p);
      if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
      for (size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
      ptrim(s2);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (degree 0 since u is a unit); normalize to 1
  if ((int)r0.size() != 1) throw Error(ErrKind::NotAUnit, "scalar not invertible mod p");
  long g = r0[0];
  long gInv;
  {
    long t = 1, b = g, e = p - 2;
    while (e > 0) {
      if (e & 1) t = (t * b) % p;
      b = (b * b) % p;
      e >>= 1;
    }
    gInv = t;
  }
  WittScalar z(ring_);
  for (size_t i = 0; i < s0.size() && (int)i < a; ++i) z.c_[i] = (s0[i] * gInv) % p;
  // Newton lifting: z <- z(2 - u z) doubles correct digits each round
  WittScalar two(ring_, 2);
  int steps = 1;
  while ((1 << steps) < ring_->N + 1) ++steps;
  for (int i = 0; i < steps + 1; ++i) z = z * (two - (*this) * z);
  if (!((*this * z) == WittScalar(ring_, 1)))
    throw Error(ErrKind::HenselFailure, "unit inversion did not converge");
  return z;
}

WittScalar WittScalar::divByP(int k) const {
  if (k == 0) return *this;
  WittScalar r(ring_);
  mpz_class pk = ring_->pPow(k);
  for (int i = 0; i < ring_->a; ++i) {
    if (!mpz_divisible_p(c_[i].get_mpz_t(), pk.get_mpz_t()))
      throw Error(ErrKind::NotIntegral, "exact division by p^" + std::to_string(k) + " fails");
    mpz_divexact(r.c_[i].get_mpz_t(), c_[i].get_mpz_t(), pk.get_mpz_t());
  }
  return r;
}

WittScalar WittScalar::timesP(int k) const {
  if (k == 0) return *this;
  WittScalar r(ring_);
  mpz_class pk = ring_->pPow(k);
  for (int i = 0; i < ring_->a; ++i) r.c_[i] = c_[i] * pk;
  r.reduce();
  return r;
}

WittScalar WittScalar::unitPart() const {
  int v = val();
  if (v >= ring_->N) throw Error(ErrKind::NotAUnit, "unit part of zero");
  return divByP(v);
}

WittScalar WittScalar::reduceMod(int k) const {
  WittScalar r = *this;
  mpz_class pk = ring_->pPow(std::min(k, ring_->N));
  for (auto& x : r.c_) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), pk.get_mpz_t());
  return r;
}

std::string WittScalar::str() const {
  std::string s = "[";
  for (int i = 0; i < ring_->a; ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s + "]";
}

// --- ring construction ---

std::shared_ptr<const RingParams> RingParams::make(long p, int a, int N, std::vector<mpz_class> modulus) {
  if (!isPrime(p)) throw Error(ErrKind::Invalid, "p must be a prime");
  if (a < 1) throw Error(ErrKind::Invalid, "extension degree must be >= 1");
  if (N < 1) throw Error(ErrKind::Invalid, "precision N must be >= 1");
  auto rp = std::make_shared<RingParams>();
  rp->p = p;
  rp->a = a;
  rp->N = N;
  mpz_ui_pow_ui(rp->pN.get_mpz_t(), (unsigned long)p, (unsigned long)N);
  if (modulus.empty()) {
    rp->modulus = defaultModulus(p, a);
  } else {
    if ((int)modulus.size() != a + 1 || modulus[a] != 1)
      throw Error(ErrKind::Invalid, "modulus must be monic of degree a");
    for (auto& c : modulus) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), rp->pN.get_mpz_t());
    PolyP f(a + 1);
    for (int i = 0; i <= a; ++i) f[i] = (long)mpz_fdiv_ui(modulus[i].get_mpz_t(), (unsigned long)p);
    if (!irreducibleModP(f, p)) throw Error(ErrKind::Invalid, "modulus is reducible mod p");
    rp->modulus = std::move(modulus);
  }

  rp->frob.assign(a, std::vector<mpz_class>(a, mpz_class(0)));
  if (a == 1) {
    rp->frob[0][0] = 1;
    return rp;
  }

  Ring ring = rp;  // scalars built below never call frobenius()
  auto evalModulus = [&](const WittScalar& s) {
    WittScalar acc(ring, rp->modulus[a]);
    for (int i = a - 1; i >= 0; --i) acc = acc * s + WittScalar(ring, rp->modulus[i]);
    return acc;
  };
  auto evalDeriv = [&](const WittScalar& s) {
    WittScalar acc(ring, 0);
    for (int i = a; i >= 1; --i) {
      WittScalar ci(ring, rp->modulus[i] * i);
      acc = acc * s + ci;
    }
    return acc;
  };

  // Hensel: the root of the modulus congruent to x^p mod p
  std::vector<mpz_class> xv(a, mpz_class(0));
  xv[1] = 1;
  WittScalar x(ring, xv);
  WittScalar r = x.pow((unsigned long)p);
  if (evalModulus(r).val() < 1)
    throw Error(ErrKind::HenselFailure, "x^p is not a root of the modulus mod p");
  int iter = 0;
  while (!evalModulus(r).isZero()) {
    WittScalar d = evalDeriv(r);
    if (d.val() != 0) throw Error(ErrKind::HenselFailure, "modulus is not separable at the lifted root");
    r = r - evalModulus(r) * d.inverse();
    if (++iter > N + 2) throw Error(ErrKind::HenselFailure, "Frobenius root lift did not converge");
  }

  WittScalar rp_i(ring, 1);
  for (int i = 0; i < a; ++i) {
    rp->frob[i] = rp_i.coeffs();
    rp_i = rp_i * r;
  }

  // sigma^a = id sanity on the generator
  WittScalar t = x;
  for (int i = 0; i < a; ++i) t = t.frobenius();
  if (!(t == x)) throw Error(ErrKind::HenselFailure, "sigma^a != id; corrupted modulus");
  return rp;
}

WittScalar randomScalar(const Ring& r, Rng& rng) {
  std::vector<mpz_class> c(r->a);
  for (int i = 0; i < r->a; ++i) {
    mpz_class acc = 0, scale = 1;
    for (int d = 0; d < r->N; ++d) {
      acc += scale * (unsigned long)rng.below((uint64_t)r->p);
      scale *= r->p;
    }
    c[i] = acc;
  }
  return WittScalar(r, std::move(c));
}

WittScalar randomUnitScalar(const Ring& r, Rng& rng) {
  while (true) {
    WittScalar s = randomScalar(r, rng);
    if (s.val() == 0) return s;
  }
}

}  // namespace fcr
