#include "arclift/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace arclift {

void UniPoly::normalize_() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(const Rational& c, int k) {
  if (c.is_zero()) return UniPoly();
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

const Rational& UniPoly::lc() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++) v[i] = -c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); i++) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); i++) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); j++) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  if (s.is_zero()) return UniPoly();
  std::vector<Rational> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++) v[i] = c_[i] * s;
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

QInterval UniPoly::eval(const QInterval& x) const {
  QInterval r = QInterval::point(Rational(0));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * x + QInterval::point(*it);
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); i++) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(long e) const {
  UniPoly r = UniPoly::constant(Rational(1));
  UniPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  UniPoly r = *this;
  std::vector<Rational> q(std::max<int>(deg() - d.deg() + 1, 0), Rational(0));
  while (!r.is_zero() && r.deg() >= d.deg()) {
    Rational f = r.lc() / d.lc();
    int k = r.deg() - d.deg();
    q[k] = f;
    // r -= f * x^k * d, done in place to skip re-allocation
    std::vector<Rational> rc = r.c_;
    for (int i = 0; i <= d.deg(); i++) rc[i + k] -= f * d.c_[i];
    rc[r.deg()] = Rational(0);  // force the cancellation exactly
    r = UniPoly(std::move(rc));
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::div_exact(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = b.monic();  // keeps coefficient growth in check
  }
  return a.monic();
}

UniPoly UniPoly::squarefree_part() const {
  if (deg() <= 1) return *this;
  UniPoly g = gcd(*this, derivative());
  if (g.deg() == 0) return *this;
  return div_exact(g);
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
  // Horner in (a*x + b)
  UniPoly arg({b, a});
  return compose(arg);
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * g + UniPoly::constant(*it);
  return r;
}

UniPoly UniPoly::reverse() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return UniPoly(std::move(v));
}

UniPoly UniPoly::primitive_integer() const {
  if (is_zero()) return *this;
  Int den_lcm = 1;
  for (const auto& c : c_) den_lcm = int_lcm(den_lcm, c.den());
  Int num_gcd = 0;
  for (const auto& c : c_) num_gcd = int_gcd(num_gcd, c.num() * (den_lcm / c.den()));
  Rational f(den_lcm, num_gcd);
  if (lc().sign() < 0) f = -f;
  return *this * f.abs() * Rational(lc().sign() < 0 ? -1 : 1);
}

Rational UniPoly::root_bound() const {
  if (deg() <= 0) return Rational(1);
  Rational m(0);
  for (int i = 0; i < deg(); i++) m = rat_max(m, (c_[i] / lc()).abs());
  return m + Rational(1);
}

std::vector<UniPoly> UniPoly::sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    const UniPoly& a = seq[seq.size() - 2];
    const UniPoly& b = seq[seq.size() - 1];
    UniPoly r = a.divmod(b).second;
    if (r.is_zero()) break;
    UniPoly nr = -r;
    // Scale by a positive rational only: sign variations must be preserved,
    // so dividing by a (possibly negative) leading coefficient is not safe.
    nr = nr * nr.lc().abs().inv();
    seq.push_back(std::move(nr));
  }
  return seq;
}

int UniPoly::sign_variations_at(const std::vector<UniPoly>& seq, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& p : seq) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) var++;
    prev = s;
  }
  return var;
}

int UniPoly::count_roots(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error("count_roots: empty interval");
  return sign_variations_at(seq, a) - sign_variations_at(seq, b);
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; i--) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (a == Rational(1));
    if (i == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---- root isolation ---------------------------------------------------------

namespace {

// Recursive bisection on the open interval (lo, hi) using a Sturm sequence of
// the squarefree p.  Invariant: p(lo) != 0 and p(hi) != 0, so the half-open
// Sturm count equals the open-interval count and a single-root interval has a
// guaranteed sign change at its endpoints.
void isolate_rec(const UniPoly& p, const std::vector<UniPoly>& seq, const Rational& lo,
                 const Rational& hi, int n_roots, std::vector<RootInterval>& out) {
  if (n_roots == 0) return;
  if (n_roots == 1) {
    if (p.eval(lo) * p.eval(hi) >= Rational(0))
      throw Error("isolate: endpoint invariant violated");
    out.push_back({lo, hi});
    return;
  }
  // Split at an interior non-root point.  The midpoint works almost always;
  // when it happens to be a root, walk a shrinking offset (finitely many
  // roots, so this terminates).
  Rational mid = (lo + hi) / Rational(2);
  Rational split = mid;
  Rational off = (hi - lo) / Rational(4);
  while (p.eval(split).is_zero()) {
    split = mid + off;
    off = off / Rational(2);
  }
  int left = UniPoly::count_roots(seq, lo, split);
  isolate_rec(p, seq, lo, split, left, out);
  isolate_rec(p, seq, split, hi, n_roots - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error("isolate_real_roots: zero polynomial");
  UniPoly sf = p.squarefree_part().monic();
  std::vector<RootInterval> out;
  if (sf.deg() <= 0) return out;
  if (sf.deg() == 1) {
    out.push_back({-sf[0], -sf[0]});  // monic: x + c0
    return out;
  }
  Rational b = sf.root_bound();
  auto seq = UniPoly::sturm_sequence(sf);
  // Make sure the bound itself is not a root (Cauchy bound is strict, but be
  // defensive about deg-0 edge cases).
  int n = UniPoly::count_roots(seq, -b, b);
  isolate_rec(sf, seq, -b, b, n, out);
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b2) { return a.lo < b2.lo; });
  return out;
}

RootInterval refine_root(const UniPoly& p, const RootInterval& r) {
  if (r.exact()) return r;
  Rational mid = (r.lo + r.hi) / Rational(2);
  Rational pm = p.eval(mid);
  if (pm.is_zero()) return {mid, mid};
  int slo = p.eval(r.lo).sign();
  if (slo == 0) throw Error("refine_root: endpoint is a root");
  if (pm.sign() != slo) return {r.lo, mid};
  return {mid, r.hi};
}

RootInterval refine_root_to(const UniPoly& p, RootInterval r, const Rational& w) {
  while (!r.exact() && r.hi - r.lo > w) r = refine_root(p, r);
  return r;
}

Rational resultant(UniPoly a, UniPoly b) {
  // Euclidean resultant over Q.  res(a,b) with b = q*a + r:
  //   res(a,b) = lc(a)^(deg b - deg r) * (-1)^(deg a * deg b) * res(a, r)
  // applied with swaps until a base case.
  if (a.is_zero() || b.is_zero()) {
    // res with a zero poly: 0 unless the other is a nonzero constant (empty
    // Sylvester matrix, det 1).
    const UniPoly& other = a.is_zero() ? b : a;
    return other.deg() == 0 ? Rational(1) : Rational(0);
  }
  Rational acc(1);
  bool neg = false;
  while (true) {
    if (a.deg() < b.deg()) {
      if ((a.deg() & 1) && (b.deg() & 1)) neg = !neg;
      std::swap(a, b);
    }
    // now deg a >= deg b
    if (b.deg() == 0) {
      acc *= b.lc().pow(a.deg());
      break;
    }
    UniPoly r = a.divmod(b).second;
    if (r.is_zero()) return Rational(0);
    acc *= b.lc().pow(a.deg() - r.deg());
    if ((a.deg() & 1) && (b.deg() & 1)) neg = !neg;
    a = std::move(b);
    b = std::move(r);
  }
  return neg ? -acc : acc;
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  // Newton's divided differences, then expand.
  size_t n = points.size();
  if (n == 0) return UniPoly();
  std::vector<Rational> dd(n);
  for (size_t i = 0; i < n; i++) dd[i] = points[i].second;
  for (size_t k = 1; k < n; k++)
    for (size_t i = n - 1; i >= k; i--) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - k].first);
      if (i == k) break;
    }
  UniPoly r = UniPoly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    // r = r * (x - x_i) + dd[i]
    r = r * UniPoly({-points[i].first, Rational(1)}) + UniPoly::constant(dd[i]);
  }
  return r;
}

}  // namespace arclift
