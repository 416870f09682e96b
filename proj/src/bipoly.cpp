#include "arclift/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace arclift {

void BiPoly::normalize_() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.deg());
  return d;
}

const UniPoly& BiPoly::lc_y() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

BiPoly BiPoly::operator-() const {
  std::vector<UniPoly> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++) v[i] = -c_[i];
  return BiPoly(std::move(v));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<UniPoly> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); i++) v[i] = v[i] + a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) v[i] = v[i] + b.c_[i];
  return BiPoly(std::move(v));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<UniPoly> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); i++) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); j++) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(v));
}

BiPoly BiPoly::operator*(const UniPoly& s) const {
  if (s.is_zero()) return BiPoly();
  std::vector<UniPoly> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++) v[i] = c_[i] * s;
  return BiPoly(std::move(v));
}

BiPoly BiPoly::derivative_y() const {
  if (c_.size() <= 1) return BiPoly();
  std::vector<UniPoly> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); i++)
    v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return BiPoly(std::move(v));
}

UniPoly BiPoly::eval_x(const Rational& v) const {
  std::vector<Rational> out(c_.size(), Rational(0));
  for (size_t i = 0; i < c_.size(); i++) out[i] = c_[i].eval(v);
  return UniPoly(std::move(out));
}

UniPoly BiPoly::eval_y(const Rational& v) const {
  UniPoly r;
  for (size_t i = c_.size(); i-- > 0;)
    r = r * UniPoly::constant(v) + c_[i];
  // Horner with constant multiplier: r*v + c_i
  return r;
}

UniPoly BiPoly::content_x() const {
  UniPoly g;
  for (const auto& p : c_) g = UniPoly::gcd(g, p);
  return g;
}

BiPoly BiPoly::primitive_part() const {
  if (is_zero()) return *this;
  UniPoly g = content_x();
  if (g.deg() <= 0) return *this;
  std::vector<UniPoly> v(c_.size());
  for (size_t i = 0; i < c_.size(); i++)
    v[i] = c_[i].is_zero() ? UniPoly() : c_[i].div_exact(g);
  return BiPoly(std::move(v));
}

BiPoly BiPoly::div_exact_y(const BiPoly& d) const {
  if (d.is_zero()) throw Error("bivariate division by zero");
  BiPoly r = *this;
  if (r.is_zero()) return r;
  if (r.deg_y() < d.deg_y()) throw Error("inexact bivariate division");
  std::vector<UniPoly> q(static_cast<size_t>(r.deg_y() - d.deg_y()) + 1);
  while (!r.is_zero() && r.deg_y() >= d.deg_y()) {
    // Exact overall division forces each step's coefficient quotient exact.
    UniPoly f = r.lc_y().div_exact(d.lc_y());
    int k = r.deg_y() - d.deg_y();
    q[k] = f;
    std::vector<UniPoly> rc = r.c_;
    for (int i = 0; i <= d.deg_y(); i++) rc[i + k] = rc[i + k] - f * d.c_[i];
    rc[r.deg_y()] = UniPoly();
    r = BiPoly(std::move(rc));
  }
  if (!r.is_zero()) throw Error("inexact bivariate division");
  return BiPoly(std::move(q));
}

namespace {

// Pseudo-remainder in Y: lc(d)^(deg a - deg d + 1) * a  mod  d, all exact in
// Q[x][Y].
BiPoly pseudo_rem_y(BiPoly a, const BiPoly& d) {
  int delta = a.deg_y() - d.deg_y() + 1;
  if (delta <= 0) return a;
  const UniPoly& l = d.lc_y();
  for (int step = 0; step < delta && !a.is_zero() && a.deg_y() >= d.deg_y(); step++) {
    UniPoly f = a.lc_y();
    int k = a.deg_y() - d.deg_y();
    std::vector<UniPoly> rc(a.coeffs().size());
    for (size_t i = 0; i < rc.size(); i++) rc[i] = a.coeffs()[i] * l;
    for (int i = 0; i <= d.deg_y(); i++) rc[i + k] = rc[i + k] - f * d.coeffs()[i];
    rc[a.deg_y()] = UniPoly();
    a = BiPoly(std::move(rc));
  }
  return a;
}

// Canonical scaling: primitive in x, then integer-primitive with positive
// leading rational on the top coefficient.
BiPoly canonical_scale(BiPoly p) {
  if (p.is_zero()) return p;
  p = p.primitive_part();
  // Scale by a rational so every coefficient is an integer polynomial with
  // overall content 1 and positive leading coefficient of lc_y.
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& u : p.coeffs())
    for (const auto& r : u.coeffs()) {
      den_lcm = int_lcm(den_lcm, r.den());
    }
  for (const auto& u : p.coeffs())
    for (const auto& r : u.coeffs())
      num_gcd = int_gcd(num_gcd, r.num() * (den_lcm / r.den()));
  Rational f(den_lcm, num_gcd);
  if (p.lc_y().lc().sign() < 0) f = -f;
  return p * UniPoly::constant(f);
}

}  // namespace

BiPoly BiPoly::gcd_y(BiPoly a, BiPoly b) {
  if (a.is_zero()) return canonical_scale(std::move(b));
  if (b.is_zero()) return canonical_scale(std::move(a));
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.deg_y() < b.deg_y()) std::swap(a, b);
  while (!b.is_zero()) {
    BiPoly r = pseudo_rem_y(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero() && a.deg_y() < b.deg_y()) std::swap(a, b);
  }
  return canonical_scale(std::move(a));
}

std::pair<BiPoly, bool> BiPoly::squarefree_y() const {
  if (is_zero()) throw Error("squarefree part of zero polynomial");
  if (deg_y() <= 1) return {*this, false};
  BiPoly g = gcd_y(*this, derivative_y());
  if (g.deg_y() <= 0) return {*this, false};
  return {div_exact_y(g), true};
}

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  int da = a.deg_y(), db = b.deg_y();
  if (da == 0 && db == 0) return UniPoly::constant(Rational(1));
  if (da == 0) return a.coeff(0).pow(db);
  if (db == 0) return b.coeff(0).pow(da);
  // Degree bound for Res_Y in x from the Sylvester matrix shape.
  int bound = a.deg_x() * db + b.deg_x() * da;
  std::vector<std::pair<Rational, Rational>> samples;
  long v = 0;
  while (static_cast<int>(samples.size()) < bound + 1) {
    Rational x(v);
    // alternate 0, 1, -1, 2, -2, ...
    v = (v <= 0) ? (-v + 1) : -v;
    if (a.lc_y().eval(x).is_zero() || b.lc_y().eval(x).is_zero()) continue;
    Rational r = resultant(a.eval_x(x), b.eval_x(x));
    samples.emplace_back(x, r);
  }
  return interpolate(samples);
}

std::string BiPoly::str(const std::string& xvar, const std::string& yvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = deg_y(); j >= 0; j--) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[j].str(xvar) << ")";
    if (j >= 1) {
      os << "*" << yvar;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace arclift
