#pragma once
// Dense univariate polynomials over the rationals.  Coefficient vector is
// normalized: no trailing zero coefficients, so deg == coeffs.size()-1 and the
// zero polynomial has an empty vector (deg convention: -1).

#include <optional>
#include <utility>
#include <vector>

#include "arclift/qinterval.hpp"
#include "arclift/rational.hpp"

namespace arclift {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize_(); }
  static UniPoly constant(const Rational& v) {
    return v.is_zero() ? UniPoly() : UniPoly({v});
  }
  // c * x^k
  static UniPoly monomial(const Rational& c, int k);
  static UniPoly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lc() const;
  const Rational& operator[](int i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator*(const Rational& s) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  Rational eval(const Rational& x) const;        // Horner
  QInterval eval(const QInterval& x) const;      // interval extension
  UniPoly derivative() const;
  UniPoly pow(long e) const;

  // Euclidean division over the field Q: *this = q*d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  // Division known to be exact; throws if a nonzero remainder shows up.
  UniPoly div_exact(const UniPoly& d) const;

  UniPoly monic() const;
  // gcd over Q, returned monic (gcd(0,0) = 0).
  static UniPoly gcd(UniPoly a, UniPoly b);
  // p / gcd(p, p'): same roots, all simple.
  UniPoly squarefree_part() const;

  // Shift/scale compositions used all over root bookkeeping.
  UniPoly compose_linear(const Rational& a, const Rational& b) const;  // p(a*x + b)
  UniPoly compose(const UniPoly& g) const;                             // p(g(x))
  UniPoly scale_arg(const Rational& a) const { return compose_linear(a, Rational(0)); }
  UniPoly shift_arg(const Rational& b) const { return compose_linear(Rational(1), b); }
  UniPoly reverse() const;  // x^deg * p(1/x)

  // Multiply by the lcm of coefficient denominators, divide by gcd of
  // numerators, force positive leading coefficient: the canonical integer
  // form used for printing and hashing.
  UniPoly primitive_integer() const;

  // Cauchy bound: all real roots lie in (-B, B).
  Rational root_bound() const;

  // Sturm machinery.  The sequence starts with p (not squarefree-reduced;
  // callers pass a squarefree poly when they need exact counts on intervals
  // whose endpoints are not roots).
  static std::vector<UniPoly> sturm_sequence(const UniPoly& p);
  static int sign_variations_at(const std::vector<UniPoly>& seq, const Rational& x);
  // Number of distinct real roots in (a, b]; requires a < b.
  static int count_roots(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b);

  std::string str(const std::string& var) const;  // canonical, descending degree

 private:
  void normalize_();
  std::vector<Rational> c_;
};

// An isolating interval for one real root of a squarefree polynomial:
// either an exact rational root (lo == hi) or an open interval (lo, hi) with
// p(lo)*p(hi) < 0 containing exactly one root.
struct RootInterval {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
};

// All real roots of p (any nonzero p; multiplicities collapsed), in
// increasing order.  Intervals are pairwise disjoint.  Deterministic: the
// result depends only on p's squarefree part.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

// Halve (at least) the width of an isolating interval for the squarefree p.
// If the midpoint happens to be the root, collapses to an exact point.
RootInterval refine_root(const UniPoly& p, const RootInterval& r);
// Refine until width <= w (no-op for exact roots).
RootInterval refine_root_to(const UniPoly& p, RootInterval r, const Rational& w);

// Resultant of two polynomials over Q (0 if either is 0 and the other has
// positive degree; deg-0 conventions follow the Sylvester matrix).
Rational resultant(UniPoly a, UniPoly b);

// Lagrange interpolation: the unique poly of deg < points.size() through the
// given (x, y) pairs (x values distinct).
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace arclift
