#pragma once
// Bivariate polynomials viewed as polynomials in an outer variable Y whose
// coefficients live in Q[x].  This single shape serves two roles:
//   - inputs F(t, Y) to branch expansion (x = t),
//   - resultant computations that eliminate one variable of a pair, used by
//     the algebraic-number layer (x = the surviving variable).

#include <vector>

#include "arclift/unipoly.hpp"

namespace arclift {

class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> ycoeffs) : c_(std::move(ycoeffs)) { normalize_(); }
  static BiPoly constant(const UniPoly& p) {
    return p.is_zero() ? BiPoly() : BiPoly({p});
  }

  bool is_zero() const { return c_.empty(); }
  int deg_y() const { return static_cast<int>(c_.size()) - 1; }
  int deg_x() const;
  const UniPoly& lc_y() const;
  UniPoly coeff(int j) const {
    return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[j] : UniPoly();
  }
  const std::vector<UniPoly>& coeffs() const { return c_; }

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator*(const UniPoly& s) const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

  BiPoly derivative_y() const;
  // Specialize x := v, leaving a univariate polynomial in Y.
  UniPoly eval_x(const Rational& v) const;
  // Specialize Y := v, leaving a polynomial in x.
  UniPoly eval_y(const Rational& v) const;

  // Content in Q[x] (gcd of the Y-coefficients, monic) and primitive part.
  UniPoly content_x() const;
  BiPoly primitive_part() const;

  // Exact division in Y when the divisor divides exactly; throws otherwise.
  BiPoly div_exact_y(const BiPoly& d) const;

  // gcd in Y over the field Q(x), computed by a primitive PRS.  Result is
  // primitive in Q[x] with canonical integer scaling.
  static BiPoly gcd_y(BiPoly a, BiPoly b);

  // Squarefree part with respect to Y: F / gcd_Y(F, dF/dY).  Second member of
  // the pair reports whether a nontrivial factor was removed.
  std::pair<BiPoly, bool> squarefree_y() const;

  std::string str(const std::string& xvar, const std::string& yvar) const;

 private:
  void normalize_();
  std::vector<UniPoly> c_;
};

// Resultant with respect to Y of two polynomials in (x, Y), as an element of
// Q[x].  Computed by evaluation and interpolation at rational points where
// neither leading Y-coefficient vanishes.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);

}  // namespace arclift
