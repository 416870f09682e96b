#pragma once
// Sparse multivariate polynomials over Q with a fixed variable count.
// Exponent vectors are the map keys; no zero coefficients are stored.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arclift/bipoly.hpp"
#include "arclift/rational.hpp"

namespace arclift {

class MultiPoly {
 public:
  using Expo = std::vector<uint32_t>;

  explicit MultiPoly(int nvars = 0) : n_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly var(int nvars, int i);  // the i-th variable
  static MultiPoly monomial(int nvars, Expo e, const Rational& c);

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo(n_, 0)); }
  Rational constant_value() const;  // value if is_constant(), error otherwise
  int total_degree() const;
  size_t term_count() const { return t_.size(); }
  const std::map<Expo, Rational>& terms() const { return t_; }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator*(const Rational& s) const;
  MultiPoly pow(long e) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

  Rational eval(const std::vector<Rational>& pt) const;
  MultiPoly derivative(int i) const;

  // Restrict to the affine 2-plane x0 + s*d1 + u*d2: the result is a
  // bivariate polynomial, stored as a polynomial in u with coefficients in
  // Q[s].
  BiPoly restrict_plane(const std::vector<Rational>& x0, const std::vector<Rational>& d1,
                        const std::vector<Rational>& d2) const;

  // Specialize all variables to rationals except one, kept as the variable of
  // the returned UniPoly.  (Used for univariate specializations at points.)
  UniPoly specialize_but(int keep, const std::vector<Rational>& pt) const;

  std::string str(const std::vector<std::string>& vars) const;

 private:
  void add_term_(const Expo& e, const Rational& c);
  int n_ = 0;
  std::map<Expo, Rational> t_;
};

}  // namespace arclift
