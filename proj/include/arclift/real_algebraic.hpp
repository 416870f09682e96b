#pragma once
// Exact real algebraic numbers: either a rational (fast path) or an element
// rep(alpha) of a shared NumberField.  All predicates (sign, equality,
// comparison) are decided exactly; no floating point anywhere.
//
// Arithmetic strategy: rationals combine directly; two elements of the same
// field combine by polynomial arithmetic mod the modulus; elements of
// different fields combine through their minimal-polynomial containers with
// a resultant construction plus interval isolation (alg_op below).

#include <memory>
#include <optional>
#include <string>

#include "arclift/number_field.hpp"

namespace arclift {

class RealAlgebraic {
 public:
  RealAlgebraic() : q_(0) {}
  RealAlgebraic(const Rational& q) : q_(q) {}  // NOLINT: implicit by design
  RealAlgebraic(long n) : q_(n) {}             // NOLINT

  // Wrap rep(alpha); demotes to rational when the reduced rep is constant.
  static RealAlgebraic from_field(std::shared_ptr<NumberField> k, const UniPoly& rep);
  // The root of a squarefree polynomial isolated by iv (exact point allowed);
  // demotes degree-1 / detected-rational cases.
  static RealAlgebraic from_root(const UniPoly& squarefree, const RootInterval& iv);

  bool is_rational() const { return !k_; }
  const Rational& rational_value() const;
  const std::shared_ptr<NumberField>& field() const { return k_; }
  const UniPoly& rep() const { return rep_; }

  bool is_zero() const;
  int sign() const;
  static int compare(const RealAlgebraic& a, const RealAlgebraic& b);
  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare(a, b) < 0;
  }

  RealAlgebraic operator-() const;
  friend RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b);
  RealAlgebraic inv() const;
  RealAlgebraic pow(long e) const;

  // A squarefree monic polynomial with this value as a root, plus an
  // isolating interval (exact point for rationals).
  struct Flat {
    UniPoly minpoly;
    RootInterval iv;
  };
  Flat flat() const;

  // Exact rational value if the number is rational and detection succeeds
  // (detection is complete for the coefficient sizes this engine meets; it
  // backs off only on astronomically large factorizations, which keeps all
  // results correct, merely less canonical).
  std::optional<Rational> as_rational() const;

  // Deterministic printable container: primitive integer minpoly, positive
  // leading coefficient, extraneous rational roots stripped, interval taken
  // from the canonical isolation of that polynomial.  Depends only on the
  // value, never on refinement history.
  Flat canonical_flat() const;

  // Enclosure of width <= w with exact rational endpoints.
  QInterval enclose(const Rational& w) const;
  double approx() const;

  std::string str() const;  // rational string or root(<minpoly>, [lo, hi])

 private:
  std::shared_ptr<NumberField> k_;  // null <=> rational
  UniPoly rep_;
  Rational q_;
};

enum class AlgOp { Add, Sub, Mul, Div };

// Resultant-based arithmetic on minimal-polynomial containers with interval
// isolation.  Exposed directly (the operators route through it whenever the
// operands do not share a field).
RealAlgebraic alg_op(const RealAlgebraic& a, const RealAlgebraic& b, AlgOp op);

// Exact sign (-1, 0, 1).
int alg_sign(const RealAlgebraic& a);

// Rational root of a squarefree polynomial inside an isolating interval, if
// the isolated root is rational and the divisor enumeration stays tractable.
std::optional<Rational> rational_root_in(const UniPoly& squarefree, const RootInterval& iv);

}  // namespace arclift
