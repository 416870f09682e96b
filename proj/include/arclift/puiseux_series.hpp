#pragma once
// Truncated Puiseux series in one parameter t > 0 with exact real algebraic
// coefficients and exact rational exponents.
//
// A series is either EXACT (all terms of the underlying function are present;
// finite by construction) or truncated with a precision bound theta: the
// terms with exponent < theta are exactly right and nothing is claimed at or
// beyond theta.  Every operation propagates the tightest sound bound, so a
// series never claims more than it knows.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arclift/real_algebraic.hpp"

namespace arclift {

// Valuation of a series: the exponent of the lowest nonzero term.
struct SeriesOrd {
  enum class Kind {
    Known,    // leading term exists: ord == q exactly
    PlusInf,  // exact zero series: ord == +infinity
    AtLeast,  // truncated, no visible term: ord >= q, that is all we know
  };
  Kind kind;
  Rational q;  // meaningful for Known and AtLeast

  bool known() const { return kind == Kind::Known; }
  // Lower bound usable in truncation arithmetic (PlusInf handled by caller).
  const Rational& lower() const { return q; }
};

class PuiseuxSeries {
 public:
  using Term = std::pair<Rational, RealAlgebraic>;  // (exponent, coefficient)

  PuiseuxSeries() = default;  // exact zero
  // terms in any order; zero coefficients dropped; equal exponents merged.
  // trunc absent = exact; present = correct below trunc.
  PuiseuxSeries(std::vector<Term> terms, std::optional<Rational> trunc);

  static PuiseuxSeries zero() { return PuiseuxSeries(); }
  static PuiseuxSeries constant(const RealAlgebraic& c);
  // c * t^q
  static PuiseuxSeries monomial(const RealAlgebraic& c, const Rational& q);
  // the unknown-beyond-theta placeholder O(t^theta)
  static PuiseuxSeries big_o(const Rational& theta);

  const std::vector<Term>& terms() const { return t_; }
  bool exact() const { return !trunc_.has_value(); }
  const std::optional<Rational>& trunc() const { return trunc_; }
  bool is_exactly_zero() const { return t_.empty() && exact(); }

  SeriesOrd ord() const;
  // Leading term; throws unless ord().known().
  const Term& leading() const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  PuiseuxSeries scale(const RealAlgebraic& c) const;
  PuiseuxSeries pow(long e) const;  // e >= 0

  // Multiplicative inverse computed as a geometric series.  Requires a known
  // leading term.  `target` bounds the precision requested from an exact
  // input (an exact monomial inverts exactly and ignores it); a truncated
  // input additionally caps the result at trunc - 2*ord, the precision its
  // own uncertainty supports.
  PuiseuxSeries invert(const Rational& target) const;
  PuiseuxSeries divide(const PuiseuxSeries& b, const Rational& target) const;

  // Multiply by t^delta: exponents and the bound shift together.
  PuiseuxSeries shift_exponents(const Rational& delta) const;
  // Substitute t := s^k (k >= 1): exponents and the bound scale by k.
  PuiseuxSeries ramify(long k) const;
  // Substitute t := s^f for rational f > 0 (f = 1/k undoes ramify(k)).
  PuiseuxSeries scale_exponents(const Rational& f) const;
  // Forget everything at or beyond theta.
  PuiseuxSeries truncate_to(const Rational& theta) const;

  // lcm of the exponent denominators (1 for an exact zero): the
  // ramification index of what is visible.
  Int ramification_index() const;

  // Enclosure of the value at a rational point 0 < at, usable only when the
  // series is exact (sum of finitely many exact terms; exponents must have
  // odd denominators or `at` must be a perfect power as needed -- callers
  // evaluate at points of the form s^e so this stays exact).  Throws if an
  // exponent cannot be evaluated exactly at `at`.
  RealAlgebraic eval_exact(const Rational& at) const;

  // Enclosure of width <= precision around the value of the VISIBLE terms at
  // t = at > 0 (the truncated sum; nothing is claimed about the tail).
  QInterval eval_numeric(const Rational& at, const Rational& precision) const;

  // Reduced denominators of the stored exponents.
  std::set<Int> exponent_denominators() const;

  std::string str(const std::string& var) const;

 private:
  void normalize_();
  std::vector<Term> t_;               // ascending exponents, nonzero coeffs
  std::optional<Rational> trunc_;     // nullopt = exact
};

}  // namespace arclift
