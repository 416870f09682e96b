#pragma once
// Univariate polynomials whose coefficients are exact real algebraic numbers
// drawn from Q plus at most one shared number field.  This is the coefficient
// arithmetic branch expansion runs on: edge polynomials are solved here, and
// when a root generates a bigger field, the field is flattened to a single
// primitive extension and every existing coefficient is migrated through the
// returned embedding.

#include <functional>
#include <vector>

#include "arclift/real_algebraic.hpp"

namespace arclift {

class KPoly {
 public:
  KPoly() = default;
  explicit KPoly(std::vector<RealAlgebraic> coeffs);
  static KPoly constant(const RealAlgebraic& v);
  static KPoly from_unipoly(const UniPoly& p);

  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  const RealAlgebraic& lc() const;
  RealAlgebraic coeff(int i) const;
  const std::vector<RealAlgebraic>& coeffs() const { return c_; }

  KPoly operator-() const;
  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator-(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  KPoly scale(const RealAlgebraic& s) const;
  // Exact value equality, coefficient by coefficient.
  friend bool operator==(const KPoly& a, const KPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); i++)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const KPoly& a, const KPoly& b) { return !(a == b); }

  KPoly derivative() const;
  RealAlgebraic eval(const RealAlgebraic& x) const;
  RealAlgebraic eval_rational(const Rational& x) const;

  std::pair<KPoly, KPoly> divmod(const KPoly& d) const;
  KPoly monic() const;
  static KPoly gcd(KPoly a, KPoly b);
  KPoly squarefree_part() const;

  // All coefficients rational?  Then the cheap Q-only path applies.
  bool all_rational() const;
  UniPoly to_unipoly() const;  // requires all_rational()

  // Map every coefficient (used when migrating into an extended field).
  KPoly map(const std::function<RealAlgebraic(const RealAlgebraic&)>& f) const;

 private:
  void normalize_();
  std::vector<RealAlgebraic> c_;
};

// One real root of a squarefree-over-K polynomial, together with the field
// migration that makes it usable: `embed` carries any element of the old
// coefficient field into the (possibly new, flattened) field containing
// `root`.  `tower_growth` is 0 when the root provably lies in the old
// coefficient field (rational roots, linear factors, detected memberships)
// and 1 otherwise.  The flag is conservative: proving membership exactly in
// every case would need factorization over Q, so a rare in-field root of a
// higher-degree factor may still report 1.  Budget clients only ever stop
// earlier because of this, never compute wrong values.
struct KRoot {
  RealAlgebraic root;
  std::function<RealAlgebraic(const RealAlgebraic&)> embed;
  int tower_growth = 0;
};

// Real roots of chi (deg >= 1, nonzero), in increasing order.  chi may have
// multiple roots; they are collapsed (roots of the squarefree part).
std::vector<KRoot> real_roots_of(const KPoly& chi);

}  // namespace arclift
