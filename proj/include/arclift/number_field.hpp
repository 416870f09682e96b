#pragma once
// A shared, monotonically shrinking description of one real algebraic number
// alpha: a squarefree monic modulus M over Q together with an open isolating
// interval with rational endpoints (M changes sign there and has exactly one
// root inside).  Field elements are polynomials in alpha reduced mod M.
//
// M need not be irreducible.  Whenever an operation meets a zero divisor it
// splits M and keeps the factor that still has alpha as a root (decided by a
// Sturm count on the isolating interval).  Both splitting and interval
// refinement only shrink the description, so concurrent readers work from
// snapshots and all mutation happens under one mutex.
//
// Determinism contract: element representatives are always produced against
// the immutable construction-time modulus (reduce(), invert_elem()), never
// against the split state.  The mutable state only serves sign/zero
// decisions and enclosures, whose answers are functions of the value alone.
// Hence every rep, container and printed byte is independent of refinement
// history and thread interleaving.

#include <memory>
#include <mutex>
#include <utility>

#include "arclift/qinterval.hpp"
#include "arclift/unipoly.hpp"

namespace arclift {

// Extended gcd over Q[x]: returns (g, u, v) with u*a + v*b = g, g monic.
struct ExtGcd {
  UniPoly g, u, v;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

class NumberField {
 public:
  // Requires: m squarefree with deg >= 2, iv a strict sign-change interval
  // isolating one root.  (Rational values must never be wrapped in a field;
  // callers demote degree-1 situations before getting here.)
  static std::shared_ptr<NumberField> make(UniPoly m_monic_squarefree, RootInterval iv);

  std::pair<UniPoly, RootInterval> snapshot() const;
  // The modulus this field was constructed with; never changes.
  const UniPoly& original_modulus() const { return m0_; }
  // Degree of the original modulus (an upper bound on the true field degree).
  int degree() const { return m0_.deg(); }

  // Reduce mod the original modulus: deterministic, lock-free.
  UniPoly reduce(const UniPoly& p) const;

  // Exact zero test of rep(alpha); may split the modulus.
  bool is_zero_elem(const UniPoly& rep);
  // Exact sign of rep(alpha); may split and refine.
  int sign_elem(const UniPoly& rep);
  // Multiplicative inverse of rep(alpha), reduced against the deterministic
  // factor of the original modulus that keeps alpha.  Throws on zero.
  UniPoly invert_elem(const UniPoly& rep);

  // Rational interval guaranteed to contain rep(alpha), of width <= w.
  QInterval enclose_elem(const UniPoly& rep, const Rational& w);

  // One bisection step on the isolating interval.
  void refine();
  // Refine until the isolating interval has width <= w; returns it.
  RootInterval interval_of_width(const Rational& w);

 private:
  NumberField(UniPoly m, RootInterval iv)
      : m0_(m), m_(std::move(m)), iv_(std::move(iv)) {}
  void refine_locked_();
  // With the lock held: alpha is a root of exactly one of g, m/g; shrink m_
  // to that factor.  g must be a monic nontrivial divisor of m_.
  bool keep_factor_locked_(const UniPoly& g);

  const UniPoly m0_;  // construction-time modulus, immutable
  mutable std::mutex mu_;
  UniPoly m_;  // current split state; always divides m0_
  RootInterval iv_;
};

}  // namespace arclift
