#pragma once
// Branch expansion: all real Puiseux solutions Y(t) of F(t, Y) = 0 for
// t > 0, expanded until substituting the branch back into F leaves a
// residual of order >= the requested target (or vanishes exactly).
//
// The classical Newton-polygon iteration, restricted to real edge roots:
// at each node the lower hull of the coefficient valuations selects the
// possible leading exponents, the edge polynomial selects the possible
// leading coefficients (real roots only), and the substitution
// Y = v^p (c + Y') peels one term and recurses.  Coefficients live in a
// single flattened number field that grows only when an edge root demands
// it; the growth along any root-to-leaf path is capped.

#include <optional>
#include <vector>

#include "arclift/bipoly.hpp"
#include "arclift/kpoly.hpp"
#include "arclift/puiseux_series.hpp"

namespace arclift {

struct Branch {
  // Exact when the expansion terminated (the series IS the solution);
  // otherwise truncated at the exponent of the first unknown term.
  PuiseuxSeries series;
  // Order of F(t, series(t)); nullopt means the residual is exactly zero.
  std::optional<Rational> residual_order;
  // ord(series) < 0: the solution blows up as t -> 0+ (the Y-leading
  // coefficient of F vanishes at t = 0).  Excluded from lifting downstream.
  bool negative_order = false;
};

struct BranchSet {
  std::vector<Branch> branches;  // sorted: by order, then leading coefficients
  bool squarefree_reduced = false;  // a repeated Y-factor was dropped
  int tower_depth_used = 0;  // max field extensions along any branch path
};

struct NewtonOptions {
  Rational target_order = Rational(16);  // N: expand until residual >= N
  int tower_cap = 3;                     // max extensions along one path
};

// Polynomial in Y whose coefficients are polynomials in u over the real
// algebraic numbers; index = power of Y.  The shape branch expansion
// recurses on, and the shape arc-composed relations arrive in.
using KYPoly = std::vector<KPoly>;

// F as a bivariate polynomial in (t, Y) over Q; F must be nonzero.
// Throws on the zero polynomial and when the coefficient tower exceeds cap.
BranchSet newton_puiseux(const BiPoly& f, const NewtonOptions& opt = NewtonOptions{});

// Same engine for coefficients already in a number field (exact, integer
// exponents in u).  Squarefree reduction in Y is performed internally.
BranchSet newton_puiseux_k(const KYPoly& f, const NewtonOptions& opt = NewtonOptions{});

// sum_j f_j(t) * y(t)^j with sound truncation propagation (exact inputs give
// an exact result).
PuiseuxSeries series_substitute(const BiPoly& f, const PuiseuxSeries& y);
PuiseuxSeries series_substitute_k(const KYPoly& f, const PuiseuxSeries& y);

}  // namespace arclift
