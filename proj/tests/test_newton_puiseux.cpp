#include "arclift/newton_puiseux.hpp"

#include <random>
#include <vector>

#include "doctest.h"

using namespace arclift;

namespace {

UniPoly up(std::vector<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.push_back(Rational(x));
  return UniPoly(v);
}

BiPoly bp(std::vector<UniPoly> ycoeffs) { return BiPoly(std::move(ycoeffs)); }

RealAlgebraic ra(long n) { return RealAlgebraic(Rational(n)); }
RealAlgebraic raq(long n, long d) { return RealAlgebraic(Rational(n, d)); }

NewtonOptions opts(long n, int cap = 3) {
  NewtonOptions o;
  o.target_order = Rational(n);
  o.tower_cap = cap;
  return o;
}

}  // namespace

TEST_CASE("branch expansion: fractional exact branches") {
  // Y^3 - t^2 -> exactly { t^(2/3) }
  BranchSet bs = newton_puiseux(bp({up({0, 0, -1}), up({}), up({}), up({1})}), opts(8));
  REQUIRE(bs.branches.size() == 1);
  const Branch& b = bs.branches[0];
  CHECK(b.series.exact());
  CHECK(!b.residual_order.has_value());
  REQUIRE(b.series.terms().size() == 1);
  CHECK(b.series.terms()[0].first == Rational(2, 3));
  CHECK(b.series.terms()[0].second == ra(1));
  CHECK(!b.negative_order);
  auto dens = b.series.exponent_denominators();
  CHECK(dens.count(Int(3)) == 1);
  CHECK(!bs.squarefree_reduced);
  CHECK(bs.tower_depth_used == 0);

  // Y^4 - t^2 -> exactly { -t^(1/2), t^(1/2) } in sorted order
  BranchSet bs2 =
      newton_puiseux(bp({up({0, 0, -1}), up({}), up({}), up({}), up({1})}), opts(8));
  REQUIRE(bs2.branches.size() == 2);
  for (const Branch& br : bs2.branches) {
    CHECK(br.series.exact());
    CHECK(!br.residual_order.has_value());
    REQUIRE(br.series.terms().size() == 1);
    CHECK(br.series.terms()[0].first == Rational(1, 2));
  }
  CHECK(bs2.branches[0].series.terms()[0].second == ra(-1));
  CHECK(bs2.branches[1].series.terms()[0].second == ra(1));

  // Y^2 + 1 + t^2 -> no real branches
  BranchSet bs3 = newton_puiseux(bp({up({1, 0, 1}), up({}), up({1})}), opts(8));
  CHECK(bs3.branches.empty());
}

TEST_CASE("branch expansion: constant and shifted branches") {
  // Y^2 - 3Y + 2 -> constants 1 and 2
  BranchSet bs = newton_puiseux(bp({up({2}), up({-3}), up({1})}), opts(8));
  REQUIRE(bs.branches.size() == 2);
  CHECK(bs.branches[0].series.eval_exact(Rational(1, 7)) == ra(1));
  CHECK(bs.branches[1].series.eval_exact(Rational(1, 7)) == ra(2));
  CHECK(bs.branches[0].series.exact());

  // Y - t^3 expands exactly even past the target order
  BranchSet bs2 = newton_puiseux(bp({up({0, 0, 0, -1}), up({1})}), opts(2));
  REQUIRE(bs2.branches.size() == 1);
  CHECK(bs2.branches[0].series.exact());
  REQUIRE(bs2.branches[0].series.terms().size() == 1);
  CHECK(bs2.branches[0].series.terms()[0].first == Rational(3));
}

TEST_CASE("branch expansion: truncated square root oracle") {
  // Y^2 - (1 + t^2): sqrt(1+t^2) = 1 + t^2/2 - t^4/8 + O(t^6), frozen from
  // the binomial series (1+x)^(1/2) = 1 + x/2 - x^2/8 + ...
  BranchSet bs = newton_puiseux(bp({up({-1, 0, -1}), up({}), up({1})}), opts(6));
  REQUIRE(bs.branches.size() == 2);

  const Branch& minus = bs.branches[0];
  const Branch& plus = bs.branches[1];
  REQUIRE(plus.series.terms().size() == 3);
  CHECK(plus.series.terms()[0].first == Rational(0));
  CHECK(plus.series.terms()[0].second == ra(1));
  CHECK(plus.series.terms()[1].first == Rational(2));
  CHECK(plus.series.terms()[1].second == raq(1, 2));
  CHECK(plus.series.terms()[2].first == Rational(4));
  CHECK(plus.series.terms()[2].second == raq(-1, 8));
  REQUIRE(!plus.series.exact());
  CHECK(*plus.series.trunc() == Rational(6));
  REQUIRE(plus.residual_order.has_value());
  CHECK(*plus.residual_order == Rational(6));

  REQUIRE(minus.series.terms().size() == 3);
  CHECK(minus.series.terms()[0].second == ra(-1));
  CHECK(minus.series.terms()[1].second == raq(-1, 2));
  CHECK(minus.series.terms()[2].second == raq(1, 8));

  // the squared truncated branch reproduces the relation through the bound
  PuiseuxSeries resid = series_substitute(bp({up({-1, 0, -1}), up({}), up({1})}), plus.series);
  CHECK(resid.ord().lower() >= Rational(6));
}

TEST_CASE("branch expansion: truncated cube root oracle") {
  // Y^3 - (1 + t^2): (1+t^2)^(1/3) = 1 + t^2/3 - t^4/9 + 5 t^6/81 + O(t^8),
  // frozen from the binomial series (1+x)^(1/3).
  BranchSet bs = newton_puiseux(bp({up({-1, 0, -1}), up({}), up({}), up({1})}), opts(8));
  REQUIRE(bs.branches.size() == 1);
  const Branch& b = bs.branches[0];
  REQUIRE(b.series.terms().size() == 4);
  CHECK(b.series.terms()[0].second == ra(1));
  CHECK(b.series.terms()[1].first == Rational(2));
  CHECK(b.series.terms()[1].second == raq(1, 3));
  CHECK(b.series.terms()[2].first == Rational(4));
  CHECK(b.series.terms()[2].second == raq(-1, 9));
  CHECK(b.series.terms()[3].first == Rational(6));
  CHECK(b.series.terms()[3].second == raq(5, 81));
  CHECK(*b.series.trunc() == Rational(8));
  REQUIRE(b.residual_order.has_value());
  CHECK(*b.residual_order == Rational(8));
}

TEST_CASE("branch expansion: zero branch and squarefree reduction") {
  // Y^2 (Y - t) = Y^3 - t Y^2: branches are 0 and t, multiplicity dropped
  BranchSet bs = newton_puiseux(bp({up({}), up({}), up({0, -1}), up({1})}), opts(8));
  CHECK(bs.squarefree_reduced);
  REQUIRE(bs.branches.size() == 2);
  // sorted: ord 1 before the exact zero (order +infinity)
  REQUIRE(bs.branches[0].series.terms().size() == 1);
  CHECK(bs.branches[0].series.terms()[0].first == Rational(1));
  CHECK(bs.branches[1].series.is_exactly_zero());
  CHECK(!bs.branches[1].residual_order.has_value());
}

TEST_CASE("branch expansion: pole branches are found and flagged") {
  // (tY - 1)(Y - t) = t Y^2 - (1 + t^2) Y + t
  BranchSet bs = newton_puiseux(bp({up({0, 1}), up({-1, 0, -1}), up({0, 1})}), opts(8));
  REQUIRE(bs.branches.size() == 2);
  const Branch& pole = bs.branches[0];
  REQUIRE(pole.series.terms().size() == 1);
  CHECK(pole.series.terms()[0].first == Rational(-1));
  CHECK(pole.series.terms()[0].second == ra(1));
  CHECK(pole.series.exact());
  CHECK(pole.negative_order);
  const Branch& reg = bs.branches[1];
  CHECK(reg.series.terms()[0].first == Rational(1));
  CHECK(!reg.negative_order);

  // Y (tY + 1): zero branch plus pole -1/t
  BranchSet bs2 = newton_puiseux(bp({up({}), up({1}), up({0, 1})}), opts(8));
  REQUIRE(bs2.branches.size() == 2);
  CHECK(bs2.branches[0].series.terms()[0].first == Rational(-1));
  CHECK(bs2.branches[0].series.terms()[0].second == ra(-1));
  CHECK(bs2.branches[0].negative_order);
  CHECK(bs2.branches[1].series.is_exactly_zero());
}

TEST_CASE("branch expansion: algebraic leading coefficients") {
  // Y^2 - 2(1+t): branches +-sqrt(2) (1 + t/2 - t^2/8 + O(t^3))
  BranchSet bs = newton_puiseux(bp({up({-2, -2}), up({}), up({1})}), opts(3));
  REQUIRE(bs.branches.size() == 2);
  CHECK(bs.tower_depth_used == 1);
  const Branch& plus = bs.branches[1];
  REQUIRE(plus.series.terms().size() == 3);
  RealAlgebraic c0 = plus.series.terms()[0].second;
  CHECK(c0 * c0 == ra(2));
  CHECK(c0.sign() > 0);
  CHECK(plus.series.terms()[1].second == c0 * raq(1, 2));
  CHECK(plus.series.terms()[2].second == c0 * raq(-1, 8));
  CHECK(*plus.series.trunc() == Rational(3));
  REQUIRE(plus.residual_order.has_value());
  CHECK(*plus.residual_order == Rational(3));
  // minus branch mirrors it
  CHECK(bs.branches[0].series.terms()[0].second == -c0);
}

TEST_CASE("branch expansion: two-level coefficient tower") {
  // (Y^2 - 2)^2 - 3t = Y^4 - 4Y^2 + 4 - 3t: four real branches
  // +-sqrt(2 +- sqrt(3) sqrt(t)); leading coefficient needs sqrt(2), the
  // next correction needs sqrt(6)/4 on top of it.
  BiPoly f = bp({up({4, -3}), up({}), up({-4}), up({}), up({1})});
  BranchSet bs = newton_puiseux(f, opts(1));
  REQUIRE(bs.branches.size() == 4);
  CHECK(bs.tower_depth_used == 2);
  for (const Branch& b : bs.branches) {
    REQUIRE(b.series.terms().size() == 2);
    RealAlgebraic c0 = b.series.terms()[0].second;
    RealAlgebraic c1 = b.series.terms()[1].second;
    CHECK(c0 * c0 == ra(2));
    CHECK(b.series.terms()[1].first == Rational(1, 2));
    CHECK(c1 * c1 == raq(3, 8));
    REQUIRE(b.residual_order.has_value());
    CHECK(*b.residual_order == Rational(3, 2));
  }
  // the tower cap is enforced
  CHECK_THROWS_AS(newton_puiseux(f, opts(1, 1)), Error);
}

TEST_CASE("branch expansion: mixed ramified and plain branches") {
  // (Y^2 - t^3)(Y - t^2) = Y^3 - t^2 Y^2 - t^3 Y + t^5
  BiPoly f = bp({up({0, 0, 0, 0, 0, 1}), up({0, 0, 0, -1}), up({0, 0, -1}), up({1})});
  BranchSet bs = newton_puiseux(f, opts(10));
  REQUIRE(bs.branches.size() == 3);
  CHECK(bs.branches[0].series.terms()[0].first == Rational(3, 2));
  CHECK(bs.branches[0].series.terms()[0].second == ra(-1));
  CHECK(bs.branches[1].series.terms()[0].first == Rational(3, 2));
  CHECK(bs.branches[1].series.terms()[0].second == ra(1));
  CHECK(bs.branches[2].series.terms()[0].first == Rational(2));
  for (const Branch& b : bs.branches) {
    CHECK(b.series.exact());
    CHECK(!b.residual_order.has_value());
  }
}

TEST_CASE("branch expansion: degenerate inputs") {
  CHECK_THROWS_AS(newton_puiseux(BiPoly(), opts(8)), Error);
  // no Y at all: no branches
  CHECK(newton_puiseux(bp({up({1, 2})}), opts(8)).branches.empty());
  // t-content is stripped: t^3 (Y - t) has the single branch t
  BranchSet bs = newton_puiseux(bp({up({0, 0, 0, 0, -1}), up({0, 0, 0, 1})}), opts(8));
  REQUIRE(bs.branches.size() == 1);
  CHECK(bs.branches[0].series.terms()[0].first == Rational(1));
  CHECK(!bs.squarefree_reduced);
}

TEST_CASE("branch expansion: K-coefficient entry point") {
  // T^2 - sqrt(2) t over Q(sqrt(2)): branches +- 2^(1/4) t^(1/2)
  RealAlgebraic s2 = RealAlgebraic::from_root(up({-2, 0, 1}), {Rational(0), Rational(2)});
  KYPoly f = {KPoly({ra(0), -s2}), KPoly(), KPoly({ra(1)})};
  BranchSet bs = newton_puiseux_k(f, opts(6));
  REQUIRE(bs.branches.size() == 2);
  for (const Branch& b : bs.branches) {
    CHECK(b.series.exact());
    REQUIRE(b.series.terms().size() == 1);
    CHECK(b.series.terms()[0].first == Rational(1, 2));
    CHECK(b.series.terms()[0].second * b.series.terms()[0].second == s2);
  }
  CHECK(bs.branches[0].series.terms()[0].second.sign() < 0);

  // squarefree reduction happens internally: (T - t)^2
  KYPoly g = {KPoly({ra(0), ra(0), ra(1)}), KPoly({ra(0), ra(-2)}), KPoly({ra(1)})};
  BranchSet bs2 = newton_puiseux_k(g, opts(6));
  CHECK(bs2.squarefree_reduced);
  REQUIRE(bs2.branches.size() == 1);
  CHECK(bs2.branches[0].series.terms()[0].first == Rational(1));
}

TEST_CASE("branch expansion: substitute-back property on random relations") {
  std::mt19937 rng(20260822u);
  std::uniform_int_distribution<int> coef(-3, 3);
  const Rational n10(10);
  int nonempty = 0;
  for (int iter = 0; iter < 60; iter++) {
    std::vector<UniPoly> ycoeffs;
    for (int j = 0; j <= 3; j++) {
      std::vector<Rational> c;
      for (int i = 0; i <= 3; i++) c.push_back(Rational(coef(rng)));
      ycoeffs.push_back(UniPoly(c));
    }
    BiPoly f(ycoeffs);
    if (f.is_zero() || f.deg_y() < 1) continue;
    BranchSet bs = newton_puiseux(f, opts(10, 6));
    CHECK(static_cast<int>(bs.branches.size()) <= f.deg_y());
    if (!bs.branches.empty()) nonempty++;
    for (const Branch& b : bs.branches) {
      PuiseuxSeries resid = series_substitute(f, b.series);
      if (!b.residual_order.has_value()) {
        CHECK(b.series.exact());
        CHECK(resid.is_exactly_zero());
      } else {
        CHECK(*b.residual_order >= n10);
        SeriesOrd o = resid.ord();
        REQUIRE(o.kind != SeriesOrd::Kind::PlusInf);
        if (o.known()) {
          CHECK(o.q == *b.residual_order);
        } else {
          CHECK(*b.residual_order >= o.lower());
        }
      }
    }
  }
  CHECK(nonempty > 10);  // the suite exercised real expansions
}

TEST_CASE("branch expansion: deterministic output") {
  BiPoly f = bp({up({-1, 0, -1}), up({}), up({1})});
  BranchSet a = newton_puiseux(f, opts(6));
  BranchSet b = newton_puiseux(f, opts(6));
  REQUIRE(a.branches.size() == b.branches.size());
  for (size_t i = 0; i < a.branches.size(); i++)
    CHECK(a.branches[i].series.str("t") == b.branches[i].series.str("t"));
}

TEST_CASE("branch expansion: numeric cross-validation") {
  // branches of Y^2 - (1+t^2) evaluated at u = 1/100 enclose real roots of
  // the specialized polynomial Y^2 - (1 + u^2)
  BiPoly f = bp({up({-1, 0, -1}), up({}), up({1})});
  BranchSet bs = newton_puiseux(f, opts(6));
  REQUIRE(bs.branches.size() == 2);
  const Rational u(1, 100);
  UniPoly spec = f.eval_x(u);  // polynomial in Y
  auto roots = isolate_real_roots(spec);
  REQUIRE(roots.size() == 2);
  const Rational tail(1, 1000000000);  // 1e-9 dominates the t^6 tail at t=0.01
  for (const Branch& b : bs.branches) {
    QInterval env = b.series.eval_numeric(u, Rational(1, 1000000000000L));
    bool hit = false;
    for (auto& r : roots) {
      RootInterval ri = r;
      for (int k = 0; k < 60 && !ri.exact(); k++) {
        if (ri.hi - ri.lo <= Rational(1, 10000000000L)) break;
        ri = refine_root(spec, ri);
      }
      if (ri.lo <= env.hi + tail && env.lo - tail <= ri.hi) hit = true;
    }
    CHECK(hit);
  }
}
