#include <random>
#include <vector>

#include "arclift/kpoly.hpp"
#include "doctest.h"

using namespace arclift;

namespace {

UniPoly upoly(std::initializer_list<long> asc) {
  std::vector<Rational> c;
  for (long v : asc) c.emplace_back(v);
  return UniPoly(std::move(c));
}

RealAlgebraic sqrt_of(long n) {
  return RealAlgebraic::from_root(upoly({-n, 0, 1}), {Rational(0), Rational(n)});
}

}  // namespace

TEST_CASE("kpoly arithmetic and division") {
  RealAlgebraic r2 = sqrt_of(2);
  // p = Y^2 - 2  over Q(sqrt2) factors as (Y - r2)(Y + r2)
  KPoly p({RealAlgebraic(Rational(-2)), RealAlgebraic(Rational(0)), RealAlgebraic(Rational(1))});
  KPoly lin({-r2, RealAlgebraic(Rational(1))});  // Y - sqrt2
  auto [q, rem] = p.divmod(lin);
  CHECK(rem.is_zero());
  CHECK(q.deg() == 1);
  CHECK(q.coeff(0) == r2);  // Y + sqrt2
  CHECK(q * lin == p);
  CHECK(p.eval(r2).is_zero());
  CHECK(p.eval(RealAlgebraic(Rational(2))) == RealAlgebraic(Rational(2)));
  CHECK(p.eval_rational(Rational(3)) == RealAlgebraic(Rational(7)));
  CHECK((p + (-p)).is_zero());
  CHECK(p.derivative().coeff(1) == RealAlgebraic(Rational(2)));
}

TEST_CASE("kpoly gcd and squarefree over a field") {
  RealAlgebraic r2 = sqrt_of(2);
  KPoly lin({-r2, RealAlgebraic(Rational(1))});
  KPoly sq = lin * lin;  // (Y - sqrt2)^2 = Y^2 - 2sqrt2 Y + 2
  CHECK(sq.coeff(1) == -(r2 + r2));
  KPoly sf = sq.squarefree_part().monic();
  CHECK(sf.deg() == 1);
  CHECK(sf.coeff(0) == -r2);
  KPoly g = KPoly::gcd(sq, lin);
  CHECK(g.deg() == 1);
}

TEST_CASE("rational-coefficient roots come back in order") {
  // (Y^2 - 2)(3Y - 1): roots -sqrt2, 1/3, sqrt2
  KPoly chi = KPoly::from_unipoly(upoly({-2, 0, 1}) * upoly({-1, 3}));
  auto roots = real_roots_of(chi);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].root.sign() == -1);
  CHECK(roots[0].root * roots[0].root == RealAlgebraic(Rational(2)));
  CHECK(roots[0].tower_growth == 1);
  CHECK(roots[1].root.is_rational());
  CHECK(roots[1].root.rational_value() == Rational(1, 3));
  CHECK(roots[1].tower_growth == 0);
  CHECK(roots[2].root * roots[2].root == RealAlgebraic(Rational(2)));
  CHECK(roots[2].root.sign() == 1);
  // embeddings are identities on the rational path
  RealAlgebraic probe{Rational(5, 7)};
  CHECK(roots[0].embed(probe) == probe);
}

TEST_CASE("no real roots over K") {
  RealAlgebraic r2 = sqrt_of(2);
  // Y^2 + sqrt2: negative discriminant
  KPoly chi({r2, RealAlgebraic(Rational(0)), RealAlgebraic(Rational(1))});
  CHECK(real_roots_of(chi).empty());
}

TEST_CASE("linear over K stays in K") {
  RealAlgebraic r2 = sqrt_of(2);
  // 2Y - sqrt2 => root sqrt2/2
  KPoly chi({-r2, RealAlgebraic(Rational(2))});
  auto roots = real_roots_of(chi);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].tower_growth == 0);
  CHECK(roots[0].root.field() == r2.field());
  CHECK(roots[0].root * RealAlgebraic(Rational(2)) == r2);
  CHECK(roots[0].embed(r2) == r2);
}

TEST_CASE("quadratic over Q(sqrt2) flattens to degree-4 field") {
  RealAlgebraic r2 = sqrt_of(2);
  // Y^2 - sqrt2: real roots +-2^(1/4)
  KPoly chi({-r2, RealAlgebraic(Rational(0)), RealAlgebraic(Rational(1))});
  auto roots = real_roots_of(chi);
  REQUIRE(roots.size() == 2);
  const auto& neg = roots[0];
  const auto& pos = roots[1];
  CHECK(neg.root.sign() == -1);
  CHECK(pos.root.sign() == 1);
  CHECK(pos.tower_growth == 1);
  // the root squared equals the embedded sqrt2
  RealAlgebraic r2new = pos.embed(r2);
  CHECK(pos.root * pos.root == r2new);
  CHECK(neg.root * neg.root == neg.embed(r2));
  // the embedded sqrt2 is still sqrt2 as a real number
  CHECK(r2new * r2new == RealAlgebraic(Rational(2)));
  CHECK(r2new.sign() == 1);
  CHECK(r2new == r2);
  // canonical container of the root is x^4 - 2
  auto fl = pos.root.canonical_flat();
  CHECK(fl.minpoly == upoly({-2, 0, 0, 0, 1}));
  // embedding respects arithmetic
  RealAlgebraic e1 = pos.embed(r2 + RealAlgebraic(Rational(1, 2)));
  CHECK(e1 == r2new + RealAlgebraic(Rational(1, 2)));
}

TEST_CASE("mixed rational and K roots over Q(sqrt2)") {
  RealAlgebraic r2 = sqrt_of(2);
  // (Y - 1/2)(Y - sqrt2) = Y^2 - (1/2 + sqrt2) Y + sqrt2/2
  RealAlgebraic half{Rational(1, 2)};
  KPoly chi({half * r2, -(half + r2), RealAlgebraic(Rational(1))});
  auto roots = real_roots_of(chi);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].root == half);
  CHECK(roots[0].root.is_rational());  // demoted, not wrapped in a field
  CHECK(roots[0].tower_growth == 0);
  CHECK(roots[1].root == roots[1].embed(r2));
  CHECK(roots[1].root == r2);  // exact value equality across fields
  // tower_growth for roots[1] may conservatively report 1: the root lies in
  // Q(sqrt2) but proving that would need factorization over Q.
}

TEST_CASE("repeated roots over K are collapsed") {
  RealAlgebraic r2 = sqrt_of(2);
  KPoly lin({-r2, RealAlgebraic(Rational(1))});
  KPoly chi = lin * lin;
  auto roots = real_roots_of(chi);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].root == r2);
}

TEST_CASE("cubic over Q(sqrt2) with one real root") {
  RealAlgebraic r2 = sqrt_of(2);
  // Y^3 - sqrt2: unique real root 2^(1/6)
  KPoly chi({-r2, RealAlgebraic(Rational(0)), RealAlgebraic(Rational(0)),
             RealAlgebraic(Rational(1))});
  auto roots = real_roots_of(chi);
  REQUIRE(roots.size() == 1);
  const auto& r = roots[0];
  CHECK(r.root.sign() == 1);
  CHECK(r.root.pow(3) == r.embed(r2));
  auto fl = r.root.canonical_flat();
  CHECK(fl.minpoly == upoly({-2, 0, 0, 0, 0, 0, 1}));  // x^6 - 2
  CHECK(r.root.pow(6) == RealAlgebraic(Rational(2)));
}

TEST_CASE("roots are strictly increasing") {
  RealAlgebraic r2 = sqrt_of(2);
  // (Y^2 - sqrt2)(Y - 2): roots -2^(1/4), 2^(1/4), 2
  KPoly q({-r2, RealAlgebraic(Rational(0)), RealAlgebraic(Rational(1))});
  KPoly lin({RealAlgebraic(Rational(-2)), RealAlgebraic(Rational(1))});
  auto roots = real_roots_of(q * lin);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].root < roots[1].root);
  CHECK(roots[1].root < roots[2].root);
  CHECK(roots[2].root == RealAlgebraic(Rational(2)));
}
