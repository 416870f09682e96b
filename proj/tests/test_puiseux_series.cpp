#include "arclift/puiseux_series.hpp"

#include <vector>

#include "doctest.h"

using namespace arclift;

namespace {

RealAlgebraic ra(long n) { return RealAlgebraic(Rational(n)); }
RealAlgebraic raq(long n, long d) { return RealAlgebraic(Rational(n, d)); }

RealAlgebraic sqrt_of(long n) {
  std::vector<Rational> c = {Rational(-n), Rational(0), Rational(1)};
  return RealAlgebraic::from_root(UniPoly(c), {Rational(0), Rational(n)});
}

PuiseuxSeries ps(std::vector<std::pair<Rational, long>> terms,
                 std::optional<Rational> trunc = std::nullopt) {
  std::vector<PuiseuxSeries::Term> v;
  for (auto& [q, c] : terms) v.push_back({q, ra(c)});
  return PuiseuxSeries(std::move(v), std::move(trunc));
}

}  // namespace

TEST_CASE("series construction normalizes") {
  // unordered input, duplicate exponents, zero coefficients
  PuiseuxSeries a({{Rational(2), ra(5)}, {Rational(0), ra(1)}, {Rational(2), ra(-5)},
                   {Rational(1), ra(0)}, {Rational(3), ra(7)}},
                  std::nullopt);
  REQUIRE(a.terms().size() == 2);
  CHECK(a.terms()[0].first == Rational(0));
  CHECK(a.terms()[0].second == ra(1));
  CHECK(a.terms()[1].first == Rational(3));
  CHECK(a.exact());

  // terms at or beyond the bound are dropped
  PuiseuxSeries b({{Rational(1), ra(2)}, {Rational(4), ra(9)}}, Rational(4));
  REQUIRE(b.terms().size() == 1);
  CHECK(b.terms()[0].first == Rational(1));
  CHECK(!b.exact());
  CHECK(*b.trunc() == Rational(4));
}

TEST_CASE("series ord kinds") {
  CHECK(PuiseuxSeries::zero().ord().kind == SeriesOrd::Kind::PlusInf);
  CHECK(PuiseuxSeries::zero().is_exactly_zero());

  PuiseuxSeries o = PuiseuxSeries::big_o(Rational(3, 2));
  CHECK(o.ord().kind == SeriesOrd::Kind::AtLeast);
  CHECK(o.ord().lower() == Rational(3, 2));
  CHECK(!o.is_exactly_zero());
  CHECK_THROWS_AS(o.leading(), Error);

  PuiseuxSeries m = PuiseuxSeries::monomial(ra(3), Rational(1, 2));
  REQUIRE(m.ord().known());
  CHECK(m.ord().q == Rational(1, 2));
  CHECK(m.leading().second == ra(3));
}

TEST_CASE("series addition tracks the weaker bound") {
  PuiseuxSeries a = ps({{Rational(0), 1}, {Rational(2), 1}});               // 1 + t^2 exact
  PuiseuxSeries b = ps({{Rational(1), 3}}, Rational(3));                    // 3t + O(t^3)
  PuiseuxSeries s = a + b;
  REQUIRE(!s.exact());
  CHECK(*s.trunc() == Rational(3));
  REQUIRE(s.terms().size() == 3);
  CHECK(s.terms()[0].first == Rational(0));
  CHECK(s.terms()[1].first == Rational(1));
  CHECK(s.terms()[2].first == Rational(2));

  // exact + exact stays exact, cancellation drops terms
  PuiseuxSeries c = a - a;
  CHECK(c.is_exactly_zero());

  // a term of one summand above the other's bound is unknown in the sum
  PuiseuxSeries d = ps({{Rational(5), 7}}) + b;
  REQUIRE(!d.exact());
  CHECK(*d.trunc() == Rational(3));
  REQUIRE(d.terms().size() == 1);
  CHECK(d.terms()[0].first == Rational(1));
}

TEST_CASE("series product bound is min over sides of trunc plus other ord") {
  // a = t + O(t^3), b = t^2 + O(t^4): a*b = t^3 + O(t^5)
  PuiseuxSeries a = ps({{Rational(1), 1}}, Rational(3));
  PuiseuxSeries b = ps({{Rational(2), 1}}, Rational(4));
  PuiseuxSeries p = a * b;
  REQUIRE(!p.exact());
  CHECK(*p.trunc() == Rational(5));
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0].first == Rational(3));
  CHECK(p.terms()[0].second == ra(1));

  // exact times exact is exact: (1+t)(1-t) = 1 - t^2
  PuiseuxSeries e = ps({{Rational(0), 1}, {Rational(1), 1}}) *
                    ps({{Rational(0), 1}, {Rational(1), -1}});
  CHECK(e.exact());
  REQUIRE(e.terms().size() == 2);
  CHECK(e.terms()[1].first == Rational(2));
  CHECK(e.terms()[1].second == ra(-1));

  // zero annihilates even unknown tails
  CHECK((PuiseuxSeries::zero() * PuiseuxSeries::big_o(Rational(2))).is_exactly_zero());

  // O(t^2) * t^(1/2) = O(t^(5/2))
  PuiseuxSeries f = PuiseuxSeries::big_o(Rational(2)) *
                    PuiseuxSeries::monomial(ra(1), Rational(1, 2));
  CHECK(f.terms().empty());
  CHECK(*f.trunc() == Rational(5, 2));
}

TEST_CASE("series scale and pow") {
  PuiseuxSeries a = ps({{Rational(0), 1}, {Rational(1), 1}});  // 1 + t
  PuiseuxSeries sq = a.pow(2);
  CHECK(sq.exact());
  REQUIRE(sq.terms().size() == 3);
  CHECK(sq.terms()[1].second == ra(2));
  CHECK(a.pow(0).terms().size() == 1);
  CHECK(a.scale(ra(0)).is_exactly_zero());
  CHECK(a.scale(raq(1, 2)).terms()[0].second == raq(1, 2));
  CHECK_THROWS_AS(a.pow(-1), Error);
}

TEST_CASE("series inversion follows the geometric expansion") {
  // 1/(1+t) to O(t^5): 1 - t + t^2 - t^3 + t^4
  PuiseuxSeries a = ps({{Rational(0), 1}, {Rational(1), 1}});
  PuiseuxSeries inv = a.invert(Rational(5));
  REQUIRE(!inv.exact());
  CHECK(*inv.trunc() == Rational(5));
  REQUIRE(inv.terms().size() == 5);
  for (int k = 0; k < 5; k++) {
    CHECK(inv.terms()[k].first == Rational(k));
    CHECK(inv.terms()[k].second == ra(k % 2 == 0 ? 1 : -1));
  }

  // product with the original is 1 through the bound
  PuiseuxSeries check = a * inv;
  REQUIRE(check.terms().size() == 1);
  CHECK(check.terms()[0].first == Rational(0));
  CHECK(check.terms()[0].second == ra(1));
  CHECK(*check.trunc() == Rational(5));

  // exact monomial inverts exactly
  PuiseuxSeries m = PuiseuxSeries::monomial(ra(2), Rational(3)).invert(Rational(100));
  CHECK(m.exact());
  REQUIRE(m.terms().size() == 1);
  CHECK(m.terms()[0].first == Rational(-3));
  CHECK(m.terms()[0].second == raq(1, 2));

  // truncated input caps its own answer: a = t^2 + t^3 + O(t^6) has
  // 1/a = t^-2 - t^-1 + 1 - t + O(t^2), bound trunc - 2*ord = 2.
  PuiseuxSeries b = ps({{Rational(2), 1}, {Rational(3), 1}}, Rational(6));
  PuiseuxSeries binv = b.invert(Rational(100));
  REQUIRE(!binv.exact());
  CHECK(*binv.trunc() == Rational(2));
  REQUIRE(binv.terms().size() == 4);
  CHECK(binv.terms()[0].first == Rational(-2));
  CHECK(binv.terms()[0].second == ra(1));
  CHECK(binv.terms()[1].second == ra(-1));
  CHECK(binv.terms()[2].second == ra(1));
  CHECK(binv.terms()[3].second == ra(-1));

  CHECK_THROWS_AS(PuiseuxSeries::big_o(Rational(2)).invert(Rational(4)), Error);
  CHECK_THROWS_AS(PuiseuxSeries::zero().invert(Rational(4)), Error);
}

TEST_CASE("series division") {
  // t / (1+t) = t - t^2 + O(t^3)
  PuiseuxSeries n = PuiseuxSeries::monomial(ra(1), Rational(1));
  PuiseuxSeries d = ps({{Rational(0), 1}, {Rational(1), 1}});
  PuiseuxSeries q = n.divide(d, Rational(3));
  REQUIRE(!q.exact());
  CHECK(*q.trunc() == Rational(3));
  REQUIRE(q.terms().size() == 2);
  CHECK(q.terms()[0].first == Rational(1));
  CHECK(q.terms()[0].second == ra(1));
  CHECK(q.terms()[1].first == Rational(2));
  CHECK(q.terms()[1].second == ra(-1));

  // exact monomial quotient is exact: t^3 / (2t) = t^2/2
  PuiseuxSeries e = ps({{Rational(3), 1}}).divide(ps({{Rational(1), 2}}), Rational(50));
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms()[0].first == Rational(2));
  CHECK(e.terms()[0].second == raq(1, 2));
}

TEST_CASE("series exponent bookkeeping") {
  PuiseuxSeries a = ps({{Rational(1, 2), 1}, {Rational(1), 2}}, Rational(2));

  PuiseuxSeries sh = a.shift_exponents(Rational(3, 2));
  CHECK(sh.terms()[0].first == Rational(2));
  CHECK(sh.terms()[1].first == Rational(5, 2));
  CHECK(*sh.trunc() == Rational(7, 2));

  PuiseuxSeries rm = a.ramify(2);
  CHECK(rm.terms()[0].first == Rational(1));
  CHECK(rm.terms()[1].first == Rational(2));
  CHECK(*rm.trunc() == Rational(4));
  CHECK_THROWS_AS(a.ramify(0), Error);

  PuiseuxSeries tr = a.truncate_to(Rational(1));
  REQUIRE(tr.terms().size() == 1);
  CHECK(*tr.trunc() == Rational(1));
  // truncating beyond the current bound does not loosen it
  CHECK(*a.truncate_to(Rational(10)).trunc() == Rational(2));

  CHECK(a.ramification_index() == 2);
  CHECK(ps({{Rational(1, 2), 1}, {Rational(2, 3), 1}}).ramification_index() == 6);
  CHECK(PuiseuxSeries::zero().ramification_index() == 1);
  CHECK(ps({{Rational(2), 5}}).ramification_index() == 1);
}

TEST_CASE("series exact evaluation") {
  // t^(1/2) at 4 -> 2
  PuiseuxSeries r = PuiseuxSeries::monomial(ra(1), Rational(1, 2));
  CHECK(r.eval_exact(Rational(4)) == ra(2));
  // t^(3/2) at 4 -> 8
  CHECK(PuiseuxSeries::monomial(ra(1), Rational(3, 2)).eval_exact(Rational(4)) == ra(8));
  // t^(-1/2) at 4 -> 1/2
  CHECK(PuiseuxSeries::monomial(ra(1), Rational(-1, 2)).eval_exact(Rational(4)) == raq(1, 2));
  // 1 + t^(1/2) at 2 -> 1 + sqrt(2)
  PuiseuxSeries s = ps({{Rational(0), 1}}) + r;
  CHECK(s.eval_exact(Rational(2)) == ra(1) + sqrt_of(2));
  // polynomial case: 1 + 3t + t^2 at 1/2 -> 11/4
  PuiseuxSeries p = ps({{Rational(0), 1}, {Rational(1), 3}, {Rational(2), 1}});
  CHECK(p.eval_exact(Rational(1, 2)) == raq(11, 4));

  CHECK(PuiseuxSeries::zero().eval_exact(Rational(3)) == ra(0));
  CHECK_THROWS_AS(PuiseuxSeries::big_o(Rational(2)).eval_exact(Rational(1)), Error);
  CHECK_THROWS_AS(r.eval_exact(Rational(-1)), Error);
}

TEST_CASE("series numeric evaluation") {
  // t^(1/2) at 1/4 -> interval around 1/2
  PuiseuxSeries r = PuiseuxSeries::monomial(ra(1), Rational(1, 2));
  QInterval iv = r.eval_numeric(Rational(1, 4), Rational(1, 1000));
  CHECK(iv.contains(Rational(1, 2)));
  CHECK(iv.width() <= Rational(1, 1000));

  // rational sum evaluates to a point interval: 1 + t^2/2 - t^4/8 at 1/100
  PuiseuxSeries s({{Rational(0), ra(1)},
                   {Rational(2), raq(1, 2)},
                   {Rational(4), raq(-1, 8)}},
                  Rational(6));
  QInterval jv = s.eval_numeric(Rational(1, 100), Rational(1, 1000000));
  Rational expect = Rational(1) + Rational(1, 20000) - Rational(1, 800000000);
  CHECK(jv.lo == expect);
  CHECK(jv.hi == expect);

  // zero series -> [0, 0]
  QInterval zv = PuiseuxSeries::zero().eval_numeric(Rational(1, 3), Rational(1, 10));
  CHECK(zv.lo == Rational(0));
  CHECK(zv.hi == Rational(0));

  CHECK_THROWS_AS(r.eval_numeric(Rational(0), Rational(1, 10)), Error);
}

TEST_CASE("series exponent denominators and scale-back") {
  PuiseuxSeries a = ps({{Rational(1, 2), 1}, {Rational(3, 2), 2}, {Rational(2), 1}});
  auto dens = a.exponent_denominators();
  REQUIRE(dens.size() == 2);
  CHECK(dens.count(Int(1)) == 1);
  CHECK(dens.count(Int(2)) == 1);
  CHECK(PuiseuxSeries::zero().exponent_denominators().empty());

  // ramify(m) then scaling exponents by 1/m is the identity
  PuiseuxSeries b = ps({{Rational(1, 3), 1}, {Rational(1), -2}}, Rational(5, 3));
  PuiseuxSeries round = b.ramify(6).scale_exponents(Rational(1, 6));
  REQUIRE(round.terms().size() == b.terms().size());
  for (size_t i = 0; i < b.terms().size(); i++) {
    CHECK(round.terms()[i].first == b.terms()[i].first);
    CHECK(round.terms()[i].second == b.terms()[i].second);
  }
  CHECK(*round.trunc() == *b.trunc());
  CHECK_THROWS_AS(b.scale_exponents(Rational(0)), Error);
}

TEST_CASE("series printing") {
  CHECK(PuiseuxSeries::zero().str("t") == "0");
  CHECK(PuiseuxSeries::big_o(Rational(2)).str("t") == "O(t^2)");
  CHECK(PuiseuxSeries::big_o(Rational(5, 2)).str("t") == "O(t^(5/2))");
  CHECK(ps({{Rational(0), 3}}).str("t") == "3");
  CHECK(ps({{Rational(0), -3}}).str("t") == "-3");
  CHECK(ps({{Rational(1), 1}}).str("t") == "t");
  CHECK(ps({{Rational(1), -1}}).str("t") == "-t");
  CHECK(ps({{Rational(2), 5}}).str("t") == "5*t^2");
  CHECK(ps({{Rational(1, 2), 1}}).str("t") == "t^(1/2)");
  CHECK(ps({{Rational(-1), 2}}).str("t") == "2*t^(-1)");
  CHECK(ps({{Rational(0), 1}, {Rational(1), -2}, {Rational(3, 2), 1}}, Rational(2)).str("t") ==
        "1 - 2*t + t^(3/2) + O(t^2)");
  CHECK(ps({{Rational(1), 1}}, Rational(1, 2)).str("s") == "O(s^(1/2))");

  // algebraic coefficient prints through its canonical container
  PuiseuxSeries w({{Rational(1), sqrt_of(2)}}, std::nullopt);
  CHECK(w.str("t") == sqrt_of(2).str() + "*t");
}

TEST_CASE("series inversion of fractional-exponent leading term") {
  // 1 / (t^(1/2) + t) = t^(-1/2) - 1 + t^(1/2) - t + ... to target 1
  PuiseuxSeries a = ps({{Rational(1, 2), 1}, {Rational(1), 1}});
  PuiseuxSeries inv = a.invert(Rational(1));
  REQUIRE(!inv.exact());
  CHECK(*inv.trunc() == Rational(1));
  REQUIRE(inv.terms().size() == 3);
  CHECK(inv.terms()[0].first == Rational(-1, 2));
  CHECK(inv.terms()[0].second == ra(1));
  CHECK(inv.terms()[1].first == Rational(0));
  CHECK(inv.terms()[1].second == ra(-1));
  CHECK(inv.terms()[2].first == Rational(1, 2));
  CHECK(inv.terms()[2].second == ra(1));

  PuiseuxSeries prod = a * inv;
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms()[0].second == ra(1));
}
