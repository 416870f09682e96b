#pragma once
// Closed intervals with exact rational endpoints.  Used for sign
// determination and numeric enclosures; all endpoint arithmetic is exact, so
// an interval always truly contains the value it encloses.

#include "arclift/rational.hpp"

namespace arclift {

struct QInterval {
  Rational lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw Error("interval with hi < lo");
  }
  static QInterval point(const Rational& v) { return QInterval(v, v); }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / Rational(2); }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }

  // Definite sign of every point in the interval, or 0 if the sign is not
  // yet decided (interval straddles or touches zero).
  int definite_sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }

  QInterval operator-() const { return QInterval(-hi, -lo); }

  friend QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
  }
  friend QInterval operator-(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo - b.hi, a.hi - b.lo);
  }
  friend QInterval operator*(const QInterval& a, const QInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational l = rat_min(rat_min(p1, p2), rat_min(p3, p4));
    Rational h = rat_max(rat_max(p1, p2), rat_max(p3, p4));
    return QInterval(l, h);
  }

  QInterval pow(long e) const {
    QInterval r = QInterval::point(1);
    QInterval b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // Absolute-value upper bound of the enclosed value.
  Rational mag() const { return rat_max(lo.abs(), hi.abs()); }
};

}  // namespace arclift
