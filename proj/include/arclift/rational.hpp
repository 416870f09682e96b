#pragma once
// Exact rational arithmetic on top of GMP.  Invariant: every Rational is
// stored canonically (gcd(num, den) = 1, den > 0); mpq arithmetic preserves
// canonical form but construction from raw integers does not, so every
// constructor canonicalizes.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arclift {

using Int = mpz_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}            // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {}      // NOLINT
  Rational(long n, long d) : v_(n, d) { canon_(); }
  Rational(const Int& n, const Int& d) : v_(n, d) { canon_(); }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  const Int num() const { return v_.get_num(); }
  const Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inv() const {
    if (is_zero()) throw Error("rational inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  // Largest integer <= value, as a Rational.
  Rational floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(q);
  }
  Rational ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(q);
  }

  // Integer power; negative exponents invert (error on zero base).
  Rational pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rational r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  double to_double() const { return v_.get_d(); }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  void canon_() {
    if (v_.get_den() == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// gcd/lcm on exact integers (wrappers so call sites stay readable).
inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace arclift
