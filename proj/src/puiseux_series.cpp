#include "arclift/puiseux_series.hpp"

#include <algorithm>
#include <sstream>

namespace arclift {

PuiseuxSeries::PuiseuxSeries(std::vector<Term> terms, std::optional<Rational> trunc)
    : t_(std::move(terms)), trunc_(std::move(trunc)) {
  normalize_();
}

void PuiseuxSeries::normalize_() {
  std::sort(t_.begin(), t_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& tm : t_) {
    if (trunc_ && tm.first >= *trunc_) continue;  // beyond what is known
    if (!out.empty() && out.back().first == tm.first) {
      out.back().second = out.back().second + tm.second;
    } else {
      out.push_back(std::move(tm));
    }
  }
  t_.clear();
  for (auto& tm : out)
    if (!tm.second.is_zero()) t_.push_back(std::move(tm));
}

PuiseuxSeries PuiseuxSeries::constant(const RealAlgebraic& c) {
  return PuiseuxSeries({{Rational(0), c}}, std::nullopt);
}

PuiseuxSeries PuiseuxSeries::monomial(const RealAlgebraic& c, const Rational& q) {
  return PuiseuxSeries({{q, c}}, std::nullopt);
}

PuiseuxSeries PuiseuxSeries::big_o(const Rational& theta) {
  return PuiseuxSeries({}, theta);
}

SeriesOrd PuiseuxSeries::ord() const {
  if (!t_.empty()) return {SeriesOrd::Kind::Known, t_.front().first};
  if (exact()) return {SeriesOrd::Kind::PlusInf, Rational(0)};
  return {SeriesOrd::Kind::AtLeast, *trunc_};
}

const PuiseuxSeries::Term& PuiseuxSeries::leading() const {
  if (t_.empty()) throw Error("series has no known leading term");
  return t_.front();
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  std::vector<Term> v;
  v.reserve(t_.size());
  for (const auto& tm : t_) v.push_back({tm.first, -tm.second});
  return PuiseuxSeries(std::move(v), trunc_);
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::vector<PuiseuxSeries::Term> v = a.t_;
  v.insert(v.end(), b.t_.begin(), b.t_.end());
  std::optional<Rational> tr;
  if (a.trunc_ && b.trunc_)
    tr = rat_min(*a.trunc_, *b.trunc_);
  else if (a.trunc_)
    tr = a.trunc_;
  else if (b.trunc_)
    tr = b.trunc_;
  return PuiseuxSeries(std::move(v), std::move(tr));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  // Zero annihilates even the unknown part of a truncated series.
  if (a.is_exactly_zero() || b.is_exactly_zero()) return PuiseuxSeries();
  // The unknown tail of one factor lands at its bound plus the other
  // factor's lowest exponent; take the tightest cap over both sides.
  std::optional<Rational> tr;
  auto consider = [&tr](const std::optional<Rational>& th, const PuiseuxSeries& other) {
    if (!th) return;
    Rational cap = *th + other.ord().lower();
    tr = tr ? rat_min(*tr, cap) : cap;
  };
  consider(a.trunc_, b);
  consider(b.trunc_, a);
  std::vector<PuiseuxSeries::Term> v;
  v.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) {
      Rational e = x.first + y.first;
      if (tr && e >= *tr) continue;
      v.push_back({e, x.second * y.second});
    }
  return PuiseuxSeries(std::move(v), std::move(tr));
}

PuiseuxSeries PuiseuxSeries::scale(const RealAlgebraic& c) const {
  if (c.is_zero()) return PuiseuxSeries();
  std::vector<Term> v;
  v.reserve(t_.size());
  for (const auto& tm : t_) v.push_back({tm.first, tm.second * c});
  return PuiseuxSeries(std::move(v), trunc_);
}

PuiseuxSeries PuiseuxSeries::pow(long e) const {
  if (e < 0) throw Error("negative power of a series; use invert");
  PuiseuxSeries r = constant(RealAlgebraic(Rational(1)));
  for (long i = 0; i < e; i++) r = r * (*this);
  return r;
}

PuiseuxSeries PuiseuxSeries::invert(const Rational& target) const {
  SeriesOrd o = ord();
  if (!o.known()) throw Error("cannot invert a series with no known leading term");
  const Rational m = o.q;
  const RealAlgebraic c = t_.front().second;
  RealAlgebraic cinv = c.inv();

  // u = a / (c t^m) - 1, with ord(u) > 0.
  PuiseuxSeries u = shift_exponents(-m).scale(cinv) - constant(RealAlgebraic(Rational(1)));
  if (u.is_exactly_zero()) return monomial(cinv, -m);  // exact monomial input

  Rational res_trunc = target;
  if (trunc_) res_trunc = rat_min(res_trunc, *trunc_ - m - m);
  Rational needed = res_trunc + m;  // precision of the geometric sum

  PuiseuxSeries acc = constant(RealAlgebraic(Rational(1)));
  PuiseuxSeries p = constant(RealAlgebraic(Rational(1)));
  PuiseuxSeries nu = -u;
  for (int guard = 0; guard < 100000; guard++) {
    p = (p * nu).truncate_to(needed);
    SeriesOrd po = p.ord();
    if (po.kind == SeriesOrd::Kind::PlusInf) break;
    if (po.lower() >= needed) break;
    acc = acc + p;
  }
  return acc.shift_exponents(-m).scale(cinv).truncate_to(res_trunc);
}

PuiseuxSeries PuiseuxSeries::divide(const PuiseuxSeries& b, const Rational& target) const {
  return ((*this) * b.invert(target)).truncate_to(target);
}

PuiseuxSeries PuiseuxSeries::shift_exponents(const Rational& delta) const {
  std::vector<Term> v;
  v.reserve(t_.size());
  for (const auto& tm : t_) v.push_back({tm.first + delta, tm.second});
  std::optional<Rational> tr = trunc_;
  if (tr) tr = *tr + delta;
  return PuiseuxSeries(std::move(v), std::move(tr));
}

PuiseuxSeries PuiseuxSeries::ramify(long k) const {
  if (k < 1) throw Error("ramification index must be >= 1");
  return scale_exponents(Rational(k));
}

PuiseuxSeries PuiseuxSeries::scale_exponents(const Rational& f) const {
  if (f.sign() <= 0) throw Error("exponent scale factor must be positive");
  std::vector<Term> v;
  v.reserve(t_.size());
  for (const auto& tm : t_) v.push_back({tm.first * f, tm.second});
  std::optional<Rational> tr = trunc_;
  if (tr) tr = *tr * f;
  return PuiseuxSeries(std::move(v), std::move(tr));
}

PuiseuxSeries PuiseuxSeries::truncate_to(const Rational& theta) const {
  std::optional<Rational> tr = trunc_ ? rat_min(*trunc_, theta) : theta;
  return PuiseuxSeries(t_, std::move(tr));
}

Int PuiseuxSeries::ramification_index() const {
  Int l(1);
  for (const auto& tm : t_) l = int_lcm(l, tm.first.den());
  return l;
}

namespace {

// Exact value of a finite term sum at a positive rational point.
RealAlgebraic sum_terms(const std::vector<PuiseuxSeries::Term>& terms, const Rational& at) {
  if (at.sign() <= 0) throw Error("series evaluation requires a positive point");
  RealAlgebraic sum{Rational(0)};
  for (const auto& [q, c] : terms) {
    // at^(p/r): the unique positive real r-th root of at^p.
    Int p = q.num(), r = q.den();
    if (!mpz_fits_slong_p(p.get_mpz_t()) || !mpz_fits_slong_p(r.get_mpz_t()))
      throw Error("series exponent too large to evaluate");
    Rational powed = at.pow(mpz_get_si(p.get_mpz_t()));
    RealAlgebraic factor;
    if (r == 1) {
      factor = RealAlgebraic(powed);
    } else {
      long rl = mpz_get_si(r.get_mpz_t());
      std::vector<Rational> cf(static_cast<size_t>(rl) + 1, Rational(0));
      cf[0] = -powed;
      cf[static_cast<size_t>(rl)] = Rational(1);
      UniPoly m(std::move(cf));
      Rational hi = rat_max(Rational(1), powed) + Rational(1);
      factor = RealAlgebraic::from_root(m, {Rational(0), hi});
    }
    sum = sum + c * factor;
  }
  return sum;
}

}  // namespace

RealAlgebraic PuiseuxSeries::eval_exact(const Rational& at) const {
  if (!exact()) throw Error("eval on a truncated series");
  return sum_terms(t_, at);
}

QInterval PuiseuxSeries::eval_numeric(const Rational& at, const Rational& precision) const {
  if (at.sign() <= 0) throw Error("series evaluation requires a positive point");
  RealAlgebraic v = sum_terms(t_, at);
  if (auto r = v.as_rational()) return QInterval(*r, *r);
  return v.enclose(precision);
}

std::set<Int> PuiseuxSeries::exponent_denominators() const {
  std::set<Int> out;
  for (const auto& tm : t_) out.insert(tm.first.den());
  return out;
}

namespace {

std::string exp_str(const std::string& var, const Rational& q) {
  if (q.is_zero()) return "";
  if (q == Rational(1)) return var;
  if (q.is_integer() && q.sign() > 0) return var + "^" + q.str();
  return var + "^(" + q.str() + ")";
}

}  // namespace

std::string PuiseuxSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, c] : t_) {
    std::string vp = exp_str(var, q);
    auto rat = c.as_rational();
    if (rat) {
      Rational a = rat->abs();
      if (first) {
        if (rat->sign() < 0) os << "-";
      } else {
        os << (rat->sign() < 0 ? " - " : " + ");
      }
      bool unit = (a == Rational(1));
      if (vp.empty()) {
        os << a.str();
      } else {
        if (!unit) os << a.str() << "*";
        os << vp;
      }
    } else {
      if (!first) os << " + ";
      os << c.str();
      if (!vp.empty()) os << "*" << vp;
    }
    first = false;
  }
  if (trunc_) {
    if (!first) os << " + ";
    os << "O(" << var << "^";
    if (trunc_->is_integer() && trunc_->sign() > 0 && !(*trunc_ == Rational(1)))
      os << trunc_->str();
    else if (*trunc_ == Rational(1))
      os << "1";
    else
      os << "(" << trunc_->str() << ")";
    os << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace arclift
