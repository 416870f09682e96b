#include "arclift/number_field.hpp"

namespace arclift {

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  // Classic extended Euclid over Q[x], normalized so g is monic.
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(Rational(1)), u1;
  UniPoly v0, v1 = UniPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    UniPoly u2 = u0 - q * u1;
    UniPoly v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rational s = r0.lc().inv();
  return {r0 * s, u0 * s, v0 * s};
}

std::shared_ptr<NumberField> NumberField::make(UniPoly m, RootInterval iv) {
  if (m.deg() < 2) throw Error("number field modulus must have degree >= 2");
  if (iv.exact()) throw Error("number field interval must be open");
  if (!(m.eval(iv.lo) * m.eval(iv.hi) < Rational(0)))
    throw Error("number field interval must isolate with a sign change");
  return std::shared_ptr<NumberField>(new NumberField(m.monic(), std::move(iv)));
}

std::pair<UniPoly, RootInterval> NumberField::snapshot() const {
  std::lock_guard<std::mutex> lk(mu_);
  return {m_, iv_};
}

UniPoly NumberField::reduce(const UniPoly& p) const {
  if (p.deg() < m0_.deg()) return p;
  return p.divmod(m0_).second;
}

void NumberField::refine_locked_() {
  Rational mid = (iv_.lo + iv_.hi) / Rational(2);
  Rational pm = m_.eval(mid);
  if (pm.is_zero()) {
    // The midpoint is the (necessarily unique) root: alpha itself is this
    // rational number, wrapped in a field because demotion was skipped.
    // Keep the sign-change invariant by bracketing symmetrically around it;
    // for small enough delta the simple crossing dominates.
    Rational delta = (iv_.hi - iv_.lo) / Rational(4);
    while (!(m_.eval(mid - delta) * m_.eval(mid + delta) < Rational(0)))
      delta = delta / Rational(2);
    iv_ = {mid - delta, mid + delta};
    return;
  }
  if (pm.sign() != m_.eval(iv_.lo).sign())
    iv_ = {iv_.lo, mid};
  else
    iv_ = {mid, iv_.hi};
}

void NumberField::refine() {
  std::lock_guard<std::mutex> lk(mu_);
  refine_locked_();
}

RootInterval NumberField::interval_of_width(const Rational& w) {
  std::lock_guard<std::mutex> lk(mu_);
  while (iv_.hi - iv_.lo > w) refine_locked_();
  return iv_;
}

bool NumberField::keep_factor_locked_(const UniPoly& g) {
  // alpha is the unique root of m_ in (lo, hi); g | m_, so g has 0 or 1 roots
  // there, countable directly by Sturm (endpoints are non-roots of m_, hence
  // of g).
  auto seq = UniPoly::sturm_sequence(g);
  int c = UniPoly::count_roots(seq, iv_.lo, iv_.hi);
  if (c == 1) {
    m_ = g;
    return true;
  }
  m_ = m_.div_exact(g).monic();
  return false;
}

bool NumberField::is_zero_elem(const UniPoly& rep) {
  std::lock_guard<std::mutex> lk(mu_);
  UniPoly r = rep.deg() < m_.deg() ? rep : rep.divmod(m_).second;
  if (r.is_zero()) return true;
  if (r.deg() == 0) return false;
  UniPoly g = UniPoly::gcd(r, m_);
  if (g.deg() == 0) return false;
  if (g.deg() == m_.deg()) return true;  // g == m_: rep multiple of modulus
  return keep_factor_locked_(g);  // zero iff alpha is a root of g
}

int NumberField::sign_elem(const UniPoly& rep) {
  if (is_zero_elem(rep)) return 0;
  std::lock_guard<std::mutex> lk(mu_);
  UniPoly r = rep.deg() < m_.deg() ? rep : rep.divmod(m_).second;
  for (int guard = 0; guard < 100000; guard++) {
    QInterval j = r.eval(QInterval(iv_.lo, iv_.hi));
    int s = j.definite_sign();
    if (s != 0) return s;
    refine_locked_();
  }
  throw Error("sign refinement did not converge");
}

UniPoly NumberField::invert_elem(const UniPoly& rep) {
  if (is_zero_elem(rep)) throw Error("division by zero algebraic number");
  // Deterministic inversion: work against the original modulus.  A nonzero
  // element can share factors with a reducible m0; alpha then lives in the
  // complementary factor h = m0/gcd (m0 squarefree makes h coprime to rep),
  // and both h and the resulting inverse depend only on the rep itself.
  UniPoly r = reduce(rep);
  UniPoly g = UniPoly::gcd(r, m0_);
  UniPoly h = g.deg() > 0 ? m0_.div_exact(g).monic() : m0_;
  ExtGcd e = ext_gcd(r.divmod(h).second, h);
  if (e.g.deg() != 0) throw Error("inversion failed: modulus not squarefree?");
  UniPoly inv = e.u.divmod(h).second;
  if (g.deg() > 0) {
    // Fold the discovered factorization into the split state so future sign
    // work runs on the smaller factor.  alpha is a common root of m_ and h.
    std::lock_guard<std::mutex> lk(mu_);
    UniPoly keep = UniPoly::gcd(m_, h);
    if (keep.deg() > 0 && keep.deg() < m_.deg()) m_ = keep;
  }
  return inv;
}

QInterval NumberField::enclose_elem(const UniPoly& rep, const Rational& w) {
  std::lock_guard<std::mutex> lk(mu_);
  UniPoly r = rep.deg() < m_.deg() ? rep : rep.divmod(m_).second;
  for (int guard = 0; guard < 100000; guard++) {
    QInterval j = r.eval(QInterval(iv_.lo, iv_.hi));
    if (j.width() <= w) return j;
    refine_locked_();
  }
  throw Error("enclosure refinement did not converge");
}

}  // namespace arclift
