#include "arclift/real_algebraic.hpp"

#include <algorithm>

#include "arclift/bipoly.hpp"

namespace arclift {

namespace {

// All positive divisors of |n|, or nullopt when enumeration would be
// unreasonably large.  Trial division with a GMP primality check on the
// cofactor; incompleteness only ever suppresses a cosmetic demotion.
std::optional<std::vector<Int>> divisors_of(Int n, size_t cap = 512) {
  if (n == 0) return std::nullopt;
  n = abs(n);
  std::vector<std::pair<Int, int>> fac;
  for (long p = 2; p <= 100000 && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        e++;
      }
      fac.emplace_back(Int(p), e);
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;  // composite leftover
    fac.emplace_back(n, 1);
  }
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : fac) {
    size_t sz = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; k++) {
      pk *= p;
      for (size_t i = 0; i < sz; i++) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > cap) return std::nullopt;
      }
    }
  }
  return divs;
}

}  // namespace

std::optional<Rational> rational_root_in(const UniPoly& squarefree, const RootInterval& iv) {
  if (iv.exact()) return iv.lo;
  UniPoly p = squarefree;
  // Strip the zero root first: x^k | p.
  int val = 0;
  while (val <= p.deg() && p.coeff(val).is_zero()) val++;
  if (val > 0) {
    if (iv.lo < Rational(0) && Rational(0) < iv.hi) return Rational(0);
    std::vector<Rational> c(p.coeffs().begin() + val, p.coeffs().end());
    p = UniPoly(std::move(c));
  }
  if (p.deg() < 1) return std::nullopt;
  if (p.deg() == 1) {
    Rational r = -p[0] / p[1];
    if (iv.lo < r && r < iv.hi) return r;
    return std::nullopt;
  }
  UniPoly zi = p.primitive_integer();
  auto dn = divisors_of(zi[0].num());   // constant term (integer poly)
  auto dl = divisors_of(zi.lc().num());
  if (!dn || !dl) return std::nullopt;
  for (const Int& a : *dn)
    for (const Int& b : *dl) {
      for (int s = 0; s < 2; s++) {
        Rational r(s ? -a : a, b);
        if (!(iv.lo < r && r < iv.hi)) continue;
        if (zi.eval(r).is_zero()) return r;
      }
    }
  return std::nullopt;
}

RealAlgebraic RealAlgebraic::from_field(std::shared_ptr<NumberField> k, const UniPoly& rep) {
  UniPoly r = k->reduce(rep);
  if (r.deg() <= 0) return RealAlgebraic(r.is_zero() ? Rational(0) : r[0]);
  RealAlgebraic v;
  v.k_ = std::move(k);
  v.rep_ = std::move(r);
  return v;
}

RealAlgebraic RealAlgebraic::from_root(const UniPoly& squarefree, const RootInterval& iv) {
  if (iv.exact()) return RealAlgebraic(iv.lo);
  if (auto r = rational_root_in(squarefree, iv)) return RealAlgebraic(*r);
  UniPoly m = squarefree.monic();
  if (m.deg() == 1) return RealAlgebraic(-m[0]);
  auto k = NumberField::make(m, iv);
  RealAlgebraic v;
  v.k_ = std::move(k);
  v.rep_ = UniPoly::x();
  return v;
}

const Rational& RealAlgebraic::rational_value() const {
  if (k_) throw Error("value is not rational");
  return q_;
}

bool RealAlgebraic::is_zero() const {
  if (!k_) return q_.is_zero();
  return k_->is_zero_elem(rep_);
}

int RealAlgebraic::sign() const {
  if (!k_) return q_.sign();
  return k_->sign_elem(rep_);
}

int alg_sign(const RealAlgebraic& a) { return a.sign(); }

int RealAlgebraic::compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (!a.k_ && !b.k_) return a.q_ < b.q_ ? -1 : (a.q_ == b.q_ ? 0 : 1);
  return (a - b).sign();
}

RealAlgebraic RealAlgebraic::operator-() const {
  if (!k_) return RealAlgebraic(-q_);
  return from_field(k_, -rep_);
}

RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (!a.k_ && !b.k_) return RealAlgebraic(a.q_ + b.q_);
  if (!a.k_) return b + a;
  if (!b.k_) return RealAlgebraic::from_field(a.k_, a.rep_ + UniPoly::constant(b.q_));
  if (a.k_ == b.k_) return RealAlgebraic::from_field(a.k_, a.rep_ + b.rep_);
  return alg_op(a, b, AlgOp::Add);
}

RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b) { return a + (-b); }

RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (!a.k_ && !b.k_) return RealAlgebraic(a.q_ * b.q_);
  if (!a.k_) return b * a;
  if (!b.k_) return RealAlgebraic::from_field(a.k_, a.rep_ * UniPoly::constant(b.q_));
  if (a.k_ == b.k_) return RealAlgebraic::from_field(a.k_, a.rep_ * b.rep_);
  return alg_op(a, b, AlgOp::Mul);
}

RealAlgebraic RealAlgebraic::inv() const {
  if (!k_) return RealAlgebraic(q_.inv());
  return from_field(k_, k_->invert_elem(rep_));
}

RealAlgebraic operator/(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (b.is_zero()) throw Error("division by zero algebraic number");
  return a * b.inv();
}

RealAlgebraic RealAlgebraic::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  RealAlgebraic r(Rational(1));
  RealAlgebraic b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

RealAlgebraic::Flat RealAlgebraic::flat() const {
  if (!k_) {
    // x - q with the exact point interval.
    return {UniPoly({-q_, Rational(1)}), {q_, q_}};
  }
  // Norm container: Res_A(M0(A), x - rep(A)), a polynomial in x whose roots
  // are rep evaluated at every root of M0; ours is among them.  Built from
  // the immutable original modulus so the container is a pure function of
  // the value's construction, not of refinement history.
  const UniPoly& m = k_->original_modulus();
  std::vector<UniPoly> acoeffs(static_cast<size_t>(rep_.deg()) + 1);
  acoeffs[0] = UniPoly({-rep_.coeff(0), Rational(1)});  // x - rep_0
  for (int j = 1; j <= rep_.deg(); j++) acoeffs[j] = UniPoly::constant(-rep_.coeff(j));
  BiPoly lin(std::move(acoeffs));
  std::vector<UniPoly> mcoeffs(static_cast<size_t>(m.deg()) + 1);
  for (int j = 0; j <= m.deg(); j++) mcoeffs[j] = UniPoly::constant(m.coeff(j));
  BiPoly mm(std::move(mcoeffs));
  UniPoly norm = resultant_y(mm, lin);
  UniPoly nsf = norm.squarefree_part().monic();
  // Isolate our value among nsf's roots by shrinking the alpha interval.
  // The pristine candidate is returned (not a refined copy): the winning
  // index is value-determined and the candidate list is a pure function of
  // nsf, so the result never depends on how much refining the race took.
  const auto pristine = isolate_real_roots(nsf);
  auto cands = pristine;
  Rational w = Rational(1);
  for (int guard = 0; guard < 100000; guard++) {
    QInterval j = k_->enclose_elem(rep_, w);
    std::vector<size_t> hits;
    for (size_t i = 0; i < cands.size(); i++) {
      if (!(cands[i].hi < j.lo || j.hi < cands[i].lo)) hits.push_back(i);
    }
    if (hits.size() == 1) return {nsf, pristine[hits[0]]};
    for (size_t i : hits)
      if (!cands[i].exact()) cands[i] = refine_root(nsf, cands[i]);
    w = w / Rational(2);
  }
  throw Error("flat isolation did not converge");
}

std::optional<Rational> RealAlgebraic::as_rational() const {
  if (!k_) return q_;
  if (rep_.deg() <= 0) return rep_.is_zero() ? Rational(0) : rep_[0];
  Flat f = flat();
  return rational_root_in(f.minpoly, f.iv);
}

QInterval RealAlgebraic::enclose(const Rational& w) const {
  if (!k_) return QInterval::point(q_);
  return k_->enclose_elem(rep_, w);
}

double RealAlgebraic::approx() const {
  return enclose(Rational(1, 1000000000L)).mid().to_double();
}

RealAlgebraic::Flat RealAlgebraic::canonical_flat() const {
  Flat f = flat();
  if (f.iv.exact()) return {UniPoly({-f.iv.lo, Rational(1)}).primitive_integer(), f.iv};
  // Strip rational roots other than the value itself; the value, if
  // rational, would have been demoted by as_rational at print time.
  UniPoly p = f.minpoly;
  RootInterval mine = f.iv;
  bool changed = true;
  while (changed && p.deg() > 1) {
    changed = false;
    auto roots = isolate_real_roots(p);
    for (const auto& r : roots) {
      auto q = rational_root_in(p, r);
      if (!q) continue;
      if (mine.lo < *q && *q < mine.hi) continue;  // that's us; keep it
      p = p.div_exact(UniPoly({-*q, Rational(1)}));
      changed = true;
      break;
    }
  }
  UniPoly canon = p.primitive_integer();
  // Re-isolate canonically so the printed interval is a pure function of the
  // polynomial (independent of any refinement this value went through): the
  // winner's pristine interval is returned, refined copies only arbitrate.
  const auto pristine = isolate_real_roots(canon);
  auto cands = pristine;
  RootInterval cur = mine;
  for (int guard = 0; guard < 100000; guard++) {
    std::vector<size_t> hits;
    for (size_t i = 0; i < cands.size(); i++) {
      if (!(cands[i].hi < cur.lo || cur.hi < cands[i].lo)) hits.push_back(i);
    }
    if (hits.size() == 1) return {canon, pristine[hits[0]]};
    for (size_t i : hits)
      if (!cands[i].exact()) cands[i] = refine_root(canon, cands[i]);
    if (!cur.exact()) cur = refine_root(p, cur);
  }
  throw Error("canonical isolation did not converge");
}

std::string RealAlgebraic::str() const {
  if (auto r = as_rational()) return r->str();
  Flat c = canonical_flat();
  return "root(" + c.minpoly.str("A") + ", [" + c.iv.lo.str() + ", " + c.iv.hi.str() + "])";
}

// ---- resultant-based arithmetic ----------------------------------------------

namespace {

// Build the BiPoly (in the eliminated variable y, coefficients in Q[x]) whose
// resultant with A(y) has roots {a op b}: B(x - y) for addition, y^db*B(x/y)
// for multiplication.
BiPoly addition_kernel(const UniPoly& b) {
  // B(x - y) as a polynomial in y: Horner at the linear BiPoly x - y.
  BiPoly arg({UniPoly::x(), UniPoly::constant(Rational(-1))});
  BiPoly r;
  for (int i = b.deg(); i >= 0; i--)
    r = r * arg + BiPoly::constant(UniPoly::constant(b.coeff(i)));
  return r;
}

BiPoly multiplication_kernel(const UniPoly& b) {
  int d = b.deg();
  std::vector<UniPoly> c(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; j++) c[d - j] = UniPoly::monomial(b.coeff(j), j);
  return BiPoly(std::move(c));
}

UniPoly strip_zero_root(UniPoly p) {
  while (!p.is_zero() && p.coeff(0).is_zero()) {
    std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = UniPoly(std::move(c));
  }
  return p;
}

}  // namespace

RealAlgebraic alg_op(const RealAlgebraic& a, const RealAlgebraic& b, AlgOp op) {
  switch (op) {
    case AlgOp::Sub:
      return alg_op(a, -b, AlgOp::Add);
    case AlgOp::Div:
      if (b.is_zero()) throw Error("division by zero algebraic number");
      return alg_op(a, b.inv(), AlgOp::Mul);
    default:
      break;
  }
  if (a.is_rational() && b.is_rational()) {
    return op == AlgOp::Add ? RealAlgebraic(a.rational_value() + b.rational_value())
                            : RealAlgebraic(a.rational_value() * b.rational_value());
  }
  if (op == AlgOp::Mul && (a.is_zero() || b.is_zero())) return RealAlgebraic(Rational(0));

  RealAlgebraic::Flat fa = a.flat();
  RealAlgebraic::Flat fb = b.flat();
  UniPoly A = fa.minpoly, B = fb.minpoly;
  BiPoly kernel;
  if (op == AlgOp::Add) {
    // Res_y(A(y), B(x - y)) has roots a_i + b_j.
    kernel = addition_kernel(B);
  } else {
    // Res_y(A(y), y^db B(x/y)) has roots a_i * b_j, valid once A has no
    // zero root (ours is nonzero on the Mul path after the checks above;
    // strip any extraneous zero root from the container).
    A = strip_zero_root(A);
    if (A.deg() == 0) throw Error("internal: empty container after strip");
    kernel = multiplication_kernel(B);
  }
  std::vector<UniPoly> acoeffs(static_cast<size_t>(A.deg()) + 1);
  for (int j = 0; j <= A.deg(); j++) acoeffs[j] = UniPoly::constant(A.coeff(j));
  UniPoly cpoly = resultant_y(BiPoly(std::move(acoeffs)), kernel);
  if (cpoly.is_zero()) throw Error("internal: zero resultant in alg_op");
  UniPoly csf = cpoly.squarefree_part().monic();
  auto cands = isolate_real_roots(csf);
  // Shrink operand enclosures until the combined interval meets exactly one
  // candidate.
  Rational w(1, 4);
  for (int guard = 0; guard < 100000; guard++) {
    QInterval ja = a.enclose(w);
    QInterval jb = b.enclose(w);
    QInterval j = (op == AlgOp::Add) ? ja + jb : ja * jb;
    std::vector<size_t> hits;
    for (size_t i = 0; i < cands.size(); i++) {
      if (!(cands[i].hi < j.lo || j.hi < cands[i].lo)) hits.push_back(i);
    }
    if (hits.size() == 1) return RealAlgebraic::from_root(csf, cands[hits[0]]);
    if (hits.empty()) throw Error("internal: lost root in alg_op isolation");
    for (size_t i : hits) cands[i] = refine_root(csf, cands[i]);
    w = w / Rational(2);
  }
  throw Error("alg_op isolation did not converge");
}

}  // namespace arclift
