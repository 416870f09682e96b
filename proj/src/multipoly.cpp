#include "arclift/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace arclift {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.t_[Expo(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::var(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error("variable index out of range");
  MultiPoly p(nvars);
  Expo e(nvars, 0);
  e[i] = 1;
  p.t_[e] = Rational(1);
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, Expo e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars) throw Error("exponent arity mismatch");
  MultiPoly p(nvars);
  if (!c.is_zero()) p.t_[std::move(e)] = c;
  return p;
}

Rational MultiPoly::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (!is_constant()) throw Error("polynomial is not constant");
  return t_.begin()->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    d = std::max(d, s);
  }
  return d;
}

void MultiPoly::add_term_(const Expo& e, const Rational& c) {
  auto it = t_.find(e);
  if (it == t_.end()) {
    if (!c.is_zero()) t_[e] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(n_);
  for (const auto& [e, c] : t_) p.t_[e] = -c;
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw Error("polynomial arity mismatch");
  MultiPoly p = a;
  for (const auto& [e, c] : b.t_) p.add_term_(e, c);
  return p;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw Error("polynomial arity mismatch");
  MultiPoly p(a.n_);
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      MultiPoly::Expo e(a.n_);
      for (int i = 0; i < a.n_; i++) e[i] = ea[i] + eb[i];
      p.add_term_(e, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  MultiPoly p(n_);
  if (s.is_zero()) return p;
  for (const auto& [e, c] : t_) p.t_[e] = c * s;
  return p;
}

MultiPoly MultiPoly::pow(long e) const {
  if (e < 0) throw Error("negative power of a polynomial");
  MultiPoly r = MultiPoly::constant(n_, Rational(1));
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& pt) const {
  if (static_cast<int>(pt.size()) != n_) throw Error("evaluation arity mismatch");
  Rational acc(0);
  for (const auto& [e, c] : t_) {
    Rational m = c;
    for (int i = 0; i < n_; i++)
      if (e[i]) m *= pt[i].pow(e[i]);
    acc += m;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(int i) const {
  if (i < 0 || i >= n_) throw Error("variable index out of range");
  MultiPoly p(n_);
  for (const auto& [e, c] : t_) {
    if (e[i] == 0) continue;
    Expo e2 = e;
    e2[i] -= 1;
    p.add_term_(e2, c * Rational(static_cast<long>(e[i])));
  }
  return p;
}

BiPoly MultiPoly::restrict_plane(const std::vector<Rational>& x0,
                                 const std::vector<Rational>& d1,
                                 const std::vector<Rational>& d2) const {
  if (static_cast<int>(x0.size()) != n_ || static_cast<int>(d1.size()) != n_ ||
      static_cast<int>(d2.size()) != n_)
    throw Error("plane arity mismatch");
  // Substitute x_i := x0_i + s*d1_i + u*d2_i.  Work in Q[s][u]: each variable
  // becomes the linear BiPoly (x0_i + s*d1_i) + d2_i * u.
  std::vector<BiPoly> subs(n_);
  for (int i = 0; i < n_; i++) {
    UniPoly aff({x0[i], d1[i]});  // x0_i + d1_i * s
    subs[i] = BiPoly({aff, UniPoly::constant(d2[i])});
  }
  BiPoly acc;
  for (const auto& [e, c] : t_) {
    BiPoly m = BiPoly::constant(UniPoly::constant(c));
    for (int i = 0; i < n_; i++)
      for (uint32_t k = 0; k < e[i]; k++) m = m * subs[i];
    acc = acc + m;
  }
  return acc;
}

UniPoly MultiPoly::specialize_but(int keep, const std::vector<Rational>& pt) const {
  if (keep < 0 || keep >= n_) throw Error("variable index out of range");
  if (static_cast<int>(pt.size()) != n_) throw Error("specialization arity mismatch");
  UniPoly acc;
  for (const auto& [e, c] : t_) {
    Rational m = c;
    for (int i = 0; i < n_; i++)
      if (i != keep && e[i]) m *= pt[i].pow(e[i]);
    acc = acc + UniPoly::monomial(m, static_cast<int>(e[keep]));
  }
  return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& vars) const {
  if (t_.empty()) return "0";
  if (static_cast<int>(vars.size()) != n_) throw Error("variable name arity mismatch");
  // Graded lexicographic, highest first: deterministic and close to how the
  // sessions write polynomials.
  std::vector<std::pair<Expo, Rational>> terms(t_.begin(), t_.end());
  auto grade = [](const Expo& e) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    return s;
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    int ga = grade(a.first), gb = grade(b.first);
    if (ga != gb) return ga > gb;
    return a.first > b.first;  // lex descending within a grade
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool any_var = false;
    for (int i = 0; i < n_; i++) any_var = any_var || e[i] > 0;
    bool unit = (a == Rational(1));
    if (!any_var) {
      os << a.str();
      continue;
    }
    bool head = true;
    if (!unit) {
      os << a.str();
      head = false;
    }
    for (int i = 0; i < n_; i++) {
      if (!e[i]) continue;
      if (!head) os << "*";
      head = false;
      os << vars[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace arclift
