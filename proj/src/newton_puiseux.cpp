#include "arclift/newton_puiseux.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace arclift {

namespace {

// ---------- KPoly helpers ----------

int kp_ord(const KPoly& p) {
  const auto& c = p.coeffs();
  for (size_t i = 0; i < c.size(); i++)
    if (!c[i].is_zero()) return static_cast<int>(i);
  throw Error("internal: valuation of the zero polynomial");
}

PuiseuxSeries kp_to_series(const KPoly& p) {
  std::vector<PuiseuxSeries::Term> t;
  const auto& c = p.coeffs();
  for (size_t i = 0; i < c.size(); i++)
    if (!c[i].is_zero()) t.push_back({Rational(static_cast<long>(i)), c[i]});
  return PuiseuxSeries(std::move(t), std::nullopt);
}

// ---------- KYPoly (polynomial in Y over K[u]) helpers ----------

void kynorm(KYPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int kydeg(const KYPoly& a) { return static_cast<int>(a.size()) - 1; }

KYPoly kyderiv(const KYPoly& a) {
  KYPoly d;
  for (size_t j = 1; j < a.size(); j++)
    d.push_back(a[j].scale(RealAlgebraic(Rational(static_cast<long>(j)))));
  kynorm(d);
  return d;
}

KPoly kycontent(const KYPoly& a) {
  KPoly g;
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : KPoly::gcd(g, c);
    if (g.deg() == 0) break;
  }
  return g;
}

KYPoly kyprimitive(KYPoly a) {
  kynorm(a);
  if (a.empty()) return a;
  KPoly ct = kycontent(a);
  if (ct.deg() <= 0) return a;
  for (auto& c : a) {
    if (c.is_zero()) continue;
    auto [q, r] = c.divmod(ct);
    if (!r.is_zero()) throw Error("internal: content division left a remainder");
    c = q;
  }
  return a;
}

// Pseudo-remainder of a by d with respect to Y (d nonzero).
KYPoly kyprem(KYPoly a, const KYPoly& d) {
  const int m = kydeg(d);
  const KPoly& ld = d.back();
  kynorm(a);
  while (!a.empty() && kydeg(a) >= m) {
    const int n = kydeg(a);
    const int k = n - m;
    KPoly la = a.back();
    KYPoly t(a.size());
    for (size_t i = 0; i < a.size(); i++) t[i] = a[i] * ld;
    for (int i = 0; i <= m; i++) t[i + k] = t[i + k] - d[i] * la;
    kynorm(t);
    if (!t.empty() && kydeg(t) >= n)
      throw Error("internal: pseudo-division failed to reduce the degree");
    a = std::move(t);
  }
  return a;
}

// Primitive part of a/d, valid when d divides a over the fraction field
// K(u).  Unit and content factors carry no branch information and are
// normalized away.
KYPoly kyquot_primitive(KYPoly a, const KYPoly& d) {
  kynorm(a);
  const int m = kydeg(d);
  if (m < 0) throw Error("internal: division by the zero polynomial");
  const KPoly& ld = d.back();
  KYPoly q(static_cast<size_t>(std::max(0, kydeg(a) - m + 1)));
  while (!a.empty() && kydeg(a) >= m) {
    const int n = kydeg(a);
    const int k = n - m;
    KPoly la = a.back();
    for (auto& qq : q) qq = qq * ld;
    q[k] = q[k] + la;
    KYPoly t(a.size());
    for (size_t i = 0; i < a.size(); i++) t[i] = a[i] * ld;
    for (int i = 0; i <= m; i++) t[i + k] = t[i + k] - d[i] * la;
    kynorm(t);
    if (!t.empty() && kydeg(t) >= n)
      throw Error("internal: pseudo-division failed to reduce the degree");
    a = std::move(t);
  }
  if (!a.empty()) throw Error("internal: inexact polynomial division");
  kynorm(q);
  return kyprimitive(std::move(q));
}

KYPoly kygcd(KYPoly a, KYPoly b) {
  a = kyprimitive(std::move(a));
  b = kyprimitive(std::move(b));
  if (kydeg(a) < kydeg(b)) std::swap(a, b);
  while (!b.empty()) {
    KYPoly r = kyprem(a, b);
    a = std::move(b);
    b = kyprimitive(std::move(r));
  }
  return a;
}

std::pair<KYPoly, bool> kysquarefree(KYPoly a) {
  kynorm(a);
  if (kydeg(a) <= 1) return {std::move(a), false};
  KYPoly g = kygcd(a, kyderiv(a));
  if (kydeg(g) <= 0) return {std::move(a), false};
  return {kyquot_primitive(std::move(a), g), true};
}

KYPoly to_ky(const BiPoly& f) {
  KYPoly g;
  for (int j = 0; j <= f.deg_y(); j++) g.push_back(KPoly::from_unipoly(f.coeff(j)));
  kynorm(g);
  return g;
}

// ---------- expansion ----------

struct Node {
  KYPoly g;                // current relation in (u, Y'), u = t^(1/e)
  long e;                  // ramification accumulated so far
  Rational last_exp;       // original-t exponent of the last prefix term
  std::vector<PuiseuxSeries::Term> prefix;  // branch terms found so far
  int depth;
  int budget;              // remaining tower extensions on this path
};

struct Ctx {
  KYPoly original;         // residuals are measured against this
  Rational target;
  int cap = 3;
  long steps = 0;
  long step_cap = 200000;
  int max_used = 0;
  std::vector<Branch> out;
};

bool series_negative_order(const PuiseuxSeries& s) {
  SeriesOrd o = s.ord();
  return o.known() && o.q.sign() < 0;
}

void expand(Ctx& ctx, Node nd) {
  if (++ctx.steps > ctx.step_cap)
    throw Error("branch expansion did not stabilize within its step budget");
  kynorm(nd.g);
  if (nd.g.empty()) throw Error("internal: zero polynomial during expansion");

  // Strip the u-content monomial: u = t^(1/e) is nonzero for t > 0, so a
  // common u-power carries no branch information.
  {
    int m = std::numeric_limits<int>::max();
    for (const auto& c : nd.g)
      if (!c.is_zero()) m = std::min(m, kp_ord(c));
    if (m > 0) {
      for (auto& c : nd.g) {
        if (c.is_zero()) continue;
        const auto& cc = c.coeffs();
        c = KPoly(std::vector<RealAlgebraic>(cc.begin() + m, cc.end()));
      }
    }
  }

  // Y' = 0 solves the node exactly: the prefix is a complete branch.
  {
    size_t ym = 0;
    while (ym < nd.g.size() && nd.g[ym].is_zero()) ym++;
    if (ym == nd.g.size()) throw Error("internal: zero polynomial during expansion");
    if (ym > 0) {
      PuiseuxSeries s(nd.prefix, std::nullopt);
      PuiseuxSeries resid = series_substitute_k(ctx.original, s);
      if (!resid.is_exactly_zero())
        throw Error("internal: exact branch failed back-substitution");
      ctx.out.push_back({s, std::nullopt, series_negative_order(s)});
      nd.g.erase(nd.g.begin(), nd.g.begin() + static_cast<long>(ym));
      if (kydeg(nd.g) <= 0) return;  // no other branch passes through here
    }
  }

  // Precision stop: if this node provably has a unique continuation (one
  // linear polygon edge) and both the residual order and the next unknown
  // exponent have reached the target, emit the truncated branch.
  if (nd.depth > 0) {
    const long r0 = kp_ord(nd.g[0]);
    if (nd.g.size() >= 2 && !nd.g[1].is_zero()) {
      const long v1 = kp_ord(nd.g[1]);
      const long mu = r0 - v1;
      if (mu > 0) {
        bool regular = true;
        for (size_t j = 2; j < nd.g.size(); j++) {
          if (nd.g[j].is_zero()) continue;
          if (kp_ord(nd.g[j]) + static_cast<long>(j) * mu <= r0) {
            regular = false;
            break;
          }
        }
        if (regular) {
          Rational theta_next = nd.last_exp + Rational(mu, nd.e);
          if (theta_next >= ctx.target) {
            PuiseuxSeries s(nd.prefix, std::nullopt);
            PuiseuxSeries resid = series_substitute_k(ctx.original, s);
            if (resid.is_exactly_zero()) {
              ctx.out.push_back({s, std::nullopt, series_negative_order(s)});
              return;
            }
            Rational rt = resid.ord().lower();
            if (rt >= ctx.target) {
              PuiseuxSeries st(nd.prefix, theta_next);
              const bool neg = series_negative_order(st);
              ctx.out.push_back({std::move(st), std::move(rt), neg});
              return;
            }
          }
        }
      }
    }
  }

  // Newton polygon: lower hull of the valuation points (j, ord_u g_j).
  std::vector<std::pair<long, long>> pts;
  for (size_t j = 0; j < nd.g.size(); j++)
    if (!nd.g[j].is_zero()) pts.push_back({static_cast<long>(j), kp_ord(nd.g[j])});
  std::vector<std::pair<long, long>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // pop b when it is on or above the segment a--p
      long long cr = static_cast<long long>(b.first - a.first) * (p.second - a.second) -
                     static_cast<long long>(b.second - a.second) * (p.first - a.first);
      if (cr <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  const int d = kydeg(nd.g);
  for (size_t ei = 0; ei + 1 < hull.size(); ei++) {
    const long j1 = hull[ei].first, w1 = hull[ei].second;
    const long j2 = hull[ei + 1].first, w2 = hull[ei + 1].second;
    const long num = w1 - w2, den = j2 - j1;
    const long g_ = std::gcd(std::abs(num), den);
    const long p = num / g_, q = den / g_;
    // mu = p/q is the candidate leading exponent in u-units; past the first
    // term only strictly positive corrections continue a branch.
    if (nd.depth > 0 && p <= 0) continue;

    // Characteristic polynomial of the edge, with the C-valuation divided
    // out (its constant and leading coefficients are hull vertices, hence
    // nonzero, so 0 is never a root).
    std::vector<RealAlgebraic> chi(static_cast<size_t>(j2 - j1 + 1), RealAlgebraic(Rational(0)));
    for (long j = j1; j <= j2; j++) {
      if (j >= static_cast<long>(nd.g.size()) || nd.g[j].is_zero()) continue;
      const long delta = j - j1;
      if (delta % q) continue;
      const long nu = w1 - p * (delta / q);
      if (nu < 0 || nu > nd.g[j].deg()) continue;
      chi[static_cast<size_t>(delta)] = nd.g[j].coeff(static_cast<int>(nu));
    }
    KPoly chik((std::vector<RealAlgebraic>(chi)));

    for (const auto& rt : real_roots_of(chik)) {
      const int nb = nd.budget - rt.tower_growth;
      if (nb < 0)
        throw Error("coefficient tower depth exceeded (cap " + std::to_string(ctx.cap) + ")");
      ctx.max_used = std::max(ctx.max_used, ctx.cap - nb);

      // Migrate the node polynomial into the root's field.
      KYPoly gm(nd.g.size());
      for (size_t j = 0; j < nd.g.size(); j++)
        gm[j] = nd.g[j].is_zero() ? KPoly() : nd.g[j].map(rt.embed);
      const RealAlgebraic& c = rt.root;

      // Substitute Y = v^p (c + Y'), u = v^q, and divide by v^W.
      long w_min = std::numeric_limits<long>::max();
      for (size_t j = 0; j < gm.size(); j++)
        if (!gm[j].is_zero())
          w_min = std::min(w_min, q * kp_ord(gm[j]) + p * static_cast<long>(j));

      std::vector<RealAlgebraic> cpow(static_cast<size_t>(d) + 1);
      cpow[0] = RealAlgebraic(Rational(1));
      for (int k = 1; k <= d; k++) cpow[k] = cpow[k - 1] * c;
      std::vector<std::vector<Int>> bin(static_cast<size_t>(d) + 1);
      for (int j = 0; j <= d; j++) {
        bin[j].assign(static_cast<size_t>(j) + 1, Int(1));
        for (int i = 1; i < j; i++) bin[j][i] = bin[j - 1][i - 1] + bin[j - 1][i];
      }
      std::vector<std::vector<RealAlgebraic>> mult(static_cast<size_t>(d) + 1);
      for (int j = 0; j <= d; j++) {
        mult[j].resize(static_cast<size_t>(j) + 1);
        for (int i = 0; i <= j; i++)
          mult[j][i] = RealAlgebraic(Rational(bin[j][i])) * cpow[j - i];
      }

      std::vector<std::vector<RealAlgebraic>> rows(static_cast<size_t>(d) + 1);
      for (size_t j = 0; j < gm.size(); j++) {
        if (gm[j].is_zero()) continue;
        const auto& cc = gm[j].coeffs();
        for (size_t a = 0; a < cc.size(); a++) {
          if (cc[a].is_zero()) continue;
          const long ex = q * static_cast<long>(a) + p * static_cast<long>(j) - w_min;
          for (size_t i = 0; i <= j; i++) {
            auto& row = rows[i];
            if (row.size() <= static_cast<size_t>(ex))
              row.resize(static_cast<size_t>(ex) + 1, RealAlgebraic(Rational(0)));
            row[static_cast<size_t>(ex)] = row[static_cast<size_t>(ex)] + mult[j][i] * cc[a];
          }
        }
      }
      KYPoly h(rows.size());
      for (size_t i = 0; i < rows.size(); i++) h[i] = KPoly(std::move(rows[i]));
      kynorm(h);

      if (nd.e > (1L << 40) / std::max(q, 1L))
        throw Error("ramification index overflow during expansion");
      const long e2 = nd.e * q;
      Rational x2 = nd.last_exp + Rational(p, e2);
      auto prefix2 = nd.prefix;
      prefix2.push_back({x2, c});
      expand(ctx, Node{std::move(h), e2, std::move(x2), std::move(prefix2),
                       nd.depth + 1, nb});
    }
  }
}

// Deterministic output order: by series order, then term-by-term comparison.
bool branch_less(const Branch& x, const Branch& y) {
  const PuiseuxSeries& a = x.series;
  const PuiseuxSeries& b = y.series;
  SeriesOrd oa = a.ord(), ob = b.ord();
  const bool ia = oa.kind == SeriesOrd::Kind::PlusInf;
  const bool ib = ob.kind == SeriesOrd::Kind::PlusInf;
  if (ia != ib) return ib;  // exact zero sorts last
  if (!ia) {
    if (oa.lower() != ob.lower()) return oa.lower() < ob.lower();
  }
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (size_t i = 0; i < std::min(ta.size(), tb.size()); i++) {
    if (ta[i].first != tb[i].first) return ta[i].first < tb[i].first;
    int c = RealAlgebraic::compare(ta[i].second, tb[i].second);
    if (c != 0) return c < 0;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size();
  if (a.exact() != b.exact()) return a.exact();
  if (!a.exact() && *a.trunc() != *b.trunc()) return *a.trunc() < *b.trunc();
  return false;
}

BranchSet run_engine(KYPoly g, KYPoly original, bool reduced, const NewtonOptions& opt) {
  const int degy = kydeg(g);
  Ctx ctx;
  ctx.original = std::move(original);
  ctx.target = opt.target_order;
  ctx.cap = opt.tower_cap;
  expand(ctx, Node{std::move(g), 1, Rational(0), {}, 0, opt.tower_cap});
  std::sort(ctx.out.begin(), ctx.out.end(), branch_less);
  if (static_cast<int>(ctx.out.size()) > degy)
    throw Error("internal: more branches than the Y-degree admits");
  return {std::move(ctx.out), reduced, ctx.max_used};
}

}  // namespace

PuiseuxSeries series_substitute_k(const KYPoly& f, const PuiseuxSeries& y) {
  PuiseuxSeries acc;  // exact zero
  for (size_t jj = f.size(); jj-- > 0;) acc = acc * y + kp_to_series(f[jj]);
  return acc;
}

PuiseuxSeries series_substitute(const BiPoly& f, const PuiseuxSeries& y) {
  return series_substitute_k(to_ky(f), y);
}

BranchSet newton_puiseux(const BiPoly& f, const NewtonOptions& opt) {
  if (f.is_zero()) throw Error("branch expansion of the zero polynomial");
  if (f.deg_y() <= 0) return {{}, false, 0};
  auto [sf, reduced] = f.primitive_part().squarefree_y();
  KYPoly g = to_ky(sf);
  if (kydeg(g) <= 0) return {{}, reduced, 0};
  return run_engine(std::move(g), to_ky(f), reduced, opt);
}

BranchSet newton_puiseux_k(const KYPoly& f, const NewtonOptions& opt) {
  KYPoly g = f;
  kynorm(g);
  if (g.empty()) throw Error("branch expansion of the zero polynomial");
  KYPoly orig = g;
  if (kydeg(g) <= 0) return {{}, false, 0};
  auto [sf, reduced] = kysquarefree(std::move(g));
  if (kydeg(sf) <= 0) return {std::vector<Branch>{}, reduced, 0};
  return run_engine(std::move(sf), std::move(orig), reduced, opt);
}

}  // namespace arclift
