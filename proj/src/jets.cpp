#include "germlab/jets.hpp"

#include <cmath>
#include <string>

#include "germlab/linear.hpp"

namespace germlab {

namespace {

template <class S>
bool exactly_zero(const S& x) {
  if constexpr (scalar_traits<S>::exact) {
    return x.is_zero();
  } else {
    return x == 0.0;
  }
}

// Homogeneous-part arithmetic shared by the graded recurrences below.
template <class J>
struct graded;

template <class S>
struct graded<Jet1<S>> {
  static void add_product(Jet1<S>& out, const Jet1<S>& a, int na, const Jet1<S>& b, int nb, const S& f) {
    out[na + nb] += f * a[na] * b[nb];
  }
  static void add_part(Jet1<S>& out, const Jet1<S>& a, int n, const S& f) { out[n] += f * a[n]; }
  static void scale_part(Jet1<S>& out, int n, const S& f) { out[n] *= f; }
  static const S& constant(const Jet1<S>& a) { return a[0]; }
  static void set_constant(Jet1<S>& a, const S& c) { a[0] = c; }
};

template <class S>
struct graded<Jet2<S>> {
  static std::size_t start(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }
  static void add_product(Jet2<S>& out, const Jet2<S>& a, int na, const Jet2<S>& b, int nb, const S& f) {
    const std::size_t sa = start(na), sb = start(nb), so = start(na + nb);
    for (int ja = 0; ja <= na; ++ja) {
      const S& av = a.at(sa + ja);
      if (exactly_zero(av)) continue;
      const S fa = f * av;
      for (int jb = 0; jb <= nb; ++jb) {
        const S& bv = b.at(sb + jb);
        if (exactly_zero(bv)) continue;
        out.at(so + ja + jb) += fa * bv;
      }
    }
  }
  static void add_part(Jet2<S>& out, const Jet2<S>& a, int n, const S& f) {
    const std::size_t s = start(n);
    for (int j = 0; j <= n; ++j) out.at(s + j) += f * a.at(s + j);
  }
  static void scale_part(Jet2<S>& out, int n, const S& f) {
    const std::size_t s = start(n);
    for (int j = 0; j <= n; ++j) out.at(s + j) *= f;
  }
  static const S& constant(const Jet2<S>& a) { return a.at(0); }
  static void set_constant(Jet2<S>& a, const S& c) { a.at(0) = c; }
};

template <class J>
J reciprocal_graded(const J& a, double tol) {
  using S = typename J::scalar_type;
  using G = graded<J>;
  const S& a0 = G::constant(a);
  if (is_zero(a0, tol)) throw Error(ErrorKind::NonUnitDivisor, "divisor has zero constant term");
  const S inv = S(1) / a0;
  J r(a.degree());
  G::set_constant(r, inv);
  for (int k = 1; k <= a.degree(); ++k) {
    for (int j = 1; j <= k; ++j) G::add_product(r, a, j, r, k - j, S(-1));
    G::scale_part(r, k, inv);
  }
  return r;
}

template <class J>
J rpow_graded(const J& a, const Rational& p) {
  using S = typename J::scalar_type;
  using G = graded<J>;
  const S& a0 = G::constant(a);
  if (!(a0 > 0) || is_zero(a0)) throw Error(ErrorKind::NonPositiveConstantTerm, "real power of a non-unit or negative series");
  const S ps = from_rational<S>(p);
  J c(a.degree());
  G::set_constant(c, rational_power(a0, p));
  for (int k = 1; k <= a.degree(); ++k) {
    for (int j = 1; j <= k; ++j) G::add_product(c, a, j, c, k - j, ps * S(j) - S(k - j));
    G::scale_part(c, k, S(1) / (S(k) * a0));
  }
  return c;
}

template <class J>
J exp_graded(const J& a) {
  using S = typename J::scalar_type;
  using G = graded<J>;
  const S& a0 = G::constant(a);
  J c(a.degree());
  if constexpr (scalar_traits<S>::exact) {
    if (!a0.is_zero()) throw Error(ErrorKind::NotExactRoot, "exp of a nonzero rational constant is irrational");
    G::set_constant(c, S(1));
  } else {
    G::set_constant(c, std::exp(a0));
  }
  for (int k = 1; k <= a.degree(); ++k) {
    for (int j = 1; j <= k; ++j) G::add_product(c, a, j, c, k - j, S(j));
    G::scale_part(c, k, S(1) / S(k));
  }
  return c;
}

template <class J>
J log_graded(const J& a) {
  using S = typename J::scalar_type;
  using G = graded<J>;
  const S& a0 = G::constant(a);
  if (!(a0 > 0) || is_zero(a0)) throw Error(ErrorKind::NonPositiveConstantTerm, "log of a series with non-positive constant term");
  J c(a.degree());
  if constexpr (scalar_traits<S>::exact) {
    if (a0 != 1) throw Error(ErrorKind::NotExactRoot, "log of a rational constant other than 1 is irrational");
    G::set_constant(c, S(0));
  } else {
    G::set_constant(c, std::log(a0));
  }
  for (int k = 1; k <= a.degree(); ++k) {
    G::add_part(c, a, k, S(k));
    for (int j = 1; j < k; ++j) G::add_product(c, c, j, a, k - j, S(-j));
    G::scale_part(c, k, S(1) / (S(k) * a0));
  }
  return c;
}

template <class J>
J power_graded(const J& a, int n) {
  using S = typename J::scalar_type;
  if (n < 0) return reciprocal(power_graded(a, -n));
  J result = J::constant(S(1), a.degree());
  J base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

template <class S>
void require_based(const S& c, const char* what) {
  if (!is_zero(c)) throw Error(ErrorKind::InnerNotBased, std::string(what) + " does not vanish at the origin");
}

// Evaluates several outer jets at the same inner pair (g, h), sharing the powers of h.
template <class S, class Inner>
class Substituter {
 public:
  Substituter(const Inner& g, const Inner& h, int degree) : g_(g.with_degree(degree)), d_(degree) {
    powers_.reserve(static_cast<std::size_t>(degree) + 1);
    powers_.push_back(Inner::constant(S(1), degree));
    const Inner hd = h.with_degree(degree);
    for (int j = 1; j <= degree; ++j) powers_.push_back(powers_.back() * hd);
  }

  Inner apply(const Jet2<S>& F) const {
    Inner r(d_);
    for (int i = d_; i >= 0; --i) {
      if (i < d_) r = r * g_;
      for (int j = 0; i + j <= d_; ++j) {
        const S& c = F(i, j);
        if (exactly_zero(c)) continue;
        accumulate(r, powers_[static_cast<std::size_t>(j)], c);
      }
    }
    return r;
  }

 private:
  static void accumulate(Inner& r, const Inner& p, const S& c) {
    if constexpr (std::is_same_v<Inner, Jet1<S>>) {
      for (int k = 0; k <= r.degree(); ++k)
        if (!exactly_zero(p[k])) r[k] += c * p[k];
    } else {
      for (std::size_t k = 0; k < r.coeffs().size(); ++k)
        if (!exactly_zero(p.at(k))) r.at(k) += c * p.at(k);
    }
  }

  Inner g_;
  int d_;
  std::vector<Inner> powers_;
};

template <class S>
Jet2<S> shifted(const Jet2<S>& a, int di, int dj) {
  Jet2<S> r(a.degree());
  for (int n = 0; n + di + dj <= a.degree(); ++n)
    for (int j = 0; j <= n; ++j) r(n - j + di, j + dj) = a(n - j, j);
  return r;
}

}  // namespace

template <class S>
Jet1<S> operator*(const Jet1<S>& a, const Jet1<S>& b) {
  const int m = std::min(a.degree(), b.degree());
  Jet1<S> r(m);
  for (int i = 0; i <= m; ++i) {
    if (exactly_zero(a[i])) continue;
    for (int j = 0; i + j <= m; ++j) {
      if (exactly_zero(b[j])) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

template <class S>
Jet2<S> operator*(const Jet2<S>& a, const Jet2<S>& b) {
  const int m = std::min(a.degree(), b.degree());
  Jet2<S> r(m);
  for (int na = 0; na <= m; ++na)
    for (int nb = 0; na + nb <= m; ++nb) graded<Jet2<S>>::add_product(r, a, na, b, nb, S(1));
  return r;
}

template <class S> Jet1<S> reciprocal(const Jet1<S>& a, double tol) { return reciprocal_graded(a, tol); }
template <class S> Jet2<S> reciprocal(const Jet2<S>& a, double tol) { return reciprocal_graded(a, tol); }
template <class S> Jet1<S> operator/(const Jet1<S>& a, const Jet1<S>& b) { return a * reciprocal(b); }
template <class S> Jet2<S> operator/(const Jet2<S>& a, const Jet2<S>& b) { return a * reciprocal(b); }
template <class S> Jet1<S> sqrt_unit(const Jet1<S>& a) { return rpow_graded(a, Rational(1, 2)); }
template <class S> Jet2<S> sqrt_unit(const Jet2<S>& a) { return rpow_graded(a, Rational(1, 2)); }
template <class S> Jet1<S> rpow_unit(const Jet1<S>& a, const Rational& p) { return rpow_graded(a, p); }
template <class S> Jet2<S> rpow_unit(const Jet2<S>& a, const Rational& p) { return rpow_graded(a, p); }
template <class S> Jet1<S> power(const Jet1<S>& a, int n) { return power_graded(a, n); }
template <class S> Jet2<S> power(const Jet2<S>& a, int n) { return power_graded(a, n); }
template <class S> Jet1<S> exp_series(const Jet1<S>& a) { return exp_graded(a); }
template <class S> Jet2<S> exp_series(const Jet2<S>& a) { return exp_graded(a); }
template <class S> Jet1<S> log_series(const Jet1<S>& a) { return log_graded(a); }
template <class S> Jet2<S> log_series(const Jet2<S>& a) { return log_graded(a); }

template <class S>
Jet1<S> derivative(const Jet1<S>& a) {
  Jet1<S> r(std::max(a.degree() - 1, 0));
  for (int k = 1; k <= a.degree(); ++k) r[k - 1] = S(k) * a[k];
  return r;
}

template <class S>
Jet2<S> partial_x(const Jet2<S>& a) {
  Jet2<S> r(std::max(a.degree() - 1, 0));
  for (int n = 1; n <= a.degree(); ++n)
    for (int j = 0; j < n; ++j) r(n - 1 - j, j) = S(n - j) * a(n - j, j);
  return r;
}

template <class S>
Jet2<S> partial_y(const Jet2<S>& a) {
  Jet2<S> r(std::max(a.degree() - 1, 0));
  for (int n = 1; n <= a.degree(); ++n)
    for (int j = 1; j <= n; ++j) r(n - j, j - 1) = S(j) * a(n - j, j);
  return r;
}

template <class S>
Jet1<S> restrict_to_x_axis(const Jet2<S>& f) {
  Jet1<S> r(f.degree());
  for (int k = 0; k <= f.degree(); ++k) r[k] = f(k, 0);
  return r;
}

template <class S>
Jet1<S> restrict_to_y_axis(const Jet2<S>& f) {
  Jet1<S> r(f.degree());
  for (int k = 0; k <= f.degree(); ++k) r[k] = f(0, k);
  return r;
}

template <class S>
Jet2<S> lift_x(const Jet1<S>& a) {
  Jet2<S> r(a.degree());
  for (int k = 0; k <= a.degree(); ++k) r(k, 0) = a[k];
  return r;
}

template <class S>
Jet2<S> lift_y(const Jet1<S>& a) {
  Jet2<S> r(a.degree());
  for (int k = 0; k <= a.degree(); ++k) r(0, k) = a[k];
  return r;
}

template <class S>
S evaluate(const Jet1<S>& a, const S& t) {
  S r = 0;
  for (int k = a.degree(); k >= 0; --k) r = r * t + a[k];
  return r;
}

template <class S>
S evaluate(const Jet2<S>& a, const S& x, const S& y) {
  S r = 0;
  for (int i = a.degree(); i >= 0; --i) {
    S inner = 0;
    for (int j = a.degree() - i; j >= 0; --j) inner = inner * y + a(i, j);
    r = r * x + inner;
  }
  return r;
}

template <class S>
S max_abs_coefficient(const Jet1<S>& a) {
  S m = 0;
  for (const auto& c : a.coeffs()) m = std::max(m, abs_value(c));
  return m;
}

template <class S>
S max_abs_coefficient(const Jet2<S>& a) {
  S m = 0;
  for (const auto& c : a.coeffs()) m = std::max(m, abs_value(c));
  return m;
}

template <class S>
int valuation(const Jet1<S>& a, double tol) {
  for (int k = 0; k <= a.degree(); ++k)
    if (!is_zero(a[k], tol)) return k;
  return -1;
}

template <class S>
int valuation(const Jet2<S>& a, double tol) {
  for (int n = 0; n <= a.degree(); ++n)
    for (int j = 0; j <= n; ++j)
      if (!is_zero(a(n - j, j), tol)) return n;
  return -1;
}

template <class S>
Jet1<S> compose(const Jet1<S>& outer, const Jet1<S>& inner) {
  require_based(inner[0], "inner series");
  const int m = std::min(outer.degree(), inner.degree());
  Jet1<S> in = inner.with_degree(m);
  in[0] = 0;
  Jet1<S> r = Jet1<S>::constant(outer[m], m);
  for (int k = m - 1; k >= 0; --k) {
    r = r * in;
    r[0] += outer[k];
  }
  return r;
}

template <class S>
Jet2<S> compose(const Jet1<S>& outer, const Jet2<S>& inner) {
  require_based(inner(0, 0), "inner series");
  const int m = std::min(outer.degree(), inner.degree());
  Jet2<S> in = inner.with_degree(m);
  in(0, 0) = 0;
  Jet2<S> r = Jet2<S>::constant(outer[m], m);
  for (int k = m - 1; k >= 0; --k) {
    r = r * in;
    r(0, 0) += outer[k];
  }
  return r;
}

template <class S>
Jet1<S> inverse(const Jet1<S>& a, double tol) {
  require_based(a[0], "series");
  if (a.degree() < 1 || is_zero(a[1], tol)) throw Error(ErrorKind::NotInvertible, "linear coefficient vanishes");
  const int d = a.degree();
  const S inv = S(1) / a[1];
  Jet1<S> w = Jet1<S>::identity(d) * inv;
  Jet1<S> base = a;
  base[0] = 0;
  for (int k = 2; k <= d; ++k) {
    const Jet1<S> r = compose(base.with_degree(k), w.with_degree(k));
    w[k] = -r[k] * inv;
  }
  return w;
}

template <class S>
Jet2<S> substitute(const Jet2<S>& F, const Jet2<S>& g, const Jet2<S>& h) {
  require_based(g(0, 0), "first inner component");
  require_based(h(0, 0), "second inner component");
  const int m = std::min({F.degree(), g.degree(), h.degree()});
  Jet2<S> g0 = g.with_degree(m), h0 = h.with_degree(m);
  g0(0, 0) = 0;
  h0(0, 0) = 0;
  return Substituter<S, Jet2<S>>(g0, h0, m).apply(F);
}

template <class S>
Jet1<S> substitute(const Jet2<S>& F, const Jet1<S>& g, const Jet1<S>& h) {
  require_based(g[0], "first inner component");
  require_based(h[0], "second inner component");
  const int m = std::min({F.degree(), g.degree(), h.degree()});
  Jet1<S> g0 = g.with_degree(m), h0 = h.with_degree(m);
  g0[0] = 0;
  h0[0] = 0;
  return Substituter<S, Jet1<S>>(g0, h0, m).apply(F);
}

template <class S>
Map2<S> identity_map(int degree) {
  return {Jet2<S>::x(degree), Jet2<S>::y(degree)};
}

template <class S>
Map2<S> with_degree(const Map2<S>& m, int degree) {
  return {m[0].with_degree(degree), m[1].with_degree(degree)};
}

template <class S>
Map2<S> compose(const Map2<S>& outer, const Map2<S>& inner) {
  require_based(inner[0](0, 0), "first inner component");
  require_based(inner[1](0, 0), "second inner component");
  const int m = std::min({outer[0].degree(), outer[1].degree(), inner[0].degree(), inner[1].degree()});
  Jet2<S> g = inner[0].with_degree(m), h = inner[1].with_degree(m);
  g(0, 0) = 0;
  h(0, 0) = 0;
  const Substituter<S, Jet2<S>> sub(g, h, m);
  return {sub.apply(outer[0]), sub.apply(outer[1])};
}

template <class S>
Jet2<S> compose(const Jet2<S>& outer, const Map2<S>& inner) {
  return substitute(outer, inner[0], inner[1]);
}

template <class S>
Curve2<S> compose(const Map2<S>& outer, const Curve2<S>& inner) {
  require_based(inner[0][0], "curve");
  require_based(inner[1][0], "curve");
  const int m = std::min({outer[0].degree(), outer[1].degree(), inner[0].degree(), inner[1].degree()});
  Jet1<S> g = inner[0].with_degree(m), h = inner[1].with_degree(m);
  g[0] = 0;
  h[0] = 0;
  const Substituter<S, Jet1<S>> sub(g, h, m);
  return {sub.apply(outer[0]), sub.apply(outer[1])};
}

template <class S>
Jet1<S> compose(const Jet2<S>& outer, const Curve2<S>& inner) {
  return substitute(outer, inner[0], inner[1]);
}

template <class S>
Map2<S> inverse(const Map2<S>& m, double tol) {
  require_based(m[0](0, 0), "map");
  require_based(m[1](0, 0), "map");
  const int d = std::min(m[0].degree(), m[1].degree());
  const Matrix2<S> L = jacobian_at_origin(m);
  const S det = L.determinant();
  if (is_zero(det, tol)) throw Error(ErrorKind::SingularAtOrigin, "Jacobian determinant vanishes at the origin");
  const Matrix2<S> Linv = L.inverse();
  // nonlinear remainder N = m - L z
  Map2<S> N = with_degree(m, d);
  for (auto& c : N) c(0, 0) = 0;
  if (d >= 1) {
    for (int r = 0; r < 2; ++r) {
      N[r](1, 0) = 0;
      N[r](0, 1) = 0;
    }
  }
  Map2<S> w = linear_map(Linv, d);
  // w = L^{-1}(z - N(w)); each sweep fixes one more degree
  for (int k = 2; k <= d; ++k) {
    const Map2<S> Nw = compose(with_degree(N, k), with_degree(w, k));
    for (int r = 0; r < 2; ++r) {
      for (int j = 0; j <= k; ++j) {
        w[r](k - j, j) = -(Linv(r, 0) * Nw[0](k - j, j) + Linv(r, 1) * Nw[1](k - j, j));
      }
    }
  }
  return w;
}

template <class S>
Division<S> weierstrass_divide(const Jet2<S>& F, const Jet2<S>& w, double tol) {
  const int d = std::min(F.degree(), w.degree());
  if (d < 2 || !is_zero(w(0, 0), tol) || !is_zero(w(1, 0), tol) || is_zero(w(2, 0), tol))
    throw Error(ErrorKind::NotXRegularOrder2, "divisor is not x-regular of order 2");
  const S b = w(0, 1);
  Jet2<S> wp = w.with_degree(d);
  wp(0, 0) = 0;
  wp(1, 0) = 0;
  wp(0, 1) = 0;  // w' = w - b y lies in the square of the maximal ideal
  const S c = wp(2, 0);

  std::vector<Jet2<S>> wpow{Jet2<S>::constant(S(1), d)};
  std::vector<S> cinv{S(1)};
  for (int i = 1; 2 * i <= d; ++i) {
    wpow.push_back(wpow.back() * wp);
    cinv.push_back(cinv.back() / c);
  }

  Jet2<S> A(d), B(d);
  Jet2<S> R = F.with_degree(d);
  for (int n = 0; n <= d; ++n) {
    for (int a = n; a >= 0; --a) {
      const S r = R(a, n - a);
      if (exactly_zero(r)) continue;
      const int i = a / 2, eps = a % 2, j = n - a;
      const S kappa = r * cinv[static_cast<std::size_t>(i)];
      (eps == 0 ? A : B)(i, j) += kappa;
      R -= shifted(wpow[static_cast<std::size_t>(i)], eps, j) * kappa;
      R(a, n - a) = 0;
    }
  }
  if (!exactly_zero(b)) {
    // A(u, v) = A'(u - b v, v)
    Jet2<S> u_shift = Jet2<S>::x(d) - Jet2<S>::y(d) * b;
    A = substitute(A, u_shift, Jet2<S>::y(d));
    B = substitute(B, u_shift, Jet2<S>::y(d));
  }
  return {A, B};
}

template <class S>
Jet1<S> implicit_solve(const Jet2<S>& delta, Axis solve_for, double tol) {
  const int d = delta.degree();
  const S q = solve_for == Axis::y ? (d >= 1 ? delta(0, 1) : S(0)) : (d >= 1 ? delta(1, 0) : S(0));
  if (!is_zero(delta(0, 0), tol) || is_zero(q, tol))
    throw Error(ErrorKind::ImplicitDegenerate, "implicit function theorem does not apply");
  Jet1<S> phi(d);
  const Jet1<S> t = Jet1<S>::identity(d);
  for (int k = 1; k <= d; ++k) {
    const Jet1<S> tk = t.with_degree(k), pk = phi.with_degree(k);
    const Jet1<S> r = solve_for == Axis::y ? substitute(delta.with_degree(k), tk, pk)
                                           : substitute(delta.with_degree(k), pk, tk);
    phi[k] = -r[k] / q;
  }
  return phi;
}

template <class S>
std::pair<Jet2<S>, Jet2<S>> split_parity_y(const Jet2<S>& F) {
  const int d = F.degree();
  Jet2<S> even(d), odd(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) (j % 2 == 0 ? even(i, j / 2) : odd(i, j / 2)) = F(i, j);
  return {even, odd};
}

template <class S>
Jet2<S> square_y(const Jet2<S>& F) {
  const int d = F.degree();
  Jet2<S> r(d);
  for (int i = 0; i <= d; ++i)
    for (int k = 0; i + 2 * k <= d; ++k) r(i, 2 * k) = F(i, k);
  return r;
}

template <class S>
Jet2<S> square_x(const Jet2<S>& F) {
  const int d = F.degree();
  Jet2<S> r(d);
  for (int j = 0; j <= d; ++j)
    for (int k = 0; j + 2 * k <= d; ++k) r(2 * k, j) = F(k, j);
  return r;
}

template <class S>
Jet2<S> quotient_by_x(const Jet2<S>& F, double tol) {
  const int d = F.degree();
  Jet2<S> r(d);
  for (int n = 0; n <= d; ++n) {
    if (!is_zero(F(0, n), tol)) throw Error(ErrorKind::NonUnitDivisor, "series is not divisible by x");
    for (int i = 1; i <= n; ++i) r(i - 1, n - i) = F(i, n - i);
  }
  return r;
}

template <class S>
Jet2<S> quotient_by_y(const Jet2<S>& F, double tol) {
  const int d = F.degree();
  Jet2<S> r(d);
  for (int n = 0; n <= d; ++n) {
    if (!is_zero(F(n, 0), tol)) throw Error(ErrorKind::NonUnitDivisor, "series is not divisible by y");
    for (int j = 1; j <= n; ++j) r(n - j, j - 1) = F(n - j, j);
  }
  return r;
}

template <class S>
Jet1<S> quotient_by_t(const Jet1<S>& a, double tol) {
  if (!is_zero(a[0], tol)) throw Error(ErrorKind::NonUnitDivisor, "series is not divisible by t");
  Jet1<S> r(a.degree());
  for (int k = 1; k <= a.degree(); ++k) r[k - 1] = a[k];
  return r;
}

#define GERMLAB_JETS_INSTANTIATE(S)                                                    \
  template Jet1<S> operator*(const Jet1<S>&, const Jet1<S>&);                          \
  template Jet2<S> operator*(const Jet2<S>&, const Jet2<S>&);                          \
  template Jet1<S> reciprocal(const Jet1<S>&, double);                                 \
  template Jet2<S> reciprocal(const Jet2<S>&, double);                                 \
  template Jet1<S> operator/(const Jet1<S>&, const Jet1<S>&);                          \
  template Jet2<S> operator/(const Jet2<S>&, const Jet2<S>&);                          \
  template Jet1<S> sqrt_unit(const Jet1<S>&);                                          \
  template Jet2<S> sqrt_unit(const Jet2<S>&);                                          \
  template Jet1<S> rpow_unit(const Jet1<S>&, const Rational&);                         \
  template Jet2<S> rpow_unit(const Jet2<S>&, const Rational&);                         \
  template Jet1<S> power(const Jet1<S>&, int);                                         \
  template Jet2<S> power(const Jet2<S>&, int);                                         \
  template Jet1<S> exp_series(const Jet1<S>&);                                         \
  template Jet2<S> exp_series(const Jet2<S>&);                                         \
  template Jet1<S> log_series(const Jet1<S>&);                                         \
  template Jet2<S> log_series(const Jet2<S>&);                                         \
  template Jet1<S> derivative(const Jet1<S>&);                                         \
  template Jet2<S> partial_x(const Jet2<S>&);                                          \
  template Jet2<S> partial_y(const Jet2<S>&);                                          \
  template Jet1<S> restrict_to_x_axis(const Jet2<S>&);                                 \
  template Jet1<S> restrict_to_y_axis(const Jet2<S>&);                                 \
  template Jet2<S> lift_x(const Jet1<S>&);                                             \
  template Jet2<S> lift_y(const Jet1<S>&);                                             \
  template S evaluate(const Jet1<S>&, const S&);                                       \
  template S evaluate(const Jet2<S>&, const S&, const S&);                             \
  template S max_abs_coefficient(const Jet1<S>&);                                      \
  template S max_abs_coefficient(const Jet2<S>&);                                      \
  template int valuation(const Jet1<S>&, double);                                      \
  template int valuation(const Jet2<S>&, double);                                      \
  template Jet1<S> compose(const Jet1<S>&, const Jet1<S>&);                            \
  template Jet2<S> compose(const Jet1<S>&, const Jet2<S>&);                            \
  template Jet1<S> inverse(const Jet1<S>&, double);                                    \
  template Jet2<S> substitute(const Jet2<S>&, const Jet2<S>&, const Jet2<S>&);         \
  template Jet1<S> substitute(const Jet2<S>&, const Jet1<S>&, const Jet1<S>&);         \
  template Map2<S> identity_map(int);                                                  \
  template Map2<S> with_degree(const Map2<S>&, int);                                   \
  template Map2<S> compose(const Map2<S>&, const Map2<S>&);                            \
  template Jet2<S> compose(const Jet2<S>&, const Map2<S>&);                            \
  template Curve2<S> compose(const Map2<S>&, const Curve2<S>&);                        \
  template Jet1<S> compose(const Jet2<S>&, const Curve2<S>&);                          \
  template Map2<S> inverse(const Map2<S>&, double);                                    \
  template Division<S> weierstrass_divide(const Jet2<S>&, const Jet2<S>&, double);     \
  template Jet1<S> implicit_solve(const Jet2<S>&, Axis, double);                       \
  template std::pair<Jet2<S>, Jet2<S>> split_parity_y(const Jet2<S>&);                 \
  template Jet2<S> square_y(const Jet2<S>&);                                           \
  template Jet2<S> square_x(const Jet2<S>&);                                           \
  template Jet2<S> quotient_by_x(const Jet2<S>&, double);                              \
  template Jet2<S> quotient_by_y(const Jet2<S>&, double);                              \
  template Jet1<S> quotient_by_t(const Jet1<S>&, double);

GERMLAB_JETS_INSTANTIATE(Rational)
GERMLAB_JETS_INSTANTIATE(double)

}  // namespace germlab
