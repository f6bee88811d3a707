#include "germlab/moduli.hpp"

#include <algorithm>
#include <cmath>

#include "germlab/normal_forms.hpp"

namespace germlab {

namespace {

template <class Real>
Real abs_of(const Real& x) {
  using std::abs;
  return abs(x);
}

template <class Real>
Real log_of(const Real& x) {
  using std::log;
  return log(x);
}

template <class Real>
Real exp_of(const Real& x) {
  using std::exp;
  return exp(x);
}

template <class Real>
Real relative_eps() {
  return std::numeric_limits<Real>::epsilon() * 8;
}

template <class Real>
Real from_q(const Rational& q) {
  return detail::from_rational_value<Real>(q);
}

}  // namespace

template <class Real>
Real ModuliTriple<Real>::theta_inv(const Real& x) const {
  if (!in_image(x)) throw Error(ErrorKind::DomainExceeded, "x lies outside the image of t b(t)");
  if (x == 0) return Real(0);
  const Real& eps = b_.radius;
  const Real tol = relative_eps<Real>();
  Real s = x;
  for (int iter = 0; iter < 50; ++iter) {
    const Dual<Real> bs = evaluate<Dual<Real>>(b_.ast, {Dual<Real>{s, Real(1)}});
    const Real g = s * bs.value - x;
    const Real slope = bs.value + s * bs.slope;
    if (!(slope > 0)) break;
    const Real next = s - g / slope;
    if (abs_of(next) > eps) break;
    const bool done = abs_of(Real(next - s)) <= tol * abs_of(next);
    s = next;
    if (done) return s;
  }

  // monotone on [-eps, eps], so bisection always brackets an x in the image
  Real lo = -eps, hi = eps;
  auto g = [&](const Real& t) { return Real(t * b_(t) - x); };
  if (g(lo) > 0 || g(hi) < 0) throw Error(ErrorKind::NewtonDiverged, "root of t b(t) = x not bracketed");
  for (int iter = 0; iter < 4000 && hi - lo > tol * std::max(abs_of(lo), abs_of(hi)); ++iter) {
    const Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

template <class Real>
Real ModuliTriple<Real>::c(const Real& x) const {
  if (x == 0) return Real(1);
  return theta_inv(x) / x;
}

template <class Real>
Real ModuliTriple<Real>::sigma(const Real& x) const {
  const Real s = theta_inv(x);
  return s * s * s * s;
}

template <class Real>
ModuliTriple<Real> make_triple(const SmoothFunction1D<Real>& b, int samples) {
  if (!(b.radius > 0) || samples < 2) throw Error(ErrorKind::Domain, "need a positive radius and two samples");
  if (abs_of(Real(b(Real(0)) - 1)) > relative_eps<Real>()) throw Error(ErrorKind::Domain, "b(0) = 1 required");
  Real previous = 0, sup = 0;
  for (int i = 0; i < samples; ++i) {
    const Real t = -b.radius + 2 * b.radius * i / (samples - 1);
    const Real bt = b(t);
    if (!(bt > 0)) throw Error(ErrorKind::NotMonotone, "b must stay positive on the domain");
    const Real value = t * bt;
    if (i > 0 && !(value > previous)) throw Error(ErrorKind::NotMonotone, "t b(t) is not increasing");
    previous = value;
    // c(t b(t)) = 1 / b(t)
    sup = std::max(sup, abs_of(log_of(bt)));
  }
  return ModuliTriple<Real>(b, -b.radius * b(-b.radius), b.radius * b(b.radius), sup);
}

template <class Real>
ProductEvaluation<Real> a_product(const ModuliTriple<Real>& triple, const Real& x, const Real& target_eps) {
  if (!triple.in_image(x)) throw Error(ErrorKind::DomainExceeded, "x lies outside the image of t b(t)");
  ConvergenceReport<Real> report;
  report.sup_log_c = triple.sup_log_c();
  const Real tiny = std::numeric_limits<Real>::min();
  const Real ax = abs_of(x);

  Real sum = 0, weight = 1, point = x, decay_bound = ax;
  for (int n = 0;; ++n) {
    report.orbit.push_back(point);
    sum += weight * log_of(triple.c(point));
    report.partial_sums.push_back(sum);
    const Real next = triple.sigma(point);
    decay_bound = decay_bound * decay_bound * decay_bound;
    if (!(abs_of(next) < decay_bound) && !(next == 0 && decay_bound == 0) && !(abs_of(next) < tiny))
      report.tail_decay_holds = false;
    report.tail_bound = weight * report.sup_log_c / 3;  // sum_{k>n} 4^-k sup|log c|
    report.factors = n + 1;
    if (abs_of(next) < tiny || report.tail_bound < target_eps || n >= 400) break;
    point = next;
    weight /= 4;
  }

  // a(sigma^n(x))^(1/4^n) = exp((S - S_{n-1}) / 2)
  const Real total = report.partial_sums.back();
  for (std::size_t n = 0; n < report.partial_sums.size(); ++n) {
    const Real before = n == 0 ? Real(0) : report.partial_sums[n - 1];
    report.limit_sequence.push_back(exp_of(Real((total - before) / 2)));
  }
  return {exp_of(Real(total / 2)), std::move(report)};
}

template <class Real>
Real functional_equation_residual(const std::function<Real(const Real&)>& b, const std::function<Real(const Real&)>& a,
                   std::span<const Real> grid) {
  Real worst = 0;
  for (const Real& t : grid) {
    const Real bt = b(t);
    const Real inner = a(Real(t * bt));
    const Real t2 = t * t;
    const Real r = abs_of(Real(a(Real(t2 * t2)) - bt * bt * inner * inner * inner * inner));
    worst = std::max(worst, r);
  }
  return worst;
}

template <class Real>
SRecursionResidual<Real> s_recursion_check(const ModuliTriple<Real>& triple, std::span<const Real> grid,
                                           const Real& step) {
  auto S = [&](const Real& x) { return Real(2 * log_of(a_product(triple, x).value)); };
  auto log_c = [&](const Real& x) { return log_of(triple.c(x)); };
  auto diff = [&](auto&& fn, const Real& x) { return Real((fn(Real(x + step)) - fn(Real(x - step))) / (2 * step)); };
  auto sigma = [&](const Real& x) { return triple.sigma(x); };

  SRecursionResidual<Real> r;
  for (const Real& x : grid) {
    const Real sx = triple.sigma(x);
    r.functional = std::max(r.functional, abs_of(Real(S(x) - S(sx) / 4 - log_c(x))));
    if (!(abs_of(x) + step < triple.radius()) || !triple.in_image(x - step) || !triple.in_image(x + step)) continue;
    const Real lhs = diff(S, x);
    const Real rhs = diff(S, sx) * diff(sigma, x) / 4 + diff(log_c, x);
    r.derivative = std::max(r.derivative, abs_of(Real(lhs - rhs)));
  }
  return r;
}

template <class Real>
FormalCrossCheck<Real> cross_check_formal(const ModuliTriple<Real>& triple, const Jet1<Rational>& b_jet, int N,
                                          std::span<const Real> samples) {
  const Jet1<Rational> formal = solve_moduli_formal(b_jet.with_degree(N), N);
  FormalCrossCheck<Real> out;
  for (const Real& x : samples) {
    Real partial = 0;
    for (int k = N; k >= 0; --k) partial = partial * x + from_q<Real>(formal[k]);
    const Real deviation = abs_of(Real(a_product(triple, x).value - partial));
    out.deviations.emplace_back(x, deviation);
    out.max_deviation = std::max(out.max_deviation, deviation);
  }

  // least squares over the points with a measurable deviation
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& [x, dev] : out.deviations) {
    if (!(dev > 0) || !(x > 0)) continue;
    const Real lx = log_of(x), ly = log_of(dev);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n >= 2) {
    const Real denom = n * sxx - sx * sx;
    if (denom != 0) out.loglog_slope = (n * sxy - sx * sy) / denom;
  }
  return out;
}

template <class Real>
std::vector<Real> uniform_grid(const Real& radius, int count) {
  std::vector<Real> grid;
  if (count == 1) return {Real(0)};
  for (int i = 0; i < count; ++i) grid.push_back(-radius + 2 * radius * i / (count - 1));
  return grid;
}

#define GERMLAB_MODULI_INSTANTIATE(R)                                                                  \
  template class ModuliTriple<R>;                                                                      \
  template ModuliTriple<R> make_triple(const SmoothFunction1D<R>&, int);                               \
  template ProductEvaluation<R> a_product(const ModuliTriple<R>&, const R&, const R&);                 \
  template R functional_equation_residual(const std::function<R(const R&)>&, const std::function<R(const R&)>&,        \
                           std::span<const R>);                                                        \
  template SRecursionResidual<R> s_recursion_check(const ModuliTriple<R>&, std::span<const R>, const R&); \
  template FormalCrossCheck<R> cross_check_formal(const ModuliTriple<R>&, const Jet1<Rational>&, int,   \
                                                  std::span<const R>);                                 \
  template std::vector<R> uniform_grid(const R&, int);

GERMLAB_MODULI_INSTANTIATE(double)
GERMLAB_MODULI_INSTANTIATE(HighPrecision)

}  // namespace germlab
