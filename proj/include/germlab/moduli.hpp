#pragma once

#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "germlab/expr.hpp"
#include "germlab/jets.hpp"

namespace germlab {

/// 50 significant digits; used where double cannot resolve the quantity being measured.
using HighPrecision =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

/// b(t) given by an expression over {t}, usable on |t| <= radius.
template <class Real>
struct SmoothFunction1D {
  Expr ast;
  Real radius = Real(2) / Real(5);

  Real operator()(const Real& t) const { return evaluate<Real>(ast, {t}); }
};

/// The inverse x -> s of s -> s b(s), with c(x) = s / x and sigma(x) = s^4.
template <class Real>
class ModuliTriple {
 public:
  ModuliTriple(SmoothFunction1D<Real> b, Real image_low, Real image_high, Real sup_log_c)
      : b_(std::move(b)), low_(image_low), high_(image_high), sup_log_c_(sup_log_c) {}

  Real theta_inv(const Real& x) const;
  Real c(const Real& x) const;
  Real sigma(const Real& x) const;
  Real b(const Real& t) const { return b_(t); }

  const Real& radius() const { return b_.radius; }
  const Real& sup_log_c() const { return sup_log_c_; }
  bool in_image(const Real& x) const { return x >= low_ && x <= high_; }

 private:
  SmoothFunction1D<Real> b_;
  Real low_, high_;
  Real sup_log_c_;
};

/// Checks b(0) = 1 and monotonicity of t b(t) on `samples` points of [-radius, radius].
template <class Real>
ModuliTriple<Real> make_triple(const SmoothFunction1D<Real>& b, int samples = 201);

template <class Real>
struct ConvergenceReport {
  int factors = 0;
  Real tail_bound = 0;
  Real sup_log_c = 0;
  std::vector<Real> partial_sums;     // S_N = sum_{k<=N} 4^-k log c(sigma^k(x))
  std::vector<Real> orbit;            // sigma^k(x)
  std::vector<Real> limit_sequence;   // a(sigma^n(x))^(1/4^n)
  bool tail_decay_holds = true;       // |sigma^n(x)| < |x|^(3^n) at every evaluated n >= 1
};

template <class Real>
struct ProductEvaluation {
  Real value;
  ConvergenceReport<Real> report;
};

/// a(x) = (prod_k c(sigma^k(x))^(1/4^k))^(1/2). Stops once sigma^(N+1)(x) underflows or the
/// remaining factors are bounded by target_eps.
template <class Real>
ProductEvaluation<Real> a_product(const ModuliTriple<Real>& triple, const Real& x,
                                  const Real& target_eps = std::numeric_limits<Real>::epsilon());

/// max over the grid of |a(t^4) - b(t)^2 a(t b(t))^4|.
template <class Real>
Real functional_equation_residual(const std::function<Real(const Real&)>& b, const std::function<Real(const Real&)>& a,
                   std::span<const Real> grid);

template <class Real>
struct SRecursionResidual {
  Real functional = 0;  // S(x) - S(sigma(x))/4 - log c(x)
  Real derivative = 0;  // S'(x) - S'(sigma(x)) sigma'(x)/4 - c'(x)/c(x)
};

/// S = 2 log a; derivatives by central differences with the given step.
template <class Real>
SRecursionResidual<Real> s_recursion_check(const ModuliTriple<Real>& triple, std::span<const Real> grid,
                                           const Real& step = Real(1) / Real(10000));

template <class Real>
struct FormalCrossCheck {
  Real max_deviation = 0;
  std::vector<std::pair<Real, Real>> deviations;  // (x, |a(x) - partial sum(x)|)
  Real loglog_slope = 0;                          // least-squares slope of log deviation against log x
};

/// Compares a_product with the degree-N partial sum of the formal solution for `b_jet`.
template <class Real>
FormalCrossCheck<Real> cross_check_formal(const ModuliTriple<Real>& triple, const Jet1<Rational>& b_jet, int N,
                                          std::span<const Real> samples);

/// `count` evenly spaced points on [-radius, radius].
template <class Real>
std::vector<Real> uniform_grid(const Real& radius, int count);

#define GERMLAB_MODULI_EXTERN(R)                                                                        \
  extern template class ModuliTriple<R>;                                                                \
  extern template ModuliTriple<R> make_triple(const SmoothFunction1D<R>&, int);                        \
  extern template ProductEvaluation<R> a_product(const ModuliTriple<R>&, const R&, const R&);          \
  extern template R functional_equation_residual(const std::function<R(const R&)>&, const std::function<R(const R&)>&, \
                                  std::span<const R>);                                                 \
  extern template SRecursionResidual<R> s_recursion_check(const ModuliTriple<R>&, std::span<const R>,  \
                                                          const R&);                                   \
  extern template FormalCrossCheck<R> cross_check_formal(const ModuliTriple<R>&, const Jet1<Rational>&, \
                                                         int, std::span<const R>);                     \
  extern template std::vector<R> uniform_grid(const R&, int);

GERMLAB_MODULI_EXTERN(double)
GERMLAB_MODULI_EXTERN(HighPrecision)
#undef GERMLAB_MODULI_EXTERN

}  // namespace germlab
