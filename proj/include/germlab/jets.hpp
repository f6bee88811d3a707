#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <initializer_list>
#include <utility>
#include <vector>

#include "germlab/scalar.hpp"

namespace germlab {

inline constexpr int default_degree = 12;

/// Truncated one-variable series sum c_k t^k, k = 0..degree.
template <class S>
class Jet1 {
 public:
  using scalar_type = S;

  explicit Jet1(int degree = 0) : c_(static_cast<std::size_t>(degree) + 1) { assert(degree >= 0); }
  Jet1(int degree, std::vector<S> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(degree) + 1);
  }
  Jet1(int degree, std::initializer_list<S> coeffs) : Jet1(degree, std::vector<S>(coeffs)) {}

  static Jet1 constant(const S& c, int degree) {
    Jet1 r(degree);
    r.c_[0] = c;
    return r;
  }
  static Jet1 identity(int degree) {
    Jet1 r(degree);
    if (degree >= 1) r.c_[1] = 1;
    return r;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const S& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  S& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<S>& coeffs() const { return c_; }

  // Truncates, or pads with zero coefficients.
  Jet1 with_degree(int d) const { return Jet1(d, std::vector<S>(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), d + 1))); }

  bool operator==(const Jet1& other) const = default;

  Jet1& operator+=(const Jet1& o) {
    if (o.degree() < degree()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet1& operator-=(const Jet1& o) {
    if (o.degree() < degree()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet1& operator*=(const S& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

 private:
  std::vector<S> c_;
};

/// Truncated two-variable series sum c_ij x^i y^j, i + j <= degree.
/// Coefficients are stored by total degree, then by increasing power of y.
template <class S>
class Jet2 {
 public:
  using scalar_type = S;

  explicit Jet2(int degree = 0) : d_(degree), c_(size_for(degree)) { assert(degree >= 0); }

  static std::size_t size_for(int d) { return static_cast<std::size_t>(d + 1) * (d + 2) / 2; }
  static std::size_t index(int i, int j) {
    const int n = i + j;
    return static_cast<std::size_t>(n) * (n + 1) / 2 + j;
  }

  static Jet2 constant(const S& c, int degree) {
    Jet2 r(degree);
    r.c_[0] = c;
    return r;
  }
  static Jet2 x(int degree) { return monomial(1, 0, degree); }
  static Jet2 y(int degree) { return monomial(0, 1, degree); }
  static Jet2 monomial(int i, int j, int degree, const S& c = S(1)) {
    Jet2 r(degree);
    if (i + j <= degree) r(i, j) = c;
    return r;
  }

  int degree() const { return d_; }
  const S& operator()(int i, int j) const { return c_[index(i, j)]; }
  S& operator()(int i, int j) { return c_[index(i, j)]; }
  const S& at(std::size_t k) const { return c_[k]; }
  S& at(std::size_t k) { return c_[k]; }
  const std::vector<S>& coeffs() const { return c_; }

  Jet2 with_degree(int d) const {
    Jet2 r(d);
    const std::size_t n = std::min(c_.size(), r.c_.size());
    std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n), r.c_.begin());
    return r;
  }

  bool operator==(const Jet2& other) const = default;

  Jet2& operator+=(const Jet2& o) {
    if (o.d_ < d_) *this = with_degree(o.d_);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    if (o.d_ < d_) *this = with_degree(o.d_);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet2& operator*=(const S& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

 private:
  int d_;
  std::vector<S> c_;
};

template <class J>
J operator+(J a, const J& b) requires requires { typename J::scalar_type; } {
  a += b;
  return a;
}
template <class J>
J operator-(J a, const J& b) requires requires { typename J::scalar_type; } {
  a -= b;
  return a;
}
template <class J>
J operator-(J a) requires requires { typename J::scalar_type; } {
  a *= typename J::scalar_type(-1);
  return a;
}
template <class J>
J operator*(J a, const typename J::scalar_type& s) requires requires { typename J::scalar_type; } {
  a *= s;
  return a;
}
template <class J>
J operator*(const typename J::scalar_type& s, J a) requires requires { typename J::scalar_type; } {
  a *= s;
  return a;
}

/// A map germ (R^2,0) -> (R^2,0) given by its two component jets.
template <class S>
using Map2 = std::array<Jet2<S>, 2>;

/// A parametrized plane curve (u(t), v(t)).
template <class S>
using Curve2 = std::array<Jet1<S>, 2>;

enum class Axis { x, y };

template <class S>
struct Division {
  Jet2<S> quotient_even;  // A in F = A(w, y) + x B(w, y)
  Jet2<S> quotient_odd;   // B
};

// ---- ring operations -------------------------------------------------------

template <class S> Jet1<S> operator*(const Jet1<S>& a, const Jet1<S>& b);
template <class S> Jet2<S> operator*(const Jet2<S>& a, const Jet2<S>& b);

template <class S> Jet1<S> reciprocal(const Jet1<S>& a, double tol = default_tol_zero);
template <class S> Jet2<S> reciprocal(const Jet2<S>& a, double tol = default_tol_zero);
template <class S> Jet1<S> operator/(const Jet1<S>& a, const Jet1<S>& b);
template <class S> Jet2<S> operator/(const Jet2<S>& a, const Jet2<S>& b);

template <class S> Jet1<S> sqrt_unit(const Jet1<S>& a);
template <class S> Jet2<S> sqrt_unit(const Jet2<S>& a);
template <class S> Jet1<S> rpow_unit(const Jet1<S>& a, const Rational& p);
template <class S> Jet2<S> rpow_unit(const Jet2<S>& a, const Rational& p);
template <class S> Jet1<S> power(const Jet1<S>& a, int n);
template <class S> Jet2<S> power(const Jet2<S>& a, int n);

// exp and log of series; exact mode needs exp(c0), log(c0) rational (c0 = 0, resp. 1).
template <class S> Jet1<S> exp_series(const Jet1<S>& a);
template <class S> Jet2<S> exp_series(const Jet2<S>& a);
template <class S> Jet1<S> log_series(const Jet1<S>& a);
template <class S> Jet2<S> log_series(const Jet2<S>& a);

// ---- calculus, restriction, evaluation -------------------------------------

template <class S> Jet1<S> derivative(const Jet1<S>& a);
template <class S> Jet2<S> partial_x(const Jet2<S>& a);
template <class S> Jet2<S> partial_y(const Jet2<S>& a);

template <class S> Jet1<S> restrict_to_x_axis(const Jet2<S>& f);  // t -> f(t, 0)
template <class S> Jet1<S> restrict_to_y_axis(const Jet2<S>& f);  // t -> f(0, t)
template <class S> Jet2<S> lift_x(const Jet1<S>& a);              // (x, y) -> a(x)
template <class S> Jet2<S> lift_y(const Jet1<S>& a);              // (x, y) -> a(y)

template <class S> S evaluate(const Jet1<S>& a, const S& t);
template <class S> S evaluate(const Jet2<S>& a, const S& x, const S& y);

template <class S> S max_abs_coefficient(const Jet1<S>& a);
template <class S> S max_abs_coefficient(const Jet2<S>& a);

// Index of the first coefficient exceeding tol, or -1 for the zero jet.
template <class S> int valuation(const Jet1<S>& a, double tol = default_tol_zero);
template <class S> int valuation(const Jet2<S>& a, double tol = default_tol_zero);

// ---- composition and inversion --------------------------------------------

template <class S> Jet1<S> compose(const Jet1<S>& outer, const Jet1<S>& inner);
template <class S> Jet2<S> compose(const Jet1<S>& outer, const Jet2<S>& inner);
template <class S> Jet1<S> inverse(const Jet1<S>& a, double tol = default_tol_zero);

template <class S> Jet2<S> substitute(const Jet2<S>& F, const Jet2<S>& g, const Jet2<S>& h);
template <class S> Jet1<S> substitute(const Jet2<S>& F, const Jet1<S>& g, const Jet1<S>& h);

template <class S> Map2<S> identity_map(int degree);
template <class S> Map2<S> with_degree(const Map2<S>& m, int degree);
template <class S> Map2<S> compose(const Map2<S>& outer, const Map2<S>& inner);
template <class S> Jet2<S> compose(const Jet2<S>& outer, const Map2<S>& inner);
template <class S> Curve2<S> compose(const Map2<S>& outer, const Curve2<S>& inner);
template <class S> Jet1<S> compose(const Jet2<S>& outer, const Curve2<S>& inner);
template <class S> Map2<S> inverse(const Map2<S>& m, double tol = default_tol_zero);

// ---- division and implicit functions --------------------------------------

/// F(x, y) = A(w(x, y), y) + x B(w(x, y), y) for w x-regular of order 2.
template <class S> Division<S> weierstrass_divide(const Jet2<S>& F, const Jet2<S>& w, double tol = default_tol_zero);

/// phi with delta(x, phi(x)) = 0 (solve_for = y) or delta(phi(y), y) = 0 (solve_for = x).
template <class S> Jet1<S> implicit_solve(const Jet2<S>& delta, Axis solve_for, double tol = default_tol_zero);

/// F(x, y) = even(x, y^2) + y odd(x, y^2).
template <class S> std::pair<Jet2<S>, Jet2<S>> split_parity_y(const Jet2<S>& F);
/// F(x, y) -> F(x, y^2) and F(x, y) -> F(x^2, y).
template <class S> Jet2<S> square_y(const Jet2<S>& F);
template <class S> Jet2<S> square_x(const Jet2<S>& F);

/// F / x for F vanishing on {x = 0}; the lost top degree is padded with zeros.
template <class S> Jet2<S> quotient_by_x(const Jet2<S>& F, double tol = default_tol_zero);
template <class S> Jet2<S> quotient_by_y(const Jet2<S>& F, double tol = default_tol_zero);
template <class S> Jet1<S> quotient_by_t(const Jet1<S>& a, double tol = default_tol_zero);

#define GERMLAB_JETS_EXTERN(S)                                                                \
  extern template Jet1<S> operator*(const Jet1<S>&, const Jet1<S>&);                          \
  extern template Jet2<S> operator*(const Jet2<S>&, const Jet2<S>&);                          \
  extern template Jet1<S> reciprocal(const Jet1<S>&, double);                                 \
  extern template Jet2<S> reciprocal(const Jet2<S>&, double);                                 \
  extern template Jet1<S> operator/(const Jet1<S>&, const Jet1<S>&);                          \
  extern template Jet2<S> operator/(const Jet2<S>&, const Jet2<S>&);                          \
  extern template Jet1<S> sqrt_unit(const Jet1<S>&);                                          \
  extern template Jet2<S> sqrt_unit(const Jet2<S>&);                                          \
  extern template Jet1<S> rpow_unit(const Jet1<S>&, const Rational&);                         \
  extern template Jet2<S> rpow_unit(const Jet2<S>&, const Rational&);                         \
  extern template Jet1<S> power(const Jet1<S>&, int);                                         \
  extern template Jet2<S> power(const Jet2<S>&, int);                                         \
  extern template Jet1<S> exp_series(const Jet1<S>&);                                         \
  extern template Jet2<S> exp_series(const Jet2<S>&);                                         \
  extern template Jet1<S> log_series(const Jet1<S>&);                                         \
  extern template Jet2<S> log_series(const Jet2<S>&);                                         \
  extern template Jet1<S> derivative(const Jet1<S>&);                                         \
  extern template Jet2<S> partial_x(const Jet2<S>&);                                          \
  extern template Jet2<S> partial_y(const Jet2<S>&);                                          \
  extern template Jet1<S> restrict_to_x_axis(const Jet2<S>&);                                 \
  extern template Jet1<S> restrict_to_y_axis(const Jet2<S>&);                                 \
  extern template Jet2<S> lift_x(const Jet1<S>&);                                             \
  extern template Jet2<S> lift_y(const Jet1<S>&);                                             \
  extern template S evaluate(const Jet1<S>&, const S&);                                       \
  extern template S evaluate(const Jet2<S>&, const S&, const S&);                             \
  extern template S max_abs_coefficient(const Jet1<S>&);                                      \
  extern template S max_abs_coefficient(const Jet2<S>&);                                      \
  extern template int valuation(const Jet1<S>&, double);                                      \
  extern template int valuation(const Jet2<S>&, double);                                      \
  extern template Jet1<S> compose(const Jet1<S>&, const Jet1<S>&);                            \
  extern template Jet2<S> compose(const Jet1<S>&, const Jet2<S>&);                            \
  extern template Jet1<S> inverse(const Jet1<S>&, double);                                    \
  extern template Jet2<S> substitute(const Jet2<S>&, const Jet2<S>&, const Jet2<S>&);         \
  extern template Jet1<S> substitute(const Jet2<S>&, const Jet1<S>&, const Jet1<S>&);         \
  extern template Map2<S> identity_map(int);                                                  \
  extern template Map2<S> with_degree(const Map2<S>&, int);                                   \
  extern template Map2<S> compose(const Map2<S>&, const Map2<S>&);                            \
  extern template Jet2<S> compose(const Jet2<S>&, const Map2<S>&);                            \
  extern template Curve2<S> compose(const Map2<S>&, const Curve2<S>&);                        \
  extern template Jet1<S> compose(const Jet2<S>&, const Curve2<S>&);                          \
  extern template Map2<S> inverse(const Map2<S>&, double);                                    \
  extern template Division<S> weierstrass_divide(const Jet2<S>&, const Jet2<S>&, double);     \
  extern template Jet1<S> implicit_solve(const Jet2<S>&, Axis, double);                       \
  extern template std::pair<Jet2<S>, Jet2<S>> split_parity_y(const Jet2<S>&);                 \
  extern template Jet2<S> square_y(const Jet2<S>&);                                           \
  extern template Jet2<S> square_x(const Jet2<S>&);                                           \
  extern template Jet2<S> quotient_by_x(const Jet2<S>&, double);                              \
  extern template Jet2<S> quotient_by_y(const Jet2<S>&, double);                              \
  extern template Jet1<S> quotient_by_t(const Jet1<S>&, double);

GERMLAB_JETS_EXTERN(Rational)
GERMLAB_JETS_EXTERN(double)
#undef GERMLAB_JETS_EXTERN

}  // namespace germlab
