#pragma once

#include <cmath>
#include <optional>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "germlab/error.hpp"

namespace germlab {

using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline constexpr double default_tol_zero = 1e-9;

enum class Mode { exact, floating };

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x, double) { return x.is_zero(); }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x, double tol) { return std::fabs(x) <= tol; }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& q) { return q.convert_to<double>(); }
  static double abs(double x) { return std::fabs(x); }
};

template <class S>
bool is_zero(const S& x, double tol = default_tol_zero) {
  return scalar_traits<S>::is_zero(x, tol);
}

template <class S>
double to_double(const S& x) {
  return scalar_traits<S>::to_double(x);
}

template <class S>
S from_rational(const Rational& q) {
  return scalar_traits<S>::from_rational(q);
}

template <class S>
S abs_value(const S& x) {
  return scalar_traits<S>::abs(x);
}

// Exact n-th root of a rational, if it exists (odd n admits negative input).
std::optional<Rational> exact_root(const Rational& x, unsigned n);

// Real n-th root; exact mode throws NotExactRoot when the root is irrational.
template <class S>
S real_root(const S& x, unsigned n) {
  if constexpr (scalar_traits<S>::exact) {
    auto r = exact_root(x, n);
    if (!r) throw Error(ErrorKind::NotExactRoot, "no rational root of order " + std::to_string(n));
    return *r;
  } else {
    if (n == 1) return x;
    if (n == 3) return std::cbrt(x);
    if (n % 2 == 1) return std::copysign(std::pow(std::fabs(x), 1.0 / n), x);
    if (x < 0) throw Error(ErrorKind::NonPositiveConstantTerm, "even root of a negative number");
    return std::pow(x, 1.0 / n);
  }
}

// x^p for rational p on the real branch (x > 0, or odd denominator).
template <class S>
S rational_power(const S& x, const Rational& p) {
  const Integer num = boost::multiprecision::numerator(p);
  const Integer den = boost::multiprecision::denominator(p);
  if constexpr (scalar_traits<S>::exact) {
    S root = real_root(x, den.convert_to<unsigned>());
    S result = 1;
    Integer e = num < 0 ? Integer(-num) : num;
    for (Integer k = 0; k < e; ++k) result *= root;
    return num < 0 ? S(1 / result) : result;
  } else {
    double r = real_root(x, den.convert_to<unsigned>());
    return std::pow(r, num.convert_to<double>());
  }
}

std::string to_decimal_string(double x);

}  // namespace germlab
