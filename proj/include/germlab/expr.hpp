#pragma once

#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "germlab/jets.hpp"

namespace germlab {

/// Ordered variable names of one slot: {x, y} in the source, {u, v} in the plane, {t} on a line.
class VariableSet {
 public:
  VariableSet(std::initializer_list<std::string> names) : names_(names) {}
  explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {}

  static const VariableSet& source();
  static const VariableSet& plane();
  static const VariableSet& line();

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

enum class Op { constant, variable, add, sub, mul, div, pow, neg, sqrt, exp, log, flat };

/// Immutable expression tree; copies share nodes.
class Expr {
 public:
  struct Node;

  static Expr constant(const Rational& value);
  static Expr variable(int index, std::string name);
  static Expr binary(Op op, Expr lhs, Expr rhs);
  static Expr unary(Op op, Expr arg);
  static Expr power(Expr base, int exponent);

  Op op() const;
  const Rational& value() const;     // constant
  int index() const;                 // variable index or integer exponent
  const std::string& name() const;   // variable
  const Expr& lhs() const;           // binary, pow, unary argument
  const Expr& rhs() const;

  bool operator==(const Expr& other) const;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Op op;
  Rational value;
  int index = 0;
  std::string name;
  Expr lhs{nullptr};
  Expr rhs{nullptr};
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

Expr parse(std::string_view text, const VariableSet& vars);
std::string print(const Expr& e);

/// Replaces variable i by replacements[i].
Expr substitute(const Expr& e, const std::vector<Expr>& replacements);

/// Largest variable index used, or -1.
int max_variable_index(const Expr& e);

// ---- numeric evaluation ------------------------------------------------------

/// Forward-mode dual number for first derivatives.
template <class T>
struct Dual {
  T value{};
  T slope{};
};

template <class T> Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) { return {a.value + b.value, a.slope + b.slope}; }
template <class T> Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) { return {a.value - b.value, a.slope - b.slope}; }
template <class T> Dual<T> operator-(const Dual<T>& a) { return {-a.value, -a.slope}; }
template <class T> Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.value * b.value, a.slope * b.value + a.value * b.slope};
}
template <class T> Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  return {a.value / b.value, (a.slope * b.value - a.value * b.slope) / (b.value * b.value)};
}

namespace detail {

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

template <class T>
T from_rational_value(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else if constexpr (is_dual<T>::value) {
    using V = decltype(T{}.value);
    return {from_rational_value<V>(q), V(0)};
  } else if constexpr (std::is_same_v<T, double>) {
    return q.convert_to<double>();
  } else {
    return T(boost::multiprecision::numerator(q).str()) / T(boost::multiprecision::denominator(q).str());
  }
}

template <class T>
const auto& primal(const T& x) {
  if constexpr (is_dual<T>::value) {
    return x.value;
  } else {
    return x;
  }
}

[[noreturn]] void throw_domain(const char* what);

template <class T>
T eval_sqrt(const T& a) {
  if (primal(a) < 0) throw_domain("sqrt of a negative number");
  if constexpr (is_dual<T>::value) {
    auto r = eval_sqrt(a.value);
    if (r == 0) throw_domain("sqrt is not differentiable at 0");
    return {r, a.slope / (2 * r)};
  } else if constexpr (std::is_same_v<T, Rational>) {
    auto r = exact_root(a, 2);
    if (!r) throw Error(ErrorKind::NotExactRoot, "irrational square root in exact mode");
    return *r;
  } else {
    using std::sqrt;
    return sqrt(a);
  }
}

template <class T>
T eval_exp(const T& a) {
  if constexpr (is_dual<T>::value) {
    auto e = eval_exp(a.value);
    return {e, e * a.slope};
  } else if constexpr (std::is_same_v<T, Rational>) {
    if (a != 0) throw Error(ErrorKind::NotExactRoot, "exp of a nonzero rational is irrational");
    return Rational(1);
  } else {
    using std::exp;
    return exp(a);
  }
}

template <class T>
T eval_log(const T& a) {
  if (!(primal(a) > 0)) throw_domain("log of a non-positive number");
  if constexpr (is_dual<T>::value) {
    return {eval_log(a.value), a.slope / a.value};
  } else if constexpr (std::is_same_v<T, Rational>) {
    if (a != 1) throw Error(ErrorKind::NotExactRoot, "log of a rational other than 1 is irrational");
    return Rational(0);
  } else {
    using std::log;
    return log(a);
  }
}

// exp(-1/a^2) extended by 0 at a = 0
template <class T>
T eval_flat(const T& a) {
  if constexpr (is_dual<T>::value) {
    using V = std::remove_cv_t<std::remove_reference_t<decltype(a.value)>>;
    if (a.value == 0) return {V(0), V(0)};
    const V f = eval_flat(a.value);
    return {f, V(2) * f * a.slope / (a.value * a.value * a.value)};
  } else {
    if (a == 0) return T(0);
    return eval_exp(T(-1) / (a * a));
  }
}

template <class T>
T eval_node(const Expr& e, std::span<const T> point) {
  switch (e.op()) {
    case Op::constant: return from_rational_value<T>(e.value());
    case Op::variable: return point[static_cast<std::size_t>(e.index())];
    case Op::add: return eval_node(e.lhs(), point) + eval_node(e.rhs(), point);
    case Op::sub: return eval_node(e.lhs(), point) - eval_node(e.rhs(), point);
    case Op::mul: return eval_node(e.lhs(), point) * eval_node(e.rhs(), point);
    case Op::div: {
      const T den = eval_node(e.rhs(), point);
      if (primal(den) == 0) throw_domain("division by zero");
      return eval_node(e.lhs(), point) / den;
    }
    case Op::pow: {
      const T base = eval_node(e.lhs(), point);
      int n = e.index();
      if (n < 0 && primal(base) == 0) throw_domain("negative power of zero");
      T result = from_rational_value<T>(Rational(1));
      T factor = base;
      for (int k = n < 0 ? -n : n; k > 0; k >>= 1) {
        if (k & 1) result = result * factor;
        if (k > 1) factor = factor * factor;
      }
      return n < 0 ? from_rational_value<T>(Rational(1)) / result : result;
    }
    case Op::neg: return -eval_node(e.lhs(), point);
    case Op::sqrt: return eval_sqrt(eval_node(e.lhs(), point));
    case Op::exp: return eval_exp(eval_node(e.lhs(), point));
    case Op::log: return eval_log(eval_node(e.lhs(), point));
    case Op::flat: return eval_flat(eval_node(e.lhs(), point));
  }
  throw_domain("unknown node");
}

}  // namespace detail

/// Real evaluation; T may be double, a multiprecision float, Rational (exact) or Dual<...>.
template <class T>
T evaluate(const Expr& e, std::span<const T> point) {
  return detail::eval_node<T>(e, point);
}

template <class T>
T evaluate(const Expr& e, std::initializer_list<T> point) {
  return detail::eval_node<T>(e, std::span<const T>(point.begin(), point.size()));
}

// ---- Taylor mode -------------------------------------------------------------

template <class S> Jet1<S> taylor1(const Expr& e, int degree);
template <class S> Jet2<S> taylor2(const Expr& e, int degree);

extern template Jet1<Rational> taylor1(const Expr&, int);
extern template Jet1<double> taylor1(const Expr&, int);
extern template Jet2<Rational> taylor2(const Expr&, int);
extern template Jet2<double> taylor2(const Expr&, int);

/// Expression for a jet (polynomial in the given variables).
template <class S> Expr to_expr(const Jet2<S>& jet, const VariableSet& vars);
template <class S> Expr to_expr(const Jet1<S>& jet, const VariableSet& vars);

extern template Expr to_expr(const Jet2<Rational>&, const VariableSet&);
extern template Expr to_expr(const Jet2<double>&, const VariableSet&);
extern template Expr to_expr(const Jet1<Rational>&, const VariableSet&);
extern template Expr to_expr(const Jet1<double>&, const VariableSet&);

}  // namespace germlab
