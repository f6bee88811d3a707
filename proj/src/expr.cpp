#include "germlab/expr.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace germlab {

const VariableSet& VariableSet::source() {
  static const VariableSet s{"x", "y"};
  return s;
}
const VariableSet& VariableSet::plane() {
  static const VariableSet s{"u", "v"};
  return s;
}
const VariableSet& VariableSet::line() {
  static const VariableSet s{"t"};
  return s;
}

int VariableSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

namespace detail {
void throw_domain(const char* what) { throw Error(ErrorKind::Domain, what); }
}  // namespace detail

// ---- construction ------------------------------------------------------------

Expr Expr::constant(const Rational& value) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable(int index, std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Op::variable;
  n->index = index;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Expr(std::move(n));
}

Expr Expr::unary(Op op, Expr arg) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(arg);
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, int exponent) {
  auto n = std::make_shared<Node>();
  n->op = Op::pow;
  n->index = exponent;
  n->lhs = std::move(base);
  return Expr(std::move(n));
}

Op Expr::op() const { return node_->op; }
const Rational& Expr::value() const { return node_->value; }
int Expr::index() const { return node_->index; }
const std::string& Expr::name() const { return node_->name; }
const Expr& Expr::lhs() const { return node_->lhs; }
const Expr& Expr::rhs() const { return node_->rhs; }

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::constant: return a.value == b.value;
    case Op::variable: return a.index == b.index && a.name == b.name;
    case Op::pow: return a.index == b.index && a.lhs == b.lhs;
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div: return a.lhs == b.lhs && a.rhs == b.rhs;
    default: return a.lhs == b.lhs;
  }
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Op::add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Op::sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Op::mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(Op::div, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(Op::neg, a); }

// ---- parsing -------------------------------------------------------------------

namespace {

std::size_t literal_length(std::string_view s);

class Parser {
 public:
  Parser(std::string_view text, const VariableSet& vars) : s_(text), vars_(vars) {}

  Expr run() {
    Expr e = expression();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expression() {
    Expr e = term();
    for (;;) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) e = e * unary();
      else if (accept('/')) e = e / unary();
      else return e;
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer literal");
    if (pos_ - start > 6) fail("exponent too large");
    int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren) expect(')');
    return Expr::power(base, negative ? -n : n);
  }

  Expr primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      if (auto literal = signed_fraction()) return *literal;
      ++pos_;
      Expr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string ident(s_.substr(start, pos_ - start));
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == '(') {
        Op op;
        if (ident == "sqrt") op = Op::sqrt;
        else if (ident == "exp") op = Op::exp;
        else if (ident == "log") op = Op::log;
        else if (ident == "flat") op = Op::flat;
        else if (ident == "neg") op = Op::neg;
        else {
          pos_ = start;
          fail("unknown function '" + ident + "'");
        }
        ++pos_;
        Expr arg = expression();
        expect(')');
        return Expr::unary(op, arg);
      }
      const int index = vars_.find(ident);
      if (index < 0) {
        pos_ = start;
        fail("unknown variable '" + ident + "'");
      }
      return Expr::variable(index, ident);
    }
    fail("unexpected character");
  }

  // "(-p)", "(p/q)" or "(-p/q)" written without spaces is a single constant
  std::optional<Expr> signed_fraction() {
    const std::size_t len = literal_length(s_.substr(pos_));
    if (len == 0) return std::nullopt;
    const std::string body(s_.substr(pos_ + 1, len - 2));
    const auto slash = body.find('/');
    Rational value(Integer(body.substr(0, slash)));
    if (slash != std::string::npos) {
      const Integer den(body.substr(slash + 1));
      if (den == 0) return std::nullopt;
      value /= Rational(den);
    }
    pos_ += len;
    return Expr::constant(value);
  }

  Expr number() {
    const std::size_t start = pos_;
    Integer digits = 0;
    int scale = 0;
    bool any = false, dot = false;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits = digits * 10 + (c - '0');
        if (dot) ++scale;
        any = true;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (!any) {
      pos_ = start;
      fail("malformed number");
    }
    int exponent = 0;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      int sign = 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) sign = s_[p++] == '-' ? -1 : 1;
      const std::size_t digits_start = p;
      while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
      if (p > digits_start && p - digits_start <= 4) {
        exponent = sign * std::stoi(std::string(s_.substr(digits_start, p - digits_start)));
        pos_ = p;
      }
    }
    Rational value(digits);
    const int shift = exponent - scale;
    Integer ten_power = 1;
    for (int k = 0; k < std::abs(shift); ++k) ten_power *= 10;
    value = shift >= 0 ? Rational(value * Rational(ten_power)) : Rational(value / Rational(ten_power));
    return Expr::constant(value);
  }

  std::string_view s_;
  const VariableSet& vars_;
  std::size_t pos_ = 0;
};

// Length of a leading "(-p)", "(p/q)" or "(-p/q)", else 0.
std::size_t literal_length(std::string_view s) {
  std::size_t p = 0;
  if (p >= s.size() || s[p] != '(') return 0;
  ++p;
  const bool minus = p < s.size() && s[p] == '-';
  if (minus) ++p;
  auto digits = [&] {
    const std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return p > start;
  };
  if (!digits()) return 0;
  bool slash = false;
  if (p < s.size() && s[p] == '/') {
    ++p;
    if (!digits()) return 0;
    slash = true;
  }
  if (!(minus || slash) || p >= s.size() || s[p] != ')') return 0;
  return p + 1;
}

int precedence(const Expr& e) {
  switch (e.op()) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul:
    case Op::div: return 2;
    case Op::neg: return 3;
    case Op::pow: return 4;
    default: return 5;
  }
}

std::string print_constant(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Integer num = numerator(q), den = denominator(q);
  if (den == 1) return q < 0 ? "(" + num.str() + ")" : num.str();
  Integer rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  if (rest != 1 || q < 0) return "(" + num.str() + "/" + den.str() + ")";
  const int places = std::max(twos, fives);
  Integer scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  const std::string digits = Integer(num * (scale / den)).str();
  const std::string padded = std::string(static_cast<std::size_t>(std::max(0, places + 1 - static_cast<int>(digits.size()))), '0') + digits;
  return padded.substr(0, padded.size() - places) + "." + padded.substr(padded.size() - places);
}

void print_into(std::ostringstream& out, const Expr& e, int min_prec) {
  const int prec = precedence(e);
  if (prec < min_prec) {
    std::ostringstream inner;
    print_into(inner, e, 0);
    const std::string text = "(" + inner.str() + ")";
    // a trailing space keeps e.g. a quotient of two integers from reading back as one constant
    out << (literal_length(text) == text.size() ? "(" + inner.str() + " )" : text);
    return;
  }
  switch (e.op()) {
    case Op::constant: out << print_constant(e.value()); break;
    case Op::variable: out << e.name(); break;
    case Op::add:
    case Op::sub:
      print_into(out, e.lhs(), 1);
      out << (e.op() == Op::add ? " + " : " - ");
      print_into(out, e.rhs(), 2);
      break;
    case Op::mul:
    case Op::div:
      print_into(out, e.lhs(), 2);
      out << (e.op() == Op::mul ? "*" : "/");
      print_into(out, e.rhs(), 3);
      break;
    case Op::neg:
      out << '-';
      print_into(out, e.lhs(), 3);
      break;
    case Op::pow:
      print_into(out, e.lhs(), 5);
      out << '^' << e.index();
      break;
    case Op::sqrt: out << "sqrt("; print_into(out, e.lhs(), 0); out << ')'; break;
    case Op::exp: out << "exp("; print_into(out, e.lhs(), 0); out << ')'; break;
    case Op::log: out << "log("; print_into(out, e.lhs(), 0); out << ')'; break;
    case Op::flat: out << "flat("; print_into(out, e.lhs(), 0); out << ')'; break;
  }
}

template <class J>
J taylor_impl(const Expr& e, int degree, const std::vector<J>& vars) {
  using S = typename J::scalar_type;
  auto sub = [&](const Expr& x) { return taylor_impl(x, degree, vars); };
  auto not_expandable = [](const char* what) { throw Error(ErrorKind::NotExpandableAtOrigin, what); };
  switch (e.op()) {
    case Op::constant: return J::constant(from_rational<S>(e.value()), degree);
    case Op::variable:
      if (e.index() >= static_cast<int>(vars.size())) not_expandable("variable outside the declared set");
      return vars[static_cast<std::size_t>(e.index())];
    case Op::add: return sub(e.lhs()) + sub(e.rhs());
    case Op::sub: return sub(e.lhs()) - sub(e.rhs());
    case Op::mul: return sub(e.lhs()) * sub(e.rhs());
    case Op::div: {
      const J den = sub(e.rhs());
      if (is_zero(den.coeffs()[0])) not_expandable("division by a series vanishing at the origin");
      return sub(e.lhs()) / den;
    }
    case Op::pow: {
      const J base = sub(e.lhs());
      if (e.index() < 0 && is_zero(base.coeffs()[0])) not_expandable("negative power of a series vanishing at the origin");
      return power(base, e.index());
    }
    case Op::neg: return -sub(e.lhs());
    case Op::sqrt: {
      const J a = sub(e.lhs());
      if (!(a.coeffs()[0] > 0) || is_zero(a.coeffs()[0])) not_expandable("sqrt of a non-unit");
      return sqrt_unit(a);
    }
    case Op::exp: return exp_series(sub(e.lhs()));
    case Op::log: {
      const J a = sub(e.lhs());
      if (!(a.coeffs()[0] > 0) || is_zero(a.coeffs()[0])) not_expandable("log of a non-unit");
      return log_series(a);
    }
    case Op::flat: {
      J a = sub(e.lhs());
      if (is_zero(a.coeffs()[0])) return J(degree);
      // away from its zero, flat is analytic: exp(-1/a^2)
      return exp_series(-reciprocal(a * a));
    }
  }
  not_expandable("unknown node");
  return J(degree);
}

}  // namespace

Expr parse(std::string_view text, const VariableSet& vars) { return Parser(text, vars).run(); }

std::string print(const Expr& e) {
  std::ostringstream out;
  print_into(out, e, 0);
  return out.str();
}

Expr substitute(const Expr& e, const std::vector<Expr>& replacements) {
  switch (e.op()) {
    case Op::constant: return e;
    case Op::variable:
      if (e.index() >= static_cast<int>(replacements.size()))
        throw Error(ErrorKind::Domain, "no replacement for variable " + e.name());
      return replacements[static_cast<std::size_t>(e.index())];
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div: return Expr::binary(e.op(), substitute(e.lhs(), replacements), substitute(e.rhs(), replacements));
    case Op::pow: return Expr::power(substitute(e.lhs(), replacements), e.index());
    default: return Expr::unary(e.op(), substitute(e.lhs(), replacements));
  }
}

int max_variable_index(const Expr& e) {
  switch (e.op()) {
    case Op::constant: return -1;
    case Op::variable: return e.index();
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div: return std::max(max_variable_index(e.lhs()), max_variable_index(e.rhs()));
    default: return max_variable_index(e.lhs());
  }
}

template <class S>
Jet1<S> taylor1(const Expr& e, int degree) {
  return taylor_impl<Jet1<S>>(e, degree, {Jet1<S>::identity(degree)});
}

template <class S>
Jet2<S> taylor2(const Expr& e, int degree) {
  return taylor_impl<Jet2<S>>(e, degree, {Jet2<S>::x(degree), Jet2<S>::y(degree)});
}

namespace {

template <class S>
Expr coefficient_term(const S& c, std::vector<std::pair<int, int>> powers, const VariableSet& vars) {
  const Rational q = [&] {
    if constexpr (std::is_same_v<S, Rational>) return c;
    else return Rational(c);
  }();
  const bool negative = q < 0;
  const Rational mag = negative ? Rational(-q) : q;
  std::optional<Expr> term;
  if (mag != 1) term = Expr::constant(mag);
  for (auto [var, p] : powers) {
    if (p == 0) continue;
    Expr v = Expr::variable(var, vars.name(var));
    Expr f = p == 1 ? v : Expr::power(v, p);
    term = term ? *term * f : f;
  }
  if (!term) term = Expr::constant(mag);
  return negative ? -*term : *term;
}

Expr add_terms(const std::vector<Expr>& terms) {
  if (terms.empty()) return Expr::constant(0);
  Expr sum = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    const Expr& t = terms[k];
    sum = t.op() == Op::neg ? sum - t.lhs() : sum + t;
  }
  return sum;
}

}  // namespace

template <class S>
Expr to_expr(const Jet2<S>& jet, const VariableSet& vars) {
  std::vector<Expr> terms;
  for (int n = 0; n <= jet.degree(); ++n)
    for (int j = 0; j <= n; ++j)
      if (jet(n - j, j) != 0) terms.push_back(coefficient_term(jet(n - j, j), {{0, n - j}, {1, j}}, vars));
  return add_terms(terms);
}

template <class S>
Expr to_expr(const Jet1<S>& jet, const VariableSet& vars) {
  std::vector<Expr> terms;
  for (int k = 0; k <= jet.degree(); ++k)
    if (jet[k] != 0) terms.push_back(coefficient_term(jet[k], {{0, k}}, vars));
  return add_terms(terms);
}

template Jet1<Rational> taylor1(const Expr&, int);
template Jet1<double> taylor1(const Expr&, int);
template Jet2<Rational> taylor2(const Expr&, int);
template Jet2<double> taylor2(const Expr&, int);
template Expr to_expr(const Jet2<Rational>&, const VariableSet&);
template Expr to_expr(const Jet2<double>&, const VariableSet&);
template Expr to_expr(const Jet1<Rational>&, const VariableSet&);
template Expr to_expr(const Jet1<double>&, const VariableSet&);

}  // namespace germlab
