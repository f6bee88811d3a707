#include <random>
#include <vector>

#include "doctest.h"
#include "germlab/jets.hpp"
#include "support.hpp"

using namespace germlab;
using testing_support::random_jet1;
using testing_support::random_jet2;

namespace {

using Q = Rational;
using Poly = std::vector<Q>;  // plain coefficient list, index = power

Jet1<Q> j1(int d, std::initializer_list<Q> c) { return Jet1<Q>(d, c); }

// Independent oracles: naive truncated polynomial algebra on coefficient vectors.
Poly naive_mul(const Poly& a, const Poly& b, int d) {
  Poly r(d + 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (static_cast<int>(i + j) <= d) r[i + j] += a[i] * b[j];
  return r;
}

Poly naive_reciprocal(const Poly& a, int d) {
  Poly r(d + 1);
  r[0] = 1 / a[0];
  for (int k = 1; k <= d; ++k) {
    Q s = 0;
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

Q binomial(const Q& p, int k) {
  Q r = 1;
  for (int i = 0; i < k; ++i) r = r * (p - i) / (i + 1);
  return r;
}

// (1 + c t)^p = sum C(p, k) c^k t^k
Poly binomial_series(const Q& p, const Q& c, int d) {
  Poly r(d + 1);
  Q ck = 1;
  for (int k = 0; k <= d; ++k, ck *= c) r[k] = binomial(p, k) * ck;
  return r;
}

// Lagrange inversion: [t^n] a^{-1} = (1/n) [s^{n-1}] (s / a(s))^n
Poly lagrange_inverse(const Poly& a, int d) {
  Poly shifted(a.begin() + 1, a.end());
  const Poly phi = naive_reciprocal(shifted, d);
  Poly r(d + 1);
  Poly phin{Q(1)};
  for (int n = 1; n <= d; ++n) {
    phin = naive_mul(phin, phi, d);
    r[n] = phin[n - 1] / n;
  }
  return r;
}

Poly coeffs_of(const Jet1<Q>& a) { return a.coeffs(); }

}  // namespace

TEST_CASE("ring operations match closed forms") {
  CHECK(j1(2, {1, 1}) * j1(2, {1, -1}) == j1(2, {1, 0, -1}));
  // binomial-series oracle, frozen: 1 + t - t^2/2 + t^3/2
  const auto s = sqrt_unit(j1(3, {1, 2}));
  CHECK(coeffs_of(s) == binomial_series(Q(1, 2), 2, 3));
  CHECK(s == j1(3, {1, 1, Q(-1, 2), Q(1, 2)}));
  const auto r = rpow_unit(j1(2, {1, 1}), Q(1, 4));
  CHECK(coeffs_of(r) == binomial_series(Q(1, 4), 1, 2));
  CHECK(r == j1(2, {1, Q(1, 4), Q(-3, 32)}));
  CHECK(j1(3, {1, 1}) / j1(3, {1, 1}) == Jet1<Q>::constant(1, 3));
}

TEST_CASE("mixed degrees truncate to the minimum") {
  const auto p = j1(5, {1, 1, 1, 1, 1, 1}) * j1(2, {1, 1, 1});
  CHECK(p.degree() == 2);
  CHECK((j1(5, {1}) + j1(3, {0, 1})).degree() == 3);
}

TEST_CASE("ring operation errors") {
  CHECK_THROWS_AS(j1(3, {0, 1}) / j1(3, {0, 1}), Error);
  CHECK_THROWS_AS(sqrt_unit(j1(3, {-1, 1})), Error);
  CHECK_THROWS_AS(rpow_unit(j1(3, {0, 1}), Q(1, 3)), Error);
  try {
    sqrt_unit(j1(3, {-1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPositiveConstantTerm);
  }
  // irrational constant in exact mode
  CHECK_THROWS_AS(sqrt_unit(j1(3, {2, 1})), Error);
  CHECK(sqrt_unit(Jet1<double>(3, {2.0, 1.0}))[0] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("compose1") {
  // direct expansion: (t+t^2) + (t+t^2)^3 truncated at degree 3
  const Poly inner{0, 1, 1};
  Poly expected = inner;
  expected.resize(4);
  const Poly cube = naive_mul(naive_mul(inner, inner, 3), inner, 3);
  for (int k = 0; k <= 3; ++k) expected[k] += cube[k];
  const auto c = compose(j1(3, {0, 1, 0, 1}), j1(3, {0, 1, 1}));
  CHECK(coeffs_of(c) == expected);
  CHECK(c == j1(3, {0, 1, 1, 1}));
  const auto a = j1(4, {2, 3, -1, 5, 7});
  CHECK(compose(a, Jet1<Q>::identity(4)) == a);
  CHECK(compose(j1(3, {0, 0, 1}), j1(3, {0, 2})) == j1(3, {0, 0, 4}));
  CHECK_THROWS_AS(compose(a, j1(3, {1, 1})), Error);
}

TEST_CASE("invert1") {
  CHECK(inverse(Jet1<Q>::identity(6)) == Jet1<Q>::identity(6));
  CHECK(inverse(j1(5, {0, 1, 1})) == j1(5, {0, 1, -1, 2, -5, 14}));
  CHECK(inverse(j1(4, {0, 2})) == j1(4, {0, Q(1, 2)}));
  CHECK_THROWS_AS(inverse(j1(4, {0, 0, 1})), Error);
  // signed Catalan numbers through degree 8 against Lagrange inversion
  const auto w = inverse(j1(8, {0, 1, 1}));
  CHECK(coeffs_of(w) == lagrange_inverse({0, 1, 1}, 8));
  const std::vector<int> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 8; ++n) CHECK(w[n] == Q((n % 2 ? 1 : -1) * catalan[n - 1]));
}

TEST_CASE("invert1 agrees with Lagrange inversion on random series") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_jet1<Q>(rng, 7, 1);
    if (a[1] == 0) a[1] = 1;
    CHECK(coeffs_of(inverse(a)) == lagrange_inverse(a.coeffs(), 7));
  }
}

TEST_CASE("substitute2") {
  const int d = 6;
  const auto x = Jet2<Q>::x(d), y = Jet2<Q>::y(d);
  CHECK(substitute(x + y, x, y * y) == x + y * y);
  CHECK(substitute(x * y, x + y, x - y) == x * x - y * y);
  CHECK(substitute(x * x, x + y * y, y) == x * x + Q(2) * x * y * y + y * y * y * y);
  CHECK_THROWS_AS(substitute(x, x + Jet2<Q>::constant(1, d), y), Error);
}

TEST_CASE("invert_map2") {
  const int d = 6;
  const auto x = Jet2<Q>::x(d), y = Jet2<Q>::y(d);
  CHECK(inverse(Map2<Q>{x, y}) == Map2<Q>{x, y});
  CHECK(inverse(Map2<Q>{Q(2) * x, x + y}) == Map2<Q>{Q(1, 2) * x, y - Q(1, 2) * x});
  CHECK(inverse(Map2<Q>{x + y * y, y}) == Map2<Q>{x - y * y, y});
  CHECK_THROWS_AS(inverse(Map2<Q>{x, x * x}), Error);
}

TEST_CASE("weierstrass_divide") {
  const int d = 8;
  const auto x = Jet2<Q>::x(d), y = Jet2<Q>::y(d);
  auto res = weierstrass_divide(x * x, x * x);
  CHECK(res.quotient_even == x);
  CHECK(res.quotient_odd == Jet2<Q>(d));
  res = weierstrass_divide(x * x * x + x * x * y, x * x);
  CHECK(res.quotient_even == x * y);
  CHECK(res.quotient_odd == x);
  const auto w = x * x + x * x * x;
  res = weierstrass_divide(x * x, w);
  const auto back = substitute(res.quotient_even, w, y) + x * substitute(res.quotient_odd, w, y);
  CHECK(back == x * x);
  CHECK_THROWS_AS(weierstrass_divide(x, x + y * y), Error);
  CHECK_THROWS_AS(weierstrass_divide(x, x * x * x), Error);
}

TEST_CASE("implicit_solve") {
  const int d = 5;
  const auto x = Jet2<Q>::x(d), y = Jet2<Q>::y(d);
  CHECK(implicit_solve(y - x * x, Axis::y) == j1(5, {0, 0, 1}));
  // fixed-point oracle phi = -x - phi^2
  Poly phi(4);
  for (int it = 0; it < 4; ++it) {
    const Poly sq = naive_mul(phi, phi, 3);
    for (int k = 0; k <= 3; ++k) phi[k] = (k == 1 ? Q(-1) : Q(0)) - sq[k];
  }
  const auto sol = implicit_solve((y + x + y * y).with_degree(3), Axis::y);
  CHECK(coeffs_of(sol) == phi);
  CHECK(sol == j1(3, {0, -1, -1, -2}));
  CHECK(implicit_solve(y, Axis::y) == Jet1<Q>(5));
  CHECK(implicit_solve(x - y * y, Axis::x) == j1(5, {0, 0, 1}));
  CHECK_THROWS_AS(implicit_solve(x, Axis::y), Error);
}

TEST_CASE("exp and log are mutually inverse on based series") {
  std::mt19937_64 rng(5);
  const auto a = random_jet2<Q>(rng, 6, 1);
  CHECK(log_series(exp_series(a)) == a);
  CHECK_THROWS_AS(exp_series(Jet1<Q>::constant(1, 3)), Error);
}

TEST_CASE("properties in exact arithmetic") {
  std::mt19937_64 rng(2024);
  const int d = 8;
  for (int trial = 0; trial < 20; ++trial) {
    auto a1 = random_jet1<Q>(rng, d);
    a1[0] = Q(16, 81);
    CHECK(sqrt_unit(a1) * sqrt_unit(a1) == a1);
    CHECK(power(rpow_unit(a1, Q(1, 4)), 4) == a1);

    auto a2 = random_jet2<Q>(rng, d);
    a2(0, 0) = 1;
    CHECK(sqrt_unit(a2) * sqrt_unit(a2) == a2);
    CHECK(power(rpow_unit(a2, Q(1, 4)), 4) == a2);
    CHECK(a2 * reciprocal(a2) == Jet2<Q>::constant(1, d));

    auto b = random_jet1<Q>(rng, d, 1);
    if (b[1] == 0) b[1] = Q(-3, 2);
    CHECK(compose(b, inverse(b)) == Jet1<Q>::identity(d));
    CHECK(compose(inverse(b), b) == Jet1<Q>::identity(d));

    Map2<Q> g{random_jet2<Q>(rng, d, 1), random_jet2<Q>(rng, d, 1)};
    g[0](1, 0) = 1 + g[0](1, 0) * g[0](1, 0);
    g[1](0, 1) = 1 + g[1](0, 1) * g[1](0, 1);
    g[0](0, 1) = 0;
    CHECK(compose(g, inverse(g)) == identity_map<Q>(d));

    auto w = random_jet2<Q>(rng, d, 1);
    w(1, 0) = 0;
    w(2, 0) = testing_support::nonzero_rational(rng);
    const auto F = random_jet2<Q>(rng, d);
    const auto div = weierstrass_divide(F, w);
    const auto y = Jet2<Q>::y(d);
    CHECK(substitute(div.quotient_even, w, y) + Jet2<Q>::x(d) * substitute(div.quotient_odd, w, y) == F);

    auto delta = random_jet2<Q>(rng, d, 1);
    delta(0, 1) = testing_support::nonzero_rational(rng);
    const auto phi = implicit_solve(delta, Axis::y);
    CHECK(substitute(delta, Jet1<Q>::identity(d), phi) == Jet1<Q>(d));
  }
}

TEST_CASE("weierstrass resubstitution on 100 random degree-8 instances") {
  std::mt19937_64 rng(99);
  const int d = 8;
  int exact = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto w = random_jet2<Q>(rng, d, 1);
    w(1, 0) = 0;
    w(2, 0) = testing_support::nonzero_rational(rng);
    const auto F = random_jet2<Q>(rng, d);
    const auto div = weierstrass_divide(F, w);
    const auto y = Jet2<Q>::y(d);
    const auto back = substitute(div.quotient_even, w, y) + Jet2<Q>::x(d) * substitute(div.quotient_odd, w, y);
    exact += max_abs_coefficient(back - F) == 0;
  }
  CHECK(exact == 100);
}

TEST_CASE("floating mode round trips within tolerance") {
  std::mt19937_64 rng(7);
  const int d = 12;
  for (int trial = 0; trial < 10; ++trial) {
    auto b = random_jet1<double>(rng, d, 1);
    b[1] = 1.0 + std::abs(b[1]);
    CHECK(max_abs_coefficient(compose(b, inverse(b)) - Jet1<double>::identity(d)) < 1e-10);
    Map2<double> g{random_jet2<double>(rng, d, 1), random_jet2<double>(rng, d, 1)};
    g[0](1, 0) = 1.5;
    g[1](0, 1) = 1.2;
    const auto id = compose(g, inverse(g));
    CHECK(max_abs_coefficient(id[0] - Jet2<double>::x(d)) < 1e-9);
    CHECK(max_abs_coefficient(id[1] - Jet2<double>::y(d)) < 1e-9);
  }
}
