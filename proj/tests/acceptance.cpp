// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "germlab/cli.hpp"
#include "germlab/moduli.hpp"
#include "germlab/normal_forms.hpp"
#include "germlab/render.hpp"
#include "germlab/webs.hpp"
#include "support.hpp"

using namespace germlab;
using Q = Rational;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* pattern, double value) {
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, pattern, value);
  return buffer;
}

struct CatalogCase {
  PairTag tag;
  const char* theta;
  int sign = 1;
};

// theta = y wherever a nonzero slope is required, 0 otherwise
const std::vector<CatalogCase> catalog_cases{
    {PairTag::I_I_0, "0"},   {PairTag::I_I_1, "0"},       {PairTag::I_I_2, "0"},
    {PairTag::II_I, "0", 1}, {PairTag::II_I, "0", -1},    {PairTag::III_I_0, "0"},
    {PairTag::III_I_1, "y"}, {PairTag::IV_I, "y"},        {PairTag::V_I, "y"},
    {PairTag::VI_I, "0"},    {PairTag::III_III, "0"},     {PairTag::III_III, "x*y"},
};

PairExpr catalog_expr(const CatalogCase& c) {
  CatalogModuli moduli;
  moduli.theta = parse(c.theta, VariableSet::source());
  moduli.morse_sign = c.sign;
  return catalog(c.tag, moduli);
}

std::string case_name(const CatalogCase& c) {
  return to_string(c.tag) + (c.sign < 0 ? "-" : "") + "[theta=" + c.theta + "]";
}

Outcome catalog_fixed_point() {
  const auto start = Clock::now();
  std::string misses;
  for (const auto& c : catalog_cases) {
    const PairType type = classify_pair(to_jets<Q>(catalog_expr(c), 12));
    if (type.tag != c.tag) misses += " " + case_name(c) + "->" + to_string(type.tag);
  }
  const double elapsed = seconds_since(start);
  const bool ok = misses.empty() && elapsed < 5;
  return {ok, std::to_string(catalog_cases.size()) + " forms, " + fmt("%.2fs", elapsed) +
                  (misses.empty() ? "" : ", mismatches:" + misses)};
}

Outcome perturbation_invariance() {
  std::mt19937_64 rng(2024);
  int failures = 0, total = 0;
  std::string first_failure;
  for (const auto& c : catalog_cases) {
    const PairDiagram<double> base = to_jets<double>(catalog_expr(c), 12);
    for (int trial = 0; trial < 50; ++trial, ++total) {
      const PairType type = classify_pair(testing_support::perturb_pair(rng, base));
      if (type.tag == c.tag) continue;
      ++failures;
      if (first_failure.empty()) first_failure = ", first: " + case_name(c) + " -> " + to_string(type.tag) + " (" + type.reason + ")";
    }
  }
  return {failures == 0, std::to_string(total) + " perturbations at degree 12, " + std::to_string(failures) +
                             " failures" + first_failure};
}

Outcome formal_functional_equation() {
  const auto start = Clock::now();
  const std::vector<Jet1<Q>> bs{Jet1<Q>(24, {1}), Jet1<Q>(24, {1, 1}), Jet1<Q>(24, {1, -1, 2, -5})};
  bool ok = true;
  for (const auto& b : bs) {
    const Jet1<Q> a = solve_moduli_formal(b, 24);
    ok = ok && max_abs_coefficient(moduli_residual(b, a)) == 0;
    ok = ok && a[0] == 1 && a[1] == -b[1] / 2;
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed < 2, "N = 24, 3 series, " + fmt("%.2fs", elapsed)};
}

Outcome numerical_product() {
  const auto triple = make_triple(SmoothFunction1D<double>{parse("1 + flat(t)", VariableSet::line())});
  const std::vector<double> grid = uniform_grid(0.4, 201);
  const std::function<double(const double&)> b = [&](const double& t) { return triple.b(t); };
  int max_factors = 0;
  bool tail = true;
  const std::function<double(const double&)> a = [&](const double& x) {
    const auto evaluation = a_product(triple, x);
    max_factors = std::max(max_factors, evaluation.report.factors);
    tail = tail && evaluation.report.tail_decay_holds;
    return evaluation.value;
  };
  const double residual = functional_equation_residual(b, a, std::span<const double>(grid));
  return {residual < 1e-9 && max_factors <= 6 && tail,
          "max residual " + fmt("%.3e", residual) + ", factors <= " + std::to_string(max_factors) +
              ", tail decay " + (tail ? "holds" : "violated")};
}

Outcome formal_numeric_cross_check() {
  const auto triple = make_triple(SmoothFunction1D<HighPrecision>{parse("1 + t", VariableSet::line())});
  std::vector<HighPrecision> xs;
  for (int k = 1; k <= 5; ++k) xs.push_back(HighPrecision(k) / 100);
  const auto check = cross_check_formal(triple, Jet1<Q>(12, {1, 1}), 12, std::span<const HighPrecision>(xs));
  const double slope = check.loglog_slope.convert_to<double>();
  return {slope >= 12.5, "log-log slope " + fmt("%.4f", slope)};
}

Outcome chain_soundness() {
  std::mt19937_64 rng(606);
  constexpr int d = 10;
  int sound = 0;
  std::string first_failure;
  for (int trial = 0; trial < 25; ++trial) {
    // theta = x y (random series), so theta vanishes on both axes
    Jet2<Q> theta = Jet2<Q>::x(d) * Jet2<Q>::y(d) * testing_support::random_jet2<Q>(rng, d);
    PairDiagram<Q> base = to_jets<Q>(catalog(PairTag::III_III), d);
    base.second.f = base.second.f + theta;
    const PairDiagram<Q> input = testing_support::perturb_pair(rng, base);
    try {
      const auto result = reduce_III_III(input);
      const bool ok = verify_chain(input, result.chain, result.output) == 0 &&
                      restrict_to_x_axis(result.theta) == Jet1<Q>(d) && restrict_to_y_axis(result.theta) == Jet1<Q>(d);
      sound += ok;
      if (!ok && first_failure.empty()) first_failure = ", trial " + std::to_string(trial) + " unsound";
    } catch (const Error& e) {
      if (first_failure.empty()) first_failure = ", trial " + std::to_string(trial) + ": " + e.what();
    }
  }
  return {sound == 25, std::to_string(sound) + "/25 chains exact at degree 10" + first_failure};
}

Outcome web_singular_fit() {
  const FoliationConfig web = v_I_web(Expr::constant(0), 1);
  const ScanGrid grid{-1.5, 0.5, 0.01, 0.4, 200, 200};
  const WebSingularSet set = web_singular_set(web, 1, 2, grid);
  double worst = 0;
  bool inside = true;
  for (const auto& p : set.points) {
    worst = std::max(worst, std::fabs(p.u + 3 * p.v));
    inside = inside && p.v >= 0.01 && p.v <= 0.4;
  }
  return {!set.points.empty() && inside && worst < 1e-6,
          std::to_string(set.points.size()) + " points, max |u + 3v| " + fmt("%.3e", worst)};
}

Outcome vi_I_verdicts() {
  const VariableSet& uv = VariableSet::plane();
  const Expr theta = parse("u*v + v^2", uv), f = parse("u + v + u^2", uv);
  const auto start = Clock::now();
  const bool same = vi_I_equivalence_test(theta, f, theta, f, 2000).equivalent;
  const bool shifted = vi_I_equivalence_test(theta, f, theta + parse("u^2", uv), f, 2000).equivalent;
  const bool bump = vi_I_equivalence_test(theta, f, theta, f + parse("flat(u + sqrt(u^2))", uv), 2000).equivalent;
  const double elapsed = seconds_since(start);
  return {same && !shifted && bump && elapsed < 2,
          std::string("equal ") + (same ? "equivalent" : "NOT equivalent") + ", +u^2 " +
              (shifted ? "equivalent" : "not equivalent") + ", flat bump " + (bump ? "equivalent" : "NOT equivalent") +
              ", " + fmt("%.3fs", elapsed)};
}

// [t^n] of the inverse of t + t^2 by Lagrange: (1/n) [s^(n-1)] (1 + s)^(-n)
Q lagrange_coefficient(int n) {
  Q binomial = 1;  // C(-n, n-1) built up term by term
  for (int k = 0; k < n - 1; ++k) binomial = binomial * Q(-n - k) / Q(k + 1);
  return binomial / Q(n);
}

Outcome series_kernels() {
  const Jet1<Q> w = inverse(Jet1<Q>(8, {0, 1, 1}));
  bool inversion = w[0] == 0;
  for (int n = 1; n <= 8; ++n) inversion = inversion && w[n] == lagrange_coefficient(n);

  std::mt19937_64 rng(909);
  constexpr int d = 8;
  int exact = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto divisor = testing_support::random_jet2<Q>(rng, d, 1);
    divisor(1, 0) = 0;
    divisor(2, 0) = testing_support::nonzero_rational(rng);
    const auto F = testing_support::random_jet2<Q>(rng, d);
    const auto division = weierstrass_divide(F, divisor);
    const auto y = Jet2<Q>::y(d);
    const auto back = substitute(division.quotient_even, divisor, y) + Jet2<Q>::x(d) * substitute(division.quotient_odd, divisor, y);
    exact += max_abs_coefficient(back - F) == 0;
  }
  return {inversion && exact == 100, std::string("Catalan inversion ") + (inversion ? "matches" : "differs") +
                                         ", division exact on " + std::to_string(exact) + "/100"};
}

Outcome rendering_audit() {
  const std::vector<double> levels{-0.2, 0, 0.2};
  RenderOptions options;
  options.step = 0.04;
  double worst = 0;
  std::size_t vertices = 0;
  bool identical = true;
  for (const auto& c : catalog_cases) {
    const PairExpr pair = catalog_expr(c);
    const std::vector<SingleExpr> components{pair.first, pair.second};
    const CurveFamily family = render_family(components, levels, options);
    for (const auto& line : family.polylines) {
      const SingleExpr& d = components[static_cast<std::size_t>(line.component - 1)];
      for (const auto& v : line.vertices) {
        // recompute rather than trust the stored residual
        worst = std::max(worst, std::fabs(evaluate<double>(d.f, {v.source.u, v.source.v}) - line.t));
        ++vertices;
      }
    }
    const CurveFamily again = render_family(components, levels, options);
    identical = identical && to_svg(family, options.view) == to_svg(again, options.view) &&
                to_csv(family) == to_csv(again);
  }

  // the command line path, twice
  auto cli_bytes = [] {
    std::ostringstream out, err;
    cli::run({"germlab", "render", "--type", "(V,I)", "--theta", "y", "--levels=-0.2,0,0.2", "--format", "svg"}, out, err);
    return out.str();
  };
  const std::string first = cli_bytes();
  identical = identical && !first.empty() && first == cli_bytes();

  return {vertices > 0 && worst <= 1e-6 && identical,
          std::to_string(vertices) + " vertices, max |f - t| " + fmt("%.3e", worst) + ", bytes " +
              (identical ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"catalog fixed point", catalog_fixed_point},
      {"coordinate-change invariance", perturbation_invariance},
      {"formal functional equation", formal_functional_equation},
      {"numerical product", numerical_product},
      {"formal/numeric cross-check", formal_numeric_cross_check},
      {"chain soundness", chain_soundness},
      {"web singular set", web_singular_fit},
      {"(VI,I) equivalence verdicts", vi_I_verdicts},
      {"series kernel oracles", series_kernels},
      {"rendering audit", rendering_audit},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw ") + e.what()};
    }
    failed += !outcome.passed;
    std::printf("criterion %2zu %-30s %s  (%s; %.2fs)\n", k + 1, criteria[k].first, outcome.passed ? "PASS" : "FAIL",
                outcome.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
