#include "germlab/normal_forms.hpp"

#include <cmath>

namespace germlab {

template <class S>
CoordinateChangeChain<S> then(const CoordinateChangeChain<S>& first, const CoordinateChangeChain<S>& second) {
  return {compose(second.h, first.h), compose(second.H1, first.H1), compose(second.K, first.K),
          compose(second.H2, first.H2), compose(second.k, first.k)};
}

template <class S>
PairDiagram<S> apply_chain(const PairDiagram<S>& input, const CoordinateChangeChain<S>& c) {
  const Map2<S> H1inv = inverse(c.H1);
  const Map2<S> H2inv = inverse(c.H2);
  PairDiagram<S> out;
  out.first.f = compose(c.h, compose(input.first.f, H1inv));
  out.first.gamma = compose(c.K, compose(input.first.gamma, H1inv));
  out.second.f = compose(c.k, compose(input.second.f, H2inv));
  out.second.gamma = compose(c.K, compose(input.second.gamma, H2inv));
  return out;
}

template <class S>
S verify_chain(const PairDiagram<S>& in, const CoordinateChangeChain<S>& c, const PairDiagram<S>& out) {
  S worst = 0;
  auto note = [&](const Jet2<S>& r) {
    const S m = max_abs_coefficient(r);
    if (m > worst) worst = m;
  };
  note(compose(c.h, in.first.f) - compose(out.first.f, c.H1));
  note(compose(c.k, in.second.f) - compose(out.second.f, c.H2));
  const Map2<S> g1 = compose(c.K, in.first.gamma), g1out = compose(out.first.gamma, c.H1);
  const Map2<S> g2 = compose(c.K, in.second.gamma), g2out = compose(out.second.gamma, c.H2);
  for (int i = 0; i < 2; ++i) {
    note(g1[i] - g1out[i]);
    note(g2[i] - g2out[i]);
  }
  return worst;
}

// ---- catalog -------------------------------------------------------------------

namespace {

Expr src(std::string_view text) { return parse(text, VariableSet::source()); }

[[noreturn]] void violated(PairTag t, const std::string& what) {
  throw Error(ErrorKind::ModuliConstraintViolated, to_string(t) + ": " + what);
}

// Moduli are checked on their degree-8 floating jets plus a few samples of the boundary restrictions.
void validate_theta(PairTag t, const Expr& theta, bool needs_slope, bool forbid_three, bool both_axes) {
  if (max_variable_index(theta) > 1) violated(t, "theta must be a function of (x, y)");
  Jet2<double> jet;
  try {
    jet = taylor2<double>(theta, 8);
  } catch (const Error& e) {
    violated(t, std::string("theta is not expandable at 0 (") + e.what() + ")");
  }
  if (std::fabs(jet(0, 0)) > 1e-12) violated(t, "theta(0) = 0 required");
  auto vanishes_on = [&](bool x_axis) {
    const Jet1<double> r = x_axis ? restrict_to_x_axis(jet) : restrict_to_y_axis(jet);
    if (max_abs_coefficient(r) > 1e-12) return false;
    for (double s : {-0.2, -0.1, 0.05, 0.1, 0.2}) {
      try {
        const double value = x_axis ? evaluate<double>(theta, {s, 0.0}) : evaluate<double>(theta, {0.0, s});
        if (std::fabs(value) > 1e-12) return false;
      } catch (const Error&) {
      }
    }
    return true;
  };
  if (!vanishes_on(true)) violated(t, "theta(x, 0) = 0 required");
  if (both_axes && !vanishes_on(false)) violated(t, "theta(0, y) = 0 required");
  const double slope = jet(0, 1);
  if (needs_slope && std::fabs(slope) <= 1e-12) violated(t, "d theta/dy(0) != 0 required");
  if (forbid_three && std::fabs(slope - 3) <= 1e-12) violated(t, "d theta/dy(0) = 3 forbidden");
}

}  // namespace

PairExpr catalog(PairTag type, const CatalogModuli& m) {
  const SingleExpr identity_second{src("x"), src("x"), src("y")};
  auto with_theta = [&](const char* base) { return SingleExpr{src(base) + m.theta, src("x"), src("y")}; };
  const SingleExpr fold_first{src("x + y"), src("x"), src("y^2")};
  switch (type) {
    case PairTag::I_I_0: return {{src("y"), src("x"), src("y")}, identity_second};
    case PairTag::I_I_1: return {{src("y"), src("x"), src("y")}, {src("x^2 + y"), src("x"), src("y")}};
    case PairTag::I_I_2: return {{src("y"), src("x"), src("y")}, {src("x^3 + x*y + y"), src("x"), src("y")}};
    case PairTag::II_I:
      if (m.morse_sign != 1 && m.morse_sign != -1) violated(type, "sign must be +1 or -1");
      return {{src(m.morse_sign > 0 ? "x^2 + y^2" : "x^2 - y^2"), src("x"), src("y")}, identity_second};
    case PairTag::III_I_0:
      validate_theta(type, m.theta, false, false, false);
      return {fold_first, with_theta("x")};
    case PairTag::III_I_1:
      validate_theta(type, m.theta, true, false, false);
      return {fold_first, with_theta("x^2")};
    case PairTag::IV_I:
      validate_theta(type, m.theta, true, false, false);
      return {{src("x^2 + y"), src("x"), src("y^2")}, with_theta("x")};
    case PairTag::V_I:
      validate_theta(type, m.theta, true, true, false);
      return {{src("x + x*y + y^3"), src("x"), src("y^2")}, with_theta("x")};
    case PairTag::VI_I: {
      validate_theta(type, m.theta, false, false, false);
      if (max_variable_index(m.alpha) > 1) violated(type, "alpha must be a function of (u, v)");
      try {
        if (std::fabs(taylor2<double>(m.alpha, 1)(0, 0)) > 1e-12) violated(type, "alpha(0) = 0 required");
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ModuliConstraintViolated) throw;
        violated(type, std::string("alpha is not expandable at 0 (") + e.what() + ")");
      }
      const Expr cusp_u = src("x"), cusp_v = src("y^3 + x*y");
      return {{src("y") + substitute(m.alpha, {cusp_u, cusp_v}), cusp_u, cusp_v}, with_theta("x")};
    }
    case PairTag::III_III:
      validate_theta(type, m.theta, false, false, true);
      return {fold_first, {src("x + y") + m.theta, src("x^2"), src("y")}};
    case PairTag::nongeneric: break;
  }
  throw Error(ErrorKind::WrongType, "no normal form for NONGENERIC");
}

// ---- reductions ----------------------------------------------------------------

namespace {

template <class S>
Map2<S> standard_fold(int d, bool second) {
  const Jet2<S> x = Jet2<S>::x(d), y = Jet2<S>::y(d);
  return second ? Map2<S>{x * x, y} : Map2<S>{x, y * y};
}

template <class S>
CoordinateChangeChain<S> scaling_chain(const S& A, const S& B, const S& line, int d) {
  // constant A, B and h(t) = line * t
  CoordinateChangeChain<S> c =
      compatible_diffeo(Jet2<S>::constant(A, d), Jet2<S>::constant(B, d), d);
  c.h = Jet1<S>::identity(d) * line;
  return c;
}

}  // namespace

template <class S>
CoordinateChangeChain<S> compatible_diffeo(const Jet2<S>& A, const Jet2<S>& B, int d) {
  if (is_zero(A(0, 0)) || is_zero(B(0, 0))) throw Error(ErrorKind::NonUnit, "A(0) and B(0) must be nonzero");
  const Jet2<S> a = A.with_degree(d), b = B.with_degree(d);
  const Jet2<S> x = Jet2<S>::x(d), y = Jet2<S>::y(d);
  const Jet2<S> a1 = compose(a, standard_fold<S>(d, false)), b1 = compose(b, standard_fold<S>(d, false));
  const Jet2<S> a2 = compose(a, standard_fold<S>(d, true)), b2 = compose(b, standard_fold<S>(d, true));
  CoordinateChangeChain<S> c = CoordinateChangeChain<S>::identity(d);
  c.H1 = {x * a1 * a1, y * b1};
  c.K = {x * a * a, y * b * b};
  c.H2 = {x * a2, y * b2 * b2};
  return c;
}

template <class S>
CoordinateChangeChain<S> reduce_fold_bigerm(const Map2<S>& gamma1, const Map2<S>& gamma2, double tol) {
  if (map_singularity_class(gamma1, tol).kind != MapClass::fold ||
      map_singularity_class(gamma2, tol).kind != MapClass::fold)
    throw Error(ErrorKind::NotFold, "both maps must be folds");
  const int d = std::min({gamma1[0].degree(), gamma1[1].degree(), gamma2[0].degree(), gamma2[1].degree()});
  const Jet2<S> x = Jet2<S>::x(d), y = Jet2<S>::y(d);

  const FoldNormalization<S> first = normalize_fold(with_degree(gamma1, d), tol);
  const Map2<S> g2 = compose(first.target, with_degree(gamma2, d));
  // the second discriminant is transversal to {v = 0} iff v∘gamma2 is a submersion
  const bool use_x = !is_zero(g2[1](0, 1), tol);
  if (!use_x && is_zero(g2[1](1, 0), tol))
    throw Error(ErrorKind::DiscriminantsTangent, "discriminants of gamma1 and gamma2 are tangent");
  const Map2<S> straighten{use_x ? x : y, g2[1]};
  const Jet2<S> w = compose(g2[0], inverse(straighten, tol));

  // x^2 = A(w, y) + 2 x B(w, y)
  const Division<S> division = weierstrass_divide(Jet2<S>(x * x), w, tol);
  const Jet2<S>& A = division.quotient_even;
  const Jet2<S> B = division.quotient_odd * S(S(1) / S(2));
  const Map2<S> psi{A + B * B, y};
  const Map2<S> phi1{compose(psi[0], standard_fold<S>(d, false)), y};
  const Map2<S> phi2{x - compose(B, Map2<S>{w, y}), y};

  CoordinateChangeChain<S> c = CoordinateChangeChain<S>::identity(d);
  c.K = compose(psi, first.target);
  c.H1 = compose(phi1, inverse(first.source, tol));
  c.H2 = compose(phi2, straighten);
  return c;
}

template <class S>
StageOneResult<S> reduce_III_III_stage1(const PairDiagram<S>& p, double tol) {
  const PairType type = classify_pair(p, tol);
  if (type.tag != PairTag::III_III) throw Error(ErrorKind::WrongType, "expected (III,III), got " + to_string(type.tag));
  const int d = std::min(p.first.degree(), p.second.degree());
  const Jet1<S> t = Jet1<S>::identity(d);

  CoordinateChangeChain<S> chain = reduce_fold_bigerm(p.first.gamma, p.second.gamma, tol);
  PairDiagram<S> cur = apply_chain(p, chain);
  auto step = [&](const CoordinateChangeChain<S>& c) {
    cur = apply_chain(cur, c);
    chain = then(chain, c);
  };

  // f1(0, y) = y
  {
    CoordinateChangeChain<S> c = CoordinateChangeChain<S>::identity(d);
    c.h = inverse(restrict_to_y_axis(cur.first.f), tol);
    step(c);
  }
  // f1 = x a(x, y^2) + y b(x, y^2); scale so that a(0) = 1 (this also fixes its sign)
  auto split_first = [&] {
    auto [even, odd] = split_parity_y(cur.first.f);
    return std::pair{quotient_by_x(even, tol), odd};
  };
  {
    const S lead = split_first().first(0, 0);
    step(scaling_chain<S>(lead, lead, lead, d));
  }
  {
    const auto [a, b] = split_first();
    step(compatible_diffeo(sqrt_unit(a), b, d));
  }

  // second function: make d f/dy (0) positive, then balance the linear part with real cube roots
  if (cur.second.f(0, 1) < 0) {
    CoordinateChangeChain<S> c = CoordinateChangeChain<S>::identity(d);
    c.k = -t;
    step(c);
  }
  {
    const S fx = cur.second.f(1, 0), fy = cur.second.f(0, 1);
    const S c = real_root<S>(S(fx / fy), 3);
    const S a = S(1) / (c * c);
    CoordinateChangeChain<S> scale = scaling_chain<S>(S(S(1) / c), a, a, d);
    scale.k = t * S(a * a / fy);
    step(scale);
  }
  return {cur.second.f, chain, cur};
}

template <class S>
Jet1<S> b_invariant(const Jet2<S>& f, double tol) {
  const Jet1<S> along_x = restrict_to_x_axis(f), along_y = restrict_to_y_axis(f);
  if (f.degree() < 1 || is_zero(along_x[1], tol) || is_zero(along_y[1], tol))
    throw Error(ErrorKind::BoundaryDegenerate, "f(t,0) and f(0,t) need nonzero linear terms");
  const Jet1<S> q = compose(inverse(along_y, tol), along_x);
  return quotient_by_t(q, tol).with_degree(f.degree() - 1);
}

template <class S>
Jet1<S> moduli_residual(const Jet1<S>& b, const Jet1<S>& a) {
  const int n = std::min(a.degree(), b.degree());
  const Jet1<S> t = Jet1<S>::identity(n);
  const Jet1<S> an = a.with_degree(n), bn = b.with_degree(n);
  return compose(an, power(t, 4)) - bn * bn * power(compose(an, t * bn), 4);
}

template <class S>
Jet1<S> solve_moduli_formal(const Jet1<S>& b, int N) {
  if (!is_zero(b[0] - S(1))) throw Error(ErrorKind::Domain, "b(0) = 1 required");
  Jet1<S> a(N);
  a[0] = 1;
  for (int k = 1; k <= N; ++k) {
    // with a_k = 0 the t^k coefficient of b^2 a^4(t b) is P_k; the true one is P_k + 4 a_k
    const Jet1<S> t = Jet1<S>::identity(k);
    const Jet1<S> bk = b.with_degree(k);
    const S P = (bk * bk * power(compose(a.with_degree(k), t * bk), 4))[k];
    const S lhs = k % 4 == 0 ? a[k / 4] : S(0);
    a[k] = (lhs - P) / S(4);
  }
  return a;
}

template <class S>
CoordinateChangeChain<S> build_equivalence(const Jet2<S>& f, const Jet1<S>& a, double tol) {
  const int d = f.degree();
  const Jet1<S> b = b_invariant(f, tol);
  if (max_abs_coefficient(moduli_residual(b, a)) > S(tol) || !is_zero(a[0] - S(1), tol))
    throw Error(ErrorKind::NotASolution, "a does not solve a(t^4) = b(t)^2 a(t b(t))^4 with a(0) = 1");
  const Jet1<S> t = Jet1<S>::identity(d);
  const Jet1<S> ad = a.with_degree(d);
  const Jet1<S> h = t * compose(ad, t * t);

  // h(x + y) = x alpha(x, y^2) + y beta(x, y^2)
  auto [even, odd] = split_parity_y(compose(h, Jet2<S>(Jet2<S>::x(d) + Jet2<S>::y(d))));
  const Jet2<S> A = sqrt_unit(quotient_by_x(even, tol));
  const Jet2<S> B = odd - lift_y(restrict_to_y_axis(odd)) + lift_y(ad);

  CoordinateChangeChain<S> c = compatible_diffeo(A, B, d);
  c.h = h;
  c.k = compose(Jet1<S>(t * sqrt_unit(compose(ad, power(t, 4)))), inverse(restrict_to_x_axis(f), tol));
  return c;
}

template <class S>
NormalFormResult<S> reduce_III_III(const PairDiagram<S>& p, double tol) {
  const StageOneResult<S> stage = reduce_III_III_stage1(p, tol);
  const Jet1<S> b = b_invariant(stage.f, tol);
  const Jet1<S> a = solve_moduli_formal(b, b.degree());
  const CoordinateChangeChain<S> last = build_equivalence(stage.f, a, tol);
  NormalFormResult<S> r;
  r.pair_type = PairTag::III_III;
  r.output = apply_chain(stage.diagram, last);
  r.chain = then(stage.chain, last);
  const int d = r.output.second.f.degree();
  r.theta = r.output.second.f - Jet2<S>::x(d) - Jet2<S>::y(d);
  return r;
}

#define GERMLAB_NF_INSTANTIATE(S)                                                                             \
  template CoordinateChangeChain<S> then(const CoordinateChangeChain<S>&, const CoordinateChangeChain<S>&);   \
  template PairDiagram<S> apply_chain(const PairDiagram<S>&, const CoordinateChangeChain<S>&);               \
  template S verify_chain(const PairDiagram<S>&, const CoordinateChangeChain<S>&, const PairDiagram<S>&);    \
  template CoordinateChangeChain<S> compatible_diffeo(const Jet2<S>&, const Jet2<S>&, int);                  \
  template CoordinateChangeChain<S> reduce_fold_bigerm(const Map2<S>&, const Map2<S>&, double);              \
  template StageOneResult<S> reduce_III_III_stage1(const PairDiagram<S>&, double);                           \
  template Jet1<S> b_invariant(const Jet2<S>&, double);                                                      \
  template Jet1<S> solve_moduli_formal(const Jet1<S>&, int);                                                 \
  template Jet1<S> moduli_residual(const Jet1<S>&, const Jet1<S>&);                                          \
  template CoordinateChangeChain<S> build_equivalence(const Jet2<S>&, const Jet1<S>&, double);               \
  template NormalFormResult<S> reduce_III_III(const PairDiagram<S>&, double);

GERMLAB_NF_INSTANTIATE(Rational)
GERMLAB_NF_INSTANTIATE(double)

}  // namespace germlab
