#include "germlab/germs.hpp"

#include <cmath>

#include "germlab/linear.hpp"

namespace germlab {

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::regular: return "regular";
    case MapClass::fold: return "fold";
    case MapClass::cusp: return "cusp";
    case MapClass::degenerate: return "degenerate";
  }
  return "degenerate";
}

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::submersion: return "submersion";
    case FunctionClass::morse: return "morse";
    case FunctionClass::degenerate: return "degenerate";
  }
  return "degenerate";
}

std::string to_string(SingleTag t) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "NONGENERIC"};
  return names[static_cast<int>(t)];
}

namespace {
const char* const pair_names[] = {"(I,I)^0",   "(I,I)^1", "(I,I)^2", "(II,I)", "(III,I)^0", "(III,I)^1",
                                  "(IV,I)",    "(V,I)",   "(VI,I)",  "(III,III)", "NONGENERIC"};
}

std::string to_string(PairTag t) { return pair_names[static_cast<int>(t)]; }

PairTag parse_pair_tag(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (c != ' ') compact += c;
  for (int k = 0; k <= static_cast<int>(PairTag::nongeneric); ++k)
    if (compact == pair_names[k]) return static_cast<PairTag>(k);
  throw Error(ErrorKind::Parse, "unknown pair type '" + std::string(text) + "'");
}

namespace {

template <class S>
std::string witness(const S& x) {
  return to_decimal_string(to_double(x));
}

template <class S>
bool nonzero(const S& x, double tol) {
  return !is_zero(x, tol);
}

template <class S>
Jet2<S> determinant(const Map2<S>& g) {
  return partial_x(g[0]) * partial_y(g[1]) - partial_y(g[0]) * partial_x(g[1]);
}

// v = a d/dx + b d/dy built from an adjugate row of d gamma
template <class S>
struct KernelField {
  Jet2<S> a, b;

  Jet2<S> apply(const Jet2<S>& g) const { return a * partial_x(g) + b * partial_y(g); }
};

template <class S>
KernelField<S> kernel_field(const Map2<S>& g, double tol) {
  const Jet2<S>& row = nonzero(g[0](1, 0), tol) || nonzero(g[0](0, 1), tol) ? g[0] : g[1];
  return {partial_y(row), -partial_x(row)};
}

template <class S>
Curve2<S> solve_zero_set(const Jet2<S>& F, double tol) {
  const int d = F.degree();
  const Jet1<S> t = Jet1<S>::identity(d);
  if (d >= 1 && nonzero(F(0, 1), tol)) return {t, implicit_solve(F, Axis::y, tol)};
  return {implicit_solve(F, Axis::x, tol), t};
}

bool axis_free(const std::array<double, 2>& dir, const std::array<double, 2>& normal, double tol) {
  return std::fabs(dir[0] * normal[0] + dir[1] * normal[1]) > tol;
}

template <class S>
std::array<double, 2> gradient0(const Jet2<S>& F) {
  return {to_double(F(1, 0)), to_double(F(0, 1))};
}

// (f, gamma) in fold-normal source coordinates: f∘H = alpha(x, y^2) + y beta(x, y^2)
template <class S>
struct FoldSplit {
  FoldNormalization<S> normal;
  Jet2<S> alpha, beta;
};

template <class S>
FoldSplit<S> fold_split(const Jet2<S>& f, const Map2<S>& gamma, double tol) {
  if (map_singularity_class(gamma, tol).kind != MapClass::fold) throw Error(ErrorKind::NotFold, "gamma is not a fold");
  FoldNormalization<S> normal = normalize_fold(gamma, tol);
  auto [even, odd] = split_parity_y(compose(f, normal.source));
  return {std::move(normal), std::move(even), std::move(odd)};
}

}  // namespace

template <class S>
MapSingularity map_singularity_class(const Map2<S>& gamma, double tol) {
  const Matrix2<S> J = jacobian_at_origin(gamma);
  bool rank_zero = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) rank_zero = rank_zero && is_zero(J(i, j), tol);
  if (rank_zero) return {MapClass::degenerate, "rank zero: d gamma(0) = 0"};
  const Jet2<S> delta = determinant(gamma);
  if (nonzero(delta(0, 0), tol)) return {MapClass::regular, ""};
  if (delta.degree() < 2) return {MapClass::degenerate, "jet degree too low"};
  if (is_zero(delta(1, 0), tol) && is_zero(delta(0, 1), tol))
    return {MapClass::degenerate, "singular set is not smooth (grad det d gamma(0) = 0)"};
  const KernelField<S> v = kernel_field(gamma, tol);
  const Jet2<S> v_delta = v.apply(delta);
  if (nonzero(v_delta(0, 0), tol)) return {MapClass::fold, ""};
  if (nonzero(v.apply(v_delta)(0, 0), tol)) return {MapClass::cusp, ""};
  return {MapClass::degenerate, "kernel field has contact of order >= 3 with the singular set"};
}

template <class S>
FunctionClass function_class(const Jet2<S>& f, double tol) {
  if (f.degree() >= 1 && (nonzero(f(1, 0), tol) || nonzero(f(0, 1), tol))) return FunctionClass::submersion;
  if (f.degree() >= 2 && nonzero(hessian_at_origin(f).determinant(), tol)) return FunctionClass::morse;
  return FunctionClass::degenerate;
}

template <class S>
FoldNormalization<S> normalize_fold(const Map2<S>& gamma, double tol) {
  if (map_singularity_class(gamma, tol).kind != MapClass::fold) throw Error(ErrorKind::NotFold, "gamma is not a fold");
  const int d = std::min(gamma[0].degree(), gamma[1].degree());
  const Jet2<S> x = Jet2<S>::x(d), y = Jet2<S>::y(d);

  // linear target change leaving the rank-one differential in the first row
  const Matrix2<S> J = jacobian_at_origin(gamma);
  Matrix2<S> L;
  if (nonzero(J(0, 0), tol) || nonzero(J(0, 1), tol)) {
    const S r = nonzero(J(0, 0), tol) ? S(J(1, 0) / J(0, 0)) : S(J(1, 1) / J(0, 1));
    L << S(1), S(0), S(-r), S(1);
  } else {
    L << S(0), S(1), S(1), S(0);
  }
  Map2<S> target = linear_map(L, d);
  Map2<S> g = compose(target, gamma);

  // source coordinates (g1, y) or (g1, x)
  const Map2<S> straighten{g[0], nonzero(g[0](1, 0), tol) ? y : x};
  Map2<S> source = inverse(straighten, tol);
  g = compose(g, source);

  // move the critical curve of the second component onto y = 0
  const Jet1<S> crit = implicit_solve(partial_y(g[1]), Axis::y, tol).with_degree(d);
  const Map2<S> shift{x, y + lift_x(crit)};
  source = compose(source, shift);
  Jet2<S> second = compose(g[1], shift);

  const Jet2<S> boundary = lift_x(restrict_to_x_axis(second));
  target = compose(Map2<S>{x, y - boundary}, target);
  second -= boundary;

  // second = y^2 e(x, y) with e(0) != 0; floating leftovers scale with the coefficients
  const double scale = std::max(1.0, to_double(max_abs_coefficient(second)));
  const Jet2<S> e = quotient_by_y(quotient_by_y(second, tol * scale), tol * scale);
  const S e0 = e(0, 0);
  const Jet2<S> root = sqrt_unit(Jet2<S>(e * S(S(1) / e0)));
  source = compose(source, inverse(Map2<S>{x, y * root}, tol));
  target = compose(Map2<S>{x, y * S(S(1) / e0)}, target);
  return {source, target};
}

template <class S>
Curve2<S> singular_curve(const Map2<S>& gamma, double tol) {
  return solve_zero_set(determinant(gamma), tol);
}

template <class S>
Curve2<S> zero_set_curve(const Jet2<S>& F, double tol) {
  return solve_zero_set(F, tol);
}

template <class S>
Curve2<S> double_point_curve(const Jet2<S>& f, const Map2<S>& gamma, double tol) {
  const FoldSplit<S> split = fold_split(f, gamma, tol);
  const int d = std::min(f.degree(), split.normal.source[0].degree());
  if (valuation(split.beta, tol) < 0) throw Error(ErrorKind::DegenerateBranch, "f is even under the fold involution");
  if (nonzero(split.beta(0, 0), tol)) throw Error(ErrorKind::NoDoublePoints, "(f, gamma) is regular");
  if (is_zero(split.beta(1, 0), tol))
    throw Error(ErrorKind::DegenerateBranch, "double-point branch is not a graph over the fold line");
  // beta(u, v) is reliable through total degree (d - 1) / 2
  const int reliable = std::max((d - 1) / 2, 1);
  const Jet1<S> psi = implicit_solve(split.beta.with_degree(reliable), Axis::x, tol);
  const int dc = std::max(d - 1, 1);
  const Jet1<S> s = Jet1<S>::identity(dc);
  const Curve2<S> normal{compose(psi.with_degree(dc), s * s), s};
  return compose(with_degree(split.normal.source, dc), normal);
}

template <class S>
int contact_order(const Curve2<S>& curve, const Jet2<S>& F, double tol) {
  const int order = valuation(compose(F, curve), tol);
  if (order < 0) throw Error(ErrorKind::ContactExceedsDegree, "contact persists to the truncation degree");
  return order;
}

template <class S>
Curve2<S> criminant_curve(const Jet2<S>& f, const Map2<S>& gamma, double tol) {
  const FoldSplit<S> split = fold_split(f, gamma, tol);
  const int d = std::min(f.degree(), split.normal.source[0].degree());
  const int reliable = std::max((d - 1) / 2, 1);
  const Jet2<S> a = split.alpha.with_degree(reliable + 1), b = split.beta.with_degree(reliable + 1);
  const Jet2<S> au = partial_x(a), av = partial_y(a), bu = partial_x(b), bv = partial_y(b);
  const Jet2<S> v = Jet2<S>::y(reliable);
  // singular set of the two branches alpha ± sqrt(v) beta, times -sqrt(v)
  const Jet2<S> D = (au * b + S(2) * v * (au * bv - av * bu)).with_degree(reliable);
  if (nonzero(D(0, 0), tol)) throw Error(ErrorKind::NoCriticalPoint, "fibers of f have no fold-tangency near 0");
  if (is_zero(D(1, 0), tol) && is_zero(D(0, 1), tol))
    throw Error(ErrorKind::DegenerateCritical, "tangency locus is singular at 0");
  const Map2<S> back = inverse(with_degree(split.normal.target, reliable), tol);
  return compose(back, solve_zero_set(D, tol));
}

template <class S>
std::array<double, 2> tangent_cone(const Curve2<S>& curve, double tol) {
  const int d = std::min(curve[0].degree(), curve[1].degree());
  for (int k = 1; k <= d; ++k) {
    if (nonzero(curve[0][k], tol) || nonzero(curve[1][k], tol)) {
      const double u = to_double(curve[0][k]), v = to_double(curve[1][k]);
      const double n = std::hypot(u, v);
      return {u / n, v / n};
    }
  }
  throw Error(ErrorKind::ZeroCurve, "curve vanishes to the truncation degree");
}

template <class S>
SingleType classify_single(const SingleDiagram<S>& diagram, double tol) {
  SingleType result;
  auto& checks = result.checks;
  auto fail = [&](std::string reason) {
    result.tag = SingleTag::nongeneric;
    result.reason = std::move(reason);
    return result;
  };
  auto done = [&](SingleTag tag) {
    result.tag = tag;
    return result;
  };
  const Jet2<S>& f = diagram.f;
  const Map2<S>& gamma = diagram.gamma;

  const bool based = is_zero(f(0, 0), tol) && is_zero(gamma[0](0, 0), tol) && is_zero(gamma[1](0, 0), tol);
  checks.push_back({"based at origin", based, ""});
  if (!based) return fail("diagram does not map 0 to 0");
  if (diagram.degree() < 3) return fail("jet degree below 3");

  const FunctionClass fc = function_class(f, tol);
  const MapSingularity mc = map_singularity_class(gamma, tol);
  checks.push_back({"f class", fc != FunctionClass::degenerate, to_string(fc)});
  checks.push_back({"gamma class", mc.kind != MapClass::degenerate, to_string(mc.kind)});

  if (mc.kind == MapClass::regular) {
    if (fc == FunctionClass::submersion) return done(SingleTag::I);
    if (fc == FunctionClass::morse) return done(SingleTag::II);
    return fail("f is neither a submersion nor of Morse type");
  }
  if (fc != FunctionClass::submersion) return fail("f is not a submersion");
  if (mc.kind == MapClass::degenerate) return fail("gamma is neither regular, a fold nor a cusp: " + mc.reason);

  // (f, gamma) has rank 2 iff df does not annihilate ker d gamma(0)
  const KernelField<S> field = kernel_field(gamma, tol);
  const S df_kernel = f(1, 0) * field.a(0, 0) + f(0, 1) * field.b(0, 0);
  const bool pair_regular = nonzero(df_kernel, tol);
  checks.push_back({"(f,gamma) regular", pair_regular, witness(df_kernel)});

  if (mc.kind == MapClass::cusp) {
    if (!pair_regular) return fail("(f,gamma) is not regular");
    return done(SingleTag::VI);
  }

  if (pair_regular) {
    const Jet1<S> on_fold = compose(f, singular_curve(gamma, tol));
    const bool regular = nonzero(on_fold[1], tol);
    checks.push_back({"f|S regular", regular, witness(on_fold[1])});
    if (regular) return done(SingleTag::III);
    const bool morse = on_fold.degree() >= 2 && nonzero(on_fold[2], tol);
    checks.push_back({"f|S morse", morse, on_fold.degree() >= 2 ? witness(on_fold[2]) : ""});
    if (morse) return done(SingleTag::IV);
    return fail("f restricted to S_gamma is neither regular nor of Morse type");
  }

  const FoldSplit<S> split = fold_split(f, gamma, tol);
  const S cross = split.beta.degree() >= 1 ? split.beta(1, 0) : S(0);
  const bool umbrella = nonzero(cross, tol);
  checks.push_back({"(f,gamma) whitney umbrella", umbrella, witness(cross)});
  if (!umbrella) return fail("(f,gamma) is neither regular nor a Whitney umbrella");
  // double points x = psi(y^2) with psi'(0) = -beta_v / beta_u; image tangent leaves {0} x R^2
  const S slope = -split.beta(0, 1) / cross;
  const S lift = split.alpha(1, 0) * slope + split.alpha(0, 1);
  const bool transversal = nonzero(lift, tol);
  checks.push_back({"double-point line transversal", transversal, witness(lift)});
  if (!transversal) return fail("line of double points is tangent to {0} x R^2");
  return done(SingleTag::V);
}

template <class S>
PairType classify_pair(const PairDiagram<S>& p, double tol) {
  PairType result;
  auto& checks = result.checks;
  auto fail = [&](std::string reason) {
    result.tag = PairTag::nongeneric;
    result.reason = std::move(reason);
    return result;
  };
  auto done = [&](PairTag tag) {
    result.tag = tag;
    return result;
  };

  const SingleType s1 = classify_single(p.first, tol);
  const SingleType s2 = classify_single(p.second, tol);
  checks.push_back({"first component", s1.tag != SingleTag::nongeneric, to_string(s1.tag)});
  checks.push_back({"second component", s2.tag != SingleTag::nongeneric, to_string(s2.tag)});
  if (s1.tag == SingleTag::nongeneric) return fail("first component: " + s1.reason);
  if (s2.tag == SingleTag::nongeneric) return fail("second component: " + s2.reason);

  const Jet2<S>& f1 = p.first.f;
  const Map2<S>& g1 = p.first.gamma;
  const Jet2<S>& f2 = p.second.f;
  const Map2<S>& g2 = p.second.gamma;

  try {
    auto composite = [&] { return Map2<S>{compose(f1, inverse(g1, tol)), compose(f2, inverse(g2, tol))}; };
    // second zero set pushed to the plane, as an equation F2 = 0
    auto second_zero_set = [&] { return compose(f2, inverse(g2, tol)); };
    auto discriminant = [&](const Map2<S>& g) { return compose(g, singular_curve(g, tol)); };
    auto contact_check = [&](const std::string& name, const Curve2<S>& curve, const Jet2<S>& F) {
      int order = 0;
      std::string shown;
      try {
        order = contact_order(curve, F, tol);
        shown = std::to_string(order);
      } catch (const Error&) {
        order = -1;
        shown = "exceeds degree";
      }
      checks.push_back({name, order == 1, shown});
      return order;
    };
    auto cone_check = [&](const std::string& name, const Curve2<S>& curve, const Jet2<S>& F) {
      const auto dir = tangent_cone(curve, tol);
      const auto normal = gradient0(F);
      const double pairing = dir[0] * normal[0] + dir[1] * normal[1];
      const bool ok = axis_free(dir, normal, tol);
      checks.push_back({name, ok, to_decimal_string(pairing)});
      return ok;
    };

    const SingleTag a = s1.tag, b = s2.tag;
    if (a == SingleTag::I && b == SingleTag::I) {
      const MapSingularity m = map_singularity_class(composite(), tol);
      checks.push_back({"composite map class", m.kind != MapClass::degenerate, to_string(m.kind)});
      if (m.kind == MapClass::regular) return done(PairTag::I_I_0);
      if (m.kind == MapClass::fold) return done(PairTag::I_I_1);
      if (m.kind == MapClass::cusp) return done(PairTag::I_I_2);
      return fail("composite (f1∘gamma1^-1, f2∘gamma2^-1) is degenerate: " + m.reason);
    }
    if (a == SingleTag::II && b == SingleTag::I) {
      const MapSingularity m = map_singularity_class(composite(), tol);
      checks.push_back({"composite map is a fold", m.kind == MapClass::fold, to_string(m.kind)});
      if (m.kind == MapClass::fold) return done(PairTag::II_I);
      return fail("composite (f1∘gamma1^-1, f2∘gamma2^-1) is not a fold");
    }
    if (a == SingleTag::III && b == SingleTag::I) {
      const int order = contact_check("discriminant meets second zero set", discriminant(g1), second_zero_set());
      if (order == 1) return done(PairTag::III_I_0);
      if (order == 2) return done(PairTag::III_I_1);
      return fail("discriminant of gamma1 has contact of order >= 3 with gamma2(f2^-1(0))");
    }
    if ((a == SingleTag::IV || a == SingleTag::V) && b == SingleTag::I) {
      const Jet2<S> F = second_zero_set();
      if (contact_check("discriminant transversal to second zero set", discriminant(g1), F) != 1)
        return fail("gamma1(S_gamma1) is not transversal to gamma2(f2^-1(0))");
      if (contact_check("criminant transversal to second zero set", criminant_curve(f1, g1, tol), F) != 1)
        return fail("criminant of (f1, gamma1) is not transversal to gamma2(f2^-1(0))");
      if (a == SingleTag::IV) return done(PairTag::IV_I);
      const Curve2<S> zero_image = compose(g1, zero_set_curve(f1, tol));
      if (!cone_check("tangent cone of first zero set transversal", zero_image, F))
        return fail("tangent cone of gamma1(f1^-1(0)) is not transversal to gamma2(f2^-1(0))");
      return done(PairTag::V_I);
    }
    if (a == SingleTag::VI && b == SingleTag::I) {
      if (!cone_check("tangent cone of discriminant transversal", discriminant(g1), second_zero_set()))
        return fail("tangent cone of gamma1(S_gamma1) is not transversal to gamma2(f2^-1(0))");
      return done(PairTag::VI_I);
    }
    if (a == SingleTag::III && b == SingleTag::III) {
      const auto t1 = tangent_cone(discriminant(g1), tol);
      const auto t2 = tangent_cone(discriminant(g2), tol);
      const double det = t1[0] * t2[1] - t1[1] * t2[0];
      const bool ok = std::fabs(det) > tol;
      checks.push_back({"discriminants transversal", ok, to_decimal_string(det)});
      if (ok) return done(PairTag::III_III);
      return fail("gamma1(S_gamma1) is not transversal to gamma2(S_gamma2)");
    }
  } catch (const Error& e) {
    return fail(e.what());
  }
  return fail("unsupported combination (" + to_string(s1.tag) + "," + to_string(s2.tag) + ")");
}

#define GERMLAB_GERMS_INSTANTIATE(S)                                                      \
  template MapSingularity map_singularity_class(const Map2<S>&, double);                  \
  template FunctionClass function_class(const Jet2<S>&, double);                          \
  template FoldNormalization<S> normalize_fold(const Map2<S>&, double);                   \
  template Curve2<S> singular_curve(const Map2<S>&, double);                              \
  template Curve2<S> zero_set_curve(const Jet2<S>&, double);                              \
  template Curve2<S> double_point_curve(const Jet2<S>&, const Map2<S>&, double);          \
  template int contact_order(const Curve2<S>&, const Jet2<S>&, double);                   \
  template Curve2<S> criminant_curve(const Jet2<S>&, const Map2<S>&, double);             \
  template std::array<double, 2> tangent_cone(const Curve2<S>&, double);                  \
  template SingleType classify_single(const SingleDiagram<S>&, double);                   \
  template PairType classify_pair(const PairDiagram<S>&, double);

GERMLAB_GERMS_INSTANTIATE(Rational)
GERMLAB_GERMS_INSTANTIATE(double)

}  // namespace germlab
