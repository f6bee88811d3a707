#include "germlab/webs.hpp"

#include <algorithm>
#include <cmath>

namespace germlab {

bool region_contains(WebRegion region, double u, double v) {
  switch (region) {
    case WebRegion::upper_half_plane: return v > 0;
    case WebRegion::open_quadrant: return u > 0 && v > 0;
    case WebRegion::cusp_interior: return delta_contains(u, v);
    case WebRegion::plane: return true;
  }
  return false;
}

std::string to_string(WebRegion region) {
  switch (region) {
    case WebRegion::upper_half_plane: return "{v>0}";
    case WebRegion::open_quadrant: return "{u>0, v>0}";
    case WebRegion::cusp_interior: return "{4u^3+27v^2<0}";
    case WebRegion::plane: return "R^2";
  }
  return "?";
}

FoliationConfig v_I_web(const Expr& theta, const Rational& b) {
  if (b == 0) throw Error(ErrorKind::BadModulus, "b must be nonzero");
  if (max_variable_index(theta) > 1) throw Error(ErrorKind::BadModulus, "theta must be a function of (u, v)");
  Jet2<double> jet;
  try {
    jet = taylor2<double>(theta, 2);
  } catch (const Error& e) {
    throw Error(ErrorKind::BadModulus, std::string("theta is not expandable at 0: ") + e.what());
  }
  if (std::fabs(jet(0, 0)) > 1e-12 || std::fabs(jet(1, 0)) > 1e-12 || std::fabs(jet(0, 1)) > 1e-12)
    throw Error(ErrorKind::BadModulus, "theta and its first derivatives must vanish at 0");

  const VariableSet& uv = VariableSet::plane();
  return {{parse("u + (u + v)*sqrt(v)", uv), parse("u - (u + v)*sqrt(v)", uv),
           parse("u", uv) + Expr::constant(b) * parse("v", uv) + theta},
          WebRegion::upper_half_plane};
}

namespace {

double eval_at(const Expr& f, double u, double v) { return evaluate<double>(f, {u, v}); }

double derivative(const Expr& f, double u, double v, bool along_u, double step, WebRegion region) {
  double h = step * std::max(1.0, std::fabs(along_u ? u : v));
  // keep the stencil inside the region (matters next to v = 0)
  if (!along_u && region != WebRegion::plane) h = std::min(h, 0.25 * std::fabs(v));
  if (h == 0) h = step;
  const double plus = along_u ? eval_at(f, u + h, v) : eval_at(f, u, v + h);
  const double minus = along_u ? eval_at(f, u - h, v) : eval_at(f, u, v - h);
  return (plus - minus) / (2 * h);
}

}  // namespace

double web_jacobian(const FoliationConfig& web, int i, int j, double u, double v, double step) {
  const int n = static_cast<int>(web.functions.size());
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw Error(ErrorKind::Domain, "bad foliation pair");
  const Expr& fi = web.functions[static_cast<std::size_t>(i - 1)];
  const Expr& fj = web.functions[static_cast<std::size_t>(j - 1)];
  return derivative(fi, u, v, true, step, web.region) * derivative(fj, u, v, false, step, web.region) -
         derivative(fi, u, v, false, step, web.region) * derivative(fj, u, v, true, step, web.region);
}

WebSingularSet web_singular_set(const FoliationConfig& web, int i, int j, const ScanGrid& grid) {
  if (grid.u_cells < 1 || grid.v_cells < 1 || !(grid.u_max > grid.u_min) || !(grid.v_max > grid.v_min))
    throw Error(ErrorKind::Domain, "empty scan grid");
  for (double u : {grid.u_min, grid.u_max})
    for (double v : {grid.v_min, grid.v_max})
      if (!region_contains(web.region, u, v)) throw Error(ErrorKind::Domain, "scan grid leaves the web domain");

  auto det = [&](double u, double v) { return web_jacobian(web, i, j, u, v); };
  auto at_u = [&](int k) { return grid.u_min + (grid.u_max - grid.u_min) * k / grid.u_cells; };
  auto at_v = [&](int k) { return grid.v_min + (grid.v_max - grid.v_min) * k / grid.v_cells; };

  WebSingularSet out{i, j, {}};
  // sign changes along lines v = const, then along lines u = const
  auto refine = [&](PlanePoint a, PlanePoint b, double da) {
    for (int iter = 0; iter < 200; ++iter) {
      if (std::hypot(b.u - a.u, b.v - a.v) <= 1e-10) break;
      const PlanePoint mid{(a.u + b.u) / 2, (a.v + b.v) / 2};
      const double dm = det(mid.u, mid.v);
      if (dm == 0) return mid;
      if ((dm < 0) == (da < 0)) {
        a = mid;
        da = dm;
      } else {
        b = mid;
      }
    }
    return PlanePoint{(a.u + b.u) / 2, (a.v + b.v) / 2};
  };
  auto scan_line = [&](bool horizontal, int fixed) {
    const int cells = horizontal ? grid.u_cells : grid.v_cells;
    auto point = [&](int k) {
      return horizontal ? PlanePoint{at_u(k), at_v(fixed)} : PlanePoint{at_u(fixed), at_v(k)};
    };
    PlanePoint a = point(0);
    double da = det(a.u, a.v);
    for (int k = 1; k <= cells; ++k) {
      const PlanePoint b = point(k);
      const double db = det(b.u, b.v);
      if (da == 0) {
        out.points.push_back(a);
      } else if ((da < 0) != (db < 0) && db != 0) {
        out.points.push_back(refine(a, b, da));
      }
      a = b;
      da = db;
    }
    if (da == 0) out.points.push_back(a);
  };
  for (int k = 0; k <= grid.v_cells; ++k) scan_line(true, k);
  for (int k = 0; k <= grid.u_cells; ++k) scan_line(false, k);
  return out;
}

bool delta_contains(double u, double v) {
  // relative margin so that rounded boundary points (-3t^2, -2t^3) stay outside
  const double cubic = 4 * u * u * u, square = 27 * v * v;
  return cubic + square < -1e-12 * (std::fabs(cubic) + square);
}

std::vector<PlanePoint> sample_delta(int count, std::uint64_t seed, double s_max) {
  if (count <= 0 || !(s_max > 0)) throw Error(ErrorKind::EmptySampleRegion, "no points to sample in the cusp interior");
  // R2 sequence: additive recurrence with the reciprocal powers of the plastic number
  constexpr double plastic = 1.32471795724474602596;
  constexpr double step1 = 1 / plastic, step2 = 1 / (plastic * plastic);
  std::vector<PlanePoint> points;
  points.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t n = 1; points.size() < static_cast<std::size_t>(count); ++n) {
    const double index = static_cast<double>(n + (seed % 1000003));
    double p = std::fmod(0.5 + index * step1, 1.0), q = std::fmod(0.5 + index * step2, 1.0);
    if (p <= 0 || q <= 0) continue;
    const double s = s_max * p;
    const double lambda = 2 * q - 1;
    const PlanePoint pt{-3 * s * s, 2 * lambda * s * s * s};
    if (delta_contains(pt.u, pt.v)) points.push_back(pt);
  }
  return points;
}

ViIEquivalence vi_I_equivalence_test(const Expr& theta1, const Expr& f1, const Expr& theta2, const Expr& f2,
                                     int samples, std::uint64_t seed, double tol) {
  ViIEquivalence r;
  for (const PlanePoint& p : sample_delta(samples, seed)) {
    r.max_theta_deviation = std::max(r.max_theta_deviation, std::fabs(eval_at(theta1, p.u, p.v) - eval_at(theta2, p.u, p.v)));
    r.max_f_deviation = std::max(r.max_f_deviation, std::fabs(eval_at(f1, p.u, p.v) - eval_at(f2, p.u, p.v)));
  }
  r.equivalent = r.max_theta_deviation <= tol && r.max_f_deviation <= tol;
  return r;
}

WebDomain web_domain(PairTag type) {
  switch (type) {
    case PairTag::III_III: return {4, WebRegion::open_quadrant, ""};
    case PairTag::III_I_0:
    case PairTag::III_I_1: return {3, WebRegion::upper_half_plane, ""};
    case PairTag::IV_I: return {3, WebRegion::upper_half_plane, "the v-axis {u=0, v>0}"};
    case PairTag::V_I: return {3, WebRegion::upper_half_plane, "S12 = {u+3v=0, v>0} and the zero sets of det J(f3, f1), det J(f3, f2)"};
    case PairTag::VI_I: return {4, WebRegion::cusp_interior, ""};
    default: break;
  }
  throw Error(ErrorKind::NoWeb, "no web structure is attached to " + to_string(type));
}

}  // namespace germlab
