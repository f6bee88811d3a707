#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "germlab/expr.hpp"
#include "germlab/germs.hpp"

namespace germlab {

enum class WebRegion {
  upper_half_plane,    // v > 0
  open_quadrant,       // u > 0, v > 0
  cusp_interior,       // 4u^3 + 27v^2 < 0
  plane,               // no restriction
};

bool region_contains(WebRegion region, double u, double v);
std::string to_string(WebRegion region);

/// Functions over {u, v} whose level sets form the web.
struct FoliationConfig {
  std::vector<Expr> functions;
  WebRegion region = WebRegion::plane;
};

struct PlanePoint {
  double u = 0;
  double v = 0;
};

struct WebSingularSet {
  int first = 0;
  int second = 0;
  std::vector<PlanePoint> points;
};

struct ScanGrid {
  double u_min = -1, u_max = 1;
  double v_min = 0.01, v_max = 0.4;
  int u_cells = 200, v_cells = 200;
};

/// f1 = u + (u+v) sqrt(v), f2 = u - (u+v) sqrt(v), f3 = u + b v + theta on {v > 0}.
FoliationConfig v_I_web(const Expr& theta, const Rational& b = 1);

/// det of the Jacobian of (f_i, f_j), by central differences with step `step` (scaled to the point).
double web_jacobian(const FoliationConfig& web, int i, int j, double u, double v, double step = 1e-6);

/// Zeros of det J(f_i, f_j): sign changes along grid lines refined by bisection to 1e-10. Indices are 1-based.
WebSingularSet web_singular_set(const FoliationConfig& web, int i, int j, const ScanGrid& grid = {});

bool delta_contains(double u, double v);

/// Points u = -3 s^2, v = 2 lambda s^3 with s in (0, s_max], |lambda| < 1 from an R2 low-discrepancy sequence.
std::vector<PlanePoint> sample_delta(int count, std::uint64_t seed, double s_max = 0.3);

struct ViIEquivalence {
  bool equivalent = false;
  double max_theta_deviation = 0;
  double max_f_deviation = 0;
};

/// Restrictions of (theta, f) to the cusp interior agree up to `tol` on `samples` points.
ViIEquivalence vi_I_equivalence_test(const Expr& theta1, const Expr& f1, const Expr& theta2, const Expr& f2,
                                     int samples = 2000, std::uint64_t seed = 0, double tol = 1e-8);

struct WebDomain {
  int multiplicity = 0;
  WebRegion region = WebRegion::plane;
  std::string singular_subset;  // empty if none
};

WebDomain web_domain(PairTag type);

}  // namespace germlab
