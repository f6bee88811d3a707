#pragma once

#include <string>
#include <vector>

#include "germlab/diagrams.hpp"
#include "germlab/webs.hpp"

namespace germlab {

struct Rect {
  double x_min = -1, x_max = 1;
  double y_min = -1, y_max = 1;
};

struct Polyline {
  std::vector<PlanePoint> points;
  bool closed = false;  // last point repeats the first
};

/// Marching squares on {f = t} over `domain` with cells of side `step`; vertices refined by bisection
/// along cell edges. f is a function of the first two variables.
std::vector<Polyline> trace_level_curve(const Expr& f, double t, const Rect& domain, double step);

struct TracedVertex {
  PlanePoint source;  // witness with f(source) ~ t
  PlanePoint image;   // gamma(source)
  double residual = 0;
};

struct LevelPolyline {
  int component = 1;
  double t = 0;
  bool closed = false;
  std::vector<TracedVertex> vertices;
};

/// gamma_i(f_i^{-1}(t)) for each component and level, ordered by (component, t).
struct CurveFamily {
  std::vector<double> levels;
  std::vector<LevelPolyline> polylines;
};

struct RenderOptions {
  Rect source;        // where f^{-1}(t) is traced
  Rect view;          // target window mapped onto the 1000 x 1000 canvas
  double step = 0.02;
};

CurveFamily render_family(const std::vector<SingleExpr>& components, const std::vector<double>& levels,
                          const RenderOptions& options);

/// Largest |f(source) - t| over all stored witnesses.
double max_residual(const CurveFamily& family);

std::string to_svg(const CurveFamily& family, const Rect& view);
std::string to_csv(const CurveFamily& family);

}  // namespace germlab
