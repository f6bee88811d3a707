#include "germlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace germlab {

namespace {

constexpr const char* kHeader = "# germlab render v1";

double value_at(const Expr& f, double x, double y) {
  try {
    return evaluate<double>(f, {x, y});
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

PlanePoint bisect_edge(const Expr& f, double t, PlanePoint a, PlanePoint b, double ga) {
  for (int iter = 0; iter < 200; ++iter) {
    const PlanePoint mid{(a.u + b.u) / 2, (a.v + b.v) / 2};
    if (mid.u == a.u && mid.v == a.v) break;
    if (mid.u == b.u && mid.v == b.v) break;
    const double gm = value_at(f, mid.u, mid.v) - t;
    if (std::isnan(gm)) break;
    if (std::fabs(gm) <= 1e-12) return mid;
    if ((gm >= 0) == (ga >= 0)) {
      a = mid;
      ga = gm;
    } else {
      b = mid;
    }
  }
  return std::fabs(value_at(f, a.u, a.v) - t) <= std::fabs(value_at(f, b.u, b.v) - t) ? a : b;
}

bool coincide(const PlanePoint& a, const PlanePoint& b) {
  return std::fabs(a.u - b.u) + std::fabs(a.v - b.v) <= 1e-10;
}

std::string fixed3(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3f", x);
  std::string s = buffer;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string number(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", x);
  std::string s = buffer;
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

std::vector<Polyline> trace_level_curve(const Expr& f, double t, const Rect& domain, double step) {
  if (!(step > 0) || !(domain.x_max > domain.x_min) || !(domain.y_max > domain.y_min))
    throw Error(ErrorKind::Domain, "tracing needs a positive step and a nonempty rectangle");
  const int nx = std::max(1, static_cast<int>(std::ceil((domain.x_max - domain.x_min) / step - 1e-9)));
  const int ny = std::max(1, static_cast<int>(std::ceil((domain.y_max - domain.y_min) / step - 1e-9)));
  auto xs = [&](int i) { return domain.x_min + (domain.x_max - domain.x_min) * i / nx; };
  auto ys = [&](int j) { return domain.y_min + (domain.y_max - domain.y_min) * j / ny; };

  std::vector<double> g(static_cast<std::size_t>(nx + 1) * (ny + 1));
  auto node = [&](int i, int j) -> double& { return g[static_cast<std::size_t>(j) * (nx + 1) + i]; };
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) node(i, j) = value_at(f, xs(i), ys(j)) - t;

  // edge ids: 2*node for the edge to the right, 2*node+1 for the edge upwards
  auto node_id = [&](int i, int j) { return static_cast<long long>(j) * (nx + 1) + i; };
  std::map<long long, PlanePoint> vertex;
  auto edge_vertex = [&](long long id, int i0, int j0, int i1, int j1) {
    auto it = vertex.find(id);
    if (it != vertex.end()) return;
    vertex.emplace(id, bisect_edge(f, t, {xs(i0), ys(j0)}, {xs(i1), ys(j1)}, node(i0, j0)));
  };
  std::map<long long, std::vector<long long>> links;
  auto link = [&](long long a, long long b) {
    links[a].push_back(b);
    links[b].push_back(a);
  };

  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double c[4] = {node(i, j), node(i + 1, j), node(i + 1, j + 1), node(i, j + 1)};
      if (std::any_of(std::begin(c), std::end(c), [](double v) { return std::isnan(v); })) continue;
      const bool pos[4] = {c[0] >= 0, c[1] >= 0, c[2] >= 0, c[3] >= 0};
      // bottom, right, top, left
      const long long edges[4] = {2 * node_id(i, j), 2 * node_id(i + 1, j) + 1, 2 * node_id(i, j + 1),
                                  2 * node_id(i, j) + 1};
      const int ends[4][4] = {{i, j, i + 1, j}, {i + 1, j, i + 1, j + 1}, {i, j + 1, i + 1, j + 1}, {i, j, i, j + 1}};
      const bool crossed[4] = {pos[0] != pos[1], pos[1] != pos[2], pos[3] != pos[2], pos[0] != pos[3]};
      std::vector<int> hit;
      for (int e = 0; e < 4; ++e) {
        if (!crossed[e]) continue;
        hit.push_back(e);
        edge_vertex(edges[e], ends[e][0], ends[e][1], ends[e][2], ends[e][3]);
      }
      if (hit.size() == 2) {
        link(edges[hit[0]], edges[hit[1]]);
      } else if (hit.size() == 4) {
        const double centre = value_at(f, (xs(i) + xs(i + 1)) / 2, (ys(j) + ys(j + 1)) / 2) - t;
        if ((centre >= 0) == pos[0]) {
          link(edges[0], edges[1]);
          link(edges[2], edges[3]);
        } else {
          link(edges[3], edges[0]);
          link(edges[1], edges[2]);
        }
      }
    }
  }
  if (links.empty()) throw Error(ErrorKind::EmptyLevelSet, "level set does not meet the domain");

  std::vector<Polyline> out;
  std::map<long long, bool> used;
  auto walk = [&](long long start) {
    Polyline line;
    long long previous = -1, current = start;
    for (;;) {
      used[current] = true;
      // a level line through a grid node is found on both edges meeting there
      const PlanePoint& p = vertex.at(current);
      if (line.points.empty() || !coincide(line.points.back(), p)) line.points.push_back(p);
      long long next = -1;
      for (long long candidate : links.at(current))
        if (candidate != previous && !used[candidate]) {
          next = candidate;
          break;
        }
      if (next < 0) {
        const auto& around = links.at(current);
        if (line.points.size() > 2 && std::find(around.begin(), around.end(), start) != around.end()) {
          if (!coincide(line.points.back(), line.points.front())) line.points.push_back(line.points.front());
          line.closed = true;
        }
        break;
      }
      previous = current;
      current = next;
    }
    out.push_back(std::move(line));
  };
  for (const auto& [id, neighbours] : links)
    if (neighbours.size() == 1 && !used[id]) walk(id);
  for (const auto& [id, neighbours] : links)
    if (!used[id]) walk(id);
  return out;
}

CurveFamily render_family(const std::vector<SingleExpr>& components, const std::vector<double>& levels,
                          const RenderOptions& options) {
  CurveFamily family;
  family.levels = levels;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const SingleExpr& d = components[c];
    for (double t : levels) {
      std::vector<Polyline> lines;
      try {
        lines = trace_level_curve(d.f, t, options.source, options.step);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::EmptyLevelSet) throw;
      }
      for (const Polyline& line : lines) {
        LevelPolyline traced{static_cast<int>(c) + 1, t, line.closed, {}};
        for (const PlanePoint& p : line.points) {
          const PlanePoint image{evaluate<double>(d.gamma_u, {p.u, p.v}), evaluate<double>(d.gamma_v, {p.u, p.v})};
          traced.vertices.push_back({p, image, std::fabs(evaluate<double>(d.f, {p.u, p.v}) - t)});
        }
        family.polylines.push_back(std::move(traced));
      }
    }
  }
  return family;
}

double max_residual(const CurveFamily& family) {
  double worst = 0;
  for (const auto& line : family.polylines)
    for (const auto& v : line.vertices) worst = std::max(worst, v.residual);
  return worst;
}

std::string to_svg(const CurveFamily& family, const Rect& view) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  auto sx = [&](double u) { return fixed3((u - view.x_min) / (view.x_max - view.x_min) * 1000); };
  auto sy = [&](double v) { return fixed3((view.y_max - v) / (view.y_max - view.y_min) * 1000); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<!-- " << (kHeader + 2) << " -->\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  std::size_t k = 0;
  while (k < family.polylines.size()) {
    const int component = family.polylines[k].component;
    const double t = family.polylines[k].t;
    out << "<path data-component=\"" << component << "\" data-t=\"" << number(t) << "\" fill=\"none\" stroke=\""
        << palette[(component - 1) % 4] << "\" stroke-width=\"1\" d=\"";
    bool first_segment = true;
    for (; k < family.polylines.size() && family.polylines[k].component == component && family.polylines[k].t == t;
         ++k) {
      const auto& line = family.polylines[k];
      for (std::size_t i = 0; i < line.vertices.size(); ++i) {
        if (!first_segment || i > 0) out << ' ';
        out << (i == 0 ? 'M' : 'L') << sx(line.vertices[i].image.u) << ',' << sy(line.vertices[i].image.v);
      }
      first_segment = false;
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string to_csv(const CurveFamily& family) {
  std::ostringstream out;
  out << kHeader << "\ncomponent,t,u,v\n";
  int index = 0;
  for (const auto& line : family.polylines) {
    out << "# polyline " << index++ << (line.closed ? " closed" : " open") << '\n';
    for (const auto& v : line.vertices)
      out << line.component << ',' << number(line.t) << ',' << number(v.image.u) << ',' << number(v.image.v) << '\n';
  }
  return out.str();
}

}  // namespace germlab
