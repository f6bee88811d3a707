#include "germlab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "germlab/moduli.hpp"
#include "germlab/normal_forms.hpp"
#include "germlab/render.hpp"
#include "germlab/webs.hpp"

namespace germlab::cli {

using Json = nlohmann::ordered_json;

namespace {

Error usage(const std::string& message) { return Error(ErrorKind::Usage, message); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw usage("cannot write " + path);
  out << bytes;
  if (!out) throw usage("write failed for " + path);
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw usage(std::string("malformed JSON: ") + e.what());
  }
}

std::string string_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw usage(std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

std::array<std::string, 2> pair_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 || !j[key][0].is_string() || !j[key][1].is_string())
    throw usage(std::string("field '") + key + "' must be an array of two strings");
  return {j[key][0].get<std::string>(), j[key][1].get<std::string>()};
}

std::string rational_text(const Rational& q) { return q.str(); }

std::string scientific(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6e", x);
  return buffer;
}

std::string csv_number(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  std::string s = buffer;
  return s == "-0" ? "0" : s;
}

/// Payload goes to --out when given (with a one-line summary on stdout), otherwise to stdout.
void emit(std::ostream& out, const std::string& path, const std::string& payload, const std::string& summary) {
  if (path.empty()) {
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
  } else {
    write_file(path, payload);
    out << summary << " -> " << path << '\n';
  }
}

Rect parse_rect(const std::vector<double>& values, const char* flag) {
  if (values.empty()) return {};
  if (values.size() != 4) throw usage(std::string(flag) + " expects xmin,xmax,ymin,ymax");
  if (!(values[1] > values[0]) || !(values[3] > values[2])) throw usage(std::string(flag) + " is an empty rectangle");
  return {values[0], values[1], values[2], values[3]};
}

std::uint64_t seed_from_environment() {
  const char* text = std::getenv("GERMLAB_SEED");
  if (text == nullptr || *text == '\0') return 0;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(text, &used);
    if (used != std::string_view(text).size()) throw std::invalid_argument(text);
    return seed;
  } catch (const std::exception&) {
    throw usage(std::string("GERMLAB_SEED is not an unsigned integer: ") + text);
  }
}

// ---- commands ------------------------------------------------------------------

Json checks_json(const std::vector<Check>& checks) {
  Json list = Json::array();
  for (const Check& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  return list;
}

template <class S>
Json classify_document(const DiagramDocument& doc, bool& generic) {
  Json report;
  if (doc.is_pair()) {
    const PairExpr pair{doc.first(), doc.second()};
    const PairType type = classify_pair(to_jets<S>(pair, doc.degree));
    generic = type.tag != PairTag::nongeneric;
    report["type"] = to_string(type.tag);
    report["reason"] = type.reason;
    report["checks"] = checks_json(type.checks);
  } else {
    const SingleType type = classify_single(to_jets<S>(doc.first(), doc.degree));
    generic = type.tag != SingleTag::nongeneric;
    report["type"] = to_string(type.tag);
    report["reason"] = type.reason;
    report["checks"] = checks_json(type.checks);
  }
  return report;
}

int command_classify(const std::string& path, const std::string& out_path, std::ostream& out) {
  const DiagramDocument doc = DiagramDocument::parse_json(read_file(path));
  bool generic = false;
  Json report = doc.mode == ArithmeticMode::exact ? classify_document<Rational>(doc, generic)
                                                  : classify_document<double>(doc, generic);
  const std::string summary = "classify: " + report["type"].get<std::string>() +
                              (generic ? "" : " (" + report["reason"].get<std::string>() + ")");
  emit(out, out_path, report.dump(2), summary);
  return generic ? 0 : 2;
}

template <class S>
std::string scalar_json_text(const S& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    return rational_text(x);
  } else {
    return csv_number(x);
  }
}

template <class S>
Json reduce_document(const DiagramDocument& doc) {
  if (!doc.is_pair()) throw Error(ErrorKind::WrongType, "reduce needs a pair diagram (f2, gamma2)");
  const PairDiagram<S> input = to_jets<S>(PairExpr{doc.first(), doc.second()}, doc.degree);
  const NormalFormResult<S> result = reduce_III_III(input);
  const VariableSet& xy = VariableSet::source();
  const VariableSet& uv = VariableSet::plane();
  const VariableSet& t = VariableSet::line();
  auto map_json = [](const Map2<S>& m, const VariableSet& vars) {
    return Json::array({print(to_expr(m[0], vars)), print(to_expr(m[1], vars))});
  };
  Json report;
  report["type"] = to_string(result.pair_type);
  report["theta"] = print(to_expr(result.theta, xy));
  report["chain"] = {{"h", print(to_expr(result.chain.h, t))},
                     {"H1", map_json(result.chain.H1, xy)},
                     {"K", map_json(result.chain.K, uv)},
                     {"H2", map_json(result.chain.H2, xy)},
                     {"k", print(to_expr(result.chain.k, t))}};
  report["residual"] = scalar_json_text(verify_chain(input, result.chain, result.output));
  DiagramDocument normal;
  normal.f1 = print(to_expr(result.output.first.f, xy));
  normal.gamma1 = {print(to_expr(result.output.first.gamma[0], xy)), print(to_expr(result.output.first.gamma[1], xy))};
  normal.f2 = print(to_expr(result.output.second.f, xy));
  normal.gamma2 = {{print(to_expr(result.output.second.gamma[0], xy)), print(to_expr(result.output.second.gamma[1], xy))}};
  normal.degree = doc.degree;
  normal.mode = doc.mode;
  report["normal_form"] = Json::parse(normal.to_json());
  return report;
}

int command_reduce(const std::string& path, const std::string& out_path, std::ostream& out) {
  const DiagramDocument doc = DiagramDocument::parse_json(read_file(path));
  const Json report = doc.mode == ArithmeticMode::exact ? reduce_document<Rational>(doc) : reduce_document<double>(doc);
  emit(out, out_path, report.dump(2), "reduce: theta = " + report["theta"].get<std::string>());
  return 0;
}

struct ModuliFlags {
  std::string b;
  int formal = 0;
  std::vector<double> grid;
  std::string out;
  std::string report;
};

int command_moduli_solve(const ModuliFlags& flags, std::ostream& out) {
  double radius = 0.4;
  int count = 201;
  if (!flags.grid.empty()) {
    if (flags.grid.size() != 2) throw usage("--grid expects eps,count");
    radius = flags.grid[0];
    count = static_cast<int>(flags.grid[1]);
    if (!(radius > 0) || count < 1 || flags.grid[1] != count) throw usage("--grid needs eps > 0 and an integer count >= 1");
  }
  const Expr b = parse(flags.b, VariableSet::line());
  const ModuliTriple<double> triple = make_triple(SmoothFunction1D<double>{b, radius});
  const std::vector<double> grid = uniform_grid(radius, count);

  auto a_at = [&](const double& x) { return a_product(triple, x).value; };
  const std::function<double(const double&)> b_fn = [&](const double& t) { return triple.b(t); };
  const std::function<double(const double&)> a_fn = a_at;

  std::ostringstream csv;
  csv << "x,a,residual\n";
  Json samples = Json::array();
  double worst = 0;
  int max_factors = 0;
  bool tail_holds = true;
  for (const double x : grid) {
    // the residual at x only needs a on the image of t b(t); a(x) itself may lie outside it
    const double residual = functional_equation_residual(b_fn, a_fn, std::span<const double>(&x, 1));
    worst = std::max(worst, residual);
    Json sample{{"x", x}, {"residual", residual}};
    if (triple.in_image(x)) {
      const ProductEvaluation<double> at_x = a_product(triple, x);
      max_factors = std::max(max_factors, at_x.report.factors);
      tail_holds = tail_holds && at_x.report.tail_decay_holds;
      csv << csv_number(x) << ',' << csv_number(at_x.value) << ',' << csv_number(residual) << '\n';
      sample["a"] = at_x.value;
      sample["factors"] = at_x.report.factors;
      sample["tail_bound"] = at_x.report.tail_bound;
      sample["partial_sums"] = at_x.report.partial_sums;
    } else {
      csv << csv_number(x) << ",nan," << csv_number(residual) << '\n';
      sample["a"] = nullptr;
    }
    samples.push_back(sample);
  }

  Json report;
  report["b"] = flags.b;
  report["radius"] = radius;
  report["count"] = count;
  report["sup_log_c"] = triple.sup_log_c();
  report["max_residual"] = worst;
  report["max_factors"] = max_factors;
  report["tail_decay_holds"] = tail_holds;
  if (flags.formal > 0) {
    Json formal;
    formal["N"] = flags.formal;
    try {
      const Jet1<Rational> b_jet = taylor1<Rational>(b, flags.formal);
      const Jet1<Rational> a_jet = solve_moduli_formal(b_jet, flags.formal);
      Json coefficients = Json::array();
      for (int k = 0; k <= a_jet.degree(); ++k) coefficients.push_back(rational_text(a_jet[k]));
      formal["coefficients"] = coefficients;
      formal["exact"] = true;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Domain) throw;
      // no exact expansion: fall back to floating coefficients
      const Jet1<double> a_jet = solve_moduli_formal(taylor1<double>(b, flags.formal), flags.formal);
      Json coefficients = Json::array();
      for (int k = 0; k <= a_jet.degree(); ++k) coefficients.push_back(a_jet[k]);
      formal["coefficients"] = coefficients;
      formal["exact"] = false;
    }
    report["formal"] = formal;
  }
  report["samples"] = samples;

  const std::string summary = "moduli solve: " + std::to_string(count) + " points, max residual " + scientific(worst) +
                              ", at most " + std::to_string(max_factors) + " factors";
  emit(out, flags.out, csv.str(), summary);
  if (!flags.report.empty()) write_file(flags.report, report.dump(2) + "\n");
  return 0;
}

WebRegion parse_region(const std::string& name) {
  for (WebRegion r : {WebRegion::upper_half_plane, WebRegion::open_quadrant, WebRegion::cusp_interior, WebRegion::plane})
    if (name == to_string(r)) return r;
  if (name == "upper_half_plane") return WebRegion::upper_half_plane;
  if (name == "open_quadrant") return WebRegion::open_quadrant;
  if (name == "cusp_interior") return WebRegion::cusp_interior;
  if (name == "plane") return WebRegion::plane;
  throw usage("unknown web region '" + name + "'");
}

/// {"functions": [...], "region": ".."} or the (V,I) web {"theta": "..", "b": ".."}.
FoliationConfig load_web(const std::string& path) {
  const Json j = parse_json_text(read_file(path));
  const VariableSet& uv = VariableSet::plane();
  if (j.contains("functions")) {
    if (!j["functions"].is_array() || j["functions"].size() < 2) throw usage("'functions' must list at least two expressions");
    FoliationConfig web;
    for (const auto& f : j["functions"]) {
      if (!f.is_string()) throw usage("'functions' entries must be strings");
      web.functions.push_back(parse(f.get<std::string>(), uv));
    }
    web.region = j.contains("region") ? parse_region(string_field(j, "region")) : WebRegion::plane;
    return web;
  }
  const Expr theta = parse(string_field(j, "theta"), uv);
  Rational b = 1;
  if (j.contains("b")) {
    const Expr b_expr = parse(string_field(j, "b"), VariableSet::line());
    if (max_variable_index(b_expr) >= 0) throw Error(ErrorKind::BadModulus, "b must be a constant");
    b = evaluate<Rational>(b_expr, {Rational(0)});
  }
  return v_I_web(theta, b);
}

struct WebSingularFlags {
  std::string config;
  std::vector<int> pair{1, 2};
  std::vector<double> grid;
  std::string out;
};

int command_web_singular(const WebSingularFlags& flags, std::ostream& out) {
  const FoliationConfig web = load_web(flags.config);
  if (flags.pair.size() != 2) throw usage("--pair expects i,j");
  ScanGrid grid;
  if (!flags.grid.empty()) {
    if (flags.grid.size() != 4 && flags.grid.size() != 6) throw usage("--grid expects umin,umax,vmin,vmax[,ucells,vcells]");
    grid = {flags.grid[0], flags.grid[1], flags.grid[2], flags.grid[3], grid.u_cells, grid.v_cells};
    if (flags.grid.size() == 6) {
      grid.u_cells = static_cast<int>(flags.grid[4]);
      grid.v_cells = static_cast<int>(flags.grid[5]);
    }
  }
  const WebSingularSet set = web_singular_set(web, flags.pair[0], flags.pair[1], grid);
  std::ostringstream csv;
  csv << "u,v\n";
  for (const PlanePoint& p : set.points) csv << csv_number(p.u) << ',' << csv_number(p.v) << '\n';
  emit(out, flags.out, csv.str(),
       "web singular: " + std::to_string(set.points.size()) + " points of S" + std::to_string(set.first) + "," +
           std::to_string(set.second));
  return 0;
}

std::pair<Expr, Expr> load_vi_side(const std::string& path) {
  const Json j = parse_json_text(read_file(path));
  const VariableSet& uv = VariableSet::plane();
  return {parse(string_field(j, "theta"), uv), parse(string_field(j, "f"), uv)};
}

int command_web_equiv(const std::string& lhs, const std::string& rhs, int samples, double tol,
                      const std::string& out_path, std::ostream& out) {
  const auto [theta1, f1] = load_vi_side(lhs);
  const auto [theta2, f2] = load_vi_side(rhs);
  const std::uint64_t seed = seed_from_environment();
  const ViIEquivalence verdict = vi_I_equivalence_test(theta1, f1, theta2, f2, samples, seed, tol);
  Json report;
  report["equivalent"] = verdict.equivalent;
  report["max_theta_dev"] = verdict.max_theta_deviation;
  report["max_f_dev"] = verdict.max_f_deviation;
  report["samples"] = samples;
  report["seed"] = seed;
  emit(out, out_path, report.dump(2),
       std::string("web equiv-vi1: ") + (verdict.equivalent ? "equivalent" : "not equivalent"));
  return 0;
}

struct RenderFlags {
  std::string document;
  std::string type;
  std::string theta = "0";
  std::string alpha = "0";
  std::vector<double> levels;
  std::string format = "svg";
  std::vector<double> domain;
  std::vector<double> view;
  double step = 0.02;
  std::string out;
};

int command_render(const RenderFlags& flags, std::ostream& out) {
  std::vector<SingleExpr> components;
  if (!flags.document.empty() == !flags.type.empty()) throw usage("render needs exactly one of a document or --type");
  if (!flags.document.empty()) {
    const DiagramDocument doc = DiagramDocument::parse_json(read_file(flags.document));
    components.push_back(doc.first());
    if (doc.is_pair()) components.push_back(doc.second());
  } else {
    CatalogModuli moduli;
    moduli.theta = parse(flags.theta, VariableSet::source());
    moduli.alpha = parse(flags.alpha, VariableSet::plane());
    const PairExpr pair = catalog(parse_pair_tag(flags.type), moduli);
    components = {pair.first, pair.second};
  }
  if (flags.format != "svg" && flags.format != "csv") throw usage("--format must be svg or csv");
  if (!(flags.step > 0)) throw usage("--step must be positive");

  RenderOptions options;
  options.source = parse_rect(flags.domain, "--domain");
  options.view = flags.view.empty() ? options.source : parse_rect(flags.view, "--view");
  options.step = flags.step;
  const CurveFamily family = render_family(components, flags.levels, options);
  const double audit = max_residual(family);
  if (audit > 1e-6) throw Error(ErrorKind::Domain, "render audit failed: |f - t| = " + scientific(audit));

  std::size_t vertices = 0;
  for (const auto& line : family.polylines) vertices += line.vertices.size();
  const std::string payload = flags.format == "svg" ? to_svg(family, options.view) : to_csv(family);
  emit(out, flags.out, payload,
       "render: " + std::to_string(family.polylines.size()) + " polylines, " + std::to_string(vertices) +
           " vertices, max |f - t| " + scientific(audit));
  return 0;
}

int command_catalog(const std::string& type, const std::string& theta, const std::string& alpha, int sign, int degree,
                    const std::string& mode, const std::string& out_path, std::ostream& out) {
  CatalogModuli moduli;
  moduli.theta = parse(theta, VariableSet::source());
  moduli.alpha = parse(alpha, VariableSet::plane());
  moduli.morse_sign = sign;
  if (mode != "exact" && mode != "float") throw usage("--mode must be exact or float");
  const PairTag tag = parse_pair_tag(type);
  const DiagramDocument doc = DiagramDocument::from_pair(catalog(tag, moduli), degree,
                                                         mode == "exact" ? ArithmeticMode::exact : ArithmeticMode::floating);
  emit(out, out_path, doc.to_json(), "catalog: " + to_string(tag));
  return 0;
}

}  // namespace

// ---- DiagramDocument ----------------------------------------------------------------

SingleExpr DiagramDocument::first() const { return parse_single(f1, gamma1[0], gamma1[1]); }

SingleExpr DiagramDocument::second() const {
  if (!is_pair()) throw usage("document has no second diagram");
  return parse_single(*f2, (*gamma2)[0], (*gamma2)[1]);
}

DiagramDocument DiagramDocument::parse_json(std::string_view text) {
  const Json j = parse_json_text(text);
  if (!j.is_object()) throw usage("diagram document must be a JSON object");
  DiagramDocument doc;
  doc.f1 = string_field(j, "f1");
  doc.gamma1 = pair_field(j, "gamma1");
  if (j.contains("f2") != j.contains("gamma2")) throw usage("f2 and gamma2 must be given together");
  if (j.contains("f2")) {
    doc.f2 = string_field(j, "f2");
    doc.gamma2 = pair_field(j, "gamma2");
  }
  if (j.contains("degree")) {
    if (!j["degree"].is_number_integer()) throw usage("degree must be an integer");
    doc.degree = j["degree"].get<int>();
  }
  if (doc.degree < 4) throw usage("degree must be at least 4");
  if (j.contains("mode")) {
    const std::string mode = string_field(j, "mode");
    if (mode == "exact") {
      doc.mode = ArithmeticMode::exact;
    } else if (mode == "float") {
      doc.mode = ArithmeticMode::floating;
    } else {
      throw usage("mode must be exact or float");
    }
  }
  // every expression must parse over the source variables
  (void)doc.first();
  if (doc.is_pair()) (void)doc.second();
  return doc;
}

DiagramDocument DiagramDocument::from_pair(const PairExpr& pair, int degree, ArithmeticMode mode) {
  DiagramDocument doc;
  doc.f1 = print(pair.first.f);
  doc.gamma1 = {print(pair.first.gamma_u), print(pair.first.gamma_v)};
  doc.f2 = print(pair.second.f);
  doc.gamma2 = {{print(pair.second.gamma_u), print(pair.second.gamma_v)}};
  doc.degree = degree;
  doc.mode = mode;
  return doc;
}

std::string DiagramDocument::to_json() const {
  Json j;
  j["f1"] = f1;
  j["gamma1"] = gamma1;
  if (is_pair()) {
    j["f2"] = *f2;
    j["gamma2"] = *gamma2;
  }
  j["degree"] = degree;
  j["mode"] = mode == ArithmeticMode::exact ? "exact" : "float";
  return j.dump(2) + "\n";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Usage: return 1;
    case ErrorKind::Nongeneric:
    case ErrorKind::ModuliConstraintViolated:
    case ErrorKind::WrongType:
    case ErrorKind::NotFold:
    case ErrorKind::DiscriminantsTangent:
    case ErrorKind::NonUnit:
    case ErrorKind::BoundaryDegenerate:
    case ErrorKind::BadModulus:
    case ErrorKind::NoWeb: return 2;
    default: return 3;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divergent diagram germs: classification, normal forms, moduli and webs", "germlab"};
  app.require_subcommand(1);

  std::string doc_path, out_path;
  auto* classify = app.add_subcommand("classify", "classify a single or pair diagram document");
  classify->add_option("document", doc_path, "diagram JSON")->required();
  classify->add_option("--out", out_path, "write the report here");

  auto* reduce = app.add_subcommand("reduce", "normal form of a (III,III) pair with its coordinate changes");
  reduce->add_option("document", doc_path, "diagram JSON")->required();
  reduce->add_option("--out", out_path, "write the report here");

  ModuliFlags moduli_flags;
  auto* moduli = app.add_subcommand("moduli", "functional modulus of (III,III)");
  moduli->require_subcommand(1);
  auto* solve = moduli->add_subcommand("solve", "solve a(t^4) = b(t)^2 a(t b(t))^4");
  solve->add_option("--b", moduli_flags.b, "b(t)")->required();
  solve->add_option("--formal", moduli_flags.formal, "also solve formally to this degree");
  solve->add_option("--grid", moduli_flags.grid, "eps,count")->delimiter(',');
  solve->add_option("--out", moduli_flags.out, "CSV x,a,residual");
  solve->add_option("--report", moduli_flags.report, "convergence report JSON");

  WebSingularFlags singular_flags;
  std::string lhs, rhs;
  int samples = 2000;
  double tolerance = 1e-8;
  auto* web = app.add_subcommand("web", "web structures on the target plane");
  web->require_subcommand(1);
  auto* singular = web->add_subcommand("singular", "zeros of det J(f_i, f_j)");
  singular->add_option("--config", singular_flags.config, "web JSON")->required();
  singular->add_option("--pair", singular_flags.pair, "i,j")->delimiter(',');
  singular->add_option("--grid", singular_flags.grid, "umin,umax,vmin,vmax[,ucells,vcells]")->delimiter(',');
  singular->add_option("--out", singular_flags.out, "CSV u,v");
  auto* equiv = web->add_subcommand("equiv-vi1", "compare two (VI,I) moduli on the cusp interior");
  equiv->add_option("--lhs", lhs, "JSON {theta, f}")->required();
  equiv->add_option("--rhs", rhs, "JSON {theta, f}")->required();
  equiv->add_option("--samples", samples, "sample count");
  equiv->add_option("--tol", tolerance, "agreement tolerance");
  equiv->add_option("--out", out_path, "write the verdict here");

  RenderFlags render_flags;
  auto* render = app.add_subcommand("render", "families gamma_i(f_i^-1(t)) as SVG or CSV");
  render->add_option("document", render_flags.document, "diagram JSON");
  render->add_option("--type", render_flags.type, "catalog type instead of a document");
  render->add_option("--theta", render_flags.theta, "catalog theta(x, y)");
  render->add_option("--alpha", render_flags.alpha, "catalog alpha(u, v)");
  render->add_option("-t,--levels", render_flags.levels, "t values")->delimiter(',');
  render->add_option("--format", render_flags.format, "svg or csv");
  render->add_option("--domain", render_flags.domain, "source rectangle xmin,xmax,ymin,ymax")->delimiter(',');
  render->add_option("--view", render_flags.view, "target window umin,umax,vmin,vmax")->delimiter(',');
  render->add_option("--step", render_flags.step, "marching squares cell size");
  render->add_option("--out", render_flags.out, "output file");

  std::string type, theta = "0", alpha = "0", mode = "exact";
  int sign = 1, degree = 12;
  auto* catalog_cmd = app.add_subcommand("catalog", "write the normal form document of a pair type");
  catalog_cmd->add_option("type", type, "e.g. (IV,I)")->required();
  catalog_cmd->add_option("--theta", theta, "theta(x, y)");
  catalog_cmd->add_option("--alpha", alpha, "alpha(u, v)");
  catalog_cmd->add_option("--sign", sign, "Morse sign for (II,I)");
  catalog_cmd->add_option("--degree", degree, "jet degree");
  catalog_cmd->add_option("--mode", mode, "exact or float");
  catalog_cmd->add_option("--out", out_path, "write the document here");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (classify->parsed()) return command_classify(doc_path, out_path, out);
    if (reduce->parsed()) return command_reduce(doc_path, out_path, out);
    if (solve->parsed()) return command_moduli_solve(moduli_flags, out);
    if (singular->parsed()) return command_web_singular(singular_flags, out);
    if (equiv->parsed()) return command_web_equiv(lhs, rhs, samples, tolerance, out_path, out);
    if (render->parsed()) return command_render(render_flags, out);
    if (catalog_cmd->parsed()) return command_catalog(type, theta, alpha, sign, degree, mode, out_path, out);
  } catch (const Error& e) {
    err << "germlab: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "germlab: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

}  // namespace germlab::cli
