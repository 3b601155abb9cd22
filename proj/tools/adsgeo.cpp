// adsgeo command-line front end. Exit codes: 0 ok, 1 domain/numerical error,
// 2 usage error (bad flags, malformed JSON). Errors go to stderr as one JSON record.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "adsgeo/classifier.hpp"
#include "adsgeo/curve_frames.hpp"
#include "adsgeo/errors.hpp"
#include "adsgeo/export.hpp"
#include "adsgeo/height_family.hpp"
#include "adsgeo/io_json.hpp"
#include "adsgeo/scan.hpp"
#include "adsgeo/surface_geometry.hpp"
#include "adsgeo/verify.hpp"
#include "json.hpp"

using namespace ads;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string preset_name;
  std::vector<std::string> params;
  std::string input;
  std::string tol;
  unsigned seed = 1;
  std::string output;
};

struct Query {
  double s = NAN, u = NAN, v = NAN;
  double theta = 0;
  int sign = 1;
  int branch = 0;
};

ToleranceConfig tolerances(const Common& c) {
  ToleranceConfig cfg = ToleranceConfig::from_env();
  if (!c.tol.empty()) cfg = ToleranceConfig::from_string(c.tol);
  return cfg;
}

Geometry load(const Common& c, const ToleranceConfig& cfg) {
  if (!c.input.empty() && !c.preset_name.empty()) throw UsageError("give either --preset or --input");
  if (!c.input.empty()) return load_geometry_file(c.input, cfg);
  if (c.preset_name.empty()) throw UsageError("an object is required (--preset NAME or --input FILE)");
  Params p;
  for (const auto& kv : c.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + kv + "'");
    p[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  return preset(c.preset_name, p);
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.output);
  f << text;
}

std::vector<double> vec(const AVec& v) { return {v.c.begin(), v.c.begin() + v.dim}; }

BaseParams base_of(const Geometry& g, const Query& q) {
  if (g.is_curve()) {
    if (std::isnan(q.s)) throw UsageError("--s is required for curves");
    return {q.s, 0};
  }
  if (std::isnan(q.u) || std::isnan(q.v)) throw UsageError("--u and --v are required for surfaces");
  return {q.u, q.v};
}

double fiber_of(const Geometry& g, const Query& q) {
  return object_kind(g) == ObjectKind::CurveAdS4 ? q.theta : static_cast<double>(q.sign);
}

void add_object(CLI::App* sc, Common& c) {
  sc->add_option("--preset", c.preset_name, "shipped object name");
  sc->add_option("--param", c.params, "preset parameter key=value (repeatable)");
  sc->add_option("--input", c.input, "JSON object file");
  sc->add_option("--tol", c.tol, "tolerance overrides, same syntax as ADS_TOL");
  sc->add_option("--seed", c.seed, "seed for randomized sampling");
  sc->add_option("-o,--output", c.output, "output file (default stdout)");
}

void add_point(CLI::App* sc, Query& q) {
  sc->add_option("--s", q.s, "curve parameter");
  sc->add_option("--u", q.u, "surface parameter u");
  sc->add_option("--v", q.v, "surface parameter v");
  sc->add_option("--theta", q.theta, "fiber angle (AdS^4 curves)");
  sc->add_option("--sign", q.sign, "normal section sign +1/-1 (AdS^3 curves, surfaces)")
      ->check(CLI::IsMember({1, -1}));
  sc->add_option("--branch", q.branch, "principal branch (surfaces)")->check(CLI::Range(0, 1));
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Common& c, int samples) {
  auto cfg = tolerances(c);
  Geometry g = load(c, cfg);
  ValidationReport r = g.is_curve() ? validate(*g.curve, samples, cfg) : validate(*g.surface, samples, cfg);
  ojson j;
  j["object"] = g.name;
  j["ok"] = r.ok;
  j["max_ads_residual"] = r.max_ads_residual;
  j[g.is_curve() ? "max_unit_speed_residual" : "max_metric_failure"] = r.max_unit_speed_residual;
  j["failing_samples"] = r.failing_samples;
  emit(c, j.dump(2));
  return r.ok ? 0 : 1;
}

int cmd_frame(const Common& c, const Query& q) {
  auto cfg = tolerances(c);
  Geometry g = load(c, cfg);
  BaseParams b = base_of(g, q);
  ojson j;
  j["object"] = g.name;
  switch (object_kind(g)) {
    case ObjectKind::CurveAdS3: {
      auto f = frame_ads3(*g.curve, b[0], cfg);
      j["s"] = b[0];
      j["gamma"] = vec(f.gamma);
      j["t"] = vec(f.t);
      j["n"] = vec(f.n);
      j["b"] = vec(f.b);
      j["kappa_g"] = f.kappa_g;
      j["tau_g"] = f.tau_g;
      j["delta"] = f.delta;
      j["gram_residual"] = gram_residual(f);
      break;
    }
    case ObjectKind::CurveAdS4: {
      auto f = frame_ads4(*g.curve, b[0], cfg);
      j["s"] = b[0];
      j["gamma"] = vec(f.gamma);
      j["t"] = vec(f.t);
      j["n1"] = vec(f.n1);
      j["n2"] = vec(f.n2);
      j["n3"] = vec(f.n3);
      j["kappa"] = {f.kappa1, f.kappa2, f.kappa3};
      j["delta"] = {f.delta1, f.delta2, f.delta3};
      j["case"] = to_string(f.case_tag);
      j["gram_residual"] = gram_residual(f);
      break;
    }
    case ObjectKind::Surface: {
      auto f = normal_frame(*g.surface, b[0], b[1], cfg);
      j["u"] = b[0];
      j["v"] = b[1];
      j["X"] = vec(f.X);
      j["X_u"] = vec(f.X_u1);
      j["X_v"] = vec(f.X_u2);
      j["nT"] = vec(f.nT);
      j["nS"] = vec(f.nS);
      j["g"] = {{f.g(0, 0), f.g(0, 1)}, {f.g(1, 0), f.g(1, 1)}};
      break;
    }
  }
  emit(c, j.dump(2));
  return 0;
}

int cmd_invariants(const Common& c, const Query& q) {
  auto cfg = tolerances(c);
  Geometry g = load(c, cfg);
  BaseParams b = base_of(g, q);
  ojson j;
  j["object"] = g.name;
  switch (object_kind(g)) {
    case ObjectKind::CurveAdS3: {
      auto jt = curve_jets_ads3(*g.curve, b[0], cfg);
      j["s"] = b[0];
      j["kappa_g"] = jt.kappa.value();
      j["kappa_g_prime"] = jt.kappa.d(1);
      j["tau_g"] = jt.tau.value();
      j["sigma_plus"] = jt.sigma_plus.value();
      j["sigma_minus"] = jt.sigma_minus.value();
      j["delta"] = jt.frame.delta;
      break;
    }
    case ObjectKind::CurveAdS4: {
      auto inv = curve_invariants_ads4(*g.curve, b[0], q.theta, cfg);
      j["s"] = b[0];
      j["theta"] = q.theta;
      j["case"] = to_string(inv.case_tag);
      j["rho"] = inv.rho;
      j["eta"] = inv.eta;
      j["sigma_defined"] = inv.sigma_defined;
      j["sigma"] = inv.sigma;
      j["sigma_prime"] = inv.sigma_prime;
      j["branch"] = inv.branch;
      j["sigma_branches"] = inv.sigma_branches;
      break;
    }
    case ObjectKind::Surface: {
      j["u"] = b[0];
      j["v"] = b[1];
      for (int sign : {1, -1}) {
        auto pd = principal_curvatures(*g.surface, b[0], b[1], sign, cfg);
        ojson e;
        e["kappas"] = pd.kappas;
        e["K_N"] = pd.K_N;
        e["umbilic"] = pd.umbilic;
        e["directions"] = {{pd.directions[0](0), pd.directions[0](1)},
                           {pd.directions[1](0), pd.directions[1](1)}};
        j[sign > 0 ? "sign+1" : "sign-1"] = e;
      }
      break;
    }
  }
  emit(c, j.dump(2));
  return 0;
}

std::vector<int> projection(const std::string& text, int drop, int dim) {
  if (text.empty()) return default_projection(dim, drop);
  return parse_projection(text, dim);
}

int cmd_sheet(const Common& c, const std::string& grid, const std::string& fmt,
              const std::string& proj, int drop, bool rank) {
  auto cfg = tolerances(c);
  Geometry g = load(c, cfg);
  GridSpec sp = grid.empty() ? default_grid(g) : parse_grid(g, grid);
  sp.with_rank = rank;
  ExportFormat f = parse_format(fmt);
  SheetGrid sg = sheet_grid(g, sp, cfg);
  SampleTable t = table_from_sheet(g, sg);
  emit(c, export_samples(t, f, f == ExportFormat::Obj ? projection(proj, drop, t.dim) : std::vector<int>{}));
  return 0;
}

int cmd_focal(const Common& c, const std::string& grid, const std::string& fmt, const std::string& proj,
              int drop) {
  auto cfg = tolerances(c);
  Geometry g = load(c, cfg);
  GridSpec sp = grid.empty() ? default_grid(g) : parse_grid(g, grid);
  std::vector<FocalPoint> pts;
  std::vector<BaseParams> bases;
  if (g.is_curve()) {
    for (int i = 0; i < sp.u.n; ++i) bases.push_back({sp.u.at(i), 0});
  } else {
    for (int i = 0; i < sp.u.n; ++i)
      for (int k = 0; k < sp.v.n; ++k) bases.push_back({sp.u.at(i), sp.v.at(k)});
  }
  std::vector<double> fibers;
  if (object_kind(g) == ObjectKind::CurveAdS4)
    for (int i = 0; i < sp.theta.n; ++i) fibers.push_back(sp.theta.at(i));
  else
    for (int s : sp.signs) fibers.push_back(s);
  for (const auto& b : bases)
    for (double fb : fibers)
      for (const auto& r : focal_mu(g, b, fb, cfg)) pts.push_back(focal_eval(g, b, fb, r.branch_index, cfg));
  ExportFormat f = parse_format(fmt);
  SampleTable t = table_from_focal(g, pts);
  if (t.dim == 0) t.dim = g.is_curve() ? g.curve->dim() : 5;
  emit(c, export_samples(t, f, f == ExportFormat::Obj ? projection(proj, drop, t.dim) : std::vector<int>{}));
  return 0;
}

int cmd_discriminant(const Common& c, int order, const std::string& grid, const std::string& fmt) {
  auto cfg = tolerances(c);
  Geometry g = load(c, cfg);
  GridSpec sp = grid.empty() ? default_grid(g) : parse_grid(g, grid);
  DiscriminantSet d = discriminant_samples(g, order, sp, cfg);
  if (fmt == "json") {
    ojson j;
    j["object"] = g.name;
    j["order"] = order;
    j["degenerate"] = d.degenerate;
    j["note"] = d.note;
    j["count"] = d.points.size();
    j["points"] = ojson::array();
    for (const auto& p : d.points) j["points"].push_back(vec(p));
    emit(c, j.dump(1));
  } else {
    if (!d.note.empty()) std::cerr << "note: " << d.note << "\n";
    emit(c, export_samples(table_from_points(d.points), parse_format(fmt)));
  }
  return 0;
}

int cmd_classify(const Common& c, const Query& q) {
  auto cfg = tolerances(c);
  Geometry g = load(c, cfg);
  BaseParams b = base_of(g, q);
  CriteriaReport r;
  switch (object_kind(g)) {
    case ObjectKind::CurveAdS3: r = classify_evolute_point_ads3(*g.curve, b[0], q.sign, cfg); break;
    case ObjectKind::CurveAdS4: r = classify_focal_point_ads4_curve(*g.curve, b[0], q.theta, cfg); break;
    case ObjectKind::Surface: r = classify_surface_focal_point(*g.surface, b[0], b[1], q.sign, q.branch, cfg); break;
  }
  emit(c, report_json(r));
  return 0;
}

int cmd_scan(const Common& c, int n, int n_generic, const std::string& invariant) {
  auto cfg = tolerances(c);
  Geometry g = load(c, cfg);
  ScanResult sr;
  switch (object_kind(g)) {
    case ObjectKind::CurveAdS3: sr = scan_ads3_curve(*g.curve, n, cfg); break;
    case ObjectKind::CurveAdS4: sr = scan_ads4_curve(*g.curve, n, n_generic, c.seed, cfg); break;
    case ObjectKind::Surface: sr = scan_surface(*g.surface, n, cfg); break;
  }
  auto wanted = [&](const std::string& origin) {
    if (invariant == "all") return true;
    if (invariant == "sigma") return origin == "sigma-root";
    if (invariant == "rho") return origin == "rho-root";
    return origin == invariant;
  };
  ojson j;
  j["object"] = g.name;
  j["invariant"] = invariant;
  j["degenerate_family"] = sr.degenerate_family;
  j["notes"] = sr.notes;
  std::map<std::string, int> counts;
  long agree = 0, total = 0;
  ojson pts = ojson::array();
  for (const auto& p : sr.points) {
    if (!wanted(p.origin)) continue;
    ++total;
    agree += p.report.consistent();
    ++counts[to_string(p.report.label)];
    ojson e;
    e["base"] = g.is_curve() ? ojson(p.base[0]) : ojson({p.base[0], p.base[1]});
    e["fiber"] = p.fiber;
    e["branch"] = p.branch;
    e["origin"] = p.origin;
    e["report"] = ojson::parse(report_json(p.report));
    pts.push_back(std::move(e));
  }
  j["count"] = total;
  j["agreement"] = agree;
  j["labels"] = counts;
  j["points"] = std::move(pts);
  for (const auto& note : sr.notes) std::cerr << "note: " << note << "\n";
  emit(c, j.dump(1));
  return 0;
}

AVec parse_vec(const std::string& text) {
  AVec out;
  std::stringstream ss(text);
  std::string item;
  std::vector<double> xs;
  while (std::getline(ss, item, ',')) xs.push_back(std::stod(item));
  if (xs.size() < 4 || xs.size() > static_cast<std::size_t>(kMaxDim))
    throw UsageError("--lambda needs 4..6 comma-separated numbers");
  out.dim = static_cast<int>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[static_cast<int>(i)] = xs[i];
  return out;
}

int cmd_height(const Common& c, const Query& q, const std::string& lambda, double mu, int order) {
  auto cfg = tolerances(c);
  Geometry g = load(c, cfg);
  BaseParams b = base_of(g, q);
  AVec lam;
  if (!lambda.empty()) {
    lam = parse_vec(lambda);
  } else {
    if (std::isnan(mu)) throw UsageError("give --lambda or --mu");
    lam = lh_eval(g, b, fiber_of(g, q), mu, cfg).position;
  }
  ojson j;
  j["object"] = g.name;
  j["lambda"] = vec(lam);
  j["H"] = height(g, b, lam, cfg);
  if (g.is_curve()) {
    auto hj = height_jet_curve(*g.curve, b[0], lam, order, cfg);
    j["s"] = b[0];
    j["derivatives"] = hj.derivatives;
    std::vector<double> h{hj.value};
    h.insert(h.end(), hj.derivatives.begin(), hj.derivatives.end());
    if (order >= 5) {
      auto ak = detect_Ak(h, cfg);
      j["A_k"] = ak.k;
      j["normalized"] = ak.normalized_derivatives;
    }
  } else {
    auto sh = hessian_surface(*g.surface, b[0], b[1], lam, cfg);
    j["u"] = b[0];
    j["v"] = b[1];
    j["gradient"] = {sh.gradient(0), sh.gradient(1)};
    j["hessian"] = {{sh.hessian(0, 0), sh.hessian(0, 1)}, {sh.hessian(1, 0), sh.hessian(1, 1)}};
    j["corank"] = sh.corank;
  }
  try {
    auto rr = morse_family_rank(g, b, lam, false, cfg);
    j["morse_rank"] = rr.rank;
  } catch (const ChartError& e) {
    j["morse_rank_note"] = e.what();
  }
  emit(c, j.dump(2));
  return 0;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) xs.push_back(std::stod(item));
  return xs;
}

int cmd_models(const Common& c, const std::string& normal_form, const std::string& set,
               const std::string& at, const std::string& brute, double pitch, double box) {
  auto cfg = tolerances(c);
  ojson j;
  if (!normal_form.empty()) {
    SingularityLabel l = label_from_string(normal_form);
    auto u = parse_list(at);
    j["normal_form"] = to_string(l);
    j["u"] = u;
    j["value"] = eval_normal_form(l, u);
  } else if (!set.empty()) {
    ModelSet m = model_set_from_string(set);
    auto t = parse_list(at);
    j["set"] = to_string(m);
    j["t"] = t;
    j["value"] = eval_model_singular_set(m, t);
  } else if (!brute.empty()) {
    SingularityLabel l = label_from_string(brute);
    const int n = 3;
    BruteGrid g{std::vector<double>(n, -box), std::vector<double>(n, box), pitch};
    auto pts = brute_force_critical_set(l, g, cfg, c.seed + 6);
    j["normal_form"] = to_string(l);
    j["pitch"] = pitch;
    j["count"] = pts.size();
    j["domain"] = ojson::array();
    j["image"] = ojson::array();
    for (const auto& p : pts) {
      j["domain"].push_back(p.domain);
      j["image"].push_back(p.image);
    }
  } else {
    throw UsageError("models needs --normal-form, --set or --brute");
  }
  emit(c, j.dump(1));
  return 0;
}

int cmd_verify(const Common& c, int suite) {
  VerifyOptions opt;
  opt.cfg = tolerances(c);
  opt.seed = c.seed;
  std::vector<SuiteResult> rs;
  if (suite > 0) {
    rs.push_back(run_suite(suite, opt));
    std::cout << format_suite_line(rs.back()) << std::endl;
  } else {
    rs = run_verify(opt, [](const SuiteResult& r) { std::cout << format_suite_line(r) << std::endl; });
  }
  int passed = 0;
  for (const auto& r : rs) passed += r.pass;
  std::cout << passed << "/" << rs.size() << " suites passed" << std::endl;
  return passed == static_cast<int>(rs.size()) ? 0 : 1;
}

void error_record(const char* kind, const std::string& msg, int line = 0, int col = 0) {
  ojson j;
  j["error"] = kind;
  j["message"] = msg;
  if (line > 0) {
    j["line"] = line;
    j["column"] = col;
  }
  std::cerr << j.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lightlike hypersurfaces, focal sets and singularities of curves and surfaces in anti-de Sitter space"};
  app.require_subcommand(1, 1);
  Common c;
  Query q;
  std::string grid, fmt = "csv", proj, invariant = "all", lambda, normal_form, set, at, brute;
  int drop = 3, samples = 200, order = 1, n = 100, n_generic = 1, suite = 0, jet_order = 5;
  double mu = NAN, pitch = 1e-2, box = 0.1;
  bool rank = false;

  auto* validate_cmd = app.add_subcommand("validate", "check that an object lies in AdS (and is unit speed)");
  add_object(validate_cmd, c);
  validate_cmd->add_option("--samples", samples, "samples per axis")->check(CLI::Range(2, 100000));

  auto* frame_cmd = app.add_subcommand("frame", "Frenet frame or surface normal frame at a point");
  add_object(frame_cmd, c);
  add_point(frame_cmd, q);

  auto* inv_cmd = app.add_subcommand("invariants", "curvatures and singularity invariants at a point");
  add_object(inv_cmd, c);
  add_point(inv_cmd, q);

  auto add_grid = [&](CLI::App* sc) {
    sc->add_option("--grid", grid, "e.g. s=0:6.28:200,theta=0:6.28:100,mu=-2:2:50,sign=both");
    sc->add_option("--format", fmt, "csv, json or obj")->check(CLI::IsMember({"csv", "json", "obj"}));
    sc->add_option("--project", proj, "three coordinate labels for OBJ, e.g. 1,2,3 (labels -1..n)");
    sc->add_option("--drop", drop, "coordinate dropped by the default OBJ projection in AdS^4");
  };
  auto* sheet_cmd = app.add_subcommand("sheet", "sample the lightlike hypersurface");
  add_object(sheet_cmd, c);
  add_grid(sheet_cmd);
  sheet_cmd->add_flag("--rank", rank, "add the Jacobian rank as an attribute");

  auto* focal_cmd = app.add_subcommand("focal", "sample the lightlike focal set");
  add_object(focal_cmd, c);
  add_grid(focal_cmd);

  auto* disc_cmd = app.add_subcommand("discriminant", "discriminant set of order 1, 2 or 3");
  add_object(disc_cmd, c);
  disc_cmd->add_option("--grid", grid, "grid spec");
  disc_cmd->add_option("--order", order, "1, 2 or 3")->check(CLI::Range(1, 3));
  disc_cmd->add_option("--format", fmt, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "classify the singularity at the focal point over a base point");
  add_object(classify_cmd, c);
  add_point(classify_cmd, q);

  auto* scan_cmd = app.add_subcommand("scan", "locate and classify singular points along an object");
  add_object(scan_cmd, c);
  scan_cmd->add_option("--n", n, "base samples (per axis for surfaces)")->check(CLI::Range(2, 100000));
  scan_cmd->add_option("--generic", n_generic, "random fiber samples per base point (AdS^4 curves)");
  scan_cmd->add_option("--invariant", invariant, "all, sigma, rho, generic or ridge");

  auto* height_cmd = app.add_subcommand("height-probe", "AdS height function jets at (u, lambda)");
  add_object(height_cmd, c);
  add_point(height_cmd, q);
  height_cmd->add_option("--lambda", lambda, "comma-separated point of AdS");
  height_cmd->add_option("--mu", mu, "take lambda on the sheet at this mu");
  height_cmd->add_option("--order", jet_order, "curve jet order (<= 5)")->check(CLI::Range(1, 5));

  auto* models_cmd = app.add_subcommand("models", "normal forms, model singular sets, brute-force critical sets");
  models_cmd->add_option("--normal-form", normal_form, "A1, A2, A3, A4, D4+, D4-");
  models_cmd->add_option("--set", set, "C23, SW, BF, C234, C2345, CBF, SigmaPU, SigmaPY");
  models_cmd->add_option("--at", at, "comma-separated arguments");
  models_cmd->add_option("--brute", brute, "brute-force the critical set of a normal form");
  models_cmd->add_option("--pitch", pitch, "brute-force grid pitch")->check(CLI::PositiveNumber);
  models_cmd->add_option("--box", box, "half width of the brute-force box")->check(CLI::PositiveNumber);
  models_cmd->add_option("--tol", c.tol, "tolerance overrides");
  models_cmd->add_option("--seed", c.seed, "seed for the random projection");
  models_cmd->add_option("-o,--output", c.output, "output file");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  verify_cmd->add_option("--suite", suite, "run only this suite (1..10)")->check(CLI::Range(0, 10));
  verify_cmd->add_option("--tol", c.tol, "tolerance overrides");
  verify_cmd->add_option("--seed", c.seed, "seed for random sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_record("UsageError", e.what());
    return 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(c, samples);
    if (*frame_cmd) return cmd_frame(c, q);
    if (*inv_cmd) return cmd_invariants(c, q);
    if (*sheet_cmd) return cmd_sheet(c, grid, fmt, proj, drop, rank);
    if (*focal_cmd) return cmd_focal(c, grid, fmt, proj, drop);
    if (*disc_cmd) return cmd_discriminant(c, order, grid, fmt);
    if (*classify_cmd) return cmd_classify(c, q);
    if (*scan_cmd) return cmd_scan(c, n, n_generic, invariant);
    if (*height_cmd) return cmd_height(c, q, lambda, mu, jet_order);
    if (*models_cmd) return cmd_models(c, normal_form, set, at, brute, pitch, box);
    if (*verify_cmd) return cmd_verify(c, suite);
  } catch (const InputFormatError& e) {
    error_record("InputFormatError", e.what(), e.line, e.column);
    return 2;
  } catch (const UsageError& e) {
    error_record("UsageError", e.what());
    return 2;
  } catch (const AdsError& e) {
    error_record(e.kind(), e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    error_record("UsageError", std::string("bad number: ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    error_record("InternalError", e.what());
    return 1;
  }
  return 2;
}
