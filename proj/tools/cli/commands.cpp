#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include "config.hpp"
#include "krein/discrete.hpp"
#include "output.hpp"

namespace krein::cli {

namespace {

namespace fs = std::filesystem;

struct Context {
  const RunRequest& req;
  Reader& cfg;
  ProblemSpec problem;
  std::uint64_t seed;
  int threads;
  std::ostream& log;

  nlohmann::json meta(const std::string& kind) const {
    return {{"command", req.command},
            {"table", kind},
            {"problem", req.config.at("problem")},
            {"problem_hash", problem_hash(req.config.at("problem"))},
            {"tolerances", problem.tolerances},
            {"seed", seed},
            {"branch", "sqrt and powers use arg in [0, 2 pi); m is the Neumann coefficient, "
                       "M+(l) = m+(l), M-(l) = -m-(-l)"}};
  }
};

nlohmann::json cjson(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

cplx parse_lambda(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ConfigError(where + ": expected [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<cplx> parse_lambdas(Reader& r, const std::string& key) {
  const auto& arr = r.raw(key);
  if (!arr.is_array() || arr.empty()) r.fail(key, "expected a non-empty array of [re, im]");
  std::vector<cplx> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(parse_lambda(arr[i], r.path() + "." + key + "[" + std::to_string(i) + "]"));
  return out;
}

const FullLineProblem& need_full_line(const Context& c) {
  if (!c.problem.full_line)
    throw ConfigError("problem.kind: '" + c.problem.kind + "' has no finite-difference model");
  return *c.problem.full_line;
}

nlohmann::json scan_json(const RatioScanResult& s) {
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& e : s.excluded) ex.push_back({{"lambda", cjson(e.lambda)}, {"reason", e.reason}});
  return {{"sup", s.sup_value},           {"argmax_lambda", cjson(s.argmax_lambda)},
          {"shift_C", s.shift_C},         {"growth_exponent", s.growth_exponent},
          {"fit_residual", s.fit_residual}, {"verdict", to_string(s.verdict)},
          {"flat_objective", s.flat_objective}, {"excluded", ex}};
}

// ------------------------------------------------------------------ m-eval

int cmd_m_eval(Context& c) {
  const auto lambdas = parse_lambdas(c.cfg, "lambdas");
  const std::string side = c.cfg.string("side", "plus");
  if (side != "plus" && side != "minus" && side != "both")
    c.cfg.fail("side", "expected plus, minus or both");
  c.cfg.finish();
  const EvaluatorPair pair = make_pair(c.problem.evaluator);
  Csv csv({"lambda_re", "lambda_im", "side", "m_re", "m_im"});
  nlohmann::json radii = nlohmann::json::array();
  auto emit = [&](const MEvaluator& ev, cplx l, const char* tag) {
    cplx m;
    if (const auto* nk = std::get_if<NumericKind>(&ev.kind())) {
      const auto w = m_numeric(nk->problem, l, nk->options);
      m = w.m;
      radii.push_back({{"lambda", cjson(l)}, {"side", tag}, {"X", w.X}, {"error_estimate", w.error_estimate}});
    } else {
      m = ev.m(l);
    }
    csv.row({fmt(l.real()), fmt(l.imag()), tag, fmt(m.real()), fmt(m.imag())});
  };
  for (cplx l : lambdas) {
    if (side != "minus") emit(pair.plus, l, "plus");
    if (side != "plus") emit(pair.minus, l, "minus");
  }
  auto meta = c.meta("m");
  meta["truncation_radii"] = radii;
  emit_table(c.req.out, "m", csv, meta);
  c.log << "m-eval: " << csv.rows() << " rows\n";
  return kOk;
}

// ---------------------------------------------------------- criterion-scan

int cmd_criterion_scan(Context& c) {
  const ScanRegion region = parse_region(c.cfg.object("region"));
  const std::string form = c.cfg.string("form", "shifted");
  if (form != "shifted" && form != "necessary") c.cfg.fail("form", "expected shifted or necessary");
  std::optional<double> shift;
  bool optimize = false;
  if (c.cfg.has("shift")) {
    const auto& s = c.cfg.raw("shift");
    if (s.is_string() && s.get<std::string>() == "optimize")
      optimize = true;
    else if (s.is_number())
      shift = s.get<double>();
    else
      c.cfg.fail("shift", "expected a number or \"optimize\"");
  }
  if (form == "necessary" && (optimize || shift)) c.cfg.fail("shift", "not used by the necessary form");
  c.cfg.finish();

  const EvaluatorPair pair = make_pair(c.problem.evaluator);
  RatioScanResult res;
  if (form == "necessary") {
    res = necessary_ratio_scan(pair.plus, pair.minus, region, c.threads);
  } else {
    const ScanGrid grid = evaluate_grid(pair.plus, pair.minus, region, c.threads);
    res = optimize ? optimize_shift(grid) : summarize(grid, shift.value_or(0.0));
  }
  Csv csv({"abs_lambda", "arg_lambda", "ratio"});
  for (const auto& s : res.samples) csv.row({fmt(s.abs_lambda), fmt(s.arg_lambda), fmt(s.ratio)});
  auto meta = c.meta("scan");
  meta["form"] = form;
  meta["region"] = {{"radii", region.radii()}, {"angles", region.angle_grid()}};
  meta["summary"] = scan_json(res);
  meta["evidence"] = "finite-grid evidence; not a proof of boundedness";
  emit_table(c.req.out, "scan", csv, meta);
  c.log << "criterion-scan: sup " << res.sup_value << " exponent " << res.growth_exponent << " verdict "
        << to_string(res.verdict) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- classify

nlohmann::json decaying_side_json(const DecayingSideReport& s) {
  const char* cases[] = {"i", "ii", "inconclusive"};
  const char* s0[] = {"bounded", "unbounded", "inconclusive"};
  return {{"case", cases[static_cast<int>(s.decay_case)]},
          {"s0", s0[static_cast<int>(s.s0.verdict)]},
          {"a", s.a},
          {"b", s.b},
          {"k", s.k},
          {"fit_residual", s.fit_residual},
          {"quadrature", {{"a", s.quadrature.a}, {"b", s.quadrature.b}}}};
}

int cmd_classify(Context& c) {
  ClassifyOptions o;
  o.near_zero_R = c.cfg.positive("near_zero_R", o.near_zero_R);
  o.near_infinity_R = c.cfg.positive("near_infinity_R", o.near_infinity_R);
  o.decades = c.cfg.positive("decades", o.decades);
  o.radial_points = c.cfg.integer("radial_points", o.radial_points);
  o.angular_points = c.cfg.integer("angular_points", o.angular_points);
  if (o.radial_points < 2) c.cfg.fail("radial_points", "must be at least 2");
  if (o.angular_points < 1) c.cfg.fail("angular_points", "must be at least 1");
  if (c.cfg.has("shift_seed")) o.shift_seed = c.cfg.number("shift_seed");
  o.herglotz_samples = c.cfg.integer("herglotz_samples", o.herglotz_samples);
  if (o.herglotz_samples < 0) c.cfg.fail("herglotz_samples", "must be nonnegative");
  if (auto r = c.cfg.optional_object("eig_rect")) o.eig_rect = parse_rect(*r);
  const bool decaying = c.cfg.boolean("decaying", c.problem.kind == "decaying");
  c.cfg.finish();
  o.even_problem = c.problem.even;
  o.seed = c.seed;
  o.threads = c.threads;

  const EvaluatorPair pair = make_pair(c.problem.evaluator);
  const ClassificationReport rep = classify(pair, o);
  nlohmann::json eigs = nlohmann::json::array();
  for (const auto& e : rep.nonreal_eigs)
    eigs.push_back({{"lambda", cjson(e.lambda)}, {"multiplicity", e.multiplicity}, {"residual", e.residual}});
  nlohmann::json out = c.meta("classify");
  out["report"] = {{"herglotz_ok", rep.herglotz_ok},
                   {"herglotz_min", rep.herglotz_min},
                   {"stieltjes", to_string(rep.stieltjes_verdict)},
                   {"j_nonnegative", to_string(rep.j_nonneg_verdict)},
                   {"critical_point_zero", to_string(rep.critical_point_zero)},
                   {"critical_point_infinity", to_string(rep.critical_point_infinity)},
                   {"zero_scan", scan_json(rep.zero_scan)},
                   {"zero_necessary", scan_json(rep.zero_necessary)},
                   {"infinity_scan", scan_json(rep.infinity_scan)},
                   {"infinity_necessary", scan_json(rep.infinity_necessary)},
                   {"nonreal_eigs", eigs},
                   {"notes", rep.notes}};
  if (rep.definitizing)
    out["report"]["definitizing_polynomial"] = {{"coeffs", rep.definitizing->p.coeffs()},
                                                {"similar_to_normal", rep.definitizing->similar_to_normal}};
  if (decaying) {
    const FullLineProblem& fp = need_full_line(c);
    const DecayingReport d = classify_decaying(fp.plus(), fp.minus());
    out["report"]["decaying"] = {{"plus", decaying_side_json(d.plus)}, {"minus", decaying_side_json(d.minus)}};
    if (d.shift_candidate) out["report"]["decaying"]["shift_candidate"] = *d.shift_candidate;
  }
  out["evidence"] = "verdicts are finite-sample evidence";
  emit_json(c.req.out / "classify.json", out);
  c.log << "classify: zero " << to_string(rep.critical_point_zero) << ", infinity "
        << to_string(rep.critical_point_infinity) << "\n";
  return kOk;
}

// -------------------------------------------------------------- zone-build

int cmd_zone_build(Context& c) {
  std::vector<cplx> probes = {{0.0, 1.0}, {1.0, 1.0}, {-1.0, 0.5}};
  if (c.cfg.has("probes")) probes = parse_lambdas(c.cfg, "probes");
  c.cfg.finish();
  nlohmann::json out = c.meta("zone");
  if (const auto* fz = std::get_if<FiniteZoneKind>(&c.problem.evaluator)) {
    const auto& p = fz->poly;
    out["zone"] = {{"mu_r0", fz->data.mu_r0}, {"mu_l", fz->data.mu_l}, {"mu_r", fz->data.mu_r},
                   {"xi", fz->data.xi},       {"eps", fz->data.eps}};
    out["polynomials"] = {{"P", p.P.coeffs()}, {"Q", p.Q.coeffs()}, {"R", p.R.coeffs()}, {"S", p.S.coeffs()}};
    out["tau"] = p.tau;
    out["identity_residual"] = p.residual;
    out["interlacing"] = p.interlacing;
  } else if (const auto* iz = std::get_if<InfiniteZoneKind>(&c.problem.evaluator)) {
    const auto& t = *iz->truncation;
    nlohmann::json res = nlohmann::json::array();
    double worst = 0.0;
    for (cplx l : probes) {
      const double r = t.identity_residual(l);
      worst = std::max(worst, r);
      res.push_back({{"lambda", cjson(l)}, {"residual", r}});
    }
    const auto& s = t.report();
    out["gaps"] = t.N();
    out["tau"] = t.tau();
    out["identity_residuals"] = res;
    out["identity_residual"] = worst;
    out["f_prime_zero"] = t.f_prime_zero();
    out["summability"] = {{"gap_sum", s.gap_sum},
                          {"inv_sum", s.inv_sum},
                          {"gap_block_ratio", s.gap_block_ratio},
                          {"inv_block_ratio", s.inv_block_ratio},
                          {"passes", s.passes}};
  } else {
    throw ConfigError("problem.kind: zone-build needs finite_zone or infinite_zone");
  }
  emit_json(c.req.out / "zone.json", out);
  c.log << "zone-build: written\n";
  return kOk;
}

// --------------------------------------------------------------- eigs-find

int cmd_eigs_find(Context& c) {
  const contour::Rect rect = parse_rect(c.cfg.object("rect"));
  if (!(rect.im0 > 0)) throw ConfigError("rect.im0: must be positive");
  const double D = c.cfg.number("D", 1.0), C = c.cfg.number("C", 0.0);
  c.cfg.finish();
  const EvaluatorPair pair = make_pair(c.problem.evaluator);
  const auto eigs = find_nonreal_eigs(pair.plus, pair.minus, rect, D, C);
  Csv csv({"re", "im", "multiplicity", "residual"});
  for (const auto& e : eigs)
    csv.row({fmt(e.lambda.real()), fmt(e.lambda.imag()), std::to_string(e.multiplicity), fmt(e.residual)});
  const DefinitizingPoly dp = definitizing_poly(eigs);
  auto meta = c.meta("eigs");
  meta["rect"] = {rect.re0, rect.re1, rect.im0, rect.im1};
  meta["D"] = D;
  meta["C"] = C;
  meta["definitizing_polynomial"] = {{"coeffs", dp.p.coeffs()}, {"similar_to_normal", dp.similar_to_normal}};
  emit_table(c.req.out, "eigs", csv, meta);
  c.log << "eigs-find: " << eigs.size() << " zeros\n";
  return kOk;
}

// ------------------------------------------------------- discrete commands

DiscretizedOperator discretize_from(Context& c) {
  const double X = c.cfg.positive("X", 20.0);
  const int n = c.cfg.integer("n", 400);
  if (n < 16) c.cfg.fail("n", "must be at least 16");
  return discretize(need_full_line(c), X, n);
}

int cmd_discrete_spectrum(Context& c) {
  const DiscretizedOperator op = discretize_from(c);
  SpectrumOptions o;
  o.dense_limit = c.cfg.integer("dense_limit", o.dense_limit);
  o.imag_tol = c.cfg.positive("imag_tol", o.imag_tol);
  o.eigenvectors = c.cfg.boolean("eigenvector_condition", o.eigenvectors);
  if (auto r = c.cfg.optional_object("search")) o.search = parse_rect(*r);
  c.cfg.finish();
  const SpectrumResult s = spectrum(op, o);
  Csv csv({"re", "im", "kind"});
  for (double x : s.real_eigs) csv.row({fmt(x), fmt(0.0), "real"});
  for (cplx z : s.complex_pairs) csv.row({fmt(z.real()), fmt(z.imag()), "pair"});
  auto meta = c.meta("spectrum");
  meta["X"] = op.X;
  meta["n"] = op.n;
  meta["h"] = op.h;
  meta["method"] = s.method;
  meta["real_eigs_complete"] = s.real_eigs_complete;
  meta["eigvec_condition"] = std::isfinite(s.eigvec_condition) ? nlohmann::json(s.eigvec_condition) : nlohmann::json();
  meta["weighted_symmetry_error"] = weighted_symmetry_error(op);
  meta["imag_tol"] = o.imag_tol;
  meta["pairs_listed_as"] = "one representative with Im > 0 per conjugate pair";
  emit_table(c.req.out, "spectrum", csv, meta);
  c.log << "discrete-spectrum: " << s.real_eigs.size() << " real, " << s.complex_pairs.size() << " pairs ("
        << s.method << ")\n";
  return kOk;
}

// Smooth random test vector in the Euclidean picture of the weighted space.
Eigen::VectorXcd random_bump(const DiscretizedOperator& op, std::mt19937_64& rng) {
  std::normal_distribution<double> N01;
  const double centre = 0.25 * op.X * N01(rng);
  const double width = 0.3 + 0.5 * std::abs(N01(rng));
  const cplx phase = std::polar(1.0, 2.0 * std::numbers::pi * std::uniform_real_distribution<double>()(rng));
  Eigen::VectorXcd g(op.n);
  for (int k = 0; k < op.n; ++k) {
    const double u = (op.x[k] - centre) / width;
    g(k) = phase * std::exp(-u * u) * std::sqrt(op.w[k] * op.h);
  }
  return g / g.norm();
}

int cmd_discrete_functional(Context& c) {
  const DiscretizedOperator op = discretize_from(c);
  std::vector<double> ladder = {1.0, 0.3, 0.1, 0.03, 0.01, 0.003, 0.001};
  if (c.cfg.has("eps")) ladder = c.cfg.numbers("eps");
  for (double e : ladder)
    if (!(e > 0)) c.cfg.fail("eps", "every entry must be positive");
  const std::string stat = c.cfg.string("statistic", "worst");
  if (stat != "worst" && stat != "random_max") c.cfg.fail("statistic", "expected worst or random_max");
  const int trials = c.cfg.integer("trials", 20);
  if (trials < 1) c.cfg.fail("trials", "must be at least 1");
  const bool verify = c.cfg.boolean("verify", op.n <= 400);
  const int dense_limit = c.cfg.integer("dense_limit", 1500);
  c.cfg.finish();
  if (op.n > dense_limit)
    throw ConfigError("n: the functional uses a dense kernel; n must not exceed dense_limit");

  const Eigen::MatrixXd T = op.dense_weighted();
  std::mt19937_64 rng(c.seed);
  std::vector<Eigen::VectorXcd> fs;
  for (int t = 0; t < trials; ++t) fs.push_back(random_bump(op, rng));

  Csv csv({"eps", "value", "error_bar"});
  nlohmann::json rows = nlohmann::json::array();
  for (double eps : ladder) {
    const Eigen::MatrixXcd K = functional_kernel(T, eps);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(K);
    const double worst = es.eigenvalues().maxCoeff();
    double rmax = -1.0;
    Eigen::Index arg = 0;
    for (std::size_t t = 0; t < fs.size(); ++t) {
      const double v = (fs[t].adjoint() * K * fs[t])(0).real();
      if (v > rmax) rmax = v, arg = static_cast<Eigen::Index>(t);
    }
    Eigen::VectorXcd fstar = stat == "worst" ? Eigen::VectorXcd(es.eigenvectors().col(op.n - 1)) : fs[arg];
    const double value = stat == "worst" ? worst : rmax;
    double err = std::numeric_limits<double>::quiet_NaN();
    if (verify) {
      FunctionalOptions fo;
      fo.eps = eps;
      Eigen::VectorXcd f = fstar;  // back from the Euclidean picture
      for (int k = 0; k < op.n; ++k) f(k) /= std::sqrt(op.w[k] * op.h);
      const FunctionalResult q = resolvent_functional(op, f, fo);
      err = std::abs(q.value - value) + q.error_bar;
    }
    csv.row({fmt(eps), fmt(value), fmt(err)});
    rows.push_back({{"eps", eps}, {"worst", worst}, {"random_max", rmax}});
  }
  auto meta = c.meta("functional");
  meta["X"] = op.X;
  meta["n"] = op.n;
  meta["statistic"] = stat;
  meta["trials"] = trials;
  meta["normalization"] = "unit f in the weighted norm";
  meta["error_bar"] = verify ? "kernel vs quadrature mismatch plus quadrature error" : "not verified";
  meta["ladder"] = rows;
  meta["evidence"] = "finite eps ladder and finitely many f; evidence only";
  emit_table(c.req.out, "functional", csv, meta);
  c.log << "discrete-functional: " << ladder.size() << " rows\n";
  return kOk;
}

using Handler = int (*)(Context&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"m-eval", cmd_m_eval},
      {"criterion-scan", cmd_criterion_scan},
      {"classify", cmd_classify},
      {"zone-build", cmd_zone_build},
      {"eigs-find", cmd_eigs_find},
      {"discrete-spectrum", cmd_discrete_spectrum},
      {"discrete-functional", cmd_discrete_functional},
  };
  return h;
}

void write_error_record(const RunRequest& req, const std::string& code, const std::string& message,
                        std::ostream& err) {
  const nlohmann::json rec = {{"status", "numerical_failure"}, {"command", req.command}, {"code", code},
                              {"message", message}};
  err << rec.dump() << "\n";
  try {
    emit_json(req.out / "error.json", rec);
  } catch (const OutputError& e) {
    err << "also failed to write error.json: " << e.what() << "\n";
  }
}

}  // namespace

int run(const RunRequest& req, std::ostream& log, std::ostream& err) {
  try {
    const auto it = handlers().find(req.command);
    if (it == handlers().end()) throw ConfigError("unknown command '" + req.command + "'");
    Reader top(req.config, "config");
    if (top.has("command") && top.string("command") != req.command)
      top.fail("command", "does not match the subcommand '" + req.command + "'");
    std::uint64_t seed = 1;
    if (top.has("seed")) {
      const auto& s = top.raw("seed");
      if (!s.is_number_unsigned()) top.fail("seed", "expected a nonnegative integer");
      seed = s.get<std::uint64_t>();
    }
    int threads = top.integer("threads", 1);
    if (req.seed) seed = *req.seed;
    if (req.threads) threads = *req.threads;
    if (threads < 1) throw ConfigError("threads: must be at least 1");
    ProblemSpec problem = parse_problem(top.object("problem"));
    Context ctx{req, top, std::move(problem), seed, threads, log};
    return it->second(ctx);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    write_error_record(req, e.code(), e.what(), err);
    return kNumericalFailure;
  } catch (const OutputError& e) {
    write_error_record(req, "OutputError", e.what(), err);
    return kNumericalFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  }
}

int run_cli(int argc, char** argv, std::ostream& log, std::ostream& err) {
  CLI::App app{"Indefinite Sturm-Liouville m-coefficients, regularity criteria and discrete checks"};
  app.require_subcommand(1, 1);
  std::string config_path, out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON configuration file")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "random seed (overrides the config)");
    sub->add_option("--threads", threads, "worker threads (overrides the config)")->check(CLI::PositiveNumber);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    log << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kConfigError;
  }
  RunRequest req;
  req.command = app.get_subcommands().front()->get_name();
  req.out = out_dir;
  req.seed = seed;
  req.threads = threads;
  std::ifstream is(config_path);
  if (!is) {
    err << "configuration error: cannot read " << config_path << "\n";
    return kConfigError;
  }
  try {
    req.config = nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    err << "configuration error: " << config_path << ": " << e.what() << "\n";
    return kConfigError;
  }
  return run(req, log, err);
}

}  // namespace krein::cli
