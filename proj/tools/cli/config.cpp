#include "config.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

namespace krein::cli {

Reader::Reader(const json& j, std::string path) : j_(&j), path_(std::move(path)) {
  if (!j.is_object()) throw ConfigError(path_ + ": expected an object");
}

void Reader::fail(const std::string& key, const std::string& why) const {
  throw ConfigError(path_ + "." + key + ": " + why);
}

bool Reader::has(const std::string& key) const { return j_->contains(key); }

const json& Reader::at(const std::string& key) {
  if (!j_->contains(key)) fail(key, "missing");
  used_.insert(key);
  return j_->at(key);
}

const json& Reader::raw(const std::string& key) { return at(key); }

double Reader::number(const std::string& key) {
  const json& v = at(key);
  if (!v.is_number()) fail(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(key, "must be finite");
  return x;
}

double Reader::number(const std::string& key, double fallback) {
  return has(key) ? number(key) : fallback;
}

double Reader::positive(const std::string& key, double fallback) {
  const double x = number(key, fallback);
  if (!(x > 0)) fail(key, "must be positive");
  return x;
}

int Reader::integer(const std::string& key, int fallback) {
  if (!has(key)) return fallback;
  const json& v = at(key);
  if (!v.is_number_integer()) fail(key, "expected an integer");
  return v.get<int>();
}

bool Reader::boolean(const std::string& key, bool fallback) {
  if (!has(key)) return fallback;
  const json& v = at(key);
  if (!v.is_boolean()) fail(key, "expected true or false");
  return v.get<bool>();
}

std::string Reader::string(const std::string& key) {
  const json& v = at(key);
  if (!v.is_string()) fail(key, "expected a string");
  return v.get<std::string>();
}

std::string Reader::string(const std::string& key, const std::string& fallback) {
  return has(key) ? string(key) : fallback;
}

std::vector<double> Reader::numbers(const std::string& key) {
  const json& v = at(key);
  if (!v.is_array()) fail(key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) fail(key, "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

Reader Reader::object(const std::string& key) { return Reader(at(key), path_ + "." + key); }

std::optional<Reader> Reader::optional_object(const std::string& key) {
  if (!has(key)) return std::nullopt;
  return object(key);
}

void Reader::finish() const {
  for (auto it = j_->begin(); it != j_->end(); ++it)
    if (!used_.count(it.key())) throw ConfigError(path_ + ": unknown key '" + it.key() + "'");
}

namespace {

void require_alpha(const Reader& r, double alpha) {
  if (!(alpha > -1.0)) {
    std::ostringstream os;
    os << "alpha > -1 required (got " << alpha << ")";
    r.fail("alpha", os.str());
  }
}

std::vector<Coefficient> parse_terms(Reader& r, const std::string& key) {
  const json& arr = r.raw(key);
  if (!arr.is_array() || arr.empty()) r.fail(key, "expected a non-empty array of coefficients");
  std::vector<Coefficient> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(parse_coefficient(Reader(arr[i], r.path() + "." + key + "[" + std::to_string(i) + "]")));
  return out;
}

}  // namespace

Coefficient parse_coefficient(Reader r) {
  const std::string kind = r.string("kind");
  Coefficient c;
  if (kind == "constant") {
    c = Coefficient::constant(r.number("value"));
  } else if (kind == "piecewise_constant") {
    auto breaks = r.numbers("breaks");
    auto values = r.numbers("values");
    if (values.size() != breaks.size() + 1) r.fail("values", "needs one more entry than breaks");
    for (std::size_t i = 1; i < breaks.size(); ++i)
      if (!(breaks[i] > breaks[i - 1])) r.fail("breaks", "must be strictly increasing");
    c = Coefficient::piecewise_constant(std::move(breaks), std::move(values));
  } else if (kind == "characteristic") {
    const double a = r.number("a"), b = r.number("b");
    if (!(b > a)) r.fail("b", "must exceed a");
    c = Coefficient::characteristic(a, b, r.number("height", 1.0));
  } else if (kind == "polynomial") {
    const double a = r.number("a"), b = r.number("b");
    if (!(b > a)) r.fail("b", "must exceed a");
    c = Coefficient::polynomial(r.numbers("coeffs"), a, b);
  } else if (kind == "power") {
    const double alpha = r.number("alpha");
    require_alpha(r, alpha);
    c = Coefficient::power(alpha, r.number("scale", 1.0));
  } else if (kind == "cosine") {
    c = Coefficient::cosine(r.number("amplitude"), r.number("frequency"), r.number("phase", 0.0),
                            r.number("offset", 0.0));
  } else if (kind == "rational") {
    const double start = r.number("start", 0.0);
    if (start < 0) r.fail("start", "must be nonnegative");
    c = Coefficient::inverse_power_tail(r.number("coef"), start, r.positive("p", 2.0));
  } else if (kind == "sum") {
    auto terms = parse_terms(r, "terms");
    c = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) c = c + terms[i];
  } else if (kind == "scaled") {
    c = parse_coefficient(r.object("of")) * r.number("factor");
  } else if (kind == "even") {
    c = parse_coefficient(r.object("of")).even_extension();
  } else if (kind == "reflected") {
    c = parse_coefficient(r.object("of")).reflected();
  } else if (kind == "example_q0") {
    c = example_q0_potential();
  } else if (kind == "example_a1") {
    c = example_A1_potential();
  } else {
    r.fail("kind", "unknown coefficient kind '" + kind + "'");
  }
  r.finish();
  return c;
}

namespace {

WeylOptions parse_weyl(Reader& r, json& tol) {
  WeylOptions o;
  o.tolerance = r.positive("tolerance", o.tolerance);
  o.X = r.has("X") ? r.positive("X", 1.0) : 0.0;
  o.decay_target = r.positive("decay_target", o.decay_target);
  tol = {{"tolerance", o.tolerance}, {"X", o.X}, {"decay_target", o.decay_target}};
  return o;
}

ZoneData parse_zone(Reader r) {
  ZoneData z;
  z.mu_r0 = r.number("mu_r0", 0.0);
  z.mu_l = r.numbers("mu_l");
  z.mu_r = r.numbers("mu_r");
  z.xi = r.numbers("xi");
  if (r.has("eps")) {
    for (double e : r.numbers("eps")) {
      if (e != 1.0 && e != -1.0) r.fail("eps", "entries must be +1 or -1");
      z.eps.push_back(static_cast<int>(e));
    }
  } else {
    z.eps.assign(z.xi.size(), 1);
  }
  r.finish();
  try {
    z.validate();
  } catch (const Error& e) {
    throw ConfigError(r.path() + ": " + e.what());
  }
  return z;
}

}  // namespace

ProblemSpec parse_problem(Reader r) {
  ProblemSpec p;
  p.kind = r.string("kind");
  const std::string& k = p.kind;
  if (k == "free") {
    p.evaluator = FreeKind{};
    p.full_line = FullLineProblem{Coefficient::constant(0.0)};
    p.even = true;
  } else if (k == "power") {
    const double alpha = r.number("alpha");
    require_alpha(r, alpha);
    p.evaluator = PowerWeightKind{alpha};
    p.full_line = FullLineProblem{Coefficient::constant(0.0), Coefficient::power(alpha)};
    p.even = true;
  } else if (k == "q0") {
    p.evaluator = ExampleQ0Kind{};
    p.full_line = FullLineProblem{example_q0_potential()};
    p.even = true;
  } else if (k == "a1") {
    p.evaluator = ExampleA1Kind{};
    p.full_line = FullLineProblem{example_A1_potential()};
    p.even = true;
  } else if (k == "periodic") {
    Coefficient q = parse_coefficient(r.object("q"));
    if (r.has("period")) q = q.with_period(r.positive("period", 1.0));
    if (!q.period()) r.fail("period", "required when q has no natural period");
    const double T = *q.period();
    if (r.has("shift")) {
      const json& s = r.raw("shift");
      double shift = 0.0;
      if (s.is_string() && s.get<std::string>() == "band_edge") {
        shift = lowest_band_edge({q, T}).lambda0;
      } else if (s.is_number()) {
        shift = s.get<double>();
      } else {
        r.fail("shift", "expected a number or \"band_edge\"");
      }
      q = q.shifted(-shift).with_period(T);
      p.tolerances["shift"] = shift;
    }
    p.evaluator = PeriodicKind{{q, T}};
    p.full_line = FullLineProblem{q};
    p.even = r.boolean("even", false);
    p.tolerances["period"] = T;
  } else if (k == "finite_zone") {
    ZoneData z;
    if (r.has("random_gaps")) {
      const int N = r.integer("random_gaps", 1);
      if (N < 1 || N > 50) r.fail("random_gaps", "must lie in [1, 50]");
      std::mt19937_64 rng(static_cast<std::uint64_t>(r.integer("random_seed", 1)));
      z = random_zone_data(rng, N, r.boolean("mu_r0_zero", true));
    } else {
      z = parse_zone(r.object("zone"));
    }
    p.evaluator = FiniteZoneKind{z, finitezone_build(z)};
  } else if (k == "infinite_zone") {
    const std::string fam = r.string("family", "geometric");
    if (fam != "geometric") r.fail("family", "only \"geometric\" is available");
    const int N = r.integer("gaps", 20);
    if (N < 1 || N > 2000) r.fail("gaps", "must lie in [1, 2000]");
    p.evaluator = InfiniteZoneKind{std::make_shared<InfZoneTruncation>(ZoneSequenceData::geometric(), N)};
    p.tolerances["gaps"] = N;
  } else if (k == "numeric" || k == "decaying") {
    Coefficient q = r.has("q") ? parse_coefficient(r.object("q")) : Coefficient::constant(0.0);
    Coefficient w = r.has("weight") ? parse_coefficient(r.object("weight")) : Coefficient::constant(1.0);
    FullLineProblem fp{q, w};
    p.full_line = fp;
    p.even = r.boolean("even", false);
    if (k == "numeric") {
      WeylOptions o = parse_weyl(r, p.tolerances);
      p.evaluator = NumericKind{fp.plus(), o};
    } else {
      if (w.kind() != CoefficientKind::PiecewiseConstant || w(0.5) != 1.0 || w(-0.5) != 1.0)
        r.fail("weight", "decaying evaluator requires unit weight");
      DecayingOptions o;
      o.rtol = r.positive("rtol", o.rtol);
      o.tail_tolerance = r.positive("tail_tolerance", o.tail_tolerance);
      p.tolerances = {{"rtol", o.rtol}, {"tail_tolerance", o.tail_tolerance}};
      p.evaluator = DecayingABKind{fp.plus(), o};
    }
  } else {
    r.fail("kind", "unknown problem kind '" + k + "'");
  }
  r.finish();
  return p;
}

ScanRegion parse_region(Reader r) {
  const std::string kind = r.string("kind", "near_zero");
  ScanRegion g;
  if (kind == "near_zero") {
    g = ScanRegion::near_zero(r.positive("R", 0.1), r.positive("decades", 3.0));
  } else if (kind == "near_infinity") {
    g = ScanRegion::near_infinity(r.positive("R", 10.0), r.positive("decades", 3.0));
  } else if (kind == "full") {
    const double lo = r.positive("rmin", 0.1), hi = r.positive("rmax", 10.0);
    if (!(hi > lo)) r.fail("rmax", "must exceed rmin");
    g = ScanRegion::full(lo, hi);
  } else {
    r.fail("kind", "expected near_zero, near_infinity or full");
  }
  g.radial_points = r.integer("radial_points", g.radial_points);
  g.angular_points = r.integer("angular_points", g.angular_points);
  if (g.radial_points < 2) r.fail("radial_points", "must be at least 2");
  if (g.angular_points < 1) r.fail("angular_points", "must be at least 1");
  if (r.has("angles")) {
    g.angles = r.numbers("angles");
    for (double a : g.angles)
      if (!(a > 0 && a < std::numbers::pi)) r.fail("angles", "each angle must lie in (0, pi)");
  }
  r.finish();
  return g;
}

contour::Rect parse_rect(Reader r) {
  contour::Rect b{r.number("re0"), r.number("re1"), r.number("im0"), r.number("im1")};
  if (!(b.re1 > b.re0)) r.fail("re1", "must exceed re0");
  if (!(b.im1 > b.im0)) r.fail("im1", "must exceed im0");
  r.finish();
  return b;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"m-eval",    "criterion-scan",    "classify",
                                                 "zone-build", "eigs-find",         "discrete-spectrum",
                                                 "discrete-functional"};
  return names;
}

}  // namespace krein::cli
