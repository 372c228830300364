#include "causet/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "causet/class_distribution.hpp"
#include "causet/cone_metrics.hpp"
#include "causet/covering.hpp"
#include "causet/distances.hpp"
#include "causet/errors.hpp"
#include "causet/sprinkle.hpp"
#include "causet/uniformity.hpp"
#include "causet/volume.hpp"
#include "causet/volume_law.hpp"

namespace causet {

namespace {

using Clock = std::chrono::steady_clock;

Json spec_json(const ModelSpec& spec) {
  Json j;
  j["kind"] = spec.kind;
  for (const auto& [k, v] : spec.params) j[k] = v;
  return j;
}

Json check(const std::string& name, bool passed, double value, double threshold, const std::string& relation) {
  return Json{{"name", name}, {"passed", passed}, {"value", value}, {"threshold", threshold}, {"relation", relation}};
}

// Header skeleton shared by all commands.
Json start(const ExperimentConfig& c, const std::string& command) {
  Json j;
  j["experiment"] = command;
  j["config"] = config_echo(c);
  return j;
}

void finish(ExperimentResult& r, Json checks) {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c["passed"].get<bool>();
  r.json["checks"] = std::move(checks);
  r.json["passed"] = ok;
  r.passed = ok;
}

std::string fmt(double x) { return format_number(x); }

Json distribution_json(const ClassDistribution& d) {
  Json a = Json::array();
  for (const auto& [cls, e] : d.entries()) {
    a.push_back({{"canonical_key", cls.to_hex()},
                 {"relations", cls.representative().relation_count()},
                 {"probability", e.probability},
                 {"standard_error", d.standard_error(cls)},
                 {"count", e.count}});
  }
  return a;
}

ClassDistribution merge(const ClassDistribution& a, const ClassDistribution& b) {
  std::map<OrderClass, std::uint64_t> counts;
  for (const auto& [c, e] : a.entries()) counts[c] += e.count;
  for (const auto& [c, e] : b.entries()) counts[c] += e.count;
  return ClassDistribution::from_counts(a.K(), counts);
}

std::size_t require_positive(const ExperimentConfig& c, const std::string& key, std::uint64_t fallback) {
  const std::uint64_t v = c.count(key, fallback);
  if (v == 0) throw ConfigError(c.origin() + ": [experiment] " + key + ": must be positive");
  return static_cast<std::size_t>(v);
}

std::unique_ptr<SpacetimeModel> single_model(const ExperimentConfig& c) {
  if (c.has_model("model")) return c.model("model");
  if (c.has_model("model.x")) return c.model("model.x");
  throw ConfigError(c.origin() + ": missing [model] section");
}

// X and Y for two-model experiments; a lone [model] serves as both.
std::pair<std::unique_ptr<SpacetimeModel>, std::unique_ptr<SpacetimeModel>> model_pair(const ExperimentConfig& c) {
  if (c.has_model("model")) {
    if (c.has_model("model.x") || c.has_model("model.y"))
      throw ConfigError(c.origin() + ": use either [model] or [model.x]/[model.y], not both");
    return {c.model("model"), c.model("model")};
  }
  return {c.model("model.x"), c.model("model.y")};
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Least-squares slope of y against x.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

Json config_echo(const ExperimentConfig& c) {
  Json j;
  j["name"] = c.name();
  j["seed"] = c.seed();
  Json f = Json::object();
  for (const auto& [k, v] : c.fields()) f[k] = v;
  j["experiment"] = f;
  Json m = Json::object();
  for (const auto& [section, spec] : c.models()) m[section] = spec_json(spec);
  j["models"] = m;
  return j;
}

// ---------------------------------------------------------------------------

ExperimentResult cmd_ck(const ExperimentConfig& c, const RunOptions& o) {
  c.require_known({"K", "n_trials"});
  const std::size_t K = require_positive(c, "K", 3);
  if (K > kMaxClassDistributionSize)
    throw ConfigError(c.origin() + ": [experiment] K: at most " + std::to_string(kMaxClassDistributionSize));
  const std::size_t n = require_positive(c, "n_trials", 100000);
  const auto model = single_model(c);

  // Two independent halves; their union is the reported distribution.
  const std::size_t h = std::max<std::size_t>(1, n / 2);
  const auto a = estimate_class_distribution(*model, K, h, derive_seed(c.seed(), {1}), o.workers);
  const auto b = n > h ? estimate_class_distribution(*model, K, n - h, derive_seed(c.seed(), {2}), o.workers) : a;
  const auto full = n > h ? merge(a, b) : a;
  const double l1 = n > h ? l1_distance(a, b) : 0.0;
  const double sigma = n > h ? l1_combined_sigma(a, b) : 0.0;

  ExperimentResult r;
  r.json = start(c, "ck");
  r.json["parameters"] = {{"K", K}, {"n_trials", n}, {"model", spec_json(model->spec())}};
  r.json["results"] = {{"classes", distribution_json(full)},
                       {"class_count", full.entries().size()},
                       {"split_half_l1", l1},
                       {"split_half_sigma", sigma},
                       {"distribution_csv", "class_distribution.csv"}};
  r.tables["class_distribution.csv"] = full.to_csv();
  finish(r, Json::array({check("split_half_l1", l1 <= 4.0 * sigma, l1, 4.0 * sigma, "<=")}));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct NeedleConstruction {
  NeedleSlab::Params params;
  double strip_base_volume = 0.0;
  double strip_mass = 0.0;
};

// Strip of Y-mass m over the last h of the slab: its base volume a solves
// λ²a / (1 + (λ² - 1)a) = m.
NeedleConstruction needle_for(double T, double center, double h, double m, double lambda) {
  NeedleConstruction n;
  const double l2 = lambda * lambda;
  const double a = m / (l2 * (1.0 - m) + m);
  n.params.T = T;
  n.params.needle_center = center;
  n.params.needle_start = T - h;
  n.params.needle_width = a / h;
  n.params.lambda = lambda;
  n.strip_base_volume = a;
  n.strip_mass = m;
  return n;
}

}  // namespace

ExperimentResult cmd_thm2(const ExperimentConfig& c, const RunOptions& o) {
  c.require_known({"K", "epsilon", "D", "v", "n_trials", "T", "lambda", "needle_center"});
  const std::size_t K = require_positive(c, "K", 4);
  if (K > kMaxClassDistributionSize)
    throw ConfigError(c.origin() + ": [experiment] K: at most " + std::to_string(kMaxClassDistributionSize));
  const double eps = c.number("epsilon", 0.5);
  const double D = c.number("D", 10.0);
  const double v = c.number("v", 0.05);
  const double T = c.number("T", 1.0);
  const std::size_t n = require_positive(c, "n_trials", 100000);
  if (!(v > 0.0 && v < 1.0)) throw ConfigError(c.origin() + ": [experiment] v: must lie in (0, 1)");
  if (!(eps > 0.0)) throw ConfigError(c.origin() + ": [experiment] epsilon: must be positive");
  if (!(D >= 0.0)) throw ConfigError(c.origin() + ": [experiment] D: must be nonnegative");
  if (!(T > 0.0)) throw ConfigError(c.origin() + ": [experiment] T: must be positive");
  const double budget = std::pow(1.0 - v, static_cast<double>(K));
  if (!(budget > eps))
    throw ConfigError(c.origin() + ": [experiment] infeasible: (1 - v)^K = " + fmt(budget) +
                      " must exceed epsilon = " + fmt(eps));

  const FlatCylinder X(T, 1);
  const double L = X.circumference();
  const double center = c.number("needle_center", 0.5 * L);
  // Quarter of the budget to the strip, a quarter to the cones over its foot.
  const double h = std::min(0.5 * std::sqrt(v), 0.5 * T);
  const double m = v / 4.0;
  const double target = X.tdiam().upper + 1.05 * D;
  auto length = [&](double lambda) { return NeedleSlab(needle_for(T, center, h, m, lambda).params).tdiam().lower; };

  double lambda = 1.0;
  if (c.has("lambda")) {
    lambda = c.number("lambda");
    if (!(lambda >= 1.0)) throw ConfigError(c.origin() + ": [experiment] lambda: must be >= 1");
  } else if (length(1.0) < target) {
    double lo = 1.0, hi = 2.0;
    while (length(hi) < target) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e12) throw ConfigError(c.origin() + ": [experiment] D: no needle reaches the requested length");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (length(mid) < target ? lo : hi) = mid;
    }
    lambda = hi;
  }
  const NeedleConstruction nc = needle_for(T, center, h, m, lambda);
  if (!(nc.params.needle_width <= L))
    throw ConfigError(c.origin() + ": [experiment] v: strip wider than the circumference");
  const NeedleSlab Y(nc.params);

  // Y-volume of everything the needle can influence.
  const Point left{nc.params.needle_start, center - 0.5 * nc.params.needle_width};
  const Point right{nc.params.needle_start, center + 0.5 * nc.params.needle_width};
  const auto cones = region_volume(Y, Region::future(left) | Region::future(right), 0, 0);
  const double region_bound = cones.value + Y.strip_mass();

  const auto px = estimate_class_distribution(X, K, n, derive_seed(c.seed(), {1}), o.workers);
  const auto py = estimate_class_distribution(Y, K, n, derive_seed(c.seed(), {2}), o.workers);
  const double l1 = l1_distance(px, py);
  const double sigma = l1_combined_sigma(px, py);
  const double lower = dminus_lower_tdiam(X, Y);
  // Sprinkles avoiding the altered region agree in law.
  const double tv = Y.strip_mass() - nc.strip_base_volume;
  const double l1_bound = 2.0 * (1.0 - std::pow(1.0 - tv, static_cast<double>(K)));

  ExperimentResult r;
  r.json = start(c, "thm2");
  r.json["parameters"] = {{"K", K},          {"epsilon", eps},          {"D", D},        {"v", v},
                          {"n_trials", n},   {"model_x", spec_json(X.spec())}, {"model_y", spec_json(Y.spec())}};
  r.json["results"] = {{"l1", l1},
                       {"l1_sigma", sigma},
                       {"l1_bound_from_total_variation", l1_bound},
                       {"dminus_lower_tdiam", lower},
                       {"needle_length", Y.needle_curve_length()},
                       {"base_tdiam", X.tdiam().upper},
                       {"lambda", lambda},
                       {"strip_mass", Y.strip_mass()},
                       {"needle_region_volume_bound", region_bound},
                       {"volume_budget", v},
                       {"order_budget", budget},
                       {"distribution_x_csv", "class_distribution_x.csv"},
                       {"distribution_y_csv", "class_distribution_y.csv"}};
  r.tables["class_distribution_x.csv"] = px.to_csv();
  r.tables["class_distribution_y.csv"] = py.to_csv();
  finish(r, Json::array({check("l1", l1 < eps + 4.0 * sigma, l1, eps + 4.0 * sigma, "<"),
                         check("dminus_lower_tdiam", lower > D, lower, D, ">"),
                         check("needle_region_volume", region_bound < v, region_bound, v, "<")}));
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult cmd_thm3(const ExperimentConfig& c, const RunOptions& o) {
  c.require_known({"K", "T", "n_trials", "n"});
  const std::size_t K = require_positive(c, "K", 3);
  const auto Ts = c.numbers("T", {10.0, 100.0, 1000.0});
  const std::size_t n = require_positive(c, "n_trials", 100000);
  const int dims = static_cast<int>(c.count("n", 1));
  for (std::size_t i = 0; i + 1 < Ts.size(); ++i)
    if (!(Ts[i] < Ts[i + 1])) throw ConfigError(c.origin() + ": [experiment] T: must be strictly increasing");

  std::vector<Estimate> E;
  std::vector<std::unique_ptr<FlatCylinder>> models;
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    try {
      models.push_back(std::make_unique<FlatCylinder>(Ts[i], dims));
    } catch (const Error& e) {
      throw ConfigError(c.origin() + ": [experiment] " + e.what());
    }
    E.push_back(total_order_probability(*models.back(), K, n, derive_seed(c.seed(), {i}), o.workers));
  }

  const double k2 = static_cast<double>(K * K);
  Json rows = Json::array();
  std::ostringstream csv, dat;
  csv << "T,E,standard_error,one_minus_E,C_fit,C_fit_T2,pair_spacelike_probability\n";
  dat << "# T E standard_error\n";
  std::vector<double> C, logT, logGap;
  bool four_pi_bound = true;
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    const double T = Ts[i];
    const double gap = 1.0 - E[i].value;
    const double scale = std::pow(T, 1.0 / dims);
    const double cfit = gap * scale / k2;
    C.push_back(cfit);
    if (gap > 0.0) {
      logT.push_back(std::log(T));
      logGap.push_back(std::log(gap));
    }
    four_pi_bound = four_pi_bound && gap <= k2 * 4.0 * M_PI / scale + 4.0 * E[i].standard_error;
    const double Lc = models[i]->circumference();
    // Closed form for one pair on the 1+1 cylinder.
    const double pair = dims == 1 ? Lc / (2.0 * T) - Lc * Lc / (12.0 * T * T) : std::nan("");
    rows.push_back({{"T", T},
                    {"E", E[i].value},
                    {"standard_error", E[i].standard_error},
                    {"one_minus_E", gap},
                    {"C_fit", cfit},
                    {"C_fit_T_squared", gap * T * T / k2},
                    {"pair_spacelike_probability", dims == 1 ? Json(pair) : Json(nullptr)}});
    csv << fmt(T) << ',' << fmt(E[i].value) << ',' << fmt(E[i].standard_error) << ',' << fmt(gap) << ','
        << fmt(cfit) << ',' << fmt(gap * T * T / k2) << ',' << (dims == 1 ? fmt(pair) : "") << '\n';
    dat << fmt(T) << ' ' << fmt(E[i].value) << ' ' << fmt(E[i].standard_error) << '\n';
  }

  bool increasing = true;
  for (std::size_t i = 0; i + 1 < E.size(); ++i) increasing = increasing && E[i + 1].value > E[i].value;
  const double cmax = *std::max_element(C.begin(), C.end());
  const double cmin = *std::min_element(C.begin(), C.end());
  const double ratio = cmin > 0.0 ? cmax / cmin : std::numeric_limits<double>::infinity();

  ExperimentResult r;
  r.json = start(c, "thm3");
  r.json["parameters"] = {{"K", K}, {"T", Ts}, {"n_trials", n}, {"n", dims}};
  r.json["results"] = {{"table", rows},
                       {"C_fit_ratio", std::isfinite(ratio) ? Json(ratio) : Json("inf")},
                       {"fitted_exponent", logT.size() >= 2 ? Json(slope(logT, logGap)) : Json(nullptr)},
                       {"table_csv", "E_T.csv"},
                       {"table_dat", "E_T.dat"}};
  r.tables["E_T.csv"] = csv.str();
  r.tables["E_T.dat"] = dat.str();
  finish(r, Json::array({check("E_increasing", increasing, E.back().value - E.front().value, 0.0, ">"),
                         check("E_at_largest_T", E.back().value >= 0.99, E.back().value, 0.99, ">="),
                         check("C_fit_stable", ratio <= 2.0, std::isfinite(ratio) ? ratio : 1e308, 2.0, "<="),
                         check("four_pi_bound", four_pi_bound, 0.0, 0.0, "holds")}));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Perturbs p inside `model` until its cone signature matches; p itself if
// no perturbation succeeds.
Point signature_partner(const SpacetimeModel& model, const Sprinkle& s, const Point& p, const ConeSignature& target,
                        double jitter, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  double delta = jitter;
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::array<double, Point::kMaxCoords> c{};
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i] + delta * (2.0 * uniform01(rng) - 1.0);
    const Point q(std::span<const double>(c.data(), p.size()));
    if (attempt % 3 == 2) delta *= 0.5;
    try {
      model.check_domain(q);
    } catch (const DomainError&) {
      continue;
    }
    if (cone_signature(model, s, q) == target) return q;
  }
  return p;
}

Region past_symdiff(const Point& a, const Point& b) {
  const Region pa = Region::past(a), pb = Region::past(b);
  return (pa & ~pb) | (~pa & pb);
}

}  // namespace

ExperimentResult cmd_thm4(const ExperimentConfig& c, const RunOptions& o) {
  c.require_known({"K", "n_probes", "probe_family", "net_size", "n_mc", "n_seeds", "n_quadruples", "jitter"});
  const std::size_t K = require_positive(c, "K", 500);
  const std::size_t n_probes = require_positive(c, "n_probes", 200);
  const ProbeFamily family = [&] {
    try {
      return parse_probe_family(c.text("probe_family", "mixed"));
    } catch (const Error& e) {
      throw ConfigError(c.origin() + ": [experiment] probe_family: " + e.what());
    }
  }();
  const std::size_t net_size = require_positive(c, "net_size", 16);
  const std::size_t n_mc = require_positive(c, "n_mc", 20000);
  const std::size_t n_seeds = require_positive(c, "n_seeds", 20);
  const std::size_t n_quad = c.count("n_quadruples", 100);
  const double jitter = c.number("jitter", 0.01);
  const auto [X, Y] = model_pair(c);
  const bool same_model = X->spec() == Y->spec();

  ExperimentResult r;
  r.json = start(c, "thm4");
  r.json["parameters"] = {{"K", K},
                          {"n_probes", n_probes},
                          {"probe_family", to_string(family)},
                          {"net_size", net_size},
                          {"n_mc", n_mc},
                          {"n_seeds", n_seeds},
                          {"n_quadruples", n_quad},
                          {"model_x", spec_json(X->spec())},
                          {"model_y", spec_json(Y->spec())}};

  Json runs = Json::array();
  std::ostringstream csv;
  csv << "run,seed,s_x,s_y,dtimes,D_m05,D_0,D_p05,sigma,bound,slack,passed,quad_worst,quad_passed\n";
  std::size_t passed_runs = 0, quad_total = 0, quad_passed = 0;
  bool aborted = false;
  std::string abort_reason;
  for (std::size_t run = 0; run < n_seeds; ++run) {
    const std::uint64_t rs = derive_seed(c.seed(), {run});
    const Sprinkle sx = sprinkle(*X, K, derive_seed(rs, {0}));
    Sprinkle sy = sx;
    if (!same_model) {
      try {
        sy.order = order_from_points(*Y, sx.points);
      } catch (const Error& e) {
        aborted = true;
        abort_reason = std::string("sprinkle not valid in Y: ") + e.what();
        break;
      }
    }
    if (!(sx.order == sy.order)) {
      aborted = true;
      abort_reason = "sprinkles induce different orders";
      break;
    }
    const auto probes = sample_probes(*X, family, n_probes, derive_seed(rs, {1}));
    const auto ux = check_s_uniform_regions(sx, *X, probes, derive_seed(rs, {5}), n_mc);
    const auto uy = same_model ? ux : check_s_uniform_regions(sy, *Y, probes, derive_seed(rs, {5}), n_mc);
    const double s_star = std::max(ux.s_achieved, uy.s_achieved);

    const auto net_x = volume_uniform_net(*X, net_size, derive_seed(rs, {2}));
    std::vector<Point> net_y;
    for (std::size_t i = 0; i < net_x.size(); ++i)
      net_y.push_back(signature_partner(*Y, sy, net_x[i], cone_signature(*X, sx, net_x[i]), jitter,
                                        derive_seed(rs, {3, i})));
    OrderCorrespondence oc;
    try {
      oc = order_correspondence(*X, sx, net_x, *Y, sy, net_y);
    } catch (const PreconditionError& e) {
      aborted = true;
      abort_reason = e.what();
      break;
    }
    // Same seed on both sides: common random numbers for the cell passes.
    const auto phi_x = phi_times_metrics(*X, net_x, n_mc, derive_seed(rs, {4}), o.workers);
    const auto phi_y = phi_times_metrics(*Y, net_y, n_mc, derive_seed(rs, {4}), o.workers);
    const DtimesResult dt = dtimes_upper(phi_x, phi_y, oc.correspondence);
    const double bound = 8.0 * s_star + 4.0 * dt.standard_error;
    const bool ok = dt.value <= bound;
    passed_runs += ok;

    // Matched quadruples: past-cone symmetric differences on both sides.
    Rng qrng = make_rng(derive_seed(rs, {6}));
    const auto& pairs = oc.correspondence.pairs();
    double quad_worst = 0.0;
    std::size_t qp = 0;
    for (std::size_t q = 0; q < n_quad; ++q) {
      const auto [x1, y1] = pairs[uniform_index(qrng, pairs.size())];
      const auto [x2, y2] = pairs[uniform_index(qrng, pairs.size())];
      const auto vx = region_volume(*X, past_symdiff(net_x[x1], net_x[x2]), n_mc, derive_seed(rs, {7, q, 0}));
      const auto vy = region_volume(*Y, past_symdiff(net_y[y1], net_y[y2]), n_mc, derive_seed(rs, {7, q, 1}));
      const double diff = std::abs(vx.value - vy.value);
      const double tol = 8.0 * s_star + 4.0 * std::hypot(vx.standard_error, vy.standard_error);
      quad_worst = std::max(quad_worst, s_star > 0.0 ? diff / (8.0 * s_star) : diff);
      qp += diff <= tol;
    }
    quad_total += n_quad;
    quad_passed += qp;

    runs.push_back({{"run", run},
                    {"seed", rs},
                    {"s_achieved_x", ux.s_achieved},
                    {"s_achieved_y", uy.s_achieved},
                    {"worst_probe", ux.worst_region},
                    {"dtimes_shared", dt.value},
                    {"components", dt.component},
                    {"standard_error", dt.standard_error},
                    {"bound", bound},
                    {"signature_slack", oc.slack},
                    {"unmatched", oc.unmatched},
                    {"passed", ok},
                    {"quadruple_worst_ratio", quad_worst},
                    {"quadruples_passed", qp}});
    csv << run << ',' << rs << ',' << fmt(ux.s_achieved) << ',' << fmt(uy.s_achieved) << ',' << fmt(dt.value) << ','
        << fmt(dt.component[0]) << ',' << fmt(dt.component[1]) << ',' << fmt(dt.component[2]) << ','
        << fmt(dt.standard_error) << ',' << fmt(bound) << ',' << oc.slack << ',' << (ok ? 1 : 0) << ','
        << fmt(quad_worst) << ',' << qp << '\n';
    if (run == 0) {
      const char* names[3] = {"D_minus_half", "D_zero", "D_plus_half"};
      for (int k = 0; k < 3; ++k) {
        r.tables[std::string("phi_x_") + names[k] + ".csv"] = phi_x[k].to_csv();
        r.tables[std::string("phi_y_") + names[k] + ".csv"] = phi_y[k].to_csv();
      }
    }
  }

  r.json["results"] = {{"runs", runs},
                       {"runs_passed", passed_runs},
                       {"quadruples_checked", quad_total},
                       {"quadruples_passed", quad_passed},
                       {"aborted", aborted},
                       {"abort_reason", abort_reason},
                       {"net_resolution_caveat", "distances are evaluated on nets of net_size points"},
                       {"runs_csv", "thm4_runs.csv"}};
  r.tables["thm4_runs.csv"] = csv.str();
  const double frac = static_cast<double>(passed_runs) / static_cast<double>(n_seeds);
  finish(r, Json::array({check("not_aborted", !aborted, aborted ? 1.0 : 0.0, 0.0, "=="),
                         check("dtimes_runs_pass_fraction", !aborted && passed_runs == n_seeds, frac, 1.0, ">="),
                         check("quadruples", !aborted && quad_passed == quad_total,
                               quad_total ? static_cast<double>(quad_passed) / static_cast<double>(quad_total) : 1.0,
                               1.0, ">=")}));
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult cmd_volume_law(const ExperimentConfig& c, const RunOptions&) {
  c.require_known({"n", "n_diamonds", "generator", "sigmas", "min_pass_fraction"});
  const std::size_t n = require_positive(c, "n", 100000);
  const std::size_t n_diamonds = require_positive(c, "n_diamonds", 20);
  const std::string gen = c.text("generator", "both");
  const double sigmas = c.number("sigmas", 4.0);
  const double min_pass = c.number("min_pass_fraction", 0.95);
  if (gen != "iid" && gen != "hcs" && gen != "both")
    throw ConfigError(c.origin() + ": [experiment] generator: expected iid, hcs or both");
  const auto model = single_model(c);
  if (gen != "iid" && !model->has_flip_metric())
    throw ConfigError(c.origin() + ": [experiment] generator: model '" + model->kind() + "' has no flip metric");

  const auto diamonds = random_diamonds(*model, n_diamonds, derive_seed(c.seed(), {1}));
  std::vector<std::pair<std::string, std::vector<Point>>> sequences;
  if (gen != "hcs") sequences.emplace_back("iid", volume_uniform_net(*model, n, derive_seed(c.seed(), {2})));
  if (gen != "iid") {
    auto seq = hausdorff_covering_sequence_of_length(*model, n, derive_seed(c.seed(), {3}));
    seq.points.resize(n);
    sequences.emplace_back("hcs", std::move(seq.points));
  }

  ExperimentResult r;
  r.json = start(c, "volume-law");
  r.json["parameters"] = {{"n", n},           {"n_diamonds", n_diamonds},           {"generator", gen},
                          {"sigmas", sigmas}, {"min_pass_fraction", min_pass}, {"model", spec_json(model->spec())}};
  Json res = Json::object();
  Json checks = Json::array();
  std::ostringstream csv;
  csv << "generator,diamond,volume,count,fraction,deviation,tolerance,passed\n";
  for (const auto& [name, points] : sequences) {
    const auto rep = volume_law_check(points, *model, diamonds, n, sigmas);
    Json ds = Json::array();
    for (std::size_t i = 0; i < rep.diamonds.size(); ++i) {
      const auto& d = rep.diamonds[i];
      ds.push_back({{"p", d.p.to_string()},
                    {"q", d.q.to_string()},
                    {"volume", d.volume},
                    {"count", d.count},
                    {"deviation", d.deviation},
                    {"tolerance", d.tolerance},
                    {"passed", d.passed}});
      csv << name << ',' << i << ',' << fmt(d.volume) << ',' << d.count << ',' << fmt(d.fraction) << ','
          << fmt(d.deviation) << ',' << fmt(d.tolerance) << ',' << (d.passed ? 1 : 0) << '\n';
    }
    res[name] = {{"pass_fraction", rep.pass_fraction()}, {"passed_count", rep.passed_count}, {"diamonds", ds}};
    checks.push_back(check(name + "_pass_fraction", rep.pass_fraction() >= min_pass, rep.pass_fraction(), min_pass, ">="));
  }
  res["table_csv"] = "volume_law.csv";
  r.json["results"] = res;
  r.tables["volume_law.csv"] = csv.str();
  finish(r, checks);
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult cmd_reconstruct(const ExperimentConfig& c, const RunOptions&) {
  c.require_known({"prefixes", "n_diamonds", "min_volume", "slope_low", "slope_high"});
  auto pre = c.numbers("prefixes", {100.0, 1000.0, 10000.0, 100000.0});
  const std::size_t n_diamonds = require_positive(c, "n_diamonds", 20);
  const double min_volume = c.number("min_volume", 0.05);
  const double lo = c.number("slope_low", -0.65), hi = c.number("slope_high", -0.35);
  std::vector<std::size_t> prefixes;
  for (double p : pre) {
    if (!(p >= 3.0) || p != std::floor(p)) throw ConfigError(c.origin() + ": [experiment] prefixes: integers >= 3");
    prefixes.push_back(static_cast<std::size_t>(p));
  }
  if (!std::is_sorted(prefixes.begin(), prefixes.end()) || prefixes.size() < 2)
    throw ConfigError(c.origin() + ": [experiment] prefixes: at least two, increasing");
  const auto model = single_model(c);
  const std::size_t n_max = prefixes.back();
  const auto points = volume_uniform_net(*model, n_max, derive_seed(c.seed(), {1}));

  // Diamonds between elements of the smallest prefix, disjoint endpoints.
  struct Diamond {
    std::size_t u, v;
    double volume;
  };
  std::vector<Diamond> diamonds;
  std::vector<bool> used(prefixes.front(), false);
  for (std::size_t j = 1; j < prefixes.front() && diamonds.size() < n_diamonds; ++j)
    for (std::size_t i = 0; i < j && diamonds.size() < n_diamonds && !used[j]; ++i) {
      if (used[i]) continue;
      std::size_t u = i, v = j;
      if (model->causal_leq(points[j], points[i])) std::swap(u, v);
      else if (!model->causal_leq(points[i], points[j])) continue;
      const auto vol = region_volume(*model, Region::diamond(points[u], points[v]), 0, 0);
      if (vol.value < min_volume) continue;
      diamonds.push_back({u, v, vol.value});
      used[i] = used[j] = true;
    }
  if (diamonds.size() < n_diamonds)
    throw ConfigError(c.origin() + ": [experiment] min_volume: only " + std::to_string(diamonds.size()) +
                      " disjoint diamonds found in the first prefix");

  // err[d][k]: |estimate - volume| at prefix k; endpoints are excluded from
  // the count and the denominator.
  std::vector<std::vector<double>> err(diamonds.size(), std::vector<double>(prefixes.size()));
  for (std::size_t d = 0; d < diamonds.size(); ++d) {
    const auto& D = diamonds[d];
    std::size_t count = 0, k = 0;
    for (std::size_t m = 0; m < n_max; ++m) {
      if (m != D.u && m != D.v && model->causal_leq(points[D.u], points[m]) &&
          model->causal_leq(points[m], points[D.v]))
        ++count;
      if (m + 1 == prefixes[k]) {
        err[d][k] = std::abs(static_cast<double>(count) / static_cast<double>(prefixes[k] - 2) - D.volume);
        ++k;
      }
    }
  }
  std::vector<double> logn;
  for (auto p : prefixes) logn.push_back(std::log(static_cast<double>(p)));
  std::vector<double> slopes, ratios;
  Json ds = Json::array();
  for (std::size_t d = 0; d < diamonds.size(); ++d) {
    std::vector<double> le;
    bool zero = false;
    for (double e : err[d]) {
      zero = zero || e == 0.0;
      le.push_back(std::log(e));
    }
    const Json sl = zero ? Json(nullptr) : Json(slope(logn, le));
    if (!zero) slopes.push_back(sl.get<double>());
    ds.push_back({{"u", diamonds[d].u}, {"v", diamonds[d].v}, {"volume", diamonds[d].volume}, {"errors", err[d]},
                  {"slope", sl}});
  }
  // Error ratio between prefixes 1e5 and 1e3 when both are present.
  const auto i3 = std::find(prefixes.begin(), prefixes.end(), 1000);
  const auto i5 = std::find(prefixes.begin(), prefixes.end(), 100000);
  Json ratio = nullptr;
  if (i3 != prefixes.end() && i5 != prefixes.end()) {
    for (std::size_t d = 0; d < diamonds.size(); ++d)
      ratios.push_back(err[d][i5 - prefixes.begin()] / err[d][i3 - prefixes.begin()]);
    ratio = median(ratios);
  }
  std::ostringstream csv, dat;
  csv << "n,median_error,mean_error\n";
  dat << "# n median_error\n";
  Json table = Json::array();
  for (std::size_t k = 0; k < prefixes.size(); ++k) {
    std::vector<double> col;
    for (const auto& e : err) col.push_back(e[k]);
    const double med = median(col);
    const double mean = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(col.size());
    table.push_back({{"n", prefixes[k]}, {"median_error", med}, {"mean_error", mean}});
    csv << prefixes[k] << ',' << fmt(med) << ',' << fmt(mean) << '\n';
    dat << prefixes[k] << ' ' << fmt(med) << '\n';
  }
  const double med_slope = median(slopes);

  ExperimentResult r;
  r.json = start(c, "reconstruct");
  r.json["parameters"] = {{"prefixes", prefixes},     {"n_diamonds", n_diamonds}, {"min_volume", min_volume},
                          {"slope_window", {lo, hi}}, {"model", spec_json(model->spec())}};
  r.json["results"] = {{"median_slope", med_slope},
                       {"median_error_ratio_1e5_1e3", ratio},
                       {"convergence", table},
                       {"diamonds", ds},
                       {"table_csv", "convergence.csv"},
                       {"table_dat", "convergence.dat"}};
  r.tables["convergence.csv"] = csv.str();
  r.tables["convergence.dat"] = dat.str();
  Json checks = Json::array({check("median_slope", med_slope >= lo && med_slope <= hi, med_slope, hi, "in_window")});
  if (!ratio.is_null())
    checks.push_back(check("error_ratio_1e5_1e3", ratio.get<double>() <= 0.25, ratio.get<double>(), 0.25, "<="));
  finish(r, checks);
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult cmd_gh(const ExperimentConfig& c, const RunOptions&) {
  c.require_known({"net_size", "budget"});
  const std::size_t net_size = require_positive(c, "net_size", 6);
  const std::size_t budget = c.count("budget", 20000);
  const auto [X, Y] = model_pair(c);
  const DminusResult d = dminus_upper(*X, *Y, net_size, budget, c.seed());

  ExperimentResult r;
  r.json = start(c, "gh");
  r.json["parameters"] = {{"net_size", net_size},
                          {"budget", budget},
                          {"model_x", spec_json(X->spec())},
                          {"model_y", spec_json(Y->spec())}};
  r.json["results"] = {{"estimate", d.estimate},
                       {"lower_bound", d.lower_bound},
                       {"net_size", net_size},
                       {"n_mc", 0},
                       {"seed", c.seed()},
                       {"standard_error", 0.0},
                       {"exact_on_nets", d.exact},
                       {"tau_is_lower_bound", d.tau_lower_bounds},
                       {"evaluations", d.search.evaluations},
                       {"net_resolution_caveat",
                        "estimate is the optimal or best-found distortion between finite nets, not the continuum "
                        "distance"},
                       {"search_trace_path", "search_trace.csv"}};
  std::ostringstream trace, corr;
  trace << "evaluations,best\n";
  for (const auto& t : d.search.trace) trace << t.evaluations << ',' << fmt(t.best) << '\n';
  corr << "x,y\n";
  for (auto [a, b] : d.search.correspondence.pairs()) corr << a << ',' << b << '\n';
  r.tables["search_trace.csv"] = trace.str();
  r.tables["correspondence.csv"] = corr.str();
  Json checks = Json::array({check("nonnegative", d.estimate >= 0.0, d.estimate, 0.0, ">=")});
  if (X->spec() == Y->spec()) checks.push_back(check("identical_models_zero", d.estimate == 0.0, d.estimate, 0.0, "=="));
  finish(r, checks);
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult run_experiment(const std::string& command, const ExperimentConfig& config, const RunOptions& o) {
  auto norm = [](std::string s) {
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
  };
  const std::string cmd = norm(command);
  if (norm(config.name()) != cmd)
    throw ConfigError(config.origin() + ": [experiment] name: '" + config.name() + "' does not match command '" +
                      command + "'");
  const auto t0 = Clock::now();
  ExperimentResult r;
  if (cmd == "ck") r = cmd_ck(config, o);
  else if (cmd == "thm2") r = cmd_thm2(config, o);
  else if (cmd == "thm3") r = cmd_thm3(config, o);
  else if (cmd == "thm4") r = cmd_thm4(config, o);
  else if (cmd == "volume_law") r = cmd_volume_law(config, o);
  else if (cmd == "reconstruct") r = cmd_reconstruct(config, o);
  else if (cmd == "gh") r = cmd_gh(config, o);
  else throw ArgumentError("unknown command '" + command + "'");
  r.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::string result_text(const ExperimentResult& r) { return r.json.dump(2) + "\n"; }

void write_outputs(const ExperimentResult& r, const std::filesystem::path& dir, const RunOptions& o) {
  std::filesystem::create_directories(dir);
  auto put = [&](const std::string& name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw Error("cannot write " + (dir / name).string());
    out << text;
  };
  put("result.json", result_text(r));
  put("timing.json", Json{{"wall_seconds", r.wall_seconds}, {"workers", o.workers}}.dump(2) + "\n");
  for (const auto& [name, text] : r.tables) put(name, text);
}

}  // namespace causet
