#include "lightclock/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <variant>

#include "lightclock/alterations.hpp"
#include "lightclock/cli/config.hpp"
#include "lightclock/cli/output.hpp"
#include "lightclock/cli/units.hpp"
#include "lightclock/error.hpp"
#include "lightclock/infinitesimals.hpp"
#include "lightclock/lightclock.hpp"
#include "lightclock/line_elements.hpp"
#include "lightclock/nsppm_sim.hpp"
#include "lightclock/radar.hpp"
#include "lightclock/transition_zone.hpp"
#include "lightclock/velocity_space.hpp"

namespace lightclock::cli {

namespace {

using nlohmann::ordered_json;
using Result = std::variant<ordered_json, Table>;

constexpr Dimension kLen = Dimension::length;
constexpr Dimension kTime = Dimension::time;
constexpr Dimension kVel = Dimension::velocity;
constexpr Dimension kOne = Dimension::dimensionless;

struct Field {
  std::string name;
  std::string help;
  bool flag = false;
};

struct Command {
  std::vector<std::string> path;
  std::string help;
  std::vector<Field> fields;
  std::function<Result(const Params&)> handler;
};

const std::vector<Field> kCommonFields = {
    {"c", "light speed in m/s (default 299792458)"},
    {"natural-units", "use c = 1", true},
    {"output", "write the result to this file instead of stdout"},
    {"emit", "json or csv"},
};

const std::vector<Field> kSourceFields = {
    {"r0", "Schwarzschild radius 2GM/c^2 (length)"},
    {"mass", "source mass (mass); alternative to r0"},
    {"G", "gravitational constant in SI (default 6.67430e-11)"},
};

const std::vector<Field> kAngularFields = {
    {"theta", "polar angle (rad)"},
    {"dtheta", "polar differential (rad)"},
    {"dphi", "azimuthal differential (rad)"},
};

std::vector<Field> concat(std::initializer_list<std::vector<Field>> parts) {
  std::vector<Field> out;
  for (const auto& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

line_elements::GravitySource source(const Params& p, bool with_lambda) {
  const auto Lambda = with_lambda ? p.get_lambda("Lambda") : line_elements::CosmologicalConstant{};
  if (p.has("mass")) {
    if (p.has("r0")) {
      throw ConfigError("r0", "give either r0 or mass, not both");
    }
    const double G = p.get_or("G", kOne, 6.67430e-11);
    return line_elements::GravitySource::from_mass(p.get("mass", Dimension::mass), p.c(), G,
                                                   Lambda);
  }
  return line_elements::GravitySource::from_schwarzschild_radius(p.get_or("r0", kLen, 0.0), Lambda);
}

line_elements::MetricPoint metric_point(const Params& p, const std::string& radius,
                                        const std::string& time_diff) {
  line_elements::MetricPoint m;
  m.R = p.get_or(radius, kLen, 0.0);
  m.theta = p.get_or("theta", kOne, 0.0);
  m.dt = p.get_or(time_diff, kTime, 0.0);
  m.dR = p.get_or("dR", kLen, 0.0);
  m.dtheta = p.get_or("dtheta", kOne, 0.0);
  m.dphi = p.get_or("dphi", kOne, 0.0);
  return m;
}

double gamma_from(const Params& p) {
  if (p.has("gamma")) {
    if (p.has("v")) {
      throw ConfigError("gamma", "give either gamma or v, not both");
    }
    return p.get("gamma", kOne);
  }
  return alterations::gamma_special(p.get("v", kVel), p.c());
}

ordered_json number_or_null(double x) {
  return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr);
}

// ---- radar / kinematics -------------------------------------------------

Result cmd_radar(const Params& p) {
  const radar::RadarRecord rec{p.get("t1", kTime), p.get("t2", kTime), p.get("t3", kTime)};
  const auto m = radar::einstein_measures(rec, p.c());
  ordered_json j;
  j["t_E"] = m.einstein.t_E;
  j["r_E"] = m.einstein.r_E;
  j["v_E"] = m.einstein.v_E;
  j["geometric_mean_ok"] = radar::check_geometric_mean(rec, p.tol());
  j["is_einstein_measure"] = m.is_einstein_measure;
  j["omega"] = radar::rapidity_from_vE(m.einstein.v_E, p.c()).omega;
  j["t1_split"] = m.t1_split;
  j["t3_split"] = m.t3_split;
  j["t2_pred"] = m.t2_pred;
  return j;
}

Result cmd_compose(const Params& p) {
  const double v1 = p.get("v1", kVel);
  const double v2 = p.get("v2", kVel);
  const double v3 = velocity_space::compose_einstein(v1, v2, p.c());
  ordered_json j;
  j["v1"] = v1;
  j["v2"] = v2;
  j["v3"] = v3;
  j["v3_over_c"] = v3 / p.c();
  return j;
}

Result cmd_lorentz(const Params& p) {
  const velocity_space::Event4 e2{p.get_or("t", kTime, 0.0), p.get_or("x", kLen, 0.0),
                                  p.get_or("y", kLen, 0.0), p.get_or("z", kLen, 0.0)};
  const auto e1 = velocity_space::lorentz_transform(e2, p.get("v", kVel), p.c());
  ordered_json j;
  j["t"] = e1.t;
  j["x"] = e1.x;
  j["y"] = e1.y;
  j["z"] = e1.z;
  j["interval_before"] = velocity_space::interval(e2, p.c());
  j["interval_after"] = velocity_space::interval(e1, p.c());
  return j;
}

Result cmd_triangle(const Params& p) {
  const auto tri = velocity_space::solve_triangle(p.get("omega1", kVel), p.get("omega2", kVel),
                                                  p.get("omega3", kVel), p.c());
  const auto ein = velocity_space::triangle_to_einstein(tri, std::max(p.tol(), 1e-9));
  ordered_json j;
  j["theta"] = tri.theta;
  j["phi"] = tri.phi;
  j["p1"] = tri.p1;
  j["p2"] = tri.p2;
  j["n"] = tri.n;
  j["v1"] = ein.v1;
  j["v2"] = ein.v2;
  j["v3"] = ein.v3;
  j["alpha"] = ein.alpha;
  j["beta1"] = ein.beta1;
  j["beta2"] = ein.beta2;
  j["beta3"] = ein.beta3;
  j["cosh_law_residual"] = tri.cosh_law_residual;
  j["residual_projection"] = ein.residual_projection;
  j["residual_beta"] = ein.residual_beta;
  j["residual_normal"] = ein.residual_normal;
  return j;
}

// ---- line elements ------------------------------------------------------

Result cmd_metric_minkowski(const Params& p) {
  ordered_json j;
  j["interval"] = line_elements::minkowski_interval(p.get_or("dt", kTime, 0.0),
                                                    p.get_or("dx", kLen, 0.0),
                                                    p.get_or("dy", kLen, 0.0),
                                                    p.get_or("dz", kLen, 0.0), p.c());
  return j;
}

Result cmd_metric_linear(const Params& p) {
  const auto lam = line_elements::LambdaFactor::constant(
      p.get("v", kVel), p.get_or("d", kVel, 0.0), line_elements::LambdaMode::real, p.c());
  const double value = lam.value(0.0);
  ordered_json j;
  j["lambda"] = value;
  j["interval"] = line_elements::linear_interval(value, p.get_or("dt", kTime, 0.0),
                                                 p.get_or("dr", kLen, 0.0), p.c());
  return j;
}

// λ, coordinate light speed cλ and √λ over a radius sweep.
Table lambda_sweep(const Params& p, const std::function<double(double)>& lambda_at) {
  Table t;
  t.columns = {{"R", "m"}, {"lambda", "1"}, {"null_speed", "m/s"}, {"gamma", "1"}};
  for (double R : p.get_sweep("sweep-R", kLen).points()) {
    const double lam = lambda_at(R);
    t.rows.push_back({R, lam, p.c() * lam, lam >= 0.0 ? std::sqrt(lam) : std::nan("")});
  }
  return t;
}

Result cmd_metric_schwarzschild(const Params& p) {
  const auto src = source(p, false);
  if (p.has("sweep-R")) {
    return lambda_sweep(p, [&](double R) { return line_elements::schwarzschild_lambda(src, R); });
  }
  const auto m = metric_point(p, "R", "dt");
  const double lam = line_elements::schwarzschild_lambda(src, m.R);
  ordered_json j;
  j["r0"] = src.schwarzschild_r0;
  j["R"] = m.R;
  j["lambda"] = lam;
  j["null_speed"] = p.c() * lam;
  j["gamma"] = std::sqrt(lam);
  j["interval"] = line_elements::radial_interval(lam, m, p.c());
  return j;
}

Result modified_metric(const Params& p, const line_elements::GravitySource& src) {
  auto lambda_at = [&](double R) {
    return line_elements::modified_schwarzschild_lambda(src, R, p.c());
  };
  if (p.has("sweep-R")) {
    return lambda_sweep(p, lambda_at);
  }
  const auto m = metric_point(p, "R", "dt");
  const double lam = lambda_at(m.R);
  ordered_json j;
  j["r0"] = src.schwarzschild_r0;
  j["Lambda_geometric"] = src.Lambda.geometric(p.c());
  j["R"] = m.R;
  j["lambda"] = lam;
  j["null_speed"] = p.c() * lam;
  j["interval"] = line_elements::radial_interval(lam, m, p.c());
  return j;
}

Result cmd_metric_modified(const Params& p) { return modified_metric(p, source(p, true)); }

Result cmd_metric_desitter(const Params& p) {
  return modified_metric(
      p, line_elements::GravitySource::from_schwarzschild_radius(0.0, p.get_lambda("Lambda")));
}

Result cmd_metric_rw(const Params& p) {
  const auto m = metric_point(p, "R", "dt");
  ordered_json j;
  j["interval"] = line_elements::robertson_walker_interval(p.get("a", kTime), m, p.c());
  return j;
}

Result cmd_metric_approx(const Params& p) {
  const auto src = source(p, false);
  const double r = p.get("r", kLen);
  const double dt = p.get_or("dt", kTime, 0.0);
  const double dr = p.get_or("dr", kLen, 0.0);
  const auto approx = line_elements::newtonian_first_approx(src, r, dt, dr, p.c());
  line_elements::MetricPoint m;
  m.R = r;
  m.dt = dt;
  m.dR = dr;
  const double exact =
      line_elements::radial_interval(line_elements::schwarzschild_lambda(src, r), m, p.c());
  ordered_json j;
  j["approx"] = approx.value;
  j["exact"] = exact;
  j["residual"] = std::fabs(approx.value - exact);
  j["weak_field_warning"] = approx.weak_field_warning;
  return j;
}

Result cmd_radar_distance(const Params& p) {
  const auto src = source(p, false);
  const double dt = line_elements::radar_coordinate_time(src, p.get("R1", kLen), p.get("R2", kLen),
                                                         p.c());
  ordered_json j;
  j["coordinate_time"] = dt;
  j["light_distance"] = p.c() * dt;
  return j;
}

Result cmd_horizon(const Params& p) {
  ordered_json j;
  if (p.get_bool("solve-lambda")) {
    const double r0 = source(p, false).schwarzschild_r0;
    const double R = p.get("R", kLen);
    const double L = line_elements::cosmological_constant_for_horizon(r0, R);
    j["r0"] = r0;
    j["R"] = R;
    j["Lambda"] = L;
    if (p.has("expected-Lambda")) {
      const auto expected = p.get_lambda("expected-Lambda");
      const double e = expected.geometric(p.c());
      const double rel = std::fabs(L - e) / std::fabs(e);
      j["expected_Lambda"] = e;
      j["relative_difference"] = rel;
      // The expected value is read as printed to three significant figures.
      j["consistent"] = rel <= 5e-3;
    }
    return j;
  }
  const auto src = source(p, true);
  const auto roots = line_elements::horizon_roots(src, p.c());
  ordered_json arr = ordered_json::array();
  ordered_json res = ordered_json::array();
  for (double r : roots) {
    arr.push_back(r);
    res.push_back(line_elements::modified_schwarzschild_lambda(src, r, p.c()));
  }
  j["r0"] = src.schwarzschild_r0;
  j["Lambda_geometric"] = src.Lambda.geometric(p.c());
  j["roots"] = arr;
  j["lambda_at_roots"] = res;
  return j;
}

Result cmd_hubble(const Params& p) {
  using infinitesimals::Dual;
  const std::string model = p.get_string("model");
  const double rate = p.get_or("rate", kOne, 1.0);
  const double exponent = p.get_or("exponent", kOne, 2.0 / 3.0);
  std::function<Dual(Dual)> a;
  if (model == "linear") {
    a = [rate](Dual t) { return Dual(rate) * t; };
  } else if (model == "exp") {
    a = [rate](Dual t) { return infinitesimals::exp(Dual(rate) * t); };
  } else if (model == "power") {
    a = [exponent](Dual t) { return infinitesimals::pow(t, exponent); };
  } else {
    throw ConfigError("model", "expected linear, exp or power");
  }
  const double G = p.get_or("G", kOne, 6.67430e-11);
  const auto h = line_elements::hubble_deceleration(a, p.get("t", kTime), p.get_opt("rho", kOne), G);
  ordered_json j;
  j["a"] = h.a;
  j["H"] = h.H;
  j["dH_dt"] = h.dH_dt;
  j["q"] = h.q;
  if (h.friedmann_residual) {
    j["friedmann_residual"] = *h.friedmann_residual;
  }
  return j;
}

// ---- alterations --------------------------------------------------------

Result cmd_alter_doppler(const Params& p) {
  const double g = gamma_from(p);
  ordered_json j;
  j["gamma"] = g;
  j["nu_m"] = alterations::transverse_doppler(p.get("nu", Dimension::frequency), g);
  return j;
}

Result cmd_alter_total_doppler(const Params& p) {
  const double nu = p.get("nu", Dimension::frequency);
  const double received = alterations::total_doppler(nu, p.get("v", kVel), p.c());
  ordered_json j;
  j["nu_received"] = received;
  j["ratio"] = received / nu;
  return j;
}

Result cmd_alter_decay(const Params& p) {
  const double g = gamma_from(p);
  ordered_json j;
  j["gamma"] = g;
  j["tau_m"] = alterations::decay_lifetime(p.get("tau", kTime), g);
  return j;
}

Result cmd_alter_mass(const Params& p) {
  const double g = gamma_from(p);
  ordered_json j;
  j["gamma"] = g;
  j["M_m"] = alterations::mass_alteration(p.get("M", Dimension::mass), g);
  return j;
}

Result cmd_dilation(const Params& p) {
  alterations::GravCompareInput in;
  in.c = p.c();
  if (p.has("rs-over-rp") || p.has("rr-over-rp")) {
    for (const char* f : {"r_s", "r_P", "r_R", "Lambda_P", "Lambda_R"}) {
      if (p.has(f)) {
        throw ConfigError(f, "cannot be combined with rs-over-rp/rr-over-rp");
      }
    }
    in.r_P = 1.0;
    in.r_s = p.get("rs-over-rp", kOne);
    in.r_R = p.get("rr-over-rp", kOne);
  } else {
    in.r_s = p.get("r_s", kLen);
    in.r_P = p.get("r_P", kLen);
    in.r_R = p.get("r_R", kLen);
    in.Lambda_P = p.get_lambda("Lambda_P");
    in.Lambda_R = p.has("Lambda_R") ? p.get_lambda("Lambda_R") : in.Lambda_P;
  }
  ordered_json j;
  j["ratio"] = alterations::gravitational_clock_compare(in);
  return j;
}

Result cmd_compare_frequency(const Params& p) {
  const double gP = p.get("g1_P", kOne);
  const double gR = p.get("g1_R", kOne);
  ordered_json j;
  j["nu_P"] = alterations::frequency_compare(gP, gR, p.get("nu_R", Dimension::frequency));
  if (p.has("dQ_P")) {
    j["dQ_R"] = alterations::rate_of_change_compare(gP, gR, p.get("dQ_P", kOne));
  }
  return j;
}

// ---- transition zone ----------------------------------------------------

Result cmd_transition_H(const Params& p) {
  const double k = p.get_or("k", kOne, 1e-3);
  if (p.has("sample")) {
    auto xs = p.get_sweep("sample", kOne).points();
    for (double junction : {0.0, 2.0 * k}) {
      if (junction >= xs.front() && junction <= xs.back()) {
        xs.push_back(junction);
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Table t;
    t.columns = {{"x", "1"}, {"H", "1"}, {"H_prime", "1"}};
    for (double x : xs) {
      t.rows.push_back({x, transition_zone::H_k(x, k), transition_zone::H_k_prime(x, k)});
    }
    return t;
  }
  const double x = p.get("x", kOne);
  ordered_json j;
  j["x"] = x;
  j["k"] = k;
  j["H"] = transition_zone::H_k(x, k);
  j["H_prime"] = transition_zone::H_k_prime(x, k);
  return j;
}

Result cmd_transition_interval(const Params& p) {
  ordered_json j;
  if (p.has("lambda")) {
    const auto r = transition_zone::partial_interval(
        p.get("lambda", kOne), p.get_or("k", kOne, 1e-3), p.get_or("dU", kTime, 0.0),
        p.get_or("dR", kLen, 0.0), p.c());
    static const char* names[] = {"interior", "transition", "exterior"};
    j["branch"] = names[static_cast<int>(r.branch)];
    j["interval"] = r.value;
    return j;
  }
  const auto src = source(p, false);
  const auto m = metric_point(p, "R", "dU");
  const auto f = transition_zone::f_M_standardized(m.R, src, p.c());
  j["f_M"] = f ? ordered_json(*f) : ordered_json("unbounded");
  j["interval"] = transition_zone::standardized_interval(src, m, p.c());
  return j;
}

Result cmd_transition_photons(const Params& p) {
  const double k = p.get_or("k", kOne, 1e-3);
  if (p.has("sweep-lambda")) {
    Table t;
    t.columns = {{"lambda", "1"}, {"plus", "m/s"}, {"minus", "m/s"}};
    for (double lam : p.get_sweep("sweep-lambda", kOne).points()) {
      const auto s = transition_zone::photon_families(lam, k, p.c());
      t.rows.push_back({lam, s[0], s[1]});
    }
    return t;
  }
  const auto s = transition_zone::photon_families(p.get("lambda", kOne), k, p.c());
  ordered_json j;
  j["plus"] = s[0];
  j["minus"] = s[1];
  return j;
}

// ---- simulator ----------------------------------------------------------

Result cmd_sim_roundtrip(const Params& p) {
  const double omega = p.get("omega", kVel);
  const double t1 = p.get("t1", kTime);
  const auto sc = nsppm::PropagationScenario::constant(p.c(), t1, t1, 2.0 * t1, p.c());
  const auto rec = nsppm::roundtrip(sc, omega, t1);
  ordered_json j;
  j["t1"] = rec.t1;
  j["t2"] = rec.t2;
  j["t3"] = rec.t3;
  j["geometric_mean_ok"] = radar::check_geometric_mean(rec, std::max(p.tol(), 1e-15));
  if (rec.t3 > rec.t1) {
    const auto leg = nsppm::PropagationScenario::constant(p.c(), rec.t1, rec.t1, rec.t3, p.c());
    j["omega_quadrature"] = nsppm::medium_velocity(leg, rec.t1, rec.t2).omega;
  }
  return j;
}

Result cmd_sim_counts(const Params& p) {
  const clock::LightClockSpec spec(p.get("L", kLen), p.c());
  const auto rows = nsppm::count_trace(spec, p.get("omega", kVel), p.get("t1", kTime),
                                       p.has("n") ? p.get_int("n") : 3, p.get_bool("quantize"));
  Table t;
  t.columns = {{"pulse", "1"},   {"t1", "s"},       {"t2", "s"},       {"t3", "s"},
               {"tau1", "ticks"}, {"tau2", "ticks"}, {"tau3", "ticks"}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    t.rows.push_back({static_cast<double>(i + 1), r.medium.t1, r.medium.t2, r.medium.t3,
                      r.counts.emit, r.counts.reflect, r.counts.ret});
  }
  return t;
}

Result cmd_sim_equilinear(const Params& p) {
  const double t1 = p.get("t1", kTime);
  const double t2 = p.get("t2", kTime);
  const double t3 = p.get("t3", kTime);
  if (!(t3 > t1)) {
    throw DomainError("equilinear check needs t1 < t3");
  }
  const auto sc = nsppm::PropagationScenario::constant(p.c(), t1, t1, t3, p.c());
  const auto r = nsppm::equilinear_check(sc, t1, t2, t3);
  ordered_json j;
  j["w1"] = r.w1;
  j["w2"] = r.w2;
  j["w3"] = r.w3;
  j["residual"] = r.residual;
  return j;
}

Result cmd_sim_offset(const Params& p) {
  const auto o = nsppm::parallel_photon_offset(p.get("u", kVel), p.get("omega", kVel), p.c(),
                                               p.get("dt", kTime));
  ordered_json j;
  j["hyperbolic"] = o.hyperbolic;
  j["classical"] = o.classical;
  j["ratio"] = number_or_null(o.hyperbolic / o.classical);
  return j;
}

std::vector<Command> command_table() {
  const std::vector<Field> diffs = {{"dt", "time differential"}, {"dR", "radial differential"}};
  return {
      {{"radar"}, "Einstein measures from medium times t1 <= t2 <= t3",
       {{"t1", "emission time"}, {"t2", "reflection time"}, {"t3", "return time"}}, cmd_radar},
      {{"compose"}, "Einstein velocity composition",
       {{"v1", "first velocity"}, {"v2", "second velocity"}}, cmd_compose},
      {{"lorentz"}, "x-aligned Lorentz transformation of an event",
       {{"t", "time"}, {"x", "x"}, {"y", "y"}, {"z", "z"}, {"v", "boost velocity"}}, cmd_lorentz},
      {{"triangle"}, "Solve a velocity-space triangle from three medium velocities",
       {{"omega1", "F1-P medium velocity"},
        {"omega2", "F2-P medium velocity"},
        {"omega3", "F1-F2 medium velocity"}},
       cmd_triangle},
      {{"metric", "minkowski"}, "Chronotopic interval",
       {{"dt", "time differential"}, {"dx", "dx"}, {"dy", "dy"}, {"dz", "dz"}},
       cmd_metric_minkowski},
      {{"metric", "linear"}, "Linear-effect interval",
       {{"v", "velocity"}, {"d", "secondary velocity"}, {"dt", "dt"}, {"dr", "dr"}},
       cmd_metric_linear},
      {{"metric", "schwarzschild"}, "Schwarzschild radial interval or lambda sweep",
       concat({kSourceFields, diffs, kAngularFields,
               {{"R", "radius"}, {"sweep-R", "radius sweep from:to:count"}}}),
       cmd_metric_schwarzschild},
      {{"metric", "modified"}, "Schwarzschild with cosmological constant",
       concat({kSourceFields, diffs, kAngularFields,
               {{"Lambda", "cosmological constant with unit tag"},
                {"R", "radius"},
                {"sweep-R", "radius sweep from:to:count"}}}),
       cmd_metric_modified},
      {{"metric", "desitter"}, "de Sitter factor (no mass)",
       concat({diffs, kAngularFields,
               {{"Lambda", "cosmological constant with unit tag"},
                {"R", "radius"},
                {"sweep-R", "radius sweep from:to:count"}}}),
       cmd_metric_desitter},
      {{"metric", "rw"}, "Robertson-Walker interval",
       concat({diffs, kAngularFields, {{"a", "expansion scale (time)"}, {"R", "radius"}}}),
       cmd_metric_rw},
      {{"metric", "approx"}, "Newtonian first approximation against the exact form",
       concat({kSourceFields, {{"r", "radius"}, {"dt", "dt"}, {"dr", "dr"}}}), cmd_metric_approx},
      {{"radar-distance"}, "Coordinate flight time of radial light between R1 and R2",
       concat({kSourceFields, {{"R1", "inner radius"}, {"R2", "outer radius"}}}),
       cmd_radar_distance},
      {{"horizon"}, "Horizon radii, or the Lambda placing a horizon at R",
       concat({kSourceFields,
               {{"Lambda", "cosmological constant with unit tag"},
                {"solve-lambda", "solve for Lambda instead of radii", true},
                {"R", "horizon radius for solve-lambda"},
                {"expected-Lambda", "value to check the solved Lambda against"}}}),
       cmd_horizon},
      {{"hubble"}, "Hubble and deceleration parameters of a scale function",
       {{"model", "linear, exp or power"},
        {"rate", "rate for linear/exp models"},
        {"exponent", "exponent for the power model"},
        {"t", "time"},
        {"rho", "density for the Friedmann check"},
        {"G", "gravitational constant"}},
       cmd_hubble},
      {{"alter", "doppler"}, "Transverse Doppler",
       {{"nu", "source frequency"}, {"gamma", "gamma"}, {"v", "velocity"}}, cmd_alter_doppler},
      {{"alter", "total-doppler"}, "Total Doppler for a receding source",
       {{"nu", "source frequency"}, {"v", "recession velocity"}}, cmd_alter_total_doppler},
      {{"alter", "decay"}, "Altered lifetime",
       {{"tau", "standard lifetime"}, {"gamma", "gamma"}, {"v", "velocity"}}, cmd_alter_decay},
      {{"alter", "mass"}, "Altered mass",
       {{"M", "standard mass"}, {"gamma", "gamma"}, {"v", "velocity"}}, cmd_alter_mass},
      {{"dilation"}, "Gravitational clock comparison dt_R/dt_P",
       {{"rs-over-rp", "r_s/r_P"},
        {"rr-over-rp", "r_R/r_P"},
        {"r_s", "Schwarzschild radius"},
        {"r_P", "radius of P"},
        {"r_R", "radius of R"},
        {"Lambda_P", "cosmological constant at P"},
        {"Lambda_R", "cosmological constant at R"}},
       cmd_dilation},
      {{"compare-frequency"}, "Gravitational frequency and rate comparison",
       {{"g1_P", "g1 at P"}, {"g1_R", "g1 at R"}, {"nu_R", "frequency at R"}, {"dQ_P", "rate at P"}},
       cmd_compare_frequency},
      {{"transition", "H"}, "Transition function H_k and its derivative",
       {{"k", "transition parameter"}, {"x", "argument"}, {"sample", "grid from:to:count"}},
       cmd_transition_H},
      {{"transition", "interval"}, "Partial or standardized transition interval",
       concat({kSourceFields, kAngularFields,
               {{"k", "transition parameter"},
                {"lambda", "lambda value for the partial form"},
                {"R", "radius"},
                {"dU", "transformed time differential"},
                {"dR", "radial differential"}}}),
       cmd_transition_interval},
      {{"transition", "photons"}, "Photon coordinate speeds +-c(lambda-k)",
       {{"k", "transition parameter"},
        {"lambda", "lambda value"},
        {"sweep-lambda", "lambda sweep from:to:count"}},
       cmd_transition_photons},
      {{"sim", "roundtrip"}, "Round trip at constant light speed",
       {{"omega", "medium velocity"}, {"t1", "emission time"}}, cmd_sim_roundtrip},
      {{"sim", "counts"}, "Light-clock count trace of successive pulses",
       {{"L", "light-clock round-trip length"},
        {"omega", "medium velocity"},
        {"t1", "first emission time"},
        {"n", "number of pulses"},
        {"quantize", "round counts to whole ticks", true}},
       cmd_sim_counts},
      {{"sim", "equilinear"}, "Additivity of medium velocities over t1 < t2 < t3",
       {{"t1", "t1"}, {"t2", "t2"}, {"t3", "t3"}}, cmd_sim_equilinear},
      {{"sim", "offset"}, "Parallel-photon separation",
       {{"u", "transverse speed"}, {"omega", "medium velocity"}, {"dt", "emission interval"}},
       cmd_sim_offset},
  };
}

struct Registered {
  const Command* command;
  CLI::App* app;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;
  CLI::Option* config_option = nullptr;
};

int emit(const Result& result, const Params& params, std::ostream& out) {
  const std::string mode = params.get_string_opt("emit").value_or(
      std::holds_alternative<Table>(result) ? "csv" : "json");
  std::string text;
  if (mode == "csv") {
    if (!std::holds_alternative<Table>(result)) {
      throw ConfigError("emit", "csv output needs a sweep or sample parameter");
    }
    text = to_csv(std::get<Table>(result));
  } else if (mode == "json") {
    if (const auto* t = std::get_if<Table>(&result)) {
      ordered_json j;
      j["columns"] = ordered_json::array();
      for (const auto& c : t->columns) {
        j["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
      }
      j["rows"] = ordered_json::array();
      for (const auto& row : t->rows) {
        ordered_json r = ordered_json::array();
        for (double x : row) {
          r.push_back(number_or_null(x));
        }
        j["rows"].push_back(r);
      }
      text = to_json_text(j);
    } else {
      text = to_json_text(std::get<ordered_json>(result));
    }
  } else {
    throw ConfigError("emit", "expected json or csv");
  }
  write_output(text, params.get_string_opt("output"), out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const std::vector<Command> commands = command_table();
  CLI::App app{"Light-clock relativistic kinematics engine", "lightclock"};
  app.require_subcommand(1);
  std::map<std::string, CLI::App*> groups;
  std::vector<std::unique_ptr<Registered>> registered;

  for (const auto& cmd : commands) {
    CLI::App* parent = &app;
    if (cmd.path.size() == 2) {
      auto it = groups.find(cmd.path[0]);
      if (it == groups.end()) {
        CLI::App* g = app.add_subcommand(cmd.path[0], cmd.path[0] + " commands");
        g->require_subcommand(1);
        it = groups.emplace(cmd.path[0], g).first;
      }
      parent = it->second;
    }
    auto reg = std::make_unique<Registered>();
    reg->command = &cmd;
    reg->app = parent->add_subcommand(cmd.path.back(), cmd.help);
    reg->config_option = reg->app->add_option("--config", reg->config_path, "JSON parameter file");
    for (const auto& fields : {cmd.fields, kCommonFields}) {
      for (const auto& f : fields) {
        if (f.flag) {
          reg->options[f.name] = reg->app->add_flag("--" + f.name, f.help);
        } else {
          reg->options[f.name] = reg->app->add_option("--" + f.name, reg->values[f.name], f.help);
        }
      }
    }
    registered.push_back(std::move(reg));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& reg : registered) {
      if (!reg->app->parsed()) {
        continue;
      }
      const ordered_json config =
          reg->config_option->count() ? load_config(reg->config_path) : ordered_json();
      std::set<std::string> allowed;
      std::map<std::string, std::string> flags;
      for (const auto& [name, opt] : reg->options) {
        allowed.insert(name);
        if (opt->count()) {
          flags[name] = reg->values.count(name) ? reg->values[name] : "true";
        }
      }
      const Params params(config, flags, allowed);
      return emit(reg->command->handler(params), params, out);
    }
    err << "error: no command selected\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("lightclock");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lightclock::cli
