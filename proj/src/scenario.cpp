#include "relengine/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <optional>
#include <utility>

#include <json.hpp>

#include "relengine/optimizer.hpp"

namespace relengine {

namespace {

constexpr double kFdStep = 1e-5;

Cell blank() { return std::monostate{}; }

// -i d/dchi of the characteristic function at the origin by a central
// difference along one counting field.
double fd_first_moment(const EngineConfig& cfg, bool along_w) {
    const std::complex<double> i_unit(0.0, 1.0);
    const auto phi_p = characteristic_function(cfg, along_w ? kFdStep : 0.0,
                                               along_w ? 0.0 : kFdStep);
    const auto phi_m = characteristic_function(cfg, along_w ? -kFdStep : 0.0,
                                               along_w ? 0.0 : -kFdStep);
    return ((phi_p - phi_m) / (2.0 * kFdStep * i_unit)).real();
}

struct ScenarioVelocities {
    std::string name;
    double velocity_a;
    double velocity_b;
};

std::vector<ScenarioVelocities> resolve_scenarios(const ScenarioConfig& sc) {
    const std::vector<ScenarioVelocities> all = {
        {"both-rest", 0.0, 0.0},
        {"only-a-moving", sc.velocity_a, 0.0},
        {"only-b-moving", 0.0, sc.velocity_b},
        {"both-moving", sc.velocity_a, sc.velocity_b},
    };
    if (sc.scenario == "all") return all;
    for (const auto& s : all) {
        if (s.name == sc.scenario) return {s};
    }
    throw std::invalid_argument("scenario: unknown scenario '" + sc.scenario + "'");
}

}  // namespace

Spacing parse_spacing(std::string_view name) {
    if (name == "linear") return Spacing::linear;
    if (name == "log") return Spacing::log;
    throw std::invalid_argument("spacing: must be 'linear' or 'log'");
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("format: must be 'csv' or 'json'");
}

GridAxis GridAxis::single(double value) {
    return {value, value, 1, Spacing::linear};
}

GridAxis GridAxis::sweep(double start, double stop, int count, Spacing spacing) {
    if (count < 2) {
        throw std::invalid_argument("sweep: count must be >= 2");
    }
    if (!(start < stop)) {
        throw std::invalid_argument("sweep: start must be < stop");
    }
    if (spacing == Spacing::log && !(start > 0.0)) {
        throw std::invalid_argument("sweep: log spacing requires start > 0");
    }
    return {start, stop, count, spacing};
}

std::vector<double> GridAxis::values() const {
    if (count == 1) return {start};
    std::vector<double> v;
    v.reserve(count);
    const double lo = spacing == Spacing::log ? std::log(start) : start;
    const double hi = spacing == Spacing::log ? std::log(stop) : stop;
    for (int i = 0; i < count; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(count - 1);
        v.push_back(spacing == Spacing::log ? std::exp(x) : x);
    }
    v.back() = stop;  // endpoints exact regardless of spacing arithmetic
    return v;
}

EngineConfig make_engine_config(const ScenarioConfig& sc) {
    EngineConfig cfg;
    cfg.spec_a = {sc.omega_a, sc.velocity_a, sc.beta_a, sc.coupling_a};
    cfg.spec_b = {sc.omega_b, sc.velocity_b, sc.beta_b, sc.coupling_b};
    cfg.temperature_mode = parse_temperature_mode(sc.temperature_mode);
    return cfg;
}

Table run_teff(const ScenarioConfig& sc) {
    Table t;
    t.columns = {"omega", "velocity", "beta", "t_eff", "t_eff_over_t"};
    for (const double v : sc.velocity_axis.values()) {
        for (const double w : sc.omega_axis.values()) {
            const DetectorSpec d{w, v, sc.beta, sc.coupling};
            const EffectiveBath bath = effective_temperature(d);
            auto& row = t.add_row();
            row[0] = w;
            row[1] = v;
            row[2] = sc.beta;
            row[3] = bath.t_eff;
            row[4] = bath.t_eff * sc.beta;
        }
    }
    return t;
}

Table run_engine(const ScenarioConfig& sc) {
    Table t;
    t.columns = {"omega_ratio", "scenario", "w_ext", "q_h",
                 "q_c",         "sigma",    "eta",   "mode", "boundary"};

    std::vector<std::pair<double, bool>> ratios;  // (ratio, is boundary row)
    for (const double r : sc.ratio_axis.values()) {
        if (!(r > 0.0) || !(r <= 1.0)) {
            throw std::invalid_argument("omega_ratio: sweep values must lie in (0, 1]");
        }
        ratios.emplace_back(r, false);
    }
    const double boundary_ratio = sc.beta_a / sc.beta_b;
    if (boundary_ratio > 0.0 && boundary_ratio <= 1.0) {
        ratios.emplace_back(boundary_ratio, true);
    }
    std::stable_sort(ratios.begin(), ratios.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    const TemperatureMode mode = parse_temperature_mode(sc.temperature_mode);
    for (const auto& scen : resolve_scenarios(sc)) {
        for (const auto& [ratio, is_boundary] : ratios) {
            EngineConfig cfg;
            cfg.spec_a = {sc.omega_a, scen.velocity_a, sc.beta_a, sc.coupling_a};
            cfg.spec_b = {ratio * sc.omega_a, scen.velocity_b, sc.beta_b,
                          sc.coupling_b};
            cfg.temperature_mode = mode;
            const CycleObservables obs = cycle_observables(cfg);
            auto& row = t.add_row();
            row[0] = ratio;
            row[1] = scen.name;
            row[2] = obs.w_ext;
            row[3] = obs.q_h;
            row[4] = obs.q_c;
            row[5] = obs.sigma;
            row[6] = obs.eta ? Cell{*obs.eta} : blank();
            row[7] = std::string(to_string(obs.mode));
            row[8] = is_boundary ? 1.0 : 0.0;
        }
    }
    return t;
}

Table run_optimize(const ScenarioConfig& sc) {
    Table t;
    t.columns = {"scan_value", "eta_star",  "eta_ca_rest", "eta_ca_eff",
                 "eta_c_rest", "eta_c_eff", "optimal_ratio", "max_work", "mode"};

    const OptimizerRegime regime = parse_optimizer_regime(sc.regime);
    const ScanParameter scan = parse_scan_parameter(sc.scan);
    const EngineConfig base = make_engine_config(sc);
    const auto points = eta_star_scan(base, scan, sc.scan_axis.values(), regime);

    bool any_optimum = false;
    for (const auto& p : points) {
        auto& row = t.add_row();
        row[0] = p.scan_value;
        row[1] = p.optimum ? Cell{p.optimum->eta_star} : blank();
        row[2] = p.bounds.eta_ca_rest;
        row[3] = p.bounds.eta_ca_eff;
        row[4] = p.bounds.eta_c_rest;
        row[5] = p.bounds.eta_c_eff;
        row[6] = p.optimum ? Cell{p.optimum->frequency_ratio} : blank();
        row[7] = p.optimum ? Cell{p.optimum->max_work} : blank();
        row[8] = std::string(to_string(p.mode));
        any_optimum = any_optimum || p.optimum.has_value();
    }
    if (!any_optimum) {
        throw empty_result_error("optimize: entire grid lies outside the engine window");
    }
    return t;
}

Table run_fcs(const ScenarioConfig& sc) {
    Table t;
    t.columns = {"kind", "initial_a", "initial_b", "m",        "n",
                 "probability", "w",  "q_h",       "value",    "fd_value",
                 "abs_diff"};

    const EngineConfig cfg = make_engine_config(sc);
    const auto dist = joint_distribution(cfg);

    double prob_sum = 0.0;
    for (const auto& o : dist.outcomes) {
        auto& row = t.add_row();
        row[0] = std::string("outcome");
        row[1] = static_cast<double>(o.initial_a);
        row[2] = static_cast<double>(o.initial_b);
        row[5] = o.probability;
        row[6] = o.w;
        row[7] = o.q_h;
        prob_sum += o.probability;
    }

    for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n <= 2; ++n) {
            const double value = moment(cfg, m, n);
            auto& row = t.add_row();
            row[0] = std::string("moment");
            row[3] = static_cast<double>(m);
            row[4] = static_cast<double>(n);
            row[8] = value;
            const bool first_w = (m == 1 && n == 0);
            const bool first_h = (m == 0 && n == 1);
            if (first_w || first_h) {
                const double fd = fd_first_moment(cfg, first_w);
                row[9] = fd;
                row[10] = std::abs(value - fd);
            }
        }
    }

    auto& footer = t.add_row();
    footer[0] = std::string("prob_sum");
    footer[8] = prob_sum;
    return t;
}

std::string serialize(const Table& table, OutputFormat format) {
    return format == OutputFormat::csv ? to_csv(table) : to_json(table);
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("config: cannot open '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: invalid JSON in '" + path +
                                    "': " + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("config: expected a flat JSON object");
    }

    // Axis keys are collected first so a single value and a sweep cannot be
    // mixed for the same axis.
    struct AxisInput {
        std::optional<double> value, start, stop;
        std::optional<int> count;
        std::optional<std::string> spacing;
    };
    AxisInput omega_axis, velocity_axis, ratio_axis, scan_axis;

    auto num = [&](const nlohmann::json& v, const std::string& key) -> double {
        if (!v.is_number()) {
            throw std::invalid_argument("config: key '" + key + "' must be a number");
        }
        return v.get<double>();
    };
    auto integer = [&](const nlohmann::json& v, const std::string& key) -> int {
        if (!v.is_number_integer()) {
            throw std::invalid_argument("config: key '" + key +
                                        "' must be an integer");
        }
        return v.get<int>();
    };
    auto str = [&](const nlohmann::json& v, const std::string& key) -> std::string {
        if (!v.is_string()) {
            throw std::invalid_argument("config: key '" + key + "' must be a string");
        }
        return v.get<std::string>();
    };

    for (const auto& [key, v] : doc.items()) {
        if (key == "omega_a") base.omega_a = num(v, key);
        else if (key == "omega_b") base.omega_b = num(v, key);
        else if (key == "beta_a") base.beta_a = num(v, key);
        else if (key == "beta_b") base.beta_b = num(v, key);
        else if (key == "velocity_a") base.velocity_a = num(v, key);
        else if (key == "velocity_b") base.velocity_b = num(v, key);
        else if (key == "coupling_a") base.coupling_a = num(v, key);
        else if (key == "coupling_b") base.coupling_b = num(v, key);
        else if (key == "temperature_mode") base.temperature_mode = str(v, key);
        else if (key == "beta") base.beta = num(v, key);
        else if (key == "coupling") base.coupling = num(v, key);
        else if (key == "scenario") base.scenario = str(v, key);
        else if (key == "regime") base.regime = str(v, key);
        else if (key == "scan") base.scan = str(v, key);
        else if (key == "format") base.format = parse_output_format(str(v, key));
        else if (key == "out") base.out = str(v, key);
        else if (key == "omega") omega_axis.value = num(v, key);
        else if (key == "omega_start") omega_axis.start = num(v, key);
        else if (key == "omega_stop") omega_axis.stop = num(v, key);
        else if (key == "omega_count") omega_axis.count = integer(v, key);
        else if (key == "omega_spacing") omega_axis.spacing = str(v, key);
        else if (key == "velocity") velocity_axis.value = num(v, key);
        else if (key == "velocity_start") velocity_axis.start = num(v, key);
        else if (key == "velocity_stop") velocity_axis.stop = num(v, key);
        else if (key == "velocity_count") velocity_axis.count = integer(v, key);
        else if (key == "velocity_spacing") velocity_axis.spacing = str(v, key);
        else if (key == "ratio") ratio_axis.value = num(v, key);
        else if (key == "ratio_start") ratio_axis.start = num(v, key);
        else if (key == "ratio_stop") ratio_axis.stop = num(v, key);
        else if (key == "ratio_count") ratio_axis.count = integer(v, key);
        else if (key == "ratio_spacing") ratio_axis.spacing = str(v, key);
        else if (key == "scan_value") scan_axis.value = num(v, key);
        else if (key == "scan_start") scan_axis.start = num(v, key);
        else if (key == "scan_stop") scan_axis.stop = num(v, key);
        else if (key == "scan_count") scan_axis.count = integer(v, key);
        else if (key == "scan_spacing") scan_axis.spacing = str(v, key);
        else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }

    auto apply_axis = [](const AxisInput& in, GridAxis& axis, const char* name) {
        const bool has_sweep = in.start || in.stop || in.count || in.spacing;
        if (in.value && has_sweep) {
            throw std::invalid_argument(std::string("config: '") + name +
                                        "' given both as a single value and a sweep");
        }
        if (in.value) {
            axis = GridAxis::single(*in.value);
        } else if (has_sweep) {
            if (!in.start || !in.stop || !in.count) {
                throw std::invalid_argument(std::string("config: sweep for '") + name +
                                            "' needs start, stop, and count");
            }
            axis = GridAxis::sweep(*in.start, *in.stop, *in.count,
                                   in.spacing ? parse_spacing(*in.spacing)
                                              : Spacing::linear);
        }
    };
    apply_axis(omega_axis, base.omega_axis, "omega");
    apply_axis(velocity_axis, base.velocity_axis, "velocity");
    apply_axis(ratio_axis, base.ratio_axis, "ratio");
    apply_axis(scan_axis, base.scan_axis, "scan");

    return base;
}

}  // namespace relengine
