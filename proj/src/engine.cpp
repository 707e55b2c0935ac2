#include "relengine/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relengine {

namespace {

// Quantities within this distance of zero sit on an operating-mode boundary
// and are classified as the adjacent non-engine mode.
constexpr double kModeBoundaryTol = 1e-14;

struct CycleCore {
    double x_a;  // beta_a_eff * omega_a
    double x_b;  // beta_b_eff * omega_b
    double delta_tanh;  // tanh(x_b/2) - tanh(x_a/2)
    double w_mean;
    double w_ext;
    double q_h;
    double q_c;
};

CycleCore cycle_core_from(double omega_a, double omega_b,
                          double beta_a_eff, double beta_b_eff) {
    CycleCore c;
    c.x_a = beta_a_eff * omega_a;
    c.x_b = beta_b_eff * omega_b;
    c.delta_tanh = std::tanh(0.5 * c.x_b) - std::tanh(0.5 * c.x_a);
    c.w_mean = 0.5 * (omega_b - omega_a) * c.delta_tanh;
    c.q_h = 0.5 * omega_a * c.delta_tanh;
    c.w_ext = -c.w_mean;
    c.q_c = c.w_ext - c.q_h;
    return c;
}

CycleCore cycle_core(const EngineConfig& config) {
    const auto [bath_a, bath_b] = effective_baths(config);
    return cycle_core_from(config.spec_a.omega, config.spec_b.omega,
                           bath_a.beta_eff, bath_b.beta_eff);
}

OperatingMode classify(double w_ext, double q_h, double q_c) {
    if (w_ext > kModeBoundaryTol && q_h > kModeBoundaryTol) {
        return OperatingMode::engine;
    }
    if (q_c > kModeBoundaryTol && w_ext < kModeBoundaryTol) {
        return OperatingMode::refrigerator;
    }
    if (q_h < -kModeBoundaryTol && q_c < -kModeBoundaryTol) {
        return OperatingMode::heater;
    }
    return OperatingMode::accelerator;
}

}  // namespace

const char* to_string(TemperatureMode mode) {
    switch (mode) {
        case TemperatureMode::full: return "full";
        case TemperatureMode::high_t: return "high_t";
        case TemperatureMode::rest: return "rest";
    }
    return "?";
}

const char* to_string(OperatingMode mode) {
    switch (mode) {
        case OperatingMode::engine: return "engine";
        case OperatingMode::refrigerator: return "refrigerator";
        case OperatingMode::heater: return "heater";
        case OperatingMode::accelerator: return "accelerator";
    }
    return "?";
}

TemperatureMode parse_temperature_mode(std::string_view name) {
    if (name == "full") return TemperatureMode::full;
    if (name == "high_t") return TemperatureMode::high_t;
    if (name == "rest") return TemperatureMode::rest;
    throw std::invalid_argument("temperature_mode: unknown mode '" +
                                std::string(name) + "'");
}

QubitThermalState QubitThermalState::make(double omega, double beta_eff) {
    if (!(omega > 0.0) || !(beta_eff > 0.0)) {
        throw std::domain_error("QubitThermalState: omega and beta_eff must be > 0");
    }
    // 1/(1 + e^x) evaluated as e^{-x}/(1 + e^{-x}) so large x never overflows
    const double emx = std::exp(-beta_eff * omega);
    return {omega, beta_eff, emx / (1.0 + emx)};
}

void EngineConfig::validate() const {
    spec_a.validate();
    spec_b.validate();
}

std::pair<EffectiveBath, EffectiveBath> effective_baths(const EngineConfig& config) {
    config.validate();
    switch (config.temperature_mode) {
        case TemperatureMode::full:
            return {effective_temperature(config.spec_a),
                    effective_temperature(config.spec_b)};
        case TemperatureMode::high_t:
            return {effective_temperature_high_t(config.spec_a),
                    effective_temperature_high_t(config.spec_b)};
        case TemperatureMode::rest:
            return {EffectiveBath{1.0 / config.spec_a.beta_bath, config.spec_a.beta_bath},
                    EffectiveBath{1.0 / config.spec_b.beta_bath, config.spec_b.beta_bath}};
    }
    throw std::logic_error("effective_baths: unreachable");
}

JointWorkHeatDistribution joint_distribution(const EngineConfig& config) {
    const auto [bath_a, bath_b] = effective_baths(config);
    const auto qa = QubitThermalState::make(config.spec_a.omega, bath_a.beta_eff);
    const auto qb = QubitThermalState::make(config.spec_b.omega, bath_b.beta_eff);

    const double p_a[2] = {qa.p_ground(), qa.p_excited};
    const double p_b[2] = {qb.p_ground(), qb.p_excited};
    // Energy eigenvalues are omega*s with s(0) = -1/2, s(1) = +1/2; the SWAP
    // maps (a, b) -> (b, a), so qubit A changes by omega_a*(s(b) - s(a)).
    const double s[2] = {-0.5, 0.5};

    JointWorkHeatDistribution dist;
    int k = 0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double de_a = config.spec_a.omega * (s[b] - s[a]);
            const double de_b = config.spec_b.omega * (s[a] - s[b]);
            dist.outcomes[k++] = {a, b, p_a[a] * p_b[b], de_a + de_b, -de_a};
        }
    }
    return dist;
}

std::complex<double> characteristic_function(const EngineConfig& config,
                                             double chi_w, double chi_h) {
    if (chi_w == 0.0 && chi_h == 0.0) return {1.0, 0.0};
    const auto dist = joint_distribution(config);
    std::complex<double> sum = 0.0;
    for (const auto& o : dist.outcomes) {
        sum += o.probability *
               std::exp(std::complex<double>(0.0, chi_w * o.w + chi_h * o.q_h));
    }
    return sum;
}

double moment(const EngineConfig& config, int m, int n) {
    if (m < 0 || n < 0) {
        throw std::domain_error("moment: orders must be non-negative");
    }
    const auto dist = joint_distribution(config);
    double sum = 0.0;
    for (const auto& o : dist.outcomes) {
        double term = o.probability;
        for (int i = 0; i < m; ++i) term *= o.w;
        for (int i = 0; i < n; ++i) term *= o.q_h;
        sum += term;
    }
    return sum;
}

CycleObservables cycle_observables(const EngineConfig& config) {
    const CycleCore c = cycle_core(config);
    CycleObservables obs;
    obs.w_mean = c.w_mean;
    obs.w_ext = c.w_ext;
    obs.q_h = c.q_h;
    obs.q_c = c.q_c;
    // Clausius form -beta_a*q_h - beta_c*q_c reduces to a product of two
    // factors of equal sign, so non-negativity survives rounding.
    obs.sigma = 0.5 * (c.x_b - c.x_a) * c.delta_tanh;
    obs.mode = classify(c.w_ext, c.q_h, c.q_c);
    if (obs.mode == OperatingMode::engine) {
        obs.eta = 1.0 - config.spec_b.omega / config.spec_a.omega;
    }
    return obs;
}

OperatingMode classify_mode(const EngineConfig& config) {
    const CycleCore c = cycle_core(config);
    return classify(c.w_ext, c.q_h, c.q_c);
}

CarnotBounds carnot_bounds_from(double t_a_rest, double t_b_rest,
                                double t_a_eff, double t_b_eff) {
    const double r_rest = t_b_rest / t_a_rest;
    const double r_eff = t_b_eff / t_a_eff;
    return {1.0 - r_rest, 1.0 - r_eff,
            1.0 - std::sqrt(r_rest), 1.0 - std::sqrt(r_eff)};
}

CarnotBounds carnot_bounds(const EngineConfig& config) {
    const auto [bath_a, bath_b] = effective_baths(config);
    return carnot_bounds_from(1.0 / config.spec_a.beta_bath,
                              1.0 / config.spec_b.beta_bath,
                              bath_a.t_eff, bath_b.t_eff);
}

double extracted_work_from(double omega_a, double omega_b,
                           double beta_a_eff, double beta_b_eff) {
    return cycle_core_from(omega_a, omega_b, beta_a_eff, beta_b_eff).w_ext;
}

OperatingMode classify_mode_from(double omega_a, double omega_b,
                                 double beta_a_eff, double beta_b_eff) {
    const CycleCore c = cycle_core_from(omega_a, omega_b, beta_a_eff, beta_b_eff);
    return classify(c.w_ext, c.q_h, c.q_c);
}

}  // namespace relengine
