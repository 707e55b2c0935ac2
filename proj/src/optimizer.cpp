#include "relengine/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "relengine/special_functions.hpp"

namespace relengine {

namespace {

// exp() overflows just above this; the Lambert argument e^{w_a(b_b-b_a)+1}
// must stay representable.
constexpr double kMaxExpArg = 709.0;

double objective_w_ext(const EngineConfig& config, VaryFrequency vary,
                       double frequency) {
    EngineConfig trial = config;
    (vary == VaryFrequency::omega_a ? trial.spec_a.omega : trial.spec_b.omega) =
        frequency;
    return cycle_observables(trial).w_ext;
}

}  // namespace

const char* to_string(OptimizerMethod method) {
    switch (method) {
        case OptimizerMethod::closed_form_high_t: return "closed_form_high_t";
        case OptimizerMethod::closed_form_low_t: return "closed_form_low_t";
        case OptimizerMethod::numeric: return "numeric";
    }
    return "?";
}

ScanParameter parse_scan_parameter(std::string_view name) {
    if (name == "velocity_a") return ScanParameter::velocity_a;
    if (name == "velocity_b") return ScanParameter::velocity_b;
    if (name == "effective_ratio") return ScanParameter::effective_ratio;
    throw std::invalid_argument("scan: unknown parameter '" + std::string(name) + "'");
}

OptimizerRegime parse_optimizer_regime(std::string_view name) {
    if (name == "high_t") return OptimizerRegime::high_t;
    if (name == "low_t") return OptimizerRegime::low_t;
    if (name == "numeric-full" || name == "numeric_full") {
        return OptimizerRegime::numeric_full;
    }
    throw std::invalid_argument("regime: unknown regime '" + std::string(name) + "'");
}

PowerOptimum max_power_high_t(double beta_a_eff, double beta_b_eff,
                              double omega_b) {
    if (!(omega_b > 0.0)) {
        throw std::domain_error("max_power_high_t: omega_b must be > 0");
    }
    if (!(beta_a_eff > 0.0) || !(beta_b_eff > 0.0) || !(beta_a_eff < beta_b_eff)) {
        throw std::domain_error(
            "max_power_high_t: requires 0 < beta_a_eff < beta_b_eff (no engine window)");
    }
    const double ratio = 2.0 * beta_a_eff / (beta_a_eff + beta_b_eff);
    const double omega_a = omega_b / ratio;
    // (beta_b - beta_a)/(beta_a + beta_b): the cancellation-free form of 1 - ratio
    const double eta_star = (beta_b_eff - beta_a_eff) / (beta_a_eff + beta_b_eff);
    const double work = extracted_work_from(omega_a, omega_b, beta_a_eff, beta_b_eff);
    return {omega_a, work, eta_star, ratio, OptimizerMethod::closed_form_high_t};
}

PowerOptimum max_power_low_t(double beta_a_eff, double beta_b_eff,
                             double omega_a) {
    if (!(omega_a > 0.0)) {
        throw std::domain_error("max_power_low_t: omega_a must be > 0");
    }
    if (!(beta_a_eff > 0.0) || !(beta_b_eff > 0.0) || !(beta_a_eff < beta_b_eff)) {
        throw std::domain_error(
            "max_power_low_t: requires 0 < beta_a_eff < beta_b_eff (no engine window)");
    }
    const double exp_arg = omega_a * (beta_b_eff - beta_a_eff) + 1.0;
    if (!(exp_arg < kMaxExpArg)) {
        throw std::domain_error(
            "max_power_low_t: Lambert argument exceeds the representable range");
    }
    const double w0 = lambert_w0(std::exp(exp_arg));
    // Stationarity of (omega_a - omega_b)(e^{-b_a w_a} - e^{-b_b w_b}) in
    // omega_b gives 1 + beta_b*(omega_a - omega_b) = W0, hence the 1/beta_b
    // correction below.
    const double omega_b = omega_a + (1.0 - w0) / beta_b_eff;
    if (!(omega_b > 0.0) || !(omega_b < omega_a)) {
        throw std::domain_error("max_power_low_t: optimum exits the engine window");
    }
    const double ratio = omega_b / omega_a;
    const double work = extracted_work_from(omega_a, omega_b, beta_a_eff, beta_b_eff);
    return {omega_b, work, 1.0 - ratio, ratio, OptimizerMethod::closed_form_low_t};
}

PowerOptimum max_power_numeric(const EngineConfig& config, VaryFrequency vary,
                               std::pair<double, double> bracket) {
    config.validate();
    double lo = bracket.first;
    double hi = bracket.second;
    if (!(lo > 0.0) || !(hi > lo)) {
        throw std::invalid_argument(
            "max_power_numeric: bracket endpoints must be positive and ordered");
    }
    const double f_lo = objective_w_ext(config, vary, lo);
    const double f_hi = objective_w_ext(config, vary, hi);

    const double inv_phi = 0.6180339887498949;  // (sqrt(5) - 1)/2
    const double tol = 1e-10 * (hi - lo);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective_w_ext(config, vary, x1);
    double f2 = objective_w_ext(config, vary, x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective_w_ext(config, vary, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective_w_ext(config, vary, x1);
        }
    }
    const double x_star = 0.5 * (lo + hi);
    const double f_star = objective_w_ext(config, vary, x_star);
    if (!(f_star > 0.0) || !(f_star > f_lo) || !(f_star > f_hi)) {
        throw bracket_error(
            "max_power_numeric: extracted work is not unimodal-positive inside the bracket");
    }

    const double omega_a =
        vary == VaryFrequency::omega_a ? x_star : config.spec_a.omega;
    const double omega_b =
        vary == VaryFrequency::omega_b ? x_star : config.spec_b.omega;
    const double ratio = omega_b / omega_a;
    return {x_star, f_star, 1.0 - ratio, ratio, OptimizerMethod::numeric};
}

std::vector<ScanPoint> eta_star_scan(const EngineConfig& base, ScanParameter scan,
                                     const std::vector<double>& grid,
                                     OptimizerRegime regime) {
    base.validate();
    if (scan == ScanParameter::effective_ratio &&
        regime == OptimizerRegime::numeric_full) {
        throw std::invalid_argument(
            "eta_star_scan: effective_ratio cannot be scanned under numeric-full "
            "(the full effective temperature depends on frequency)");
    }

    std::vector<ScanPoint> points;
    points.reserve(grid.size());
    for (const double value : grid) {
        EngineConfig cfg = base;
        if (regime == OptimizerRegime::numeric_full) {
            cfg.temperature_mode = TemperatureMode::full;
        }

        EffectiveBath bath_a;
        EffectiveBath bath_b;
        if (scan == ScanParameter::effective_ratio) {
            if (!(value > 0.0)) {
                throw std::invalid_argument(
                    "eta_star_scan: effective_ratio grid values must be > 0");
            }
            bath_a = effective_baths(cfg).first;
            const double t_b_eff = bath_a.t_eff * value;
            bath_b = {t_b_eff, 1.0 / t_b_eff};
        } else {
            (scan == ScanParameter::velocity_a ? cfg.spec_a.velocity
                                               : cfg.spec_b.velocity) = value;
            std::tie(bath_a, bath_b) = effective_baths(cfg);
        }

        std::optional<PowerOptimum> optimum;
        const bool window = bath_a.beta_eff < bath_b.beta_eff;
        switch (regime) {
            case OptimizerRegime::high_t:
                if (window) {
                    optimum = max_power_high_t(bath_a.beta_eff, bath_b.beta_eff,
                                               cfg.spec_b.omega);
                }
                break;
            case OptimizerRegime::low_t:
                if (window) {
                    try {
                        optimum = max_power_low_t(bath_a.beta_eff, bath_b.beta_eff,
                                                  cfg.spec_a.omega);
                    } catch (const std::domain_error&) {
                        optimum.reset();
                    }
                }
                break;
            case OptimizerRegime::numeric_full: {
                const double omega_a = cfg.spec_a.omega;
                try {
                    optimum = max_power_numeric(
                        cfg, VaryFrequency::omega_b,
                        {1e-6 * omega_a, omega_a * (1.0 - 1e-9)});
                } catch (const bracket_error&) {
                    optimum.reset();
                }
                break;
            }
        }

        const double t_a_rest = 1.0 / cfg.spec_a.beta_bath;
        const double t_b_rest = 1.0 / cfg.spec_b.beta_bath;
        CarnotBounds bounds;
        if (optimum && regime == OptimizerRegime::numeric_full) {
            // Under the full map the bound temperatures belong to the cycle
            // actually run, i.e. to the optimal frequency.
            EngineConfig at_opt = cfg;
            at_opt.spec_b.omega = optimum->optimal_frequency;
            const auto [opt_a, opt_b] = effective_baths(at_opt);
            bounds = carnot_bounds_from(t_a_rest, t_b_rest, opt_a.t_eff, opt_b.t_eff);
        } else {
            bounds = carnot_bounds_from(t_a_rest, t_b_rest, bath_a.t_eff, bath_b.t_eff);
        }

        OperatingMode mode;
        if (optimum) {
            mode = OperatingMode::engine;
        } else if (scan == ScanParameter::effective_ratio) {
            mode = classify_mode_from(cfg.spec_a.omega, cfg.spec_b.omega,
                                      bath_a.beta_eff, bath_b.beta_eff);
        } else {
            mode = classify_mode(cfg);
        }

        points.push_back({value, optimum, bounds, mode});
    }
    return points;
}

}  // namespace relengine
