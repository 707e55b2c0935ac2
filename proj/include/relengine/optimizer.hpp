#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "relengine/engine.hpp"

namespace relengine {

enum class OptimizerMethod { closed_form_high_t, closed_form_low_t, numeric };
enum class VaryFrequency { omega_a, omega_b };
enum class ScanParameter { velocity_a, velocity_b, effective_ratio };
enum class OptimizerRegime { high_t, low_t, numeric_full };

const char* to_string(OptimizerMethod method);
ScanParameter parse_scan_parameter(std::string_view name);
OptimizerRegime parse_optimizer_regime(std::string_view name);

/// A maximum of the extracted work over one qubit frequency. Only reported
/// inside the engine window, so max_work > 0 and 0 < frequency_ratio < 1.
struct PowerOptimum {
    double optimal_frequency;  // value of the varied frequency at the maximum
    double max_work;           // extracted work w_ext at the maximum
    double eta_star;           // efficiency at maximum power, 1 - ratio
    double frequency_ratio;    // omega_b / omega_a at the maximum
    OptimizerMethod method;
};

/// The bracketed objective was not unimodal-positive.
struct bracket_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// High-temperature closed form: work is maximized over omega_a at
/// omega_b/omega_a = 2 beta_a/(beta_a + beta_b), giving
/// eta* = (beta_b - beta_a)/(beta_a + beta_b).
PowerOptimum max_power_high_t(double beta_a_eff, double beta_b_eff, double omega_b);

/// Low-temperature closed form: work is maximized over omega_b at
/// omega_b = omega_a + (1 - W0(e^{omega_a(beta_b - beta_a) + 1}))/beta_b.
PowerOptimum max_power_low_t(double beta_a_eff, double beta_b_eff, double omega_a);

/// Regime-free maximizer: golden-section search of the exact extracted work
/// over the chosen frequency inside `bracket`. Under TemperatureMode::full
/// the varied qubit's effective temperature follows every trial frequency.
PowerOptimum max_power_numeric(const EngineConfig& config, VaryFrequency vary,
                               std::pair<double, double> bracket);

/// One row of an efficiency-at-maximum-power scan. Grid points without an
/// engine window keep a null optimum; `mode` explains why (and is `engine`
/// whenever an optimum exists).
struct ScanPoint {
    double scan_value;
    std::optional<PowerOptimum> optimum;
    CarnotBounds bounds;
    OperatingMode mode;
};

/// Scans velocity_a, velocity_b, or the effective temperature ratio
/// T_B^eff/T_A^eff and reports the regime-appropriate optimum plus the four
/// Carnot/Curzon-Ahlborn references per grid point.
std::vector<ScanPoint> eta_star_scan(const EngineConfig& base, ScanParameter scan,
                                     const std::vector<double>& grid,
                                     OptimizerRegime regime);

}  // namespace relengine
