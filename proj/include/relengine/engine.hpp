#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <utility>

#include "relengine/detector.hpp"

namespace relengine {

/// Which effective-temperature map feeds the engine thermodynamics.
enum class TemperatureMode {
    full,    // exact frequency-dependent effective temperature
    high_t,  // small-frequency expansion, frequency-independent
    rest,    // rest-frame bath temperatures, motion ignored
};

enum class OperatingMode { engine, refrigerator, heater, accelerator };

const char* to_string(TemperatureMode mode);
const char* to_string(OperatingMode mode);
TemperatureMode parse_temperature_mode(std::string_view name);

/// Gibbs state of a single qubit at an effective inverse temperature.
struct QubitThermalState {
    double omega;
    double beta_eff;
    double p_excited;  // upper-level occupation, 1/(1 + e^{beta_eff*omega})

    static QubitThermalState make(double omega, double beta_eff);
    double p_ground() const { return 1.0 - p_excited; }
};

/// Two-qubit SWAP engine: qubit A contacts the hot bath, qubit B the cold.
struct EngineConfig {
    DetectorSpec spec_a;  // hot side
    DetectorSpec spec_b;  // cold side
    TemperatureMode temperature_mode = TemperatureMode::full;

    void validate() const;
};

/// One two-point-measurement record: initial eigenstates (a, b), their
/// probability, and the stochastic work / hot-heat values of the SWAP.
struct WorkHeatOutcome {
    int initial_a;
    int initial_b;
    double probability;
    double w;    // total two-qubit energy change
    double q_h;  // minus the energy change of qubit A
};

/// The exact four-outcome joint (W, Q_H) distribution of one cycle.
struct JointWorkHeatDistribution {
    std::array<WorkHeatOutcome, 4> outcomes;
};

/// Per-cycle mean thermodynamics. Sign conventions: w_mean is the
/// two-point-measurement mean <W> (negative when the cycle outputs work),
/// w_ext = -w_mean is the extracted work, q_h and q_c are the heats the
/// qubits absorb from the hot and cold baths while re-thermalizing.
struct CycleObservables {
    double w_mean;
    double w_ext;
    double q_h;
    double q_c;
    double sigma;              // entropy production, >= 0
    std::optional<double> eta; // 1 - omega_b/omega_a, engine mode only
    OperatingMode mode;
};

struct CarnotBounds {
    double eta_c_rest;   // 1 - T_B/T_A
    double eta_c_eff;    // 1 - T_B^eff/T_A^eff
    double eta_ca_rest;  // 1 - sqrt(T_B/T_A)
    double eta_ca_eff;   // 1 - sqrt(T_B^eff/T_A^eff)
};

/// Effective baths of the two qubits under the configured temperature map.
std::pair<EffectiveBath, EffectiveBath> effective_baths(const EngineConfig& config);

JointWorkHeatDistribution joint_distribution(const EngineConfig& config);

/// Characteristic function of the joint (W, Q_H) statistics; equals 1 at
/// zero counting fields by normalization.
std::complex<double> characteristic_function(const EngineConfig& config,
                                             double chi_w, double chi_h);

/// <W^m Q_H^n> by direct enumeration over the four outcomes.
double moment(const EngineConfig& config, int m, int n);

CycleObservables cycle_observables(const EngineConfig& config);

OperatingMode classify_mode(const EngineConfig& config);

CarnotBounds carnot_bounds(const EngineConfig& config);

/// Carnot/Curzon-Ahlborn references from explicit temperatures; the _eff
/// fields use the effective pair, the _rest fields the rest-frame pair.
CarnotBounds carnot_bounds_from(double t_a_rest, double t_b_rest,
                                double t_a_eff, double t_b_eff);

/// Extracted work per cycle from explicit effective inverse temperatures,
/// (omega_a - omega_b)/2 * (tanh(beta_b*omega_b/2) - tanh(beta_a*omega_a/2)).
double extracted_work_from(double omega_a, double omega_b,
                           double beta_a_eff, double beta_b_eff);

/// Operating mode from explicit effective inverse temperatures.
OperatingMode classify_mode_from(double omega_a, double omega_b,
                                 double beta_a_eff, double beta_b_eff);

}  // namespace relengine
