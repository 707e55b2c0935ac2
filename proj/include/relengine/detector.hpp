#pragma once

namespace relengine {

/// A qubit moving at constant velocity through a thermal scalar-field bath.
/// Natural units throughout (hbar = c = k_B = 1).
struct DetectorSpec {
    double omega;           // energy-gap frequency, > 0
    double velocity;        // fraction of light speed, in [0, 1)
    double beta_bath;       // rest-frame inverse bath temperature, > 0
    double coupling = 1.0;  // interaction strength, > 0

    /// Throws std::domain_error naming the offending field.
    void validate() const;
};

/// Relativistic Doppler shifts gamma*(1 +/- v); blue*red == 1 identically.
struct DopplerPair {
    double blue;
    double red;
};

/// Effective temperature perceived by the moving qubit and its reciprocal.
struct EffectiveBath {
    double t_eff;
    double beta_eff;
};

/// blue = sqrt((1+v)/(1-v)), red = sqrt((1-v)/(1+v)). The square-root form
/// is algebraically gamma*(1 +/- v) but free of the gamma cancellation.
DopplerPair doppler_factors(double velocity);

/// Transition rate G(omega_signed) of the moving detector in the thermal
/// field; omega_signed > 0 is the de-excitation channel, < 0 excitation.
/// At velocity = 0 this is the analytic limit lambda^2/(2 pi) * w/(e^{beta w}-1),
/// which covers both signs of w through the Planck factor.
double transition_rate(const DetectorSpec& spec, double omega_signed);

/// Frequency-dependent effective temperature of the moving detector,
/// defined through the generalized detailed balance ratio G(-w)/G(w).
/// velocity = 0 returns exactly 1/beta_bath; beta*omega < 1e-6 falls back
/// to the small-frequency expansion to avoid a 0/0 log cancellation.
EffectiveBath effective_temperature(const DetectorSpec& spec);

/// Small-frequency (high-temperature) limit: T * ln((1+v)/(1-v)) / (2 gamma v),
/// frequency-independent. velocity = 0 returns T.
EffectiveBath effective_temperature_high_t(const DetectorSpec& spec);

}  // namespace relengine
