#include "relengine/detector.hpp"

#include <cmath>
#include <stdexcept>

#include "relengine/special_functions.hpp"

namespace relengine {

namespace {

constexpr double kTwoPi = 6.283185307179586;
// Below beta*omega = 1e-6 the log-ratio in the exact temperature loses more
// than six digits to cancellation; the series value is off by O(omega^2).
constexpr double kSmallFrequencyCrossover = 1e-6;
// Above this, ln(1 - e^{-x}) terms are re-expressed through their leading
// exponential so the log of their difference stays well conditioned.
constexpr double kTailRewriteThreshold = 40.0;

double gamma_v(double velocity) {
    return velocity / std::sqrt((1.0 - velocity) * (1.0 + velocity));
}

}  // namespace

void DetectorSpec::validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::domain_error("DetectorSpec: omega must be finite and > 0");
    }
    if (!(velocity >= 0.0) || !(velocity < 1.0)) {
        throw std::domain_error("DetectorSpec: velocity must lie in [0, 1)");
    }
    if (!(beta_bath > 0.0) || !std::isfinite(beta_bath)) {
        throw std::domain_error("DetectorSpec: beta_bath must be finite and > 0");
    }
    if (!(coupling > 0.0) || !std::isfinite(coupling)) {
        throw std::domain_error("DetectorSpec: coupling must be finite and > 0");
    }
}

DopplerPair doppler_factors(double velocity) {
    if (!(velocity >= 0.0) || !(velocity < 1.0)) {
        throw std::domain_error("doppler_factors: velocity must lie in [0, 1)");
    }
    const double blue = std::sqrt((1.0 + velocity) / (1.0 - velocity));
    const double red = std::sqrt((1.0 - velocity) / (1.0 + velocity));
    return {blue, red};
}

double transition_rate(const DetectorSpec& spec, double omega_signed) {
    spec.validate();
    if (omega_signed == 0.0) {
        throw std::domain_error("transition_rate: omega_signed must be nonzero");
    }
    const double lambda_sq = spec.coupling * spec.coupling;
    const double w = std::abs(omega_signed);
    const double bw = spec.beta_bath * w;

    if (spec.velocity == 0.0) {
        // w/(e^{beta w} - 1) for the de-excitation channel and
        // w/(1 - e^{-beta w}) for excitation, in overflow-free log form.
        const double log_planck =
            omega_signed > 0.0 ? -log_expm1(bw) : -log1mexp(bw);
        return lambda_sq * w / kTwoPi * std::exp(log_planck);
    }

    const DopplerPair dp = doppler_factors(spec.velocity);
    const double a = bw * dp.blue;
    const double b = bw * dp.red;
    // De-excitation: ln[(1-e^{-a})/(1-e^{-b})]. Excitation flips both
    // exponent signs; the two negative numerators cancel into e^x - 1 terms.
    const double log_ratio = omega_signed > 0.0
                                 ? log1mexp(a) - log1mexp(b)
                                 : log_expm1(a) - log_expm1(b);
    return lambda_sq / (2.0 * kTwoPi * spec.beta_bath * gamma_v(spec.velocity)) *
           log_ratio;
}

EffectiveBath effective_temperature(const DetectorSpec& spec) {
    spec.validate();
    if (spec.velocity == 0.0) {
        // Rest frame is an identity, not a limit to approximate.
        return {1.0 / spec.beta_bath, spec.beta_bath};
    }
    if (spec.beta_bath * spec.omega < kSmallFrequencyCrossover) {
        return effective_temperature_high_t(spec);
    }

    const DopplerPair dp = doppler_factors(spec.velocity);
    const double a = spec.beta_bath * dp.blue * spec.omega;
    const double b = spec.beta_bath * dp.red * spec.omega;

    // beta_eff = [ln N - ln D] / omega with
    //   N = ln(e^a - 1) - ln(e^b - 1),  D = ln(1-e^{-a}) - ln(1-e^{-b});
    // the identity N = (a - b) + D links the two.
    double ln_n;
    double ln_d;
    if (b > kTailRewriteThreshold) {
        // D = e^{-b}(1 - e^{-(a-b)}) to leading order; the direct difference
        // of two sub-1e-17 logs would be pure noise.
        ln_d = -b + log1mexp(a - b);
        ln_n = std::log((a - b) + std::exp(ln_d));
    } else {
        ln_d = std::log(log1mexp(a) - log1mexp(b));
        ln_n = std::log(log_expm1(a) - log_expm1(b));
    }

    const double beta_eff = (ln_n - ln_d) / spec.omega;
    return {1.0 / beta_eff, beta_eff};
}

EffectiveBath effective_temperature_high_t(const DetectorSpec& spec) {
    spec.validate();
    const double t_bath = 1.0 / spec.beta_bath;
    if (spec.velocity == 0.0) {
        return {t_bath, spec.beta_bath};
    }
    // T * ln((1+v)/(1-v)) / (2 gamma v) = T * atanh(v) / (gamma v)
    const double t_eff =
        t_bath * std::atanh(spec.velocity) / gamma_v(spec.velocity);
    return {t_eff, 1.0 / t_eff};
}

}  // namespace relengine
