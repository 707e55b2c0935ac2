#include "relengine/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace relengine {

namespace {

constexpr double kNegInvE = -0.36787944117144233;  // -1/e, rounded to double
constexpr double kLn2 = 0.6931471805599453;
constexpr int kMaxIterations = 50;
constexpr double kResidualTol = 1e-14;

// Solve w + ln w = ln x by Newton iteration. For large x this is the
// well-conditioned form of w*e^w = x: no exponential ever overflows.
double lambert_w0_log_domain(double x) {
    const double l = std::log(x);
    double w = l - std::log(l);
    for (int i = 0; i < kMaxIterations; ++i) {
        const double f = w + std::log(w) - l;
        const double dw = f / (1.0 + 1.0 / w);
        w -= dw;
        if (std::abs(dw) <= 1e-16 * (1.0 + std::abs(w))) break;
    }
    return w;
}

}  // namespace

double lambert_w0(double x) {
    if (std::isnan(x) || x < kNegInvE) {
        throw std::domain_error("lambert_w0: argument below -1/e");
    }
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    if (x > 1e16) return lambert_w0_log_domain(x);

    double w;
    if (x < -0.28) {
        // Branch-point series in p = sqrt(2(e*x + 1)); exact at x = -1/e.
        // fma keeps e*x + 1 from losing the last bits; clamp the rounding
        // residue so x == -1/e (as a double) maps to p = 0, w = -1.
        const double q = std::fma(M_E, x, 1.0);
        const double p = std::sqrt(2.0 * (q > 0.0 ? q : 0.0));
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
        if (p < 1e-4) return w;  // series error O(p^4), below round-off
    } else if (x < 0.5) {
        w = x * (1.0 + x * (-1.0 + 1.5 * x));  // Maclaurin seed
    } else {
        w = std::log1p(x);
    }

    // Halley iteration on f(w) = w*e^w - x.
    for (int i = 0; i < kMaxIterations; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        if (std::abs(f) <= kResidualTol * std::abs(x)) break;
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double dw = f / denom;
        w -= dw;
        if (w < -1.0) w = -1.0;  // W0 never drops below -1
        if (std::abs(dw) <= 1e-16 * (1.0 + std::abs(w))) break;
    }
    return w;
}

double log1mexp(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log1mexp: argument must be > 0");
    }
    return x > kLn2 ? std::log1p(-std::exp(-x)) : std::log(-std::expm1(-x));
}

double log_expm1(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_expm1: argument must be > 0");
    }
    return x + log1mexp(x);
}

}  // namespace relengine
