#pragma once

namespace relengine {

/// Principal branch W0 of the Lambert W function, the inverse of w -> w*e^w.
///
/// Valid for x >= -1/e; the result satisfies w*e^w = x with relative residual
/// below 1e-12 and w >= -1. Throws std::domain_error outside the domain.
double lambert_w0(double x);

/// ln(1 - e^{-x}) for x > 0, accurate over the whole double range.
///
/// Uses ln(-expm1(-x)) below x = ln 2 and log1p(-exp(-x)) above, which keeps
/// the relative error at the rounding level on both sides of the crossover.
double log1mexp(double x);

/// ln(e^x - 1) for x > 0, finite even where e^x itself overflows.
double log_expm1(double x);

}  // namespace relengine
