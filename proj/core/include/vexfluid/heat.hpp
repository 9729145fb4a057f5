#pragma once

#include <limits>

#include "vexfluid/decay_series.hpp"
#include "vexfluid/spectral_field.hpp"

namespace vexfluid {

/// Exact heat semigroup on the box: per-mode damping exp(-|k|^2 t).
/// Exact semigroup property, divergence-free preserving, contraction for
/// t > 0. Throws DomainError for negative t.
SpectralField heat_evolve(const SpectralField& u0, double t);

/// Whole-space closed-form companion of a SpectrumSpec: evaluates
///   |grad^m e^{t Delta} u0|_2^2 = C int r^{2 gamma - 1 + 2m} taper(r)
///                                     exp(-2 r^2 t) dr
/// by adaptive quadrature. r_cut may be infinity (untruncated spectrum),
/// in which case t = 0 is rejected for gamma-dependent divergence.
struct HeatOracle {
    double gamma = 2.25;
    double amplitude_c = 1.0;
    double r_cut = 1.0;  // may be std::numeric_limits<double>::infinity()
    int m = 0;           // derivative order

    bool untruncated() const { return r_cut == std::numeric_limits<double>::infinity(); }
};

double oracle_norm(const HeatOracle& o, double t);

/// Closed form of the untruncated oracle via the Gamma function; the
/// independent cross-check of the quadrature route.
double oracle_norm_closed_form_untruncated(const HeatOracle& o, double t);

struct SandwichVerdict {
    bool pass = false;
    double slope = 0.0;
    double residual_band = 0.0;
    std::string message;
};

/// Fits the series slope on log(1+t) and certifies the two-sided decay:
/// PASS iff |slope - target| <= tol and the max/min residual ratio against
/// the fitted power law stays below band_max. Requires the series to span
/// at least 1.5 decades in (1+t).
SandwichVerdict sandwich_check(const DecaySeries& series, double target_slope, double tol,
                               double band_max = 1.5);

}  // namespace vexfluid
