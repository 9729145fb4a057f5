#include "vexfluid/heat.hpp"

#include <algorithm>
#include <cmath>

#include "vexfluid/errors.hpp"
#include "vexfluid/initial_data.hpp"
#include "vexfluid/quadrature.hpp"

namespace vexfluid {

SpectralField heat_evolve(const SpectralField& u0, double t) {
    if (t < 0.0) throw DomainError("heat_evolve requires t >= 0");
    SpectralField u = u0;
    const Grid& g = u.grid();
    for (int i0 = 0; i0 < g.dims[0]; ++i0) {
        const double k0 = g.wavenumber(0, i0);
        for (int i1 = 0; i1 < g.dims[1]; ++i1) {
            const double k1 = g.wavenumber(1, i1);
            for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                const double k2 = g.wavenumber(2, i2);
                const double damp = std::exp(-(k0 * k0 + k1 * k1 + k2 * k2) * t);
                const std::size_t idx = g.index(i0, i1, i2);
                for (int c = 0; c < u.ncomp(); ++c) u.comp(c)[idx] *= damp;
            }
        }
    }
    return u;
}

double oracle_norm(const HeatOracle& o, double t) {
    if (t < 0.0) throw DomainError("oracle_norm requires t >= 0");
    if (o.untruncated() && t == 0.0) {
        throw DomainError("untruncated oracle diverges at t = 0");
    }
    const double power = 2.0 * o.gamma - 1.0 + 2.0 * o.m;

    SpectrumSpec taper_spec;  // reuse the taper shape
    taper_spec.r_cut = o.r_cut;
    auto integrand = [&](double r) {
        if (r <= 0.0) return 0.0;
        const double taper = o.untruncated() ? 1.0 : taper_spec.taper(r);
        return std::pow(r, power) * taper * std::exp(-2.0 * r * r * t);
    };

    // Split at the integrand peak and the taper kinks.
    double end;
    if (o.untruncated()) {
        end = std::sqrt((power + 120.0) / (2.0 * t));
    } else {
        end = 2.0 * o.r_cut;
        if (t > 0.0) end = std::min(end, std::sqrt((power + 120.0) / (2.0 * t)) + o.r_cut);
    }
    std::vector<double> knots{0.0};
    if (t > 0.0) {
        const double peak = std::sqrt(power / (4.0 * t));
        if (peak > 0.0 && peak < end) knots.push_back(peak);
        if (4.0 * peak > 0.0 && 4.0 * peak < end) knots.push_back(4.0 * peak);
    }
    if (!o.untruncated()) {
        if (o.r_cut < end) knots.push_back(o.r_cut);
    }
    knots.push_back(end);
    std::sort(knots.begin(), knots.end());

    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        integral += adaptive_simpson(integrand, knots[i], knots[i + 1], 1e-11);
    }
    return std::sqrt(std::max(0.0, o.amplitude_c * integral));
}

double oracle_norm_closed_form_untruncated(const HeatOracle& o, double t) {
    if (!(t > 0.0)) throw DomainError("closed form requires t > 0");
    const double a = o.gamma + o.m;  // int r^{2a-1} e^{-2 r^2 t} dr = Gamma(a)/(2 (2t)^a)
    const double integral = 0.5 * std::tgamma(a) * std::pow(2.0 * t, -a);
    return std::sqrt(o.amplitude_c * integral);
}

SandwichVerdict sandwich_check(const DecaySeries& series, double target_slope, double tol,
                               double band_max) {
    series.validate();
    SandwichVerdict v;
    if (series.size() < 2) throw WindowError("sandwich_check: series too short");
    const double decades =
        (std::log1p(series.times.back()) - std::log1p(series.times.front())) / std::log(10.0);
    if (decades < 1.5) {
        throw WindowError("sandwich_check: series spans only " + std::to_string(decades) +
                          " decades of (1+t); need at least 1.5");
    }
    const DecayFit fit = fit_decay(series, series.times.front(), series.times.back());
    v.slope = fit.slope;
    v.residual_band = fit.residual_band;
    const bool slope_ok = std::abs(fit.slope - target_slope) <= tol;
    const bool band_ok = fit.residual_band <= band_max;
    v.pass = slope_ok && band_ok;
    v.message = std::string(v.pass ? "PASS" : "FAIL") + ": slope " + std::to_string(fit.slope) +
                " vs target " + std::to_string(target_slope) + " (tol " + std::to_string(tol) +
                "), residual band " + std::to_string(fit.residual_band) + " (max " +
                std::to_string(band_max) + ")";
    return v;
}

}  // namespace vexfluid
