#include "vexfluid/decay_series.hpp"

#include <algorithm>
#include <cmath>

#include "vexfluid/errors.hpp"

namespace vexfluid {

void DecaySeries::validate() const {
    if (times.size() != values.size()) {
        throw DomainError("decay series '" + label + "': times/values length mismatch");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0) || !std::isfinite(times[i])) {
            throw DomainError("decay series '" + label + "': times must be positive");
        }
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw DomainError("decay series '" + label + "': times must be increasing");
        }
        if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
            throw DomainError("decay series '" + label + "': values must be finite and >= 0");
        }
    }
}

DecayFit fit_decay(const DecaySeries& s, double t_lo, double t_hi) {
    s.validate();
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.times[i] < t_lo || s.times[i] > t_hi) continue;
        if (!(s.values[i] > 0.0)) {
            throw WindowError("fit_decay: nonpositive value inside the window");
        }
        xs.push_back(std::log1p(s.times[i]));
        ys.push_back(std::log(s.values[i]));
    }
    if (xs.size() < 10) {
        throw WindowError("fit_decay: need at least 10 samples in the window, have " +
                          std::to_string(xs.size()));
    }
    const double decades = (xs.back() - xs.front()) / std::log(10.0);
    if (decades < 1.0) {
        throw WindowError("fit_decay: window spans only " + std::to_string(decades) +
                          " decades of (1+t); need at least 1");
    }

    const auto n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    DecayFit fit;
    fit.n_used = xs.size();
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;

    double rmin = 1e300, rmax = -1e300;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double resid = ys[i] - (fit.intercept + fit.slope * xs[i]);
        rmin = std::min(rmin, resid);
        rmax = std::max(rmax, resid);
    }
    fit.residual_band = std::exp(rmax - rmin);
    return fit;
}

RatioBand sandwich_verdict(const DecaySeries& w, const DecaySeries& phi, double max_drift) {
    w.validate();
    phi.validate();
    if (w.size() == 0 || w.size() != phi.size()) {
        throw WindowError("sandwich_verdict: series must share a nonempty time grid");
    }
    RatioBand band;
    band.c1 = 1e300;
    band.c2 = -1e300;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (std::abs(w.times[i] - phi.times[i]) > 1e-12 * std::max(1.0, w.times[i])) {
            throw WindowError("sandwich_verdict: time grids differ at sample " +
                              std::to_string(i));
        }
        if (!(phi.values[i] > 0.0)) {
            throw WindowError("sandwich_verdict: reference series vanishes at sample " +
                              std::to_string(i));
        }
        const double r = w.values[i] / phi.values[i];
        band.c1 = std::min(band.c1, r);
        band.c2 = std::max(band.c2, r);
    }
    band.drift = band.c2 / band.c1 - 1.0;
    band.pass = band.c1 > 0.0 && band.drift <= max_drift;
    return band;
}

}  // namespace vexfluid
