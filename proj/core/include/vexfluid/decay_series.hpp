#pragma once

#include <string>
#include <vector>

namespace vexfluid {

/// Time series of a norm: strictly increasing positive times, finite
/// nonnegative values.
struct DecaySeries {
    std::vector<double> times;
    std::vector<double> values;
    std::string label;

    void validate() const;  // throws DomainError on invariant violations
    std::size_t size() const { return times.size(); }
};

struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;      // in log space
    double residual_band = 1.0;  // max/min ratio of value to the fitted law
    std::size_t n_used = 0;
};

/// Least-squares line on (log(1+t), log value) over the window
/// [t_lo, t_hi]. Requires at least 10 samples in the window and a window
/// spanning at least one decade in (1+t); throws WindowError otherwise.
DecayFit fit_decay(const DecaySeries& s, double t_lo, double t_hi);

struct RatioBand {
    double c1 = 0.0;  // min ratio over the window
    double c2 = 0.0;  // max ratio
    double drift = 0.0;  // c2/c1 - 1
    bool pass = false;
};

/// Pointwise ratio of two series on a common time grid; PASS iff the band
/// drift stays within max_drift (default 20%).
RatioBand sandwich_verdict(const DecaySeries& w, const DecaySeries& phi,
                           double max_drift = 0.20);

}  // namespace vexfluid
