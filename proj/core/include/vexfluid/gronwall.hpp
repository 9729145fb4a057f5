#pragma once

#include <span>
#include <vector>

namespace vexfluid {

struct GronwallResult {
    std::vector<double> bound;  // f(t_i) * exp(integral of h up to t_i)
    bool hypothesis_ok = false; // g <= f + integral(g h) held discretely
    int first_violation = -1;   // first index breaking the hypothesis, or -1
    bool bound_ok = false;      // g <= bound pointwise
};

/// Discrete Gronwall check on a common time grid: verifies the hypothesis
/// g(t) <= f(t) + int_0^t g h ds with trapezoidal integrals, and returns
/// the envelope f(t) exp(int_0^t h ds) together with the pointwise
/// comparison g <= envelope. f must be nondecreasing and all samples
/// positive; violations of the preconditions throw DomainError.
GronwallResult discrete_gronwall(std::span<const double> t, std::span<const double> g,
                                 std::span<const double> f, std::span<const double> h);

}  // namespace vexfluid
