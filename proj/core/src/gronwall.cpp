#include "vexfluid/gronwall.hpp"

#include <cmath>

#include "vexfluid/errors.hpp"

namespace vexfluid {

GronwallResult discrete_gronwall(std::span<const double> t, std::span<const double> g,
                                 std::span<const double> f, std::span<const double> h) {
    const std::size_t n = t.size();
    if (n == 0 || g.size() != n || f.size() != n || h.size() != n) {
        throw DomainError("discrete_gronwall requires four equal-length sample arrays");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(g[i] > 0.0 && f[i] > 0.0 && h[i] >= 0.0)) {
            throw DomainError("discrete_gronwall requires positive g, f and nonnegative h");
        }
        if (i > 0 && !(t[i] > t[i - 1])) {
            throw DomainError("discrete_gronwall requires strictly increasing times");
        }
        if (i > 0 && f[i] < f[i - 1] * (1.0 - 1e-12)) {
            throw DomainError("discrete_gronwall requires nondecreasing f");
        }
    }

    GronwallResult res;
    res.bound.resize(n);
    res.hypothesis_ok = true;
    res.bound_ok = true;

    double int_h = 0.0;   // trapezoidal integral of h
    double int_gh = 0.0;  // trapezoidal integral of g*h
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            const double dt = t[i] - t[i - 1];
            int_h += 0.5 * dt * (h[i] + h[i - 1]);
            int_gh += 0.5 * dt * (g[i] * h[i] + g[i - 1] * h[i - 1]);
        }
        res.bound[i] = f[i] * std::exp(int_h);

        const double rhs = f[i] + int_gh;
        if (res.hypothesis_ok && g[i] > rhs * (1.0 + 1e-12)) {
            res.hypothesis_ok = false;
            res.first_violation = static_cast<int>(i);
        }
        if (g[i] > res.bound[i] * (1.0 + 1e-9)) {
            res.bound_ok = false;
        }
    }
    if (!res.hypothesis_ok) res.bound_ok = false;
    return res;
}

}  // namespace vexfluid
