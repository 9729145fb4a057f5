#pragma once

#include <functional>

namespace vexfluid {

/// Adaptive Simpson quadrature on [a, b] to the given relative tolerance
/// (with an absolute floor for integrals near zero).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_floor = 1e-300);

}  // namespace vexfluid
