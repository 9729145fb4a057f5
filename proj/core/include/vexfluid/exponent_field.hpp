#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vexfluid/fields.hpp"
#include "vexfluid/grid.hpp"

namespace vexfluid {

/// Parameters for the named exponent presets.
struct ExponentPreset {
    std::string name = "constant";  // constant | sine-perturbed | plateau
    double base = 3.0;              // constant value / carrier value
    double amplitude = 0.0;         // sine amplitude / plateau height
    int axis = 0;                   // sine axis
    double radius = 0.0;            // plateau core radius (from box center)
    double width = 0.0;             // plateau taper width
};

/// Variable exponent p(x) on a periodic grid. Keeps both the node values
/// and the defining closed form, so the same exponent can be evaluated on
/// refined grids without interpolation. The standing assumption
/// 1 < p_minus <= p_plus < infinity is enforced at construction.
class ExponentField {
  public:
    using Fn = std::function<double(double, double, double)>;

    ExponentField(const Grid& grid, Fn p_of_x, double p_infinity);

    static ExponentField constant(const Grid& grid, double p0);
    static ExponentField from_preset(const Grid& grid, const ExponentPreset& preset);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double value(std::size_t node) const { return values_[node]; }
    double p_minus() const { return p_minus_; }
    double p_plus() const { return p_plus_; }
    double p_infinity() const { return p_infinity_; }

    double evaluate(double x, double y, double z) const { return fn_(x, y, z); }
    /// Same closed form sampled on another grid (no interpolation).
    ExponentField resampled(const Grid& other) const;

  private:
    Grid grid_;
    Fn fn_;
    std::vector<double> values_;
    double p_minus_ = 0.0;
    double p_plus_ = 0.0;
    double p_infinity_ = 0.0;
};

/// Measured log-Hoelder certificates. These are reported, never used as
/// pass/fail gates: on a finite grid both constants are always finite.
struct LogHolderCertificate {
    double c1 = 0.0;  // max |p(x)-p(y)| log(e + 1/dist(x,y)), minimal-image metric
    double c2 = 0.0;  // max |p(x)-p_inf| log(e + |x - box center|)
    std::size_t pairs_checked = 0;
};

/// Scans node pairs (exhaustively when the grid has no more than
/// sample_pairs pairs, deterministically sampled otherwise).
LogHolderCertificate validate_log_holder(const ExponentField& p, std::size_t sample_pairs);

/// The modular: quadrature of |f(x)|^{p(x)} over the box.
double modular(const ScalarField& f, const ExponentField& p);

/// Luxemburg norm inf{lambda > 0 : modular(f/lambda) <= 1}, computed by
/// bisection to 1e-10 relative. Returns 0 for the zero field. For constant
/// p this reduces to the discrete L^p norm.
double luxemburg_norm(const ScalarField& f, const ExponentField& p);

}  // namespace vexfluid
