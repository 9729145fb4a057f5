#pragma once

#include <vector>

#include "vexfluid/grid.hpp"

namespace vexfluid {

/// Real scalar field in physical space.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid(g), values(g.size(), 0.0) {}
    ScalarField(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {}
};

/// Real vector field in physical space, component-major.
struct VectorField {
    Grid grid;
    int ncomp = 3;
    std::vector<std::vector<double>> comps;

    VectorField() = default;
    explicit VectorField(const Grid& g, int nc = 3)
        : grid(g), ncomp(nc), comps(nc, std::vector<double>(g.size(), 0.0)) {}

    std::vector<double>& comp(int c) { return comps[static_cast<std::size_t>(c)]; }
    const std::vector<double>& comp(int c) const { return comps[static_cast<std::size_t>(c)]; }

    /// Pointwise Euclidean magnitude maximum.
    double max_magnitude() const;
    /// Discrete L2 norm, sqrt(sum |v|^2 h^3).
    double l2_norm() const;
    /// Discrete L1 norm of the pointwise magnitude.
    double l1_norm() const;
};

}  // namespace vexfluid
