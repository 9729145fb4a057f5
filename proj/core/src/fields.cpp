#include "vexfluid/fields.hpp"

#include <algorithm>
#include <cmath>

namespace vexfluid {

double VectorField::max_magnitude() const {
    double worst = 0.0;
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        double m = 0.0;
        for (int c = 0; c < ncomp; ++c) {
            const double v = comps[static_cast<std::size_t>(c)][i];
            m += v * v;
        }
        worst = std::max(worst, m);
    }
    return std::sqrt(worst);
}

double VectorField::l2_norm() const {
    double acc = 0.0;
    for (int c = 0; c < ncomp; ++c) {
        for (const double v : comps[static_cast<std::size_t>(c)]) acc += v * v;
    }
    return std::sqrt(acc * grid.cell_volume());
}

double VectorField::l1_norm() const {
    double acc = 0.0;
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        double m = 0.0;
        for (int c = 0; c < ncomp; ++c) {
            const double v = comps[static_cast<std::size_t>(c)][i];
            m += v * v;
        }
        acc += std::sqrt(m);
    }
    return acc * grid.cell_volume();
}

}  // namespace vexfluid
