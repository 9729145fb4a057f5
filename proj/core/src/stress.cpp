#include "vexfluid/stress.hpp"

#include <cmath>

namespace vexfluid {

namespace {

void check_exponent(double p) {
    if (!(p >= 1.0)) {
        throw DomainError("stress exponent must satisfy p >= 1, got " + std::to_string(p));
    }
}

inline double stress_factor(double frob_sq, double p) {
    return std::pow(1.0 + frob_sq, 0.5 * (p - 2.0));
}

}  // namespace

SymTensor cauchy_stress(const SymTensor& d, double p) {
    check_exponent(p);
    SymTensor out = d;
    out *= stress_factor(d.frobenius_sq(), p);
    return out;
}

SymTensor modified_stress(const SymTensor& d, double p) {
    check_exponent(p);
    SymTensor out = d;
    out *= stress_factor(d.frobenius_sq(), p) - 1.0;
    return out;
}

MonotonicityGap monotonicity_gap(const SymTensor& b, const SymTensor& c, double p) {
    const SymTensor diff = b - c;
    MonotonicityGap gap;
    gap.gap_s = SymTensor::dot(cauchy_stress(b, p) - cauchy_stress(c, p), diff);
    gap.gap_g = SymTensor::dot(modified_stress(b, p) - modified_stress(c, p), diff);
    return gap;
}

SymTensorField apply_stress(const SymTensorField& d, const ExponentField& p, StressKind kind) {
    require_same_grid(d.grid(), p.grid(), "apply_stress");
    SymTensorField out(d.grid(), d.dim());
    const std::size_t n = d.grid().size();
    const int nc = d.ncomp();
    const double shift = kind == StressKind::modified ? 1.0 : 0.0;
    for (std::size_t node = 0; node < n; ++node) {
        double frob = 0.0;
        // Frobenius square from triangle storage: off-diagonals twice.
        for (int c = 0; c < nc; ++c) {
            const double v = d.comp(c)[node];
            const double mult = (d.dim() == 3 ? c >= 3 : c >= 2) ? 2.0 : 1.0;
            frob += mult * v * v;
        }
        const double factor = std::pow(1.0 + frob, 0.5 * (p.value(node) - 2.0)) - shift;
        for (int c = 0; c < nc; ++c) {
            out.comp(c)[node] = factor * d.comp(c)[node];
        }
    }
    return out;
}

}  // namespace vexfluid
