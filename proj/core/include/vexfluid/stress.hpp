#pragma once

#include "vexfluid/exponent_field.hpp"
#include "vexfluid/sym_tensor.hpp"

namespace vexfluid {

/// Cauchy stress S(D) = (1 + |D|^2)^{(p-2)/2} D. Requires p >= 1.
SymTensor cauchy_stress(const SymTensor& d, double p);

/// Modified stress G(D) = S(D) - D = ((1 + |D|^2)^{(p-2)/2} - 1) D,
/// the non-Newtonian excess left after splitting off the Laplacian.
SymTensor modified_stress(const SymTensor& d, double p);

/// The two monotonicity gaps
///   gap_S = (S(B) - S(C)) : (B - C),
///   gap_G = (G(B) - G(C)) : (B - C) = gap_S - |B - C|^2.
/// For p >= 2 both gaps are nonnegative and gap_S >= |B - C|^2.
struct MonotonicityGap {
    double gap_s = 0.0;
    double gap_g = 0.0;
};
MonotonicityGap monotonicity_gap(const SymTensor& b, const SymTensor& c, double p);

enum class StressKind { cauchy, modified };

/// Node-wise stress over a field, with the exponent evaluated at each node.
SymTensorField apply_stress(const SymTensorField& d, const ExponentField& p, StressKind kind);

}  // namespace vexfluid
