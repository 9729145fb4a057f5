#pragma once

#include <cstdint>

#include "vexfluid/spectral_field.hpp"

namespace vexfluid {

/// Prescription for divergence-free initial data whose shell spectrum
/// behaves like amplitude_c * r^{2 gamma - 3} as r -> 0: exact per-shell
/// amplitudes below r_cut, a smooth cosine taper over one octave above it,
/// and phases drawn deterministically from the seed.
struct SpectrumSpec {
    double gamma = 2.25;      // in (2, 5/2)
    double amplitude_c = 1.0; // > 0 (0 gives the zero field)
    double r_cut = 1.0;       // taper onset; taper ends at 2 r_cut
    std::uint64_t seed = 1;

    /// Energy taper factor: 1 below r_cut, cos^2 ramp over [r_cut, 2 r_cut],
    /// 0 above.
    double taper(double r) const;
};

/// Builds the field on the given grid. Requires at least 8 distinct
/// nonempty shells below r_cut and r_cut inside the dealias band; throws
/// DomainError otherwise. The result is Hermitian-symmetric and
/// divergence-free by construction, with the zero mode pinned.
SpectralField make_initial_field(const SpectrumSpec& spec, const Grid& grid);

struct L1H1Report {
    double l1_norm = 0.0;
    double h1_norm = 0.0;
};

/// Discrete L1 and H1 norms of the field; run metadata for the constants
/// that enter the decay estimates.
L1H1Report l1_h1_report(const SpectralField& u0);

}  // namespace vexfluid
