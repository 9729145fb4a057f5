#pragma once

#include "vexfluid/fields.hpp"
#include "vexfluid/spectral_field.hpp"
#include "vexfluid/sym_tensor.hpp"

namespace vexfluid {

/// Binned estimate of the spherical shell integral of |uhat|^2 at radius r
/// in wavenumber space. shell_values tracks the surface integral itself
/// (the quantity whose small-r behavior is C r^{2 gamma - d}); weighting a
/// bin by r^2 dr recovers its energy content.
struct RadialSpectrum {
    std::vector<double> bin_edges;    // n_bins + 1 edges covering (0, k_max]
    std::vector<double> bin_centers;
    std::vector<double> shell_values;
    std::vector<std::size_t> bin_counts;

    /// sum shell_values * r^2 * dr; matches the field's squared L2 norm up
    /// to bin-count granularity.
    double total_energy_estimate() const;
};

struct KornPlancherelResult {
    bool defined = false;       // false for the zero field
    double ratio = 0.0;         // |grad u|_2^2 / |Du|_2^2, 2 for divergence-free fields
    double parseval_gap = 0.0;  // relative gap between physical and coefficient norms
};

SpectralField transform_forward(const VectorField& phys);
VectorField transform_inverse(const SpectralField& u);

/// Squared L2 norm V * sum |coeff|^2 (discrete Plancherel).
double l2_norm_sq(const SpectralField& u);
double l2_norm(const SpectralField& u);
/// Squared Sobolev seminorm V * sum |k|^{2m} |coeff|^2.
double seminorm_sq(const SpectralField& u, int m);

/// Largest relative violation of coeff(-k) == conj(coeff(k)).
double hermitian_asymmetry(const SpectralField& u);
/// Largest |k . uhat| / (|k| |uhat|) over nonzero modes.
double max_relative_divergence(const SpectralField& u);

/// Per-mode projection uhat -= k (k . uhat)/|k|^2; annihilates gradients,
/// passes the zero mode through, and never increases the coefficient norm.
SpectralField leray_project(SpectralField v);

/// Zeroes every mode outside the per-axis two-thirds band |n| <= N/3.
void apply_dealias_mask(SpectralField& u);
bool dealias_keeps(const Grid& grid, int i0, int i1, int i2);

/// Pins the mean mode to zero (no mean flow).
void pin_zero_mode(SpectralField& u);

/// Symmetric velocity gradient D = (grad u + grad u^T)/2 by spectral
/// differentiation, returned in physical space.
SymTensorField sym_gradient(const SpectralField& u);

/// Zero-padding embed of the retained modes into a finer grid, and its
/// truncation inverse. Both preserve mode amplitudes exactly.
SpectralField pad_spectrum(const SpectralField& u, const Grid& fine);
SpectralField truncate_spectrum(const SpectralField& u, const Grid& coarse);

RadialSpectrum shell_spectrum(const SpectralField& u, int n_bins);

/// Quadrature check of the Korn identity |grad u|^2 = 2 |Du|^2 for
/// periodic divergence-free fields, plus the Parseval gap of the round
/// trip through physical space.
KornPlancherelResult korn_plancherel_check(const SpectralField& u);

}  // namespace vexfluid
