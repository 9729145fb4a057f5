#pragma once

#include <complex>
#include <vector>

#include "vexfluid/grid.hpp"

namespace vexfluid {

/// Discrete Fourier transforms on the periodic grid, normalized so that
/// forward . inverse is the identity and coefficients are mode amplitudes:
///   u(x) = sum_n uhat(n) exp(i k_n . x).
/// Plans are cached per grid shape and created with a deterministic
/// heuristic, so repeated runs produce bit-identical results.
namespace fft {

/// In-place forward transform (physical samples -> mode amplitudes).
void forward(const Grid& grid, std::vector<std::complex<double>>& data);

/// In-place inverse transform (mode amplitudes -> physical samples).
void inverse(const Grid& grid, std::vector<std::complex<double>>& data);

std::vector<std::complex<double>> forward_real(const Grid& grid,
                                               const std::vector<double>& phys);

/// Inverse transform keeping the real part; valid for Hermitian spectra.
std::vector<double> inverse_to_real(const Grid& grid,
                                    const std::vector<std::complex<double>>& coeffs);

}  // namespace fft

}  // namespace vexfluid
