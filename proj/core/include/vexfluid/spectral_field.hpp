#pragma once

#include <complex>
#include <vector>

#include "vexfluid/grid.hpp"

namespace vexfluid {

/// Vector (or scalar) field stored as Fourier mode amplitudes on a
/// periodic box, component-major. Real physical fields correspond to
/// Hermitian-symmetric amplitudes, coeff(-k) == conj(coeff(k)); every
/// operation in this library preserves that symmetry.
class SpectralField {
  public:
    using Complex = std::complex<double>;

    SpectralField() = default;
    SpectralField(const Grid& grid, int ncomp = 3)
        : grid_(grid), ncomp_(ncomp),
          coeffs_(static_cast<std::size_t>(ncomp),
                  std::vector<Complex>(grid.size(), Complex(0.0, 0.0))) {}

    const Grid& grid() const { return grid_; }
    int ncomp() const { return ncomp_; }

    std::vector<Complex>& comp(int c) { return coeffs_[static_cast<std::size_t>(c)]; }
    const std::vector<Complex>& comp(int c) const {
        return coeffs_[static_cast<std::size_t>(c)];
    }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }

  private:
    Grid grid_;
    int ncomp_ = 0;
    std::vector<std::vector<Complex>> coeffs_;
};

}  // namespace vexfluid
