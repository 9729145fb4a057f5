#include "vexfluid/spectral_field.hpp"

#include "vexfluid/errors.hpp"

namespace vexfluid {

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_grid(grid_, o.grid_, "SpectralField addition");
    for (int c = 0; c < ncomp_; ++c) {
        auto& a = comp(c);
        const auto& b = o.comp(c);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    }
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_grid(grid_, o.grid_, "SpectralField subtraction");
    for (int c = 0; c < ncomp_; ++c) {
        auto& a = comp(c);
        const auto& b = o.comp(c);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    }
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (int c = 0; c < ncomp_; ++c) {
        for (auto& v : comp(c)) v *= s;
    }
    return *this;
}

}  // namespace vexfluid
