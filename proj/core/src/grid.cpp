#include "vexfluid/grid.hpp"

#include <algorithm>

#include "vexfluid/errors.hpp"

namespace vexfluid {

double Grid::min_spacing() const {
    return std::min({spacing(0), spacing(1), spacing(2)});
}

double Grid::min_wavenumber() const {
    const double lmax = std::max({box[0], box[1], box[2]});
    return 2.0 * 3.14159265358979323846 / lmax;
}

std::array<int, 3> Grid::unindex(std::size_t idx) const {
    const int i2 = static_cast<int>(idx % dims[2]);
    idx /= dims[2];
    const int i1 = static_cast<int>(idx % dims[1]);
    const int i0 = static_cast<int>(idx / dims[1]);
    return {i0, i1, i2};
}

std::string Grid::str() const {
    return std::to_string(dims[0]) + "x" + std::to_string(dims[1]) + "x" +
           std::to_string(dims[2]);
}

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (a != b) {
        throw GridMismatchError(std::string(what) + ": grids differ (" + a.str() + " vs " +
                                b.str() + ")");
    }
}

}  // namespace vexfluid
