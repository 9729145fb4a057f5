#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace vexfluid {

/// Periodic box grid: per-axis point counts and physical side lengths.
/// Node (i0,i1,i2) sits at x_a = i_a * L_a / N_a; wavenumbers are
/// k_a = 2 pi n_a / L_a with integer frequencies n_a in [-N_a/2, N_a/2).
struct Grid {
    std::array<int, 3> dims{0, 0, 0};
    std::array<double, 3> box{0.0, 0.0, 0.0};

    Grid() = default;
    Grid(std::array<int, 3> n, std::array<double, 3> len) : dims(n), box(len) {}
    /// Cubic convenience constructor.
    Grid(int n, double len) : dims{n, n, n}, box{len, len, len} {}

    std::size_t size() const {
        return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
    }
    double volume() const { return box[0] * box[1] * box[2]; }
    /// Quadrature weight of one node (cell volume).
    double cell_volume() const { return volume() / static_cast<double>(size()); }
    double spacing(int axis) const { return box[axis] / dims[axis]; }
    double min_spacing() const;

    std::size_t index(int i0, int i1, int i2) const {
        return (static_cast<std::size_t>(i0) * dims[1] + i1) * dims[2] + i2;
    }
    std::array<int, 3> unindex(std::size_t idx) const;

    /// Signed integer frequency of storage index i along an axis.
    int frequency(int axis, int i) const {
        return i <= dims[axis] / 2 ? i : i - dims[axis];
    }
    /// Angular wavevector component 2 pi n / L.
    double wavenumber(int axis, int i) const {
        return 2.0 * 3.14159265358979323846 * frequency(axis, i) / box[axis];
    }
    /// Smallest nonzero wavenumber 2 pi / max(L); the decay-measurement
    /// cutoff scale of the finite box.
    double min_wavenumber() const;
    /// Per-axis two-thirds dealias limit on |n|.
    int dealias_limit(int axis) const { return dims[axis] / 3; }

    std::array<double, 3> node_position(int i0, int i1, int i2) const {
        return {i0 * spacing(0), i1 * spacing(1), i2 * spacing(2)};
    }

    bool operator==(const Grid& o) const { return dims == o.dims && box == o.box; }
    bool operator!=(const Grid& o) const { return !(*this == o); }

    std::string str() const;
};

/// Throws GridMismatchError unless the two grids are identical.
void require_same_grid(const Grid& a, const Grid& b, const char* what);

}  // namespace vexfluid
