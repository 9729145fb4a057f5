#include "vexfluid/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "vexfluid/errors.hpp"
#include "vexfluid/spectral_ops.hpp"

namespace vexfluid {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic uniform in [0,1) from (seed, mode triple, stream).
double mode_uniform(std::uint64_t seed, int n0, int n1, int n2, int stream) {
    std::uint64_t key = seed;
    key = splitmix64(key ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n0)) << 1));
    key = splitmix64(key ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n1)) << 2));
    key = splitmix64(key ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n2)) << 3));
    key = splitmix64(key ^ static_cast<std::uint64_t>(stream));
    return static_cast<double>(key >> 11) * 0x1.0p-53;
}

struct Vec3 {
    double x, y, z;
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

}  // namespace

double SpectrumSpec::taper(double r) const {
    if (r <= r_cut) return 1.0;
    if (r >= 2.0 * r_cut) return 0.0;
    const double s = std::log2(r / r_cut);  // in (0, 1) across the octave
    const double c = std::cos(0.5 * kPi * s);
    return c * c;
}

SpectralField make_initial_field(const SpectrumSpec& spec, const Grid& grid) {
    if (!(spec.gamma > 2.0 && spec.gamma < 2.5)) {
        throw DomainError("spectrum gamma must lie in (2, 5/2)");
    }
    if (spec.amplitude_c < 0.0) throw DomainError("spectrum amplitude must be >= 0");
    if (spec.r_cut <= 0.0) throw DomainError("spectrum r_cut must be positive");

    double k_mask = 1e300;
    for (int a = 0; a < 3; ++a) {
        k_mask = std::min(k_mask, 2.0 * kPi * grid.dealias_limit(a) / grid.box[a]);
    }
    if (spec.r_cut > k_mask) {
        throw DomainError("spectrum r_cut exceeds the dealias cutoff " +
                          std::to_string(k_mask));
    }

    // Count distinct shells strictly below r_cut.
    std::set<long long> shells;
    for (int i0 = 0; i0 < grid.dims[0]; ++i0) {
        const double k0 = grid.wavenumber(0, i0);
        for (int i1 = 0; i1 < grid.dims[1]; ++i1) {
            const double k1 = grid.wavenumber(1, i1);
            for (int i2 = 0; i2 < grid.dims[2]; ++i2) {
                if (!dealias_keeps(grid, i0, i1, i2)) continue;
                const double k2 = grid.wavenumber(2, i2);
                const double k_sq = k0 * k0 + k1 * k1 + k2 * k2;
                if (k_sq == 0.0 || k_sq >= spec.r_cut * spec.r_cut) continue;
                shells.insert(std::llround(k_sq * 1e9 / (k_mask * k_mask)));
            }
        }
    }
    if (shells.size() < 8) {
        throw DomainError("grid too small: only " + std::to_string(shells.size()) +
                          " shells below r_cut (need at least 8)");
    }

    SpectralField u(grid, 3);
    if (spec.amplitude_c == 0.0) return u;

    const double volume = grid.volume();
    const double mode_cell = std::pow(2.0 * kPi, 3) / volume;
    const double taper_end = 2.0 * spec.r_cut;

    for (int i0 = 0; i0 < grid.dims[0]; ++i0) {
        const int n0 = grid.frequency(0, i0);
        const double k0 = grid.wavenumber(0, i0);
        for (int i1 = 0; i1 < grid.dims[1]; ++i1) {
            const int n1 = grid.frequency(1, i1);
            const double k1 = grid.wavenumber(1, i1);
            for (int i2 = 0; i2 < grid.dims[2]; ++i2) {
                const int n2 = grid.frequency(2, i2);
                // Canonical half-space; the mirror gets the conjugate.
                if (!(n0 > 0 || (n0 == 0 && n1 > 0) || (n0 == 0 && n1 == 0 && n2 > 0))) {
                    continue;
                }
                if (!dealias_keeps(grid, i0, i1, i2)) continue;
                const double k2 = grid.wavenumber(2, i2);
                const Vec3 k{k0, k1, k2};
                const double k_mag = k.norm();
                if (k_mag >= taper_end || k_mag > k_mask) continue;

                // Exact per-mode energy: amplitude_c r^{2 gamma - 3} times
                // the mode cell, spread over the unit sphere.
                const double energy = spec.amplitude_c * std::pow(k_mag, 2.0 * spec.gamma - 3.0) *
                                      spec.taper(k_mag) * mode_cell / (4.0 * kPi);
                if (energy <= 0.0) continue;
                const double amp = std::sqrt(energy / volume);

                // Orthonormal pair orthogonal to k; k . e1 vanishes exactly.
                const double ak0 = std::abs(k0), ak1 = std::abs(k1), ak2 = std::abs(k2);
                Vec3 axis{0.0, 0.0, 0.0};
                if (ak0 <= ak1 && ak0 <= ak2) {
                    axis.x = 1.0;
                } else if (ak1 <= ak2) {
                    axis.y = 1.0;
                } else {
                    axis.z = 1.0;
                }
                Vec3 e1 = cross(k, axis);
                const double e1n = e1.norm();
                e1 = {e1.x / e1n, e1.y / e1n, e1.z / e1n};
                Vec3 e2 = cross(k, e1);
                const double e2n = e2.norm();
                e2 = {e2.x / e2n, e2.y / e2n, e2.z / e2n};

                const double theta = 2.0 * kPi * mode_uniform(spec.seed, n0, n1, n2, 0);
                const double chi = 2.0 * kPi * mode_uniform(spec.seed, n0, n1, n2, 1);
                const std::complex<double> phase(std::cos(theta), std::sin(theta));
                const double ca = std::cos(chi), sa = std::sin(chi);

                const std::size_t idx = grid.index(i0, i1, i2);
                const std::size_t mirror =
                    grid.index((grid.dims[0] - i0) % grid.dims[0],
                               (grid.dims[1] - i1) % grid.dims[1],
                               (grid.dims[2] - i2) % grid.dims[2]);
                const std::complex<double> cx = amp * phase * (ca * e1.x + sa * e2.x);
                const std::complex<double> cy = amp * phase * (ca * e1.y + sa * e2.y);
                const std::complex<double> cz = amp * phase * (ca * e1.z + sa * e2.z);
                u.comp(0)[idx] = cx;
                u.comp(1)[idx] = cy;
                u.comp(2)[idx] = cz;
                u.comp(0)[mirror] = std::conj(cx);
                u.comp(1)[mirror] = std::conj(cy);
                u.comp(2)[mirror] = std::conj(cz);
            }
        }
    }
    return u;
}

L1H1Report l1_h1_report(const SpectralField& u0) {
    L1H1Report rep;
    const VectorField phys = transform_inverse(u0);
    rep.l1_norm = phys.l1_norm();
    rep.h1_norm = std::sqrt(l2_norm_sq(u0) + seminorm_sq(u0, 1));
    return rep;
}

}  // namespace vexfluid
