#include "vexfluid/exponent_field.hpp"

#include <algorithm>
#include <cmath>

#include "vexfluid/errors.hpp"

namespace vexfluid {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// SplitMix64; used for deterministic pair sampling.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double min_image_distance(const Grid& g, const std::array<int, 3>& a,
                          const std::array<int, 3>& b) {
    double d2 = 0.0;
    for (int ax = 0; ax < 3; ++ax) {
        const double h = g.spacing(ax);
        int di = std::abs(a[ax] - b[ax]);
        di = std::min(di, g.dims[ax] - di);
        const double dx = di * h;
        d2 += dx * dx;
    }
    return std::sqrt(d2);
}

double center_distance(const Grid& g, const std::array<int, 3>& a) {
    double d2 = 0.0;
    for (int ax = 0; ax < 3; ++ax) {
        const double dx = a[ax] * g.spacing(ax) - 0.5 * g.box[ax];
        d2 += dx * dx;
    }
    return std::sqrt(d2);
}

}  // namespace

ExponentField::ExponentField(const Grid& grid, Fn p_of_x, double p_infinity)
    : grid_(grid), fn_(std::move(p_of_x)), p_infinity_(p_infinity) {
    values_.resize(grid_.size());
    for (int i0 = 0; i0 < grid_.dims[0]; ++i0) {
        for (int i1 = 0; i1 < grid_.dims[1]; ++i1) {
            for (int i2 = 0; i2 < grid_.dims[2]; ++i2) {
                const auto x = grid_.node_position(i0, i1, i2);
                values_[grid_.index(i0, i1, i2)] = fn_(x[0], x[1], x[2]);
            }
        }
    }
    const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
    p_minus_ = *lo;
    p_plus_ = *hi;
    if (!(p_minus_ > 1.0) || !std::isfinite(p_plus_)) {
        throw DomainError("exponent field must satisfy 1 < p_minus <= p_plus < infinity");
    }
}

ExponentField ExponentField::constant(const Grid& grid, double p0) {
    return ExponentField(grid, [p0](double, double, double) { return p0; }, p0);
}

ExponentField ExponentField::from_preset(const Grid& grid, const ExponentPreset& preset) {
    if (preset.name == "constant") {
        return constant(grid, preset.base);
    }
    if (preset.name == "sine-perturbed") {
        const double base = preset.base;
        const double amp = preset.amplitude;
        const int axis = preset.axis;
        const double len = grid.box[axis];
        return ExponentField(
            grid,
            [base, amp, axis, len](double x, double y, double z) {
                const double c = axis == 0 ? x : (axis == 1 ? y : z);
                return base + amp * std::sin(2.0 * kPi * c / len);
            },
            base);
    }
    if (preset.name == "plateau") {
        const double base = preset.base;
        const double amp = preset.amplitude;
        const double r0 = preset.radius;
        const double w = preset.width > 0.0 ? preset.width : grid.min_spacing();
        const std::array<double, 3> c{0.5 * grid.box[0], 0.5 * grid.box[1], 0.5 * grid.box[2]};
        return ExponentField(
            grid,
            [base, amp, r0, w, c](double x, double y, double z) {
                const double r =
                    std::sqrt((x - c[0]) * (x - c[0]) + (y - c[1]) * (y - c[1]) +
                              (z - c[2]) * (z - c[2]));
                if (r <= r0) return base + amp;
                if (r >= r0 + w) return base;
                const double s = (r - r0) / w;
                return base + amp * 0.5 * (1.0 + std::cos(kPi * s));
            },
            base);
    }
    throw ConfigError("unknown exponent preset '" + preset.name + "'");
}

ExponentField ExponentField::resampled(const Grid& other) const {
    return ExponentField(other, fn_, p_infinity_);
}

LogHolderCertificate validate_log_holder(const ExponentField& p, std::size_t sample_pairs) {
    const Grid& g = p.grid();
    const std::size_t n = g.size();
    LogHolderCertificate cert;

    auto pair_value = [&](std::size_t ia, std::size_t ib) {
        const auto a = g.unindex(ia);
        const auto b = g.unindex(ib);
        const double dist = min_image_distance(g, a, b);
        if (dist <= 0.0) return 0.0;
        return std::abs(p.value(ia) - p.value(ib)) * std::log(std::exp(1.0) + 1.0 / dist);
    };

    const std::size_t total_pairs = n * (n - 1) / 2;
    if (total_pairs <= sample_pairs) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                cert.c1 = std::max(cert.c1, pair_value(i, j));
                ++cert.pairs_checked;
            }
        }
    } else {
        std::uint64_t state = 0x5DEECE66DULL;
        for (std::size_t k = 0; k < sample_pairs; ++k) {
            const std::size_t i = splitmix64(state) % n;
            std::size_t j = splitmix64(state) % n;
            if (i == j) j = (j + 1) % n;
            cert.c1 = std::max(cert.c1, pair_value(i, j));
            ++cert.pairs_checked;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const double r = center_distance(g, g.unindex(i));
        const double v = std::abs(p.value(i) - p.p_infinity()) * std::log(std::exp(1.0) + r);
        cert.c2 = std::max(cert.c2, v);
    }
    return cert;
}

double modular(const ScalarField& f, const ExponentField& p) {
    require_same_grid(f.grid, p.grid(), "modular");
    const double w = f.grid.cell_volume();
    double acc = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        acc += std::pow(std::abs(f.values[i]), p.value(i)) * w;
    }
    return acc;
}

double luxemburg_norm(const ScalarField& f, const ExponentField& p) {
    require_same_grid(f.grid, p.grid(), "luxemburg_norm");
    const double m0 = modular(f, p);
    if (m0 == 0.0) return 0.0;

    auto modular_scaled = [&](double lambda) {
        const double w = f.grid.cell_volume();
        double acc = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            acc += std::pow(std::abs(f.values[i]) / lambda, p.value(i)) * w;
        }
        return acc;
    };

    // Bracket: lambda_hi guarantees modular(f/lambda_hi) <= 1.
    double hi = std::pow(std::max(1.0, m0), 1.0 / p.p_minus()) * (1.0 + f.grid.volume());
    double lo = hi;
    while (modular_scaled(lo) <= 1.0) {
        hi = lo;
        lo *= 0.5;
        if (lo < 1e-300) return 0.0;
    }
    // Invariant: modular(f/lo) > 1 >= modular(f/hi).
    for (int it = 0; it < 200 && (hi - lo) > 1e-10 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (modular_scaled(mid) <= 1.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace vexfluid
