#include "vexfluid/spectral_ops.hpp"

#include <algorithm>
#include <cmath>

#include "vexfluid/errors.hpp"
#include "vexfluid/fft.hpp"

namespace vexfluid {

namespace {

using Complex = std::complex<double>;

constexpr Complex kImag(0.0, 1.0);

}  // namespace

double RadialSpectrum::total_energy_estimate() const {
    double acc = 0.0;
    for (std::size_t j = 0; j < shell_values.size(); ++j) {
        const double dr = bin_edges[j + 1] - bin_edges[j];
        acc += shell_values[j] * bin_centers[j] * bin_centers[j] * dr;
    }
    return acc;
}

SpectralField transform_forward(const VectorField& phys) {
    SpectralField out(phys.grid, phys.ncomp);
    for (int c = 0; c < phys.ncomp; ++c) {
        out.comp(c) = fft::forward_real(phys.grid, phys.comp(c));
    }
    return out;
}

VectorField transform_inverse(const SpectralField& u) {
    VectorField out(u.grid(), u.ncomp());
    for (int c = 0; c < u.ncomp(); ++c) {
        out.comp(c) = fft::inverse_to_real(u.grid(), u.comp(c));
    }
    return out;
}

double l2_norm_sq(const SpectralField& u) {
    double acc = 0.0;
    for (int c = 0; c < u.ncomp(); ++c) {
        for (const auto& v : u.comp(c)) acc += std::norm(v);
    }
    return acc * u.grid().volume();
}

double l2_norm(const SpectralField& u) { return std::sqrt(l2_norm_sq(u)); }

double seminorm_sq(const SpectralField& u, int m) {
    const Grid& g = u.grid();
    double acc = 0.0;
    for (int i0 = 0; i0 < g.dims[0]; ++i0) {
        const double k0 = g.wavenumber(0, i0);
        for (int i1 = 0; i1 < g.dims[1]; ++i1) {
            const double k1 = g.wavenumber(1, i1);
            for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                const double k2 = g.wavenumber(2, i2);
                const double k_sq = k0 * k0 + k1 * k1 + k2 * k2;
                const double w = std::pow(k_sq, m);
                const std::size_t idx = g.index(i0, i1, i2);
                for (int c = 0; c < u.ncomp(); ++c) {
                    acc += w * std::norm(u.comp(c)[idx]);
                }
            }
        }
    }
    return acc * g.volume();
}

double hermitian_asymmetry(const SpectralField& u) {
    const Grid& g = u.grid();
    double max_abs = 0.0;
    double max_gap = 0.0;
    for (int c = 0; c < u.ncomp(); ++c) {
        const auto& a = u.comp(c);
        for (int i0 = 0; i0 < g.dims[0]; ++i0) {
            const int j0 = (g.dims[0] - i0) % g.dims[0];
            for (int i1 = 0; i1 < g.dims[1]; ++i1) {
                const int j1 = (g.dims[1] - i1) % g.dims[1];
                for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                    const int j2 = (g.dims[2] - i2) % g.dims[2];
                    const Complex v = a[g.index(i0, i1, i2)];
                    const Complex w = a[g.index(j0, j1, j2)];
                    max_abs = std::max(max_abs, std::abs(v));
                    max_gap = std::max(max_gap, std::abs(w - std::conj(v)));
                }
            }
        }
    }
    return max_abs > 0.0 ? max_gap / max_abs : 0.0;
}

double max_relative_divergence(const SpectralField& u) {
    if (u.ncomp() != 3) throw DomainError("divergence check needs a 3-component field");
    const Grid& g = u.grid();
    double worst = 0.0;
    for (int i0 = 0; i0 < g.dims[0]; ++i0) {
        const double k0 = g.wavenumber(0, i0);
        for (int i1 = 0; i1 < g.dims[1]; ++i1) {
            const double k1 = g.wavenumber(1, i1);
            for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                const double k2 = g.wavenumber(2, i2);
                const double k_mag = std::sqrt(k0 * k0 + k1 * k1 + k2 * k2);
                if (k_mag == 0.0) continue;
                const std::size_t idx = g.index(i0, i1, i2);
                const Complex d =
                    k0 * u.comp(0)[idx] + k1 * u.comp(1)[idx] + k2 * u.comp(2)[idx];
                const double mag =
                    std::sqrt(std::norm(u.comp(0)[idx]) + std::norm(u.comp(1)[idx]) +
                              std::norm(u.comp(2)[idx]));
                if (mag > 1e-300) {
                    worst = std::max(worst, std::abs(d) / (k_mag * mag));
                }
            }
        }
    }
    return worst;
}

SpectralField leray_project(SpectralField v) {
    if (v.ncomp() != 3) throw DomainError("leray_project needs a 3-component field");
    const Grid& g = v.grid();
    for (int i0 = 0; i0 < g.dims[0]; ++i0) {
        const double k0 = g.wavenumber(0, i0);
        for (int i1 = 0; i1 < g.dims[1]; ++i1) {
            const double k1 = g.wavenumber(1, i1);
            for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                const double k2 = g.wavenumber(2, i2);
                const double k_sq = k0 * k0 + k1 * k1 + k2 * k2;
                if (k_sq == 0.0) continue;  // zero mode passes through
                const std::size_t idx = g.index(i0, i1, i2);
                const Complex d =
                    (k0 * v.comp(0)[idx] + k1 * v.comp(1)[idx] + k2 * v.comp(2)[idx]) / k_sq;
                v.comp(0)[idx] -= k0 * d;
                v.comp(1)[idx] -= k1 * d;
                v.comp(2)[idx] -= k2 * d;
            }
        }
    }
    return v;
}

bool dealias_keeps(const Grid& grid, int i0, int i1, int i2) {
    return std::abs(grid.frequency(0, i0)) <= grid.dealias_limit(0) &&
           std::abs(grid.frequency(1, i1)) <= grid.dealias_limit(1) &&
           std::abs(grid.frequency(2, i2)) <= grid.dealias_limit(2);
}

void apply_dealias_mask(SpectralField& u) {
    const Grid& g = u.grid();
    for (int i0 = 0; i0 < g.dims[0]; ++i0) {
        for (int i1 = 0; i1 < g.dims[1]; ++i1) {
            for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                if (dealias_keeps(g, i0, i1, i2)) continue;
                const std::size_t idx = g.index(i0, i1, i2);
                for (int c = 0; c < u.ncomp(); ++c) u.comp(c)[idx] = Complex(0.0, 0.0);
            }
        }
    }
}

void pin_zero_mode(SpectralField& u) {
    for (int c = 0; c < u.ncomp(); ++c) u.comp(c)[0] = Complex(0.0, 0.0);
}

SymTensorField sym_gradient(const SpectralField& u) {
    if (u.ncomp() != 3) throw DomainError("sym_gradient needs a 3-component field");
    const Grid& g = u.grid();
    SymTensorField d(g, 3);

    // Component order (00, 11, 22, 01, 02, 12).
    const int pair_i[6] = {0, 1, 2, 0, 0, 1};
    const int pair_j[6] = {0, 1, 2, 1, 2, 2};
    std::vector<Complex> work(g.size());
    for (int c = 0; c < 6; ++c) {
        const int a = pair_i[c];
        const int b = pair_j[c];
        for (int i0 = 0; i0 < g.dims[0]; ++i0) {
            for (int i1 = 0; i1 < g.dims[1]; ++i1) {
                for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                    const std::size_t idx = g.index(i0, i1, i2);
                    const double ka = g.wavenumber(a, a == 0 ? i0 : (a == 1 ? i1 : i2));
                    const double kb = g.wavenumber(b, b == 0 ? i0 : (b == 1 ? i1 : i2));
                    work[idx] =
                        0.5 * kImag * (ka * u.comp(b)[idx] + kb * u.comp(a)[idx]);
                }
            }
        }
        d.comp(c) = fft::inverse_to_real(g, work);
    }
    return d;
}

SpectralField pad_spectrum(const SpectralField& u, const Grid& fine) {
    const Grid& g = u.grid();
    for (int a = 0; a < 3; ++a) {
        if (fine.dims[a] < g.dims[a] || fine.box[a] != g.box[a]) {
            throw GridMismatchError("pad_spectrum: target grid must refine the source");
        }
    }
    SpectralField out(fine, u.ncomp());
    for (int i0 = 0; i0 < g.dims[0]; ++i0) {
        const int n0 = g.frequency(0, i0);
        const int f0 = n0 >= 0 ? n0 : n0 + fine.dims[0];
        for (int i1 = 0; i1 < g.dims[1]; ++i1) {
            const int n1 = g.frequency(1, i1);
            const int f1 = n1 >= 0 ? n1 : n1 + fine.dims[1];
            for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                const int n2 = g.frequency(2, i2);
                const int f2 = n2 >= 0 ? n2 : n2 + fine.dims[2];
                const std::size_t src = g.index(i0, i1, i2);
                const std::size_t dst = fine.index(f0, f1, f2);
                for (int c = 0; c < u.ncomp(); ++c) out.comp(c)[dst] = u.comp(c)[src];
            }
        }
    }
    return out;
}

SpectralField truncate_spectrum(const SpectralField& u, const Grid& coarse) {
    const Grid& g = u.grid();
    for (int a = 0; a < 3; ++a) {
        if (coarse.dims[a] > g.dims[a] || coarse.box[a] != g.box[a]) {
            throw GridMismatchError("truncate_spectrum: target grid must coarsen the source");
        }
    }
    SpectralField out(coarse, u.ncomp());
    for (int i0 = 0; i0 < coarse.dims[0]; ++i0) {
        const int n0 = coarse.frequency(0, i0);
        const int f0 = n0 >= 0 ? n0 : n0 + g.dims[0];
        for (int i1 = 0; i1 < coarse.dims[1]; ++i1) {
            const int n1 = coarse.frequency(1, i1);
            const int f1 = n1 >= 0 ? n1 : n1 + g.dims[1];
            for (int i2 = 0; i2 < coarse.dims[2]; ++i2) {
                const int n2 = coarse.frequency(2, i2);
                const int f2 = n2 >= 0 ? n2 : n2 + g.dims[2];
                const std::size_t dst = coarse.index(i0, i1, i2);
                const std::size_t src = g.index(f0, f1, f2);
                for (int c = 0; c < u.ncomp(); ++c) out.comp(c)[dst] = u.comp(c)[src];
            }
        }
    }
    return out;
}

RadialSpectrum shell_spectrum(const SpectralField& u, int n_bins) {
    if (n_bins < 4) throw DomainError("shell_spectrum needs at least 4 bins");
    const Grid& g = u.grid();

    double k_max = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double k = 2.0 * 3.14159265358979323846 * (g.dims[a] / 2) / g.box[a];
        k_max = std::max(k_max, k);
    }
    k_max *= std::sqrt(3.0);

    RadialSpectrum spec;
    spec.bin_edges.resize(static_cast<std::size_t>(n_bins) + 1);
    const double dr = k_max / n_bins;
    for (int j = 0; j <= n_bins; ++j) spec.bin_edges[static_cast<std::size_t>(j)] = j * dr;
    spec.bin_centers.resize(static_cast<std::size_t>(n_bins));
    for (int j = 0; j < n_bins; ++j) {
        spec.bin_centers[static_cast<std::size_t>(j)] = (j + 0.5) * dr;
    }
    spec.shell_values.assign(static_cast<std::size_t>(n_bins), 0.0);
    spec.bin_counts.assign(static_cast<std::size_t>(n_bins), 0);

    const double volume = g.volume();
    const double mode_cell = std::pow(2.0 * 3.14159265358979323846, 3) / volume;

    std::vector<double> energy(static_cast<std::size_t>(n_bins), 0.0);
    for (int i0 = 0; i0 < g.dims[0]; ++i0) {
        const double k0 = g.wavenumber(0, i0);
        for (int i1 = 0; i1 < g.dims[1]; ++i1) {
            const double k1 = g.wavenumber(1, i1);
            for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                const double k2 = g.wavenumber(2, i2);
                const double k_mag = std::sqrt(k0 * k0 + k1 * k1 + k2 * k2);
                if (k_mag == 0.0) continue;
                int bin = static_cast<int>(k_mag / dr);
                bin = std::min(bin, n_bins - 1);
                const std::size_t idx = g.index(i0, i1, i2);
                double e = 0.0;
                for (int c = 0; c < u.ncomp(); ++c) e += std::norm(u.comp(c)[idx]);
                energy[static_cast<std::size_t>(bin)] += e * volume;
                ++spec.bin_counts[static_cast<std::size_t>(bin)];
            }
        }
    }
    // Surface-integral estimate: 4 pi times the mean spectral energy
    // density over the shell, with the actual mode count normalizing the
    // discrete shell population.
    for (int j = 0; j < n_bins; ++j) {
        const auto je = static_cast<std::size_t>(j);
        if (spec.bin_counts[je] == 0) continue;
        const double mean_density =
            energy[je] / (static_cast<double>(spec.bin_counts[je]) * mode_cell);
        spec.shell_values[je] = 4.0 * 3.14159265358979323846 * mean_density;
    }
    return spec;
}

KornPlancherelResult korn_plancherel_check(const SpectralField& u) {
    KornPlancherelResult res;
    const double coeff_norm_sq = l2_norm_sq(u);
    if (coeff_norm_sq == 0.0) return res;  // undefined for the zero field
    res.defined = true;

    const Grid& g = u.grid();
    const double w = g.cell_volume();

    // Physical-space quadrature of |grad u|^2: nine spectral derivatives.
    double grad_sq = 0.0;
    std::vector<Complex> work(g.size());
    for (int c = 0; c < 3; ++c) {
        for (int a = 0; a < 3; ++a) {
            for (int i0 = 0; i0 < g.dims[0]; ++i0) {
                for (int i1 = 0; i1 < g.dims[1]; ++i1) {
                    for (int i2 = 0; i2 < g.dims[2]; ++i2) {
                        const std::size_t idx = g.index(i0, i1, i2);
                        const double ka = g.wavenumber(a, a == 0 ? i0 : (a == 1 ? i1 : i2));
                        work[idx] = kImag * ka * u.comp(c)[idx];
                    }
                }
            }
            const std::vector<double> dphys = fft::inverse_to_real(g, work);
            for (const double v : dphys) grad_sq += v * v * w;
        }
    }

    const SymTensorField d = sym_gradient(u);
    double sym_sq = 0.0;
    for (std::size_t node = 0; node < g.size(); ++node) {
        for (int c = 0; c < 6; ++c) {
            const double v = d.comp(c)[node];
            sym_sq += (c >= 3 ? 2.0 : 1.0) * v * v * w;
        }
    }
    res.ratio = sym_sq > 0.0 ? grad_sq / sym_sq : 0.0;

    const VectorField phys = transform_inverse(u);
    double phys_sq = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (const double v : phys.comp(c)) phys_sq += v * v * w;
    }
    res.parseval_gap = std::abs(phys_sq - coeff_norm_sq) / coeff_norm_sq;
    return res;
}

}  // namespace vexfluid
