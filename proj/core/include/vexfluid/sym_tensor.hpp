#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "vexfluid/errors.hpp"
#include "vexfluid/grid.hpp"

namespace vexfluid {

/// Symmetric d x d tensor, d in {2, 3}, stored as the upper triangle in
/// the order (00, 11, 22, 01, 02, 12); the 2d case uses (00, 11, 01).
class SymTensor {
  public:
    explicit SymTensor(int dim = 3) : dim_(dim), a_{} {
        if (dim != 2 && dim != 3) throw DomainError("SymTensor dimension must be 2 or 3");
    }

    int dim() const { return dim_; }
    int ncomp() const { return dim_ == 3 ? 6 : 3; }

    double& comp(int c) { return a_[static_cast<std::size_t>(c)]; }
    double comp(int c) const { return a_[static_cast<std::size_t>(c)]; }

    double operator()(int i, int j) const { return a_[tri_index(i, j)]; }
    void set(int i, int j, double v) { a_[tri_index(i, j)] = v; }

    /// Frobenius square |T|^2 = sum_ij T_ij^2 (off-diagonals counted twice).
    double frobenius_sq() const;
    double trace() const;

    SymTensor& operator+=(const SymTensor& o);
    SymTensor& operator-=(const SymTensor& o);
    SymTensor& operator*=(double s);

    friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
    friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
    friend SymTensor operator*(double s, SymTensor a) { return a *= s; }

    /// Frobenius inner product A:B = sum_ij A_ij B_ij.
    static double dot(const SymTensor& a, const SymTensor& b);

  private:
    std::size_t tri_index(int i, int j) const;

    int dim_;
    std::array<double, 6> a_;
};

/// Symmetric tensor field over a periodic grid, stored component-major in
/// physical space. Component order matches SymTensor.
class SymTensorField {
  public:
    SymTensorField() = default;
    SymTensorField(Grid grid, int dim);

    const Grid& grid() const { return grid_; }
    int dim() const { return dim_; }
    int ncomp() const { return dim_ == 3 ? 6 : 3; }

    std::vector<double>& comp(int c) { return data_[static_cast<std::size_t>(c)]; }
    const std::vector<double>& comp(int c) const { return data_[static_cast<std::size_t>(c)]; }

    SymTensor at(std::size_t node) const;
    void set(std::size_t node, const SymTensor& t);

  private:
    Grid grid_;
    int dim_ = 3;
    std::vector<std::vector<double>> data_;
};

}  // namespace vexfluid
