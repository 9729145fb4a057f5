#include "vexfluid/sym_tensor.hpp"

namespace vexfluid {

std::size_t SymTensor::tri_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (dim_ == 2) {
        // (00, 11, 01)
        if (i == j) return static_cast<std::size_t>(i);
        return 2;
    }
    // (00, 11, 22, 01, 02, 12)
    if (i == j) return static_cast<std::size_t>(i);
    if (i == 0) return j == 1 ? 3 : 4;
    return 5;
}

double SymTensor::frobenius_sq() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            const double v = (*this)(i, j);
            s += v * v;
        }
    }
    return s;
}

double SymTensor::trace() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
    for (int c = 0; c < ncomp(); ++c) comp(c) += o.comp(c);
    return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
    for (int c = 0; c < ncomp(); ++c) comp(c) -= o.comp(c);
    return *this;
}

SymTensor& SymTensor::operator*=(double s) {
    for (int c = 0; c < ncomp(); ++c) comp(c) *= s;
    return *this;
}

double SymTensor::dot(const SymTensor& a, const SymTensor& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim_; ++i) {
        for (int j = 0; j < a.dim_; ++j) {
            s += a(i, j) * b(i, j);
        }
    }
    return s;
}

SymTensorField::SymTensorField(Grid grid, int dim) : grid_(grid), dim_(dim) {
    if (dim != 2 && dim != 3) throw DomainError("SymTensorField dimension must be 2 or 3");
    data_.assign(static_cast<std::size_t>(ncomp()), std::vector<double>(grid_.size(), 0.0));
}

SymTensor SymTensorField::at(std::size_t node) const {
    SymTensor t(dim_);
    for (int c = 0; c < ncomp(); ++c) t.comp(c) = data_[static_cast<std::size_t>(c)][node];
    return t;
}

void SymTensorField::set(std::size_t node, const SymTensor& t) {
    for (int c = 0; c < ncomp(); ++c) data_[static_cast<std::size_t>(c)][node] = t.comp(c);
}

}  // namespace vexfluid
