#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qcube {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for desk-scale work
/// (dimension at most 2^12); all arithmetic is plain loops with a fixed
/// summation order so results are reproducible.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static Matrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }

    Matrix adjoint() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(cplx scale) const;

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    /// max |this - other| entrywise; matrices must share a dimension.
    double max_abs_diff(const Matrix& other) const;

    bool is_hermitian(double tol) const;

private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

}  // namespace qcube
