#include "qcube/matrix.hpp"

#include <cmath>

#include "qcube/errors.hpp"

namespace qcube {

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (rhs.dim_ != dim_) throw shape_error("matrix product dimension mismatch");
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const cplx a = (*this)(r, k);
            if (a == cplx{}) continue;
            const cplx* row = &rhs.data_[k * dim_];
            cplx* dst = &out.data_[r * dim_];
            for (std::size_t c = 0; c < dim_; ++c) dst[c] += a * row[c];
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rhs.dim_ != dim_) throw shape_error("matrix sum dimension mismatch");
    Matrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rhs.dim_ != dim_) throw shape_error("matrix difference dimension mismatch");
    Matrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

Matrix Matrix::operator*(cplx scale) const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scale;
    return out;
}

cplx Matrix::trace() const {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
    return sum;
}

double Matrix::frobenius_norm() const {
    double sum = 0.0;
    for (const cplx& v : data_) sum += std::norm(v);
    return std::sqrt(sum);
}

double Matrix::max_abs() const {
    double best = 0.0;
    for (const cplx& v : data_) best = std::max(best, std::abs(v));
    return best;
}

double Matrix::max_abs_diff(const Matrix& other) const {
    if (other.dim_ != dim_) throw shape_error("matrix comparison dimension mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        best = std::max(best, std::abs(data_[i] - other.data_[i]));
    return best;
}

bool Matrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
        }
    }
    return true;
}

}  // namespace qcube
