#include "qcube/operator.hpp"

#include <cmath>

#include "qcube/errors.hpp"

namespace qcube {

namespace {

constexpr double kHermitianTol = 1e-12;

int qubit_count_from_dim(std::size_t dim) {
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim) throw shape_error("matrix dimension is not a power of two");
    return n;
}

int qubit_count_from_spectrum(std::size_t len) {
    int n = 0;
    while ((std::size_t{1} << (2 * n)) < len) ++n;
    if ((std::size_t{1} << (2 * n)) != len)
        throw shape_error("coefficient vector length is not a power of four");
    return n;
}

/// Position of coefficient `code` in the butterfly work array: the work array
/// is matrix-layout (row bits above column bits), and after stage j the bit
/// pair (2n-j, n-j) holds the two bits of s_j.
std::size_t butterfly_position(PauliCode code, int n) {
    std::size_t hi = 0;
    std::size_t lo = 0;
    for (int b = 0; b < n; ++b) {
        hi |= (std::size_t{(code >> (2 * b + 1)) & 1u}) << b;
        lo |= (std::size_t{(code >> (2 * b)) & 1u}) << b;
    }
    return (hi << n) | lo;
}

/// In-place stages over disjoint bit pairs. Forward maps the four matrix
/// entries of one site to the four sigma coefficients; the 1/2 is the
/// normalized single-site trace.
void forward_stages(std::vector<cplx>& work, int n) {
    for (int j = 1; j <= n; ++j) {
        const std::size_t hi = std::size_t{1} << (2 * n - j);
        const std::size_t lo = std::size_t{1} << (n - j);
        const std::size_t size = work.size();
        for (std::size_t i = 0; i < size; ++i) {
            if (i & (hi | lo)) continue;
            const cplx a00 = work[i];
            const cplx a01 = work[i | lo];
            const cplx a10 = work[i | hi];
            const cplx a11 = work[i | hi | lo];
            work[i] = 0.5 * (a00 + a11);
            work[i | lo] = 0.5 * (a01 + a10);
            work[i | hi] = 0.5 * cplx(0.0, 1.0) * (a01 - a10);
            work[i | hi | lo] = 0.5 * (a00 - a11);
        }
    }
}

void inverse_stages(std::vector<cplx>& work, int n) {
    for (int j = 1; j <= n; ++j) {
        const std::size_t hi = std::size_t{1} << (2 * n - j);
        const std::size_t lo = std::size_t{1} << (n - j);
        const std::size_t size = work.size();
        for (std::size_t i = 0; i < size; ++i) {
            if (i & (hi | lo)) continue;
            const cplx c0 = work[i];
            const cplx c1 = work[i | lo];
            const cplx c2 = work[i | hi];
            const cplx c3 = work[i | hi | lo];
            work[i] = c0 + c3;
            work[i | lo] = c1 - cplx(0.0, 1.0) * c2;
            work[i | hi] = c1 + cplx(0.0, 1.0) * c2;
            work[i | hi | lo] = c0 - c3;
        }
    }
}

}  // namespace

CoeffVec forward_transform(const Matrix& m) {
    const int n = qubit_count_from_dim(m.dim());
    check_qubit_count(n);
    std::vector<cplx> work = m.data();
    forward_stages(work, n);
    CoeffVec coeffs(work.size());
    for (PauliCode code = 0; code < coeffs.size(); ++code)
        coeffs[code] = work[butterfly_position(code, n)];
    return coeffs;
}

Matrix inverse_transform(int n, const CoeffVec& coeffs) {
    check_qubit_count(n);
    if (coeffs.size() != (std::size_t{1} << (2 * n)))
        throw shape_error("coefficient vector length does not match qubit count");
    std::vector<cplx> work(coeffs.size());
    for (PauliCode code = 0; code < coeffs.size(); ++code)
        work[butterfly_position(code, n)] = coeffs[code];
    inverse_stages(work, n);
    Matrix m(std::size_t{1} << n);
    m.data() = std::move(work);
    return m;
}

Matrix pauli_matrix_dense(const PauliIndex& s) {
    const int n = s.qubits();
    const std::size_t dim = std::size_t{1} << n;
    Matrix m(dim);
    // One nonzero per row: sigma_1/sigma_2 flip the site bit, sigma_0/sigma_3 keep it.
    for (std::size_t r = 0; r < dim; ++r) {
        std::size_t c = 0;
        cplx value = 1.0;
        for (int j = 1; j <= n; ++j) {
            const int k = s.digit(j);
            const int rbit = static_cast<int>((r >> (n - j)) & 1u);
            const int cbit = (k == 1 || k == 2) ? 1 - rbit : rbit;
            value *= pauli_entry(k, rbit, cbit);
            c |= static_cast<std::size_t>(cbit) << (n - j);
        }
        m(r, c) = value;
    }
    return m;
}

QOperator QOperator::from_matrix(Matrix m) {
    const int n = qubit_count_from_dim(m.dim());
    check_qubit_count(n);
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->hermitian = m.is_hermitian(kHermitianTol);
    impl->matrix = std::move(m);
    QOperator op;
    op.impl_ = std::move(impl);
    return op;
}

QOperator QOperator::from_spectrum(int n, CoeffVec coeffs) {
    check_qubit_count(n);
    if (qubit_count_from_spectrum(coeffs.size()) != n)
        throw shape_error("coefficient vector length does not match qubit count");
    bool hermitian = true;
    for (const cplx& c : coeffs) {
        if (std::abs(c.imag()) > kHermitianTol) {
            hermitian = false;
            break;
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->hermitian = hermitian;
    impl->spectrum = std::move(coeffs);
    QOperator op;
    op.impl_ = std::move(impl);
    return op;
}

const Matrix& QOperator::matrix() const& {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    if (!impl_->matrix) impl_->matrix = inverse_transform(impl_->n, *impl_->spectrum);
    return *impl_->matrix;
}

const CoeffVec& QOperator::spectrum() const& {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    if (!impl_->spectrum) impl_->spectrum = forward_transform(*impl_->matrix);
    return *impl_->spectrum;
}

QOperator pauli_matrix(const PauliIndex& s) {
    CoeffVec coeffs(std::size_t{1} << (2 * s.qubits()));
    coeffs[s.code()] = 1.0;
    return QOperator::from_spectrum(s.qubits(), std::move(coeffs));
}

cplx normalized_trace(const QOperator& a) { return a.spectrum()[0]; }

QOperator identity_operator(int n) {
    check_qubit_count(n);
    CoeffVec coeffs(std::size_t{1} << (2 * n));
    coeffs[0] = 1.0;
    return QOperator::from_spectrum(n, std::move(coeffs));
}

}  // namespace qcube
