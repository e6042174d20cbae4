#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qcube/matrix.hpp"
#include "qcube/pauli.hpp"

namespace qcube {

/// Pauli coefficient vector, length 4^n, indexed by PauliCode.
using CoeffVec = std::vector<cplx>;

/// Forward Pauli transform: coefficients tau(sigma_s A) of a 2^n x 2^n matrix.
/// n-stage local 4x4 butterfly, O(n 4^n).
CoeffVec forward_transform(const Matrix& m);

/// Inverse transform: sum_s c_s sigma_s as a dense matrix.
Matrix inverse_transform(int n, const CoeffVec& coeffs);

/// Dense matrix of sigma_s.
Matrix pauli_matrix_dense(const PauliIndex& s);

/// An observable on n qubits carried in dual form: dense matrix and/or Pauli
/// coefficient vector. Values are immutable; the missing representation is
/// materialized on first use and cached, so each is computed at most once.
class QOperator {
public:
    QOperator() = default;

    static QOperator from_matrix(Matrix m);
    static QOperator from_spectrum(int n, CoeffVec coeffs);

    bool valid() const { return impl_ != nullptr; }
    int qubits() const { return impl_->n; }
    std::size_t dim() const { return std::size_t{1} << impl_->n; }
    std::size_t spectrum_size() const { return std::size_t{1} << (2 * impl_->n); }

    /// True when the stored data was Hermitian within 1e-12 at construction.
    bool is_hermitian() const { return impl_->hermitian; }

    // The references point into shared state; binding them to a temporary
    // operator would dangle, so rvalue access is disabled.
    const Matrix& matrix() const&;
    const CoeffVec& spectrum() const&;
    const Matrix& matrix() const&& = delete;
    const CoeffVec& spectrum() const&& = delete;
    cplx coefficient(PauliCode code) const& { return spectrum()[code]; }

private:
    struct Impl {
        int n = 0;
        bool hermitian = false;
        mutable std::mutex mutex;
        mutable std::optional<Matrix> matrix;
        mutable std::optional<CoeffVec> spectrum;
    };
    std::shared_ptr<Impl> impl_;
};

/// sigma_s as an operator; Hermitian and squares to the identity.
QOperator pauli_matrix(const PauliIndex& s);

/// tau(A) = 2^-n tr(A); equals the coefficient at the all-zero index.
cplx normalized_trace(const QOperator& a);

QOperator identity_operator(int n);

}  // namespace qcube
