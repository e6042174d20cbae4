#pragma once

#include <functional>
#include <vector>

#include "qcube/matrix.hpp"
#include "qcube/operator.hpp"

namespace qcube {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    Matrix eigenvectors;              // unitary, columns are eigenvectors
    double off_diagonal_residual = 0.0;
    int sweeps = 0;
};

/// Cyclic Jacobi for Hermitian matrices. Terminates when the off-diagonal
/// Frobenius mass drops below 1e-12 * ||A||_F or after 100 sweeps, in which
/// case the residual is reported in the result.
EigenDecomposition hermitian_eigen(const Matrix& h);

/// Same, for an operator with the Hermitian flag set (contract_error otherwise).
EigenDecomposition hermitian_eigen(const QOperator& a);

/// V f(Lambda) V^* for a Hermitian operator's decomposition.
Matrix spectral_function(const EigenDecomposition& eig, const std::function<double(double)>& fn);

/// Singular values of A: |eigenvalues| when Hermitian, else sqrt of the
/// eigenvalues of A^*A (clamped at zero).
std::vector<double> singular_values(const QOperator& a);

/// Normalized Schatten norm (2^-n sum |lambda_i|^p)^(1/p); p = infinity gives
/// the usual operator norm. Requires p >= 1.
double schatten_norm(const QOperator& a, double p);

double operator_norm(const QOperator& a);

}  // namespace qcube
