#pragma once

#include <vector>

#include "qcube/operator.hpp"

namespace qcube {

/// d_j: zeroes every coefficient with s_j = 0. Idempotent; equals (I - E_j)A.
QOperator derivative(const QOperator& a, int j);

/// d_J: retains coefficients with J subset of supp s; order-independent.
QOperator derivative_set(const QOperator& a, SiteMask j_set);

/// E_J: zeroes coefficients with supp s meeting J. E_I o E_J = E_{I u J}.
QOperator conditional_expectation(const QOperator& a, SiteMask j_set);

/// Operator on the complement qubits together with the map back to the
/// original site labels (ascending original order of J^c).
struct ReducedOperator {
    QOperator op;
    std::vector<int> original_sites;
};

/// Normalized partial trace tau_J; re-embedding with the identity on J
/// reproduces conditional_expectation(a, J).
ReducedOperator partial_trace(const QOperator& a, SiteMask j_set);

/// Matrix-path normalized partial trace (used as the dual route for the
/// coefficient-path operations above).
Matrix partial_trace_matrix(const Matrix& m, SiteMask j_set, int n);

/// Embeds an operator on J^c back into n qubits with identity on J.
QOperator embed_with_identity(const QOperator& reduced, SiteMask j_set, int n);

/// Inf_j^p[A] = tau(|d_j A|^p). p = 2 uses the coefficient path; other p go
/// through the eigenvalues of the derivative.
double influence(const QOperator& a, int j, double p);

/// Inf_J^p[A] = ||d_J(A)||_p^p.
double set_influence(const QOperator& a, SiteMask j_set, double p);

struct InfluenceProfile {
    double p = 2.0;
    std::vector<double> per_coordinate;
    double total = 0.0;
    double variance = 0.0;
};

InfluenceProfile influence_profile(const QOperator& a, double p);

/// Var[A] = sum_{s != 0} |hat A_s|^2.
double variance(const QOperator& a);

/// Total L^2-influence via sum_s |supp s| |hat A_s|^2 (coefficient path).
double total_l2_influence(const QOperator& a);

/// Per-coordinate L^2 influence (coefficient path).
double l2_influence(const QOperator& a, int j);

struct WeightSpectrum {
    std::vector<double> by_degree;  // W_{=d}, d = 0..n

    double w_at(int d) const;
    double w_geq(int d) const;
    /// W_{~d}: degrees in [d, 2d).
    double w_approx(int d) const;
    double total() const;
};

WeightSpectrum fourier_weights(const QOperator& a);

/// Ent[rho] = tau(rho log rho) - tau(rho) log tau(rho), natural log,
/// 0 log 0 = 0. Eigenvalues in [-1e-10, 0) are clamped to zero; anything
/// more negative is a domain error.
double entropy(const QOperator& rho);

/// g_{j,k} = tau_J(A sigma_{k(j)}): the partial Fourier coefficient at k(j),
/// an operator on J^c. Coefficient path.
QOperator restriction_coefficient(const QOperator& a, SiteMask j_set, int j, int k);

/// Same quantity through the matrix path tau_J(A sigma_{k(j)}).
QOperator restriction_coefficient_from_trace(const QOperator& a, SiteMask j_set, int j, int k);

/// The derivative form tau_J(d_j(A) sigma_{k(j)}), also equal to g_{j,k}.
QOperator restriction_coefficient_from_derivative(const QOperator& a, SiteMask j_set, int j, int k);

/// partial_J^gamma(A): selects coefficients with s_J = gamma, as an operator
/// on J^c. gamma is given against the ascending sites of J.
QOperator directional_block(const QOperator& a, SiteMask j_set, const std::vector<int>& gamma);

/// Dual route tau_J(d_J(A) (1_{J^c} ox sigma_{s_J = gamma})).
QOperator directional_block_from_trace(const QOperator& a, SiteMask j_set,
                                       const std::vector<int>& gamma);

/// W_J(A) = sum over v with |supp v meet J| = 1 of |hat A_v|^2.
double single_intersection_weight(const QOperator& a, SiteMask j_set);

}  // namespace qcube
