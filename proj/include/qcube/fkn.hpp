#pragma once

#include "qcube/operator.hpp"

namespace qcube {

/// A - hat A_0 1 = level_one + higher, split at Fourier degree 1.
struct FknDecomposition {
    QOperator level_one;  // degree-1 part (the paper's ell)
    QOperator higher;     // degree > 1 part (the paper's h)
    double epsilon = 0.0; // ||higher||_2^2
    cplx mean;            // hat A_0, removed before splitting
};

FknDecomposition fkn_decompose(const QOperator& a);

/// Spectral sign of a Hermitian operator with sgn(0) = -1; eigenvalues within
/// 1e-12 of zero round to -1. The result is a Hermitian unitary.
QOperator sign_round(const QOperator& a);

struct FknResult {
    double epsilon = 0.0;          // ||h||_2^2
    int chosen_j = 1;              // argmax of level-1 mass, ties to smallest
    double level1_mass_at_j = 0.0; // sum_k hat A_{k(j)}^2
    QOperator b_j;                 // level-1 truncation at j (Hermitian, not unitary)
    QOperator c_j;                 // sign_round(b_j): 1-junta quantum Boolean
    double distance_sq = 0.0;      // ||A - C_j||_2^2
    // Measured, never asserted: the paper's absolute constants are
    // unquantified, and its B_j = E_{j^c}(A) identity assumes tr(A) = 0.
    double conditional_gap_sq = 0.0;  // ||E_{j^c}(A) - B_j||_2^2
};

/// FKN rounding of a quantum Boolean function (Hermitian, ||A^2 - 1|| <= 1e-9).
FknResult fkn_round(const QOperator& a);

}  // namespace qcube
