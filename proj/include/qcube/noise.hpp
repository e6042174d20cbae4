#pragma once

#include <vector>

#include "qcube/operator.hpp"

namespace qcube {

/// T_delta: scales each coefficient by delta^{|supp s|}. T_1 = id,
/// T_0(A) = hat A_0 * 1. Contractive in every Schatten norm.
QOperator noise_operator(const QOperator& a, double delta);

/// P_t = T_{e^-t}; semigroup law P_s o P_t = P_{s+t}; commutes with d_j.
QOperator semigroup(const QOperator& a, double t);

/// S_delta[A] = sum_{s != 0} delta^{|supp s|} |hat A_s|^2.
double noise_stability(const QOperator& a, double delta);

/// The same through tau(A^* T_delta(A)) - |hat A_0|^2 on the matrix path.
double noise_stability_matrix_path(const QOperator& a, double delta);

/// Soft chunk B_d = (T_{1-1/(3d)} - T_{1-1/(2d)}) A for dyadic d = 2^l.
QOperator soft_chunk(const QOperator& a, long d);

/// Coefficient damping factor of the chunk at Fourier degree `degree`.
double soft_chunk_factor(long d, int degree);

/// Dyadic degrees 1, 2, 4, ... up to 2n (weights vanish identically beyond).
std::vector<long> dyadic_degrees(int n);

/// All soft chunks of one operator, keyed by dyadic degree. Each chunk's
/// coefficient equals (soft_chunk_factor(d, |supp s|)) * hat A_s, and on the
/// band d <= |supp s| < 2d the damping stays within [1/20, 1].
struct ChunkFamily {
    QOperator base;
    std::vector<std::pair<long, QOperator>> chunks;  // ascending dyadic d
};

ChunkFamily make_chunk_family(const QOperator& a);

struct GoodDegreeSet {
    std::vector<long> degrees;
    bool degenerate = false;   // Var or Inf^1 vanished; degrees left empty
    double threshold = 0.0;    // membership threshold actually used
};

/// D_good: dyadic d with W_approx_d[A] >= Var[A]^2 / (16 Inf^1[A]).
/// Checker fact: Var[A] <= 4 sum_{d in D_good} W_approx_d[A].
GoodDegreeSet good_degrees_D(const QOperator& a);

/// G_good: dyadic d with d W_approx_d[A] >= Inf[B_d] / 20.
/// Checker fact: Var[A] <= 2 sum_{d in G_good} W_approx_d[A].
GoodDegreeSet good_degrees_G(const QOperator& a);

struct IntegralIdentity {
    double lhs = 0.0;  // W_{>= k}[A]
    double rhs = 0.0;  // 2k sum_{|J|=k} sum_gamma of the exact Beta-weighted series
};

/// Evaluates both sides of the identity
///   W_{>=k}[A] = 2k sum_{|J|=k} sum_gamma int_0^inf (e^2t - 1)^{k-1} e^-2kt
///                ||P_t partial_J^gamma(A)||_2^2 dt,
/// the integral taken in closed form: each Fourier degree m contributes the
/// Beta weight (1/2k) C(m, k)^-1. Combinatorial in n; requires n <= 6.
IntegralIdentity weight_integral_identity(const QOperator& a, int k);

}  // namespace qcube
