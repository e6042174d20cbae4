#include "qcube/fkn.hpp"

#include <cmath>

#include "qcube/eigen.hpp"
#include "qcube/errors.hpp"
#include "qcube/influence.hpp"

namespace qcube {

FknDecomposition fkn_decompose(const QOperator& a) {
    const int n = a.qubits();
    const CoeffVec& spec = a.spectrum();
    CoeffVec level_one(spec.size());
    CoeffVec higher(spec.size());
    double epsilon = 0.0;
    for (PauliCode code = 1; code < spec.size(); ++code) {
        if (code_degree(code) == 1) {
            level_one[code] = spec[code];
        } else {
            higher[code] = spec[code];
            epsilon += std::norm(spec[code]);
        }
    }
    FknDecomposition out;
    out.level_one = QOperator::from_spectrum(n, std::move(level_one));
    out.higher = QOperator::from_spectrum(n, std::move(higher));
    out.epsilon = epsilon;
    out.mean = spec[0];
    return out;
}

QOperator sign_round(const QOperator& a) {
    if (!a.is_hermitian()) throw contract_error("sign_round requires a Hermitian operator");
    const EigenDecomposition eig = hermitian_eigen(a.matrix());
    // sgn(x) = 1 for x > 0, -1 for x <= 0; eigenvalues within 1e-12 of zero
    // count as zero.
    Matrix sign = spectral_function(eig, [](double lambda) { return lambda > 1e-12 ? 1.0 : -1.0; });
    return QOperator::from_matrix(std::move(sign));
}

FknResult fkn_round(const QOperator& a) {
    if (!a.is_hermitian()) throw contract_error("fkn_round requires a quantum Boolean function");
    const EigenDecomposition eig = hermitian_eigen(a.matrix());
    double unitary_defect = 0.0;
    for (double lambda : eig.eigenvalues)
        unitary_defect = std::max(unitary_defect, std::abs(lambda * lambda - 1.0));
    if (unitary_defect > 1e-9)
        throw contract_error("fkn_round requires A^2 = 1 (defect " +
                             std::to_string(unitary_defect) + ")");

    const int n = a.qubits();
    const CoeffVec& spec = a.spectrum();

    FknResult out;
    out.epsilon = fkn_decompose(a).epsilon;

    int best_j = 1;
    double best_mass = -1.0;
    for (int j = 1; j <= n; ++j) {
        double mass = 0.0;
        for (int k = 1; k <= 3; ++k) mass += std::norm(spec[single_site_code(j, k, n)]);
        if (mass > best_mass) {
            best_mass = mass;
            best_j = j;
        }
    }
    out.chosen_j = best_j;
    out.level1_mass_at_j = best_mass;

    CoeffVec level(spec.size());
    for (int k = 1; k <= 3; ++k) {
        const PauliCode code = single_site_code(best_j, k, n);
        level[code] = spec[code];
    }
    out.b_j = QOperator::from_spectrum(n, std::move(level));
    out.c_j = sign_round(out.b_j);

    const CoeffVec& rounded = out.c_j.spectrum();
    double distance = 0.0;
    for (PauliCode code = 0; code < spec.size(); ++code)
        distance += std::norm(spec[code] - rounded[code]);
    out.distance_sq = distance;

    const QOperator conditional =
        conditional_expectation(a, full_mask(n) & ~mask_from_sites({best_j}, n));
    const CoeffVec& cond_spec = conditional.spectrum();
    const CoeffVec& level_spec = out.b_j.spectrum();
    double gap = 0.0;
    for (PauliCode code = 0; code < cond_spec.size(); ++code)
        gap += std::norm(cond_spec[code] - level_spec[code]);
    out.conditional_gap_sq = gap;
    return out;
}

}  // namespace qcube
