#include "qcube/noise.hpp"

#include <bit>
#include <cmath>

#include "qcube/errors.hpp"
#include "qcube/influence.hpp"

namespace qcube {

namespace {

void check_delta(double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw domain_error("noise parameter delta outside [0, 1]");
}

bool is_power_of_two(long d) { return d >= 1 && (d & (d - 1)) == 0; }

double binomial(int m, int k) {
    if (k < 0 || k > m) return 0.0;
    double value = 1.0;
    for (int i = 1; i <= k; ++i) value = value * static_cast<double>(m - k + i) / static_cast<double>(i);
    return value;
}

/// Rescales every coefficient by factor(|supp s|).
QOperator scale_by_degree(const QOperator& a, const std::vector<double>& factor) {
    CoeffVec coeffs = a.spectrum();
    for (PauliCode code = 0; code < coeffs.size(); ++code)
        coeffs[code] *= factor[code_degree(code)];
    return QOperator::from_spectrum(a.qubits(), std::move(coeffs));
}

}  // namespace

QOperator noise_operator(const QOperator& a, double delta) {
    check_delta(delta);
    std::vector<double> factor(a.qubits() + 1);
    for (int d = 0; d <= a.qubits(); ++d) factor[d] = std::pow(delta, d);
    return scale_by_degree(a, factor);
}

QOperator semigroup(const QOperator& a, double t) {
    if (!(t >= 0.0)) throw domain_error("semigroup time must be nonnegative");
    return noise_operator(a, std::exp(-t));
}

double noise_stability(const QOperator& a, double delta) {
    check_delta(delta);
    const CoeffVec& spec = a.spectrum();
    const int n = a.qubits();
    std::vector<double> factor(n + 1);
    for (int d = 0; d <= n; ++d) factor[d] = std::pow(delta, d);
    double sum = 0.0;
    for (PauliCode code = 1; code < spec.size(); ++code)
        sum += factor[code_degree(code)] * std::norm(spec[code]);
    return sum;
}

double noise_stability_matrix_path(const QOperator& a, double delta) {
    check_delta(delta);
    const Matrix& m = a.matrix();
    const QOperator damped = noise_operator(a, delta);
    const Matrix& noisy = damped.matrix();
    cplx inner = 0.0;
    for (std::size_t i = 0; i < m.data().size(); ++i)
        inner += std::conj(m.data()[i]) * noisy.data()[i];
    inner /= static_cast<double>(m.dim());
    return inner.real() - std::norm(a.spectrum()[0]);
}

double soft_chunk_factor(long d, int degree) {
    const double dd = static_cast<double>(d);
    return std::pow(1.0 - 1.0 / (3.0 * dd), degree) - std::pow(1.0 - 1.0 / (2.0 * dd), degree);
}

QOperator soft_chunk(const QOperator& a, long d) {
    if (!is_power_of_two(d)) throw domain_error("soft chunk degree must be a power of two");
    std::vector<double> factor(a.qubits() + 1);
    for (int deg = 0; deg <= a.qubits(); ++deg) factor[deg] = soft_chunk_factor(d, deg);
    return scale_by_degree(a, factor);
}

std::vector<long> dyadic_degrees(int n) {
    std::vector<long> degrees;
    for (long d = 1; d <= 2L * n; d *= 2) degrees.push_back(d);
    return degrees;
}

ChunkFamily make_chunk_family(const QOperator& a) {
    ChunkFamily family;
    family.base = a;
    for (long d : dyadic_degrees(a.qubits())) family.chunks.emplace_back(d, soft_chunk(a, d));
    return family;
}

GoodDegreeSet good_degrees_D(const QOperator& a) {
    GoodDegreeSet out;
    const double var = variance(a);
    const double inf1 = influence_profile(a, 1.0).total;
    if (var < 1e-300 || inf1 < 1e-300) {
        out.degenerate = true;
        return out;
    }
    out.threshold = var * var / (16.0 * inf1);
    const WeightSpectrum weights = fourier_weights(a);
    for (long d : dyadic_degrees(a.qubits()))
        if (weights.w_approx(static_cast<int>(d)) >= out.threshold) out.degrees.push_back(d);
    return out;
}

GoodDegreeSet good_degrees_G(const QOperator& a) {
    GoodDegreeSet out;
    const double var = variance(a);
    if (var < 1e-300) {
        out.degenerate = true;
        return out;
    }
    out.threshold = 1.0 / 20.0;
    const WeightSpectrum weights = fourier_weights(a);
    for (long d : dyadic_degrees(a.qubits())) {
        const double chunk_influence = total_l2_influence(soft_chunk(a, d));
        if (static_cast<double>(d) * weights.w_approx(static_cast<int>(d)) >=
            out.threshold * chunk_influence)
            out.degrees.push_back(d);
    }
    return out;
}

IntegralIdentity weight_integral_identity(const QOperator& a, int k) {
    const int n = a.qubits();
    if (k < 1 || k > n) throw domain_error("weight integral identity needs 1 <= k <= n");
    if (n > 6) throw capacity_error("weight integral identity is combinatorial; needs n <= 6");

    IntegralIdentity out;
    out.lhs = fourier_weights(a).w_geq(k);

    // 2k sum_{|J|=k} sum_gamma sum over the block's coefficients, each Fourier
    // degree m contributing its exact integral weight (1/2k) C(m, k)^{-1}.
    double sum = 0.0;
    const SiteMask all = full_mask(n);
    for (SiteMask j_set = 1; j_set <= all; ++j_set) {
        if (std::popcount(j_set) != k) continue;
        if (k == n) {
            // J = [n]: the blocks are scalars; fold the gamma sum directly.
            const CoeffVec& spec = a.spectrum();
            const double weight = 1.0 / (2.0 * k) / binomial(n, k);
            for (PauliCode code = 0; code < spec.size(); ++code)
                if (code_degree(code) == n) sum += weight * std::norm(spec[code]);
            continue;
        }
        std::vector<int> gamma(k, 1);
        while (true) {
            const QOperator block = directional_block(a, j_set, gamma);
            const CoeffVec& spec = block.spectrum();
            for (PauliCode code = 0; code < spec.size(); ++code) {
                const double mass = std::norm(spec[code]);
                if (mass == 0.0) continue;
                const int degree = code_degree(code) + k;
                sum += mass / (2.0 * k * binomial(degree, k));
            }
            int pos = k - 1;
            while (pos >= 0 && gamma[pos] == 3) {
                gamma[pos] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++gamma[pos];
        }
    }
    out.rhs = 2.0 * k * sum;
    return out;
}

}  // namespace qcube
