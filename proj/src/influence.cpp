#include "qcube/influence.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "qcube/eigen.hpp"
#include "qcube/errors.hpp"

namespace qcube {

namespace {

void check_site(int j, int n) {
    if (j < 1 || j > n) throw shape_error("site " + std::to_string(j) + " outside [1, n]");
}

void check_subset(SiteMask j_set, int n) {
    if (j_set & ~full_mask(n)) throw shape_error("subset extends beyond [n]");
}

/// Full-system code whose digits on `sites` (ascending originals) are the
/// digits of `reduced` and zero elsewhere.
PauliCode embed_code(PauliCode reduced, const std::vector<int>& sites, int n) {
    PauliCode full = 0;
    const int m = static_cast<int>(sites.size());
    for (int i = 1; i <= m; ++i) {
        const int digit = code_digit(reduced, i, m);
        if (digit != 0) full = code_with_digit(full, sites[i - 1], n, digit);
    }
    return full;
}

double mean_power(const std::vector<double>& values, double p) {
    double sum = 0.0;
    for (double v : values) sum += std::pow(v, p);
    return sum / static_cast<double>(values.size());
}

/// tau(|A|^p); p = infinity degrades to the operator norm.
double schatten_power(const QOperator& a, double p) {
    if (std::isnan(p) || p < 1.0) throw domain_error("influence requires p >= 1");
    const std::vector<double> sv = singular_values(a);
    if (std::isinf(p)) return sv.empty() ? 0.0 : sv.front();
    return mean_power(sv, p);
}

}  // namespace

QOperator derivative(const QOperator& a, int j) {
    check_site(j, a.qubits());
    const int n = a.qubits();
    CoeffVec coeffs = a.spectrum();
    for (PauliCode code = 0; code < coeffs.size(); ++code)
        if (code_digit(code, j, n) == 0) coeffs[code] = 0.0;
    return QOperator::from_spectrum(n, std::move(coeffs));
}

QOperator derivative_set(const QOperator& a, SiteMask j_set) {
    const int n = a.qubits();
    check_subset(j_set, n);
    CoeffVec coeffs = a.spectrum();
    for (PauliCode code = 0; code < coeffs.size(); ++code)
        if ((code_support(code, n) & j_set) != j_set) coeffs[code] = 0.0;
    return QOperator::from_spectrum(n, std::move(coeffs));
}

QOperator conditional_expectation(const QOperator& a, SiteMask j_set) {
    const int n = a.qubits();
    check_subset(j_set, n);
    CoeffVec coeffs = a.spectrum();
    for (PauliCode code = 0; code < coeffs.size(); ++code)
        if (code_support(code, n) & j_set) coeffs[code] = 0.0;
    return QOperator::from_spectrum(n, std::move(coeffs));
}

ReducedOperator partial_trace(const QOperator& a, SiteMask j_set) {
    const int n = a.qubits();
    check_subset(j_set, n);
    const std::vector<int> kept = sites_from_mask(full_mask(n) & ~j_set, n);
    const int m = static_cast<int>(kept.size());
    if (m == 0) throw shape_error("partial trace over all sites leaves no qubits");
    const CoeffVec& spec = a.spectrum();
    CoeffVec coeffs(std::size_t{1} << (2 * m));
    for (PauliCode reduced = 0; reduced < coeffs.size(); ++reduced)
        coeffs[reduced] = spec[embed_code(reduced, kept, n)];
    ReducedOperator out;
    out.op = QOperator::from_spectrum(m, std::move(coeffs));
    out.original_sites = kept;
    return out;
}

Matrix partial_trace_matrix(const Matrix& m, SiteMask j_set, int n) {
    const std::vector<int> kept = sites_from_mask(full_mask(n) & ~j_set, n);
    const std::vector<int> traced = sites_from_mask(j_set, n);
    const int mk = static_cast<int>(kept.size());
    const int mt = static_cast<int>(traced.size());
    const std::size_t out_dim = std::size_t{1} << mk;
    const std::size_t env_dim = std::size_t{1} << mt;

    auto expand = [&](std::size_t kept_bits, std::size_t env_bits) {
        std::size_t full = 0;
        for (int i = 0; i < mk; ++i)
            full |= ((kept_bits >> (mk - 1 - i)) & 1u) << (n - kept[i]);
        for (int i = 0; i < mt; ++i)
            full |= ((env_bits >> (mt - 1 - i)) & 1u) << (n - traced[i]);
        return full;
    };

    Matrix out(out_dim);
    const double scale = 1.0 / static_cast<double>(env_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        for (std::size_t c = 0; c < out_dim; ++c) {
            cplx sum = 0.0;
            for (std::size_t b = 0; b < env_dim; ++b) sum += m(expand(r, b), expand(c, b));
            out(r, c) = sum * scale;
        }
    }
    return out;
}

QOperator embed_with_identity(const QOperator& reduced, SiteMask j_set, int n) {
    check_subset(j_set, n);
    const std::vector<int> kept = sites_from_mask(full_mask(n) & ~j_set, n);
    if (static_cast<int>(kept.size()) != reduced.qubits())
        throw shape_error("reduced operator size does not match the complement of J");
    const CoeffVec& spec = reduced.spectrum();
    CoeffVec coeffs(std::size_t{1} << (2 * n));
    for (PauliCode code = 0; code < spec.size(); ++code)
        coeffs[embed_code(code, kept, n)] = spec[code];
    return QOperator::from_spectrum(n, std::move(coeffs));
}

double influence(const QOperator& a, int j, double p) {
    check_site(j, a.qubits());
    if (p == 2.0) return l2_influence(a, j);
    return schatten_power(derivative(a, j), p);
}

double set_influence(const QOperator& a, SiteMask j_set, double p) {
    const int n = a.qubits();
    check_subset(j_set, n);
    if (j_set == 0) throw shape_error("set influence requires a nonempty subset");
    if (p == 2.0) {
        const CoeffVec& spec = a.spectrum();
        double sum = 0.0;
        for (PauliCode code = 0; code < spec.size(); ++code)
            if ((code_support(code, n) & j_set) == j_set) sum += std::norm(spec[code]);
        return sum;
    }
    return schatten_power(derivative_set(a, j_set), p);
}

InfluenceProfile influence_profile(const QOperator& a, double p) {
    InfluenceProfile profile;
    profile.p = p;
    profile.per_coordinate.resize(a.qubits());
    for (int j = 1; j <= a.qubits(); ++j) profile.per_coordinate[j - 1] = influence(a, j, p);
    profile.total = 0.0;
    for (double v : profile.per_coordinate) profile.total += v;
    profile.variance = variance(a);
    return profile;
}

double variance(const QOperator& a) {
    const CoeffVec& spec = a.spectrum();
    double sum = 0.0;
    for (PauliCode code = 1; code < spec.size(); ++code) sum += std::norm(spec[code]);
    return sum;
}

double total_l2_influence(const QOperator& a) {
    const CoeffVec& spec = a.spectrum();
    double sum = 0.0;
    for (PauliCode code = 0; code < spec.size(); ++code)
        sum += static_cast<double>(code_degree(code)) * std::norm(spec[code]);
    return sum;
}

double l2_influence(const QOperator& a, int j) {
    check_site(j, a.qubits());
    const CoeffVec& spec = a.spectrum();
    double sum = 0.0;
    for (PauliCode code = 0; code < spec.size(); ++code)
        if (code_digit(code, j, a.qubits()) != 0) sum += std::norm(spec[code]);
    return sum;
}

double WeightSpectrum::w_at(int d) const {
    if (d < 0 || d >= static_cast<int>(by_degree.size())) return 0.0;
    return by_degree[d];
}

double WeightSpectrum::w_geq(int d) const {
    double sum = 0.0;
    for (int e = std::max(d, 0); e < static_cast<int>(by_degree.size()); ++e) sum += by_degree[e];
    return sum;
}

double WeightSpectrum::w_approx(int d) const {
    double sum = 0.0;
    for (int e = d; e < 2 * d; ++e) sum += w_at(e);
    return sum;
}

double WeightSpectrum::total() const {
    double sum = 0.0;
    for (double v : by_degree) sum += v;
    return sum;
}

WeightSpectrum fourier_weights(const QOperator& a) {
    WeightSpectrum weights;
    weights.by_degree.assign(a.qubits() + 1, 0.0);
    const CoeffVec& spec = a.spectrum();
    for (PauliCode code = 0; code < spec.size(); ++code)
        weights.by_degree[code_degree(code)] += std::norm(spec[code]);
    return weights;
}

double entropy(const QOperator& rho) {
    if (!rho.is_hermitian()) throw contract_error("entropy requires a Hermitian operator");
    EigenDecomposition eig = hermitian_eigen(rho.matrix());
    double trace = 0.0;
    double trace_log = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda < -1e-10)
            throw domain_error("entropy requires a positive operator (eigenvalue " +
                               std::to_string(lambda) + ")");
        if (lambda < 0.0) lambda = 0.0;
        trace += lambda;
        if (lambda > 0.0) trace_log += lambda * std::log(lambda);
    }
    const double dim = static_cast<double>(eig.eigenvalues.size());
    trace /= dim;
    trace_log /= dim;
    return trace_log - (trace > 0.0 ? trace * std::log(trace) : 0.0);
}

QOperator restriction_coefficient(const QOperator& a, SiteMask j_set, int j, int k) {
    const int n = a.qubits();
    check_subset(j_set, n);
    check_site(j, n);
    if (!(j_set & (SiteMask{1} << (j - 1)))) throw shape_error("site j must belong to J");
    if (k < 1 || k > 3) throw shape_error("Pauli symbol k must be 1, 2 or 3");
    const std::vector<int> kept = sites_from_mask(full_mask(n) & ~j_set, n);
    const int m = static_cast<int>(kept.size());
    if (m == 0) throw shape_error("restriction coefficient needs a nonempty complement of J");
    const CoeffVec& spec = a.spectrum();
    CoeffVec coeffs(std::size_t{1} << (2 * m));
    for (PauliCode reduced = 0; reduced < coeffs.size(); ++reduced) {
        const PauliCode full = code_with_digit(embed_code(reduced, kept, n), j, n, k);
        coeffs[reduced] = spec[full];
    }
    return QOperator::from_spectrum(m, std::move(coeffs));
}

QOperator restriction_coefficient_from_trace(const QOperator& a, SiteMask j_set, int j, int k) {
    const int n = a.qubits();
    const Matrix product = a.matrix() * pauli_matrix_dense(PauliIndex(n, single_site_code(j, k, n)));
    return QOperator::from_matrix(partial_trace_matrix(product, j_set, n));
}

QOperator restriction_coefficient_from_derivative(const QOperator& a, SiteMask j_set, int j, int k) {
    const int n = a.qubits();
    const QOperator d = derivative(a, j);
    const Matrix product = d.matrix() * pauli_matrix_dense(PauliIndex(n, single_site_code(j, k, n)));
    return QOperator::from_matrix(partial_trace_matrix(product, j_set, n));
}

QOperator directional_block(const QOperator& a, SiteMask j_set, const std::vector<int>& gamma) {
    const int n = a.qubits();
    check_subset(j_set, n);
    const std::vector<int> j_sites = sites_from_mask(j_set, n);
    if (gamma.size() != j_sites.size())
        throw shape_error("gamma length does not match the size of J");
    PauliCode base = 0;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] < 1 || gamma[i] > 3) throw shape_error("gamma symbols must be 1, 2 or 3");
        base = code_with_digit(base, j_sites[i], n, gamma[i]);
    }
    const std::vector<int> kept = sites_from_mask(full_mask(n) & ~j_set, n);
    const int m = static_cast<int>(kept.size());
    if (m == 0) throw shape_error("directional block needs a nonempty complement of J");
    const CoeffVec& spec = a.spectrum();
    CoeffVec coeffs(std::size_t{1} << (2 * m));
    for (PauliCode reduced = 0; reduced < coeffs.size(); ++reduced)
        coeffs[reduced] = spec[base | embed_code(reduced, kept, n)];
    return QOperator::from_spectrum(m, std::move(coeffs));
}

QOperator directional_block_from_trace(const QOperator& a, SiteMask j_set,
                                       const std::vector<int>& gamma) {
    const int n = a.qubits();
    const std::vector<int> j_sites = sites_from_mask(j_set, n);
    if (gamma.size() != j_sites.size())
        throw shape_error("gamma length does not match the size of J");
    PauliCode base = 0;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        base = code_with_digit(base, j_sites[i], n, gamma[i]);
    const QOperator d = derivative_set(a, j_set);
    const Matrix product = d.matrix() * pauli_matrix_dense(PauliIndex(n, base));
    return QOperator::from_matrix(partial_trace_matrix(product, j_set, n));
}

double single_intersection_weight(const QOperator& a, SiteMask j_set) {
    const int n = a.qubits();
    check_subset(j_set, n);
    const CoeffVec& spec = a.spectrum();
    double sum = 0.0;
    for (PauliCode code = 0; code < spec.size(); ++code)
        if (std::popcount(code_support(code, n) & j_set) == 1) sum += std::norm(spec[code]);
    return sum;
}

}  // namespace qcube
