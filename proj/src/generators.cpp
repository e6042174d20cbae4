#include "qcube/generators.hpp"

#include <bit>
#include <cmath>

#include "qcube/eigen.hpp"
#include "qcube/errors.hpp"
#include "qcube/fkn.hpp"
#include "qcube/influence.hpp"

namespace qcube {

namespace {

int table_qubits(std::size_t len) {
    int n = 0;
    while ((std::size_t{1} << n) < len) ++n;
    if ((std::size_t{1} << n) != len || n == 0)
        throw shape_error("truth table length must be 2^n with n >= 1");
    return n;
}

/// Seeded GUE-style Hermitian: i.i.d. standard complex Gaussians drawn
/// row-major (real part first), then Hermitian symmetrization (G + G^*)/2.
Matrix random_hermitian(int n, std::uint64_t seed) {
    const std::size_t dim = std::size_t{1} << n;
    Xoshiro256 rng(seed);
    Matrix g(dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            g(r, c) = cplx(re, im) * inv_sqrt2;
        }
    }
    return (g + g.adjoint()) * cplx(0.5, 0.0);
}

/// Row-index bit mask of a site subset (site j lives at bit n - j).
std::size_t row_bits(SiteMask sites, int n) {
    std::size_t bits = 0;
    for (int j = 1; j <= n; ++j)
        if (sites & (SiteMask{1} << (j - 1))) bits |= std::size_t{1} << (n - j);
    return bits;
}

}  // namespace

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::dictator: return "dictator";
        case FamilyKind::pauli_string: return "pauli-string";
        case FamilyKind::embedded_classical: return "embedded-classical";
        case FamilyKind::random_hermitian_unitary: return "random-hermitian-unitary";
        case FamilyKind::random_low_degree: return "random-low-degree";
        case FamilyKind::random_projector_boolean: return "random-projector-boolean";
    }
    throw shape_error("unknown family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "dictator") return FamilyKind::dictator;
    if (name == "pauli-string") return FamilyKind::pauli_string;
    if (name == "embedded-classical") return FamilyKind::embedded_classical;
    if (name == "random-hermitian-unitary") return FamilyKind::random_hermitian_unitary;
    if (name == "random-low-degree") return FamilyKind::random_low_degree;
    if (name == "random-projector-boolean") return FamilyKind::random_projector_boolean;
    throw shape_error("unknown family kind '" + name + "'");
}

QOperator generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::dictator: {
            check_qubit_count(spec.n);
            CoeffVec coeffs(std::size_t{1} << (2 * spec.n));
            coeffs[single_site_code(1, 3, spec.n)] = 1.0;
            return QOperator::from_spectrum(spec.n, std::move(coeffs));
        }
        case FamilyKind::pauli_string: {
            if (static_cast<int>(spec.pauli_word.size()) != spec.n)
                throw shape_error("pauli word length must equal n");
            return pauli_matrix(PauliIndex(spec.pauli_word));
        }
        case FamilyKind::embedded_classical: {
            if (table_qubits(spec.truth_table.size()) != spec.n)
                throw shape_error("truth table length must be 2^n");
            return classical_embed(spec.truth_table);
        }
        case FamilyKind::random_hermitian_unitary: {
            check_qubit_count(spec.n);
            return sign_round(QOperator::from_matrix(random_hermitian(spec.n, spec.seed)));
        }
        case FamilyKind::random_low_degree: {
            check_qubit_count(spec.n);
            if (spec.degree_cap < 1 || spec.degree_cap > spec.n)
                throw shape_error("degree cap must lie in [1, n]");
            Xoshiro256 rng(spec.seed);
            CoeffVec coeffs(std::size_t{1} << (2 * spec.n));
            double mass = 0.0;
            for (PauliCode code = 0; code < coeffs.size(); ++code) {
                if (code_degree(code) > spec.degree_cap) continue;
                const double value = rng.gaussian();
                coeffs[code] = value;
                mass += value * value;
            }
            const double scale = 1.0 / std::sqrt(mass);
            for (cplx& c : coeffs) c *= scale;
            return QOperator::from_spectrum(spec.n, std::move(coeffs));
        }
        case FamilyKind::random_projector_boolean: {
            check_qubit_count(spec.n);
            const std::size_t dim = std::size_t{1} << spec.n;
            EigenDecomposition eig = hermitian_eigen(random_hermitian(spec.n, spec.seed));
            Xoshiro256 rng(derive_seed(spec.seed, 0x72616e6b));  // rank draw stream
            const std::size_t rank = 1 + rng.below(dim - 1);
            Matrix proj(dim);
            for (std::size_t k = 0; k < rank; ++k)
                for (std::size_t r = 0; r < dim; ++r)
                    for (std::size_t c = 0; c < dim; ++c)
                        proj(r, c) += eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
            const Matrix boolean = proj * cplx(2.0, 0.0) - Matrix::identity(dim);
            return QOperator::from_matrix(boolean);
        }
    }
    throw shape_error("unknown family kind");
}

QOperator generate_member(const FamilySpec& spec, int index) {
    FamilySpec member = spec;
    switch (spec.kind) {
        case FamilyKind::dictator:
            member.n = spec.n + index;
            break;
        case FamilyKind::random_hermitian_unitary:
        case FamilyKind::random_low_degree:
        case FamilyKind::random_projector_boolean:
            member.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(index));
            break;
        default:
            break;  // fixed operators repeat
    }
    return generate(member);
}

QOperator classical_embed(const std::vector<int>& truth_table) {
    const int n = table_qubits(truth_table.size());
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    Matrix m(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        const int f = truth_table[x];
        if (f != 1 && f != -1) throw domain_error("truth table entries must be +1 or -1");
        m(x, x) = static_cast<double>(f);
    }
    return QOperator::from_matrix(std::move(m));
}

double classical_influence(const std::vector<int>& truth_table, int j) {
    const int n = table_qubits(truth_table.size());
    if (j < 1 || j > n) throw shape_error("input index outside [1, n]");
    const std::size_t dim = truth_table.size();
    const std::size_t flip = std::size_t{1} << (n - j);
    std::size_t disagreements = 0;
    for (std::size_t x = 0; x < dim; ++x)
        if (truth_table[x] != truth_table[x ^ flip]) ++disagreements;
    return static_cast<double>(disagreements) / static_cast<double>(dim);
}

double walsh_coefficient(const std::vector<int>& truth_table, SiteMask subset) {
    const int n = table_qubits(truth_table.size());
    const std::size_t bits = row_bits(subset, n);
    double sum = 0.0;
    for (std::size_t x = 0; x < truth_table.size(); ++x) {
        const int sign = (std::popcount(x & bits) & 1) ? -1 : 1;
        sum += static_cast<double>(sign * truth_table[x]);
    }
    return sum / static_cast<double>(truth_table.size());
}

SubsetSample random_subset(int n, double delta, Xoshiro256& rng) {
    check_qubit_count(n);
    if (!(delta >= 0.0 && delta <= 1.0)) throw domain_error("delta outside [0, 1]");
    SubsetSample sample;
    sample.n = n;
    sample.delta = delta;
    for (int j = 1; j <= n; ++j)
        if (rng.uniform() < delta) sample.members |= SiteMask{1} << (j - 1);
    return sample;
}

SubsetSample random_subset(int n, double delta, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    return random_subset(n, delta, rng);
}

double single_intersection_probability(int n, double delta, const PauliIndex& v) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw domain_error("delta outside [0, 1]");
    (void)n;
    const int m = v.degree();
    if (m == 0) return 0.0;
    return static_cast<double>(m) * delta * std::pow(1.0 - delta, m - 1);
}

double single_intersection_probability_exact(int n, double delta, const PauliIndex& v) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw domain_error("delta outside [0, 1]");
    const SiteMask support = v.support();
    double total = 0.0;
    const SiteMask all = full_mask(n);
    for (SiteMask j_set = 0;; ++j_set) {
        if (std::popcount(j_set & support) == 1) {
            const int size = std::popcount(j_set);
            total += std::pow(delta, size) * std::pow(1.0 - delta, n - size);
        }
        if (j_set == all) break;
    }
    return total;
}

double expected_single_intersection_weight(const QOperator& a, double delta) {
    const CoeffVec& spec = a.spectrum();
    double total = 0.0;
    for (PauliCode code = 0; code < spec.size(); ++code) {
        const double mass = std::norm(spec[code]);
        if (mass == 0.0) continue;
        const int m = code_degree(code);
        if (m == 0) continue;
        total += mass * static_cast<double>(m) * delta * std::pow(1.0 - delta, m - 1);
    }
    return total;
}

double expected_single_intersection_weight_exact(const QOperator& a, double delta) {
    const int n = a.qubits();
    const SiteMask all = full_mask(n);
    double total = 0.0;
    for (SiteMask j_set = 0;; ++j_set) {
        const int size = std::popcount(j_set);
        const double prob = std::pow(delta, size) * std::pow(1.0 - delta, n - size);
        if (prob > 0.0) total += prob * single_intersection_weight(a, j_set);
        if (j_set == all) break;
    }
    return total;
}

}  // namespace qcube
