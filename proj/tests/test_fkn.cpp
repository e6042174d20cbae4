#include <doctest.h>

#include <cmath>
#include <vector>

#include "qcube/errors.hpp"
#include "qcube/fkn.hpp"
#include "qcube/generators.hpp"
#include "qcube/influence.hpp"
#include "qcube/json_io.hpp"

#include "oracles.hpp"

using namespace qcube;

namespace {

QOperator dictator(int n) {
    CoeffVec coeffs(std::size_t{1} << (2 * n));
    coeffs[single_site_code(1, 3, n)] = 1.0;
    return QOperator::from_spectrum(n, std::move(coeffs));
}

/// Truth table of the first-bit dictator with the first `flips` rows negated.
std::vector<int> corrupted_dictator_table(int n, int flips) {
    std::vector<int> table(std::size_t{1} << n);
    for (std::size_t x = 0; x < table.size(); ++x)
        table[x] = (x >> (n - 1)) & 1 ? -1 : 1;
    for (int x = 0; x < flips; ++x) table[x] = -table[x];
    return table;
}

double l2_sq(const QOperator& a) {
    double sum = 0.0;
    for (const cplx& c : a.spectrum()) sum += std::norm(c);
    return sum;
}

}  // namespace

TEST_CASE("fkn decomposition splits at degree one") {
    const FknDecomposition dict = fkn_decompose(dictator(2));
    CHECK(l2_sq(dict.level_one) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(oracles::op_max_abs(dict.higher) == 0.0);
    CHECK(dict.epsilon == 0.0);

    const FknDecomposition xx = fkn_decompose(pauli_matrix(PauliIndex({1, 1})));
    CHECK(oracles::op_max_abs(xx.level_one) == 0.0);
    CHECK(xx.epsilon == doctest::Approx(1.0).epsilon(1e-12));

    // Parseval bookkeeping on a random operator
    const QOperator a = oracles::random_hermitian_op(3, 61);
    const FknDecomposition parts = fkn_decompose(a);
    CHECK(l2_sq(parts.level_one) + l2_sq(parts.higher) ==
          doctest::Approx(variance(a)).epsilon(1e-10));
}

TEST_CASE("sign_round") {
    // 0.3 sigma_3 rounds to sigma_3
    CoeffVec small(4);
    small[3] = 0.3;
    const QOperator rounded = sign_round(QOperator::from_spectrum(1, std::move(small)));
    CHECK(rounded.matrix().max_abs_diff(oracles::sigma(3)) < 1e-12);

    // sgn(0) = -1: the zero operator rounds to -identity
    const QOperator zero = QOperator::from_spectrum(2, CoeffVec(16));
    const QOperator zero_sign = sign_round(zero);
    CHECK(zero_sign.matrix().max_abs_diff(Matrix::identity(4) * cplx(-1.0, 0.0)) < 1e-12);

    // a Hermitian unitary is its own sign
    const QOperator boolean = classical_embed({1, -1, -1, 1});
    const QOperator boolean_sign = sign_round(boolean);
    CHECK(boolean_sign.matrix().max_abs_diff(boolean.matrix()) < 1e-12);

    CHECK_THROWS_AS(sign_round(QOperator::from_matrix(oracles::random_ginibre(2, 5))),
                    contract_error);
}

TEST_CASE("fkn_round on exact dictators") {
    const FknResult result = fkn_round(dictator(2));
    CHECK(result.chosen_j == 1);
    CHECK(result.epsilon == 0.0);
    CHECK(result.level1_mass_at_j == doctest::Approx(1.0).epsilon(1e-12));
    const QOperator expected = dictator(2);
    CHECK(result.c_j.matrix().max_abs_diff(expected.matrix()) < 1e-10);
    CHECK(result.distance_sq < 1e-20);
}

TEST_CASE("fkn_round on a rotated one-qubit Boolean") {
    // (sigma_1 + sigma_3)/sqrt(2) is Hermitian unitary; epsilon = 0 and the
    // rounding recovers it exactly.
    const double s = 1.0 / std::sqrt(2.0);
    CoeffVec coeffs(4);
    coeffs[1] = s;
    coeffs[3] = s;
    const QOperator a = QOperator::from_spectrum(1, std::move(coeffs));
    const FknResult result = fkn_round(a);
    CHECK(result.epsilon == 0.0);
    CHECK(result.c_j.matrix().max_abs_diff(a.matrix()) < 1e-10);
    CHECK(result.distance_sq < 1e-20);
}

TEST_CASE("fkn_round rejects non-Boolean input") {
    CHECK_THROWS_AS(fkn_round(oracles::random_hermitian_op(2, 7)), contract_error);
    CHECK_THROWS_AS(fkn_round(QOperator::from_matrix(oracles::random_ginibre(2, 8))),
                    contract_error);
}

TEST_CASE("fkn_round on the corrupted dictator, n = 2") {
    // dictator x1 with the first table row negated: hat A_0 = -1/2,
    // hat A_{(3,0)} = 1/2, hat A_{(0,3)} = -1/2, hat A_{(3,3)} = -1/2
    const QOperator a = classical_embed({-1, 1, -1, -1});
    const FknResult result = fkn_round(a);
    CHECK(result.epsilon == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(result.chosen_j == 1);  // level-1 masses tie at 1/4; smallest j wins
    CHECK(result.level1_mass_at_j == doctest::Approx(0.25).epsilon(1e-12));
    const QOperator pure = dictator(2);
    CHECK(result.c_j.matrix().max_abs_diff(pure.matrix()) < 1e-10);
    CHECK(result.distance_sq == doctest::Approx(1.0).epsilon(1e-10));

    // brute force over the classical 1-junta sign functions on 2 bits
    const std::vector<std::vector<int>> juntas = {
        {1, 1, 1, 1},   {-1, -1, -1, -1},   // +-1
        {1, 1, -1, -1}, {-1, -1, 1, 1},     // +-x1
        {1, -1, 1, -1}, {-1, 1, -1, 1},     // +-x2
    };
    double best = 1e99;
    for (const auto& table : juntas) {
        const QOperator junta = classical_embed(table);
        const CoeffVec& ja = a.spectrum();
        const CoeffVec& jb = junta.spectrum();
        double dist = 0.0;
        for (std::size_t i = 0; i < ja.size(); ++i) dist += std::norm(ja[i] - jb[i]);
        best = std::min(best, dist);
    }
    // the site-optimal continuum junta at j has distance 2 - 2 sqrt(mass_j)
    for (int j = 1; j <= 2; ++j) {
        double mass = 0.0;
        for (int k = 1; k <= 3; ++k) mass += std::norm(a.spectrum()[single_site_code(j, k, 2)]);
        best = std::min(best, 2.0 - 2.0 * std::sqrt(mass));
    }
    CHECK(result.distance_sq <= best + 1e-10);
}

TEST_CASE("fkn invariants on generated Boolean families") {
    std::vector<QOperator> inputs;
    for (int rep = 0; rep < 5; ++rep) {
        FamilySpec spec;
        spec.kind = FamilyKind::random_hermitian_unitary;
        spec.n = 3;
        spec.seed = 9100 + rep;
        inputs.push_back(generate(spec));
    }
    inputs.push_back(classical_embed(corrupted_dictator_table(3, 1)));
    inputs.push_back(classical_embed(corrupted_dictator_table(3, 2)));

    for (const QOperator& a : inputs) {
        const FknResult result = fkn_round(a);

        // C_j is a Hermitian unitary supported on the chosen qubit only
        CHECK(result.c_j.is_hermitian());
        const Matrix square = result.c_j.matrix() * result.c_j.matrix();
        CHECK(square.max_abs_diff(Matrix::identity(square.dim())) < 1e-10);
        const CoeffVec& rounded = result.c_j.spectrum();
        for (PauliCode code = 0; code < rounded.size(); ++code) {
            const SiteMask support = code_support(code, a.qubits());
            if (support & ~mask_from_sites({result.chosen_j}, a.qubits()))
                CHECK(std::abs(rounded[code]) < 1e-10);
        }

        // proof chain: ||A-C||^2 <= 2(||A-B||^2 + ||B-C||^2), and the sign
        // step ||B-C||^2 <= ||B^2-1||^2
        const CoeffVec& sa = a.spectrum();
        const CoeffVec& sb = result.b_j.spectrum();
        double a_minus_b = 0.0;
        double b_minus_c = 0.0;
        for (PauliCode code = 0; code < sa.size(); ++code) {
            a_minus_b += std::norm(sa[code] - sb[code]);
            b_minus_c += std::norm(sb[code] - rounded[code]);
        }
        CHECK(result.distance_sq <= 2.0 * (a_minus_b + b_minus_c) + 1e-9);
        CHECK(result.distance_sq >= 0.0);
        CHECK(result.distance_sq <= 2.0 * (l2_sq(a) + 1.0) + 1e-9);
        const Matrix b_mat = result.b_j.matrix();
        const Matrix defect = b_mat * b_mat - Matrix::identity(b_mat.dim());
        double defect_sq = 0.0;
        for (const cplx& v : defect.data()) defect_sq += std::norm(v);
        defect_sq /= static_cast<double>(b_mat.dim());
        CHECK(b_minus_c <= defect_sq + 1e-9);
    }
}

TEST_CASE("level-one square identity on balanced Boolean inputs") {
    // For tr(A) = 0 and A^2 = 1: tau(ell^2) = 1 - epsilon, so ell^2 - (1-e)1
    // has no identity component.
    std::vector<QOperator> inputs;
    inputs.push_back(classical_embed({1, -1, -1, 1}));        // parity
    inputs.push_back(classical_embed({1, 1, -1, -1}));        // dictator
    inputs.push_back(classical_embed({1, -1, 1, -1}));        // other dictator
    inputs.push_back(classical_embed({-1, 1, 1, 1, 1, -1, -1, -1}));  // balanced 3-bit
    for (const QOperator& a : inputs) {
        REQUIRE(std::abs(normalized_trace(a)) < 1e-12);
        const FknDecomposition parts = fkn_decompose(a);
        const Matrix ell = parts.level_one.matrix();
        const QOperator ell_sq = QOperator::from_matrix(ell * ell);
        const cplx identity_coeff = ell_sq.spectrum()[0];
        CHECK(std::abs(identity_coeff - (1.0 - parts.epsilon)) < 1e-10);
    }
}

TEST_CASE("monotonicity along the corrupted dictator family") {
    double prev_eps = -1.0;
    double prev_dist = -1.0;
    for (int flips : {0, 1, 2}) {  // corruption fractions 0, 1/8, 1/4 at n = 3
        const QOperator a = classical_embed(corrupted_dictator_table(3, flips));
        const FknResult result = fkn_round(a);
        CHECK(result.epsilon >= prev_eps - 1e-12);
        CHECK(result.distance_sq >= prev_dist - 1e-12);
        prev_eps = result.epsilon;
        prev_dist = result.distance_sq;
    }
    // frozen values: eps = 0, 1/4, 1/4; distance^2 = 0, 1/2, 1
    CHECK(fkn_round(classical_embed(corrupted_dictator_table(3, 1))).epsilon ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(fkn_round(classical_embed(corrupted_dictator_table(3, 1))).distance_sq ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(fkn_round(classical_embed(corrupted_dictator_table(3, 2))).distance_sq ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fkn result serializes with both operators in pauli form") {
    const FknResult result = fkn_round(classical_embed({-1, 1, -1, -1}));
    const ordered_json doc = fkn_result_to_json(result);
    CHECK(doc["chosen_j"] == 1);
    CHECK(doc["b_j"]["format"] == "pauli");
    CHECK(doc["c_j"]["entries"].contains("30"));
    // measured, not asserted: distance/epsilon ratio and the gap between the
    // level-1 truncation and E_{j^c}(A), which is |hat A_0|^2 = 1/4 here
    CHECK(doc["distance_to_epsilon_ratio"] == 4.0);
    CHECK(result.conditional_gap_sq == doctest::Approx(0.25).epsilon(1e-12));
}
