#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcube/operator.hpp"
#include "qcube/prng.hpp"

namespace qcube {

enum class FamilyKind {
    dictator,
    pauli_string,
    embedded_classical,
    random_hermitian_unitary,
    random_low_degree,
    random_projector_boolean,
};

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

/// Seeded, reproducible description of a generated operator family.
struct FamilySpec {
    FamilyKind kind = FamilyKind::dictator;
    int n = 1;
    std::uint64_t seed = 0;
    std::vector<int> truth_table;  // embedded-classical
    std::vector<int> pauli_word;   // pauli-string
    int degree_cap = 1;            // random-low-degree
};

QOperator generate(const FamilySpec& spec);

/// Member i of the family. Random kinds draw from derive_seed(seed, i);
/// the dictator kind widens to n + i qubits; the other deterministic kinds
/// repeat the same operator.
QOperator generate_member(const FamilySpec& spec, int index);

/// Diagonal embedding sum_x f(x) |x><x| of a +-1 truth table. Row-index bit
/// of site j is the j-th input (most significant bit = site 1), 0 -> +1.
QOperator classical_embed(const std::vector<int>& truth_table);

/// Inf_j[f] = Pr_x[f(x) != f(x with bit j flipped)] for +-1-valued f.
double classical_influence(const std::vector<int>& truth_table, int j);

/// Classical Walsh coefficient hat f(S).
double walsh_coefficient(const std::vector<int>& truth_table, SiteMask subset);

struct SubsetSample {
    int n = 0;
    double delta = 0.0;
    SiteMask members = 0;
};

/// i.i.d. Bernoulli(delta) site membership; sites are drawn in order 1..n.
SubsetSample random_subset(int n, double delta, Xoshiro256& rng);
SubsetSample random_subset(int n, double delta, std::uint64_t seed);

/// Pr[|J meet supp v| = 1] = |supp v| delta (1-delta)^{|supp v|-1} for a
/// delta-random subset J.
double single_intersection_probability(int n, double delta, const PauliIndex& v);

/// The same probability by exhaustive enumeration over all subsets of [n].
double single_intersection_probability_exact(int n, double delta, const PauliIndex& v);

/// E_J[ W_J(A) ] = sum_v |hat A_v|^2 Pr[|supp v meet J| = 1], closed form.
double expected_single_intersection_weight(const QOperator& a, double delta);

/// The same expectation by exhaustive enumeration over all 2^n subsets.
double expected_single_intersection_weight_exact(const QOperator& a, double delta);

}  // namespace qcube
