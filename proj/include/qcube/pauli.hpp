#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qcube/errors.hpp"

namespace qcube {

/// Hard capacity of the dense representations (2^n x 2^n matrix, 4^n spectrum).
inline constexpr int kMaxQubits = 12;

/// Runtime qubit cap: kMaxQubits, lowered (never raised) by QCUBE_MAX_N.
int max_qubits();

void check_qubit_count(int n);

/// Site subsets J of [n] as bit masks; site j (1-based) <-> bit (j-1).
using SiteMask = std::uint32_t;

SiteMask full_mask(int n);
SiteMask mask_from_sites(const std::vector<int>& sites, int n);
std::vector<int> sites_from_mask(SiteMask mask, int n);

/// Packed multi-index s in {0,1,2,3}^n. Two bits per site; site 1 is the most
/// significant base-4 digit, matching the "site 1 leftmost" file convention.
using PauliCode = std::uint32_t;

/// Number of nonzero sites |supp s|.
inline int code_degree(PauliCode code) {
    return std::popcount((code | (code >> 1)) & 0x55555555u);
}

/// Support of s as a SiteMask.
inline SiteMask code_support(PauliCode code, int n) {
    SiteMask mask = 0;
    for (int j = 1; j <= n; ++j) {
        const int digit = static_cast<int>((code >> (2 * (n - j))) & 3u);
        if (digit != 0) mask |= SiteMask{1} << (j - 1);
    }
    return mask;
}

inline int code_digit(PauliCode code, int j, int n) {
    return static_cast<int>((code >> (2 * (n - j))) & 3u);
}

inline PauliCode code_with_digit(PauliCode code, int j, int n, int value) {
    const int shift = 2 * (n - j);
    return (code & ~(PauliCode{3} << shift)) | (PauliCode(value) << shift);
}

/// A length-n word over {0,1,2,3} identifying the basis element sigma_s.
class PauliIndex {
public:
    PauliIndex(int n, PauliCode code);
    explicit PauliIndex(const std::vector<int>& word);
    PauliIndex(std::initializer_list<int> word) : PauliIndex(std::vector<int>(word)) {}
    static PauliIndex from_string(const std::string& word);

    int qubits() const { return n_; }
    PauliCode code() const { return code_; }
    std::vector<int> word() const;
    std::string to_string() const;

    int digit(int j) const { return code_digit(code_, j, n_); }
    SiteMask support() const { return code_support(code_, n_); }
    int degree() const { return code_degree(code_); }

    bool operator==(const PauliIndex& other) const = default;

private:
    int n_;
    PauliCode code_;
};

/// The code of k(j): value k at site j, zero elsewhere.
inline PauliCode single_site_code(int j, int k, int n) {
    return PauliCode(k) << (2 * (n - j));
}

/// Entry (r, c) of the single-qubit Pauli matrix sigma_k, r,c in {0,1}.
std::complex<double> pauli_entry(int k, int r, int c);

}  // namespace qcube
