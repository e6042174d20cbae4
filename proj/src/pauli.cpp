#include "qcube/pauli.hpp"

#include <complex>
#include <cstdlib>

namespace qcube {

int max_qubits() {
    int value = kMaxQubits;
    if (const char* env = std::getenv("QCUBE_MAX_N")) {
        const int requested = std::atoi(env);
        if (requested >= 1 && requested < value) value = requested;
    }
    return value;
}

void check_qubit_count(int n) {
    if (n < 1 || n > max_qubits()) {
        throw capacity_error("qubit count " + std::to_string(n) + " outside [1, " +
                             std::to_string(max_qubits()) + "]");
    }
}

SiteMask full_mask(int n) { return (SiteMask{1} << n) - 1; }

SiteMask mask_from_sites(const std::vector<int>& sites, int n) {
    SiteMask mask = 0;
    for (int j : sites) {
        if (j < 1 || j > n) throw shape_error("site " + std::to_string(j) + " outside [1, n]");
        mask |= SiteMask{1} << (j - 1);
    }
    return mask;
}

std::vector<int> sites_from_mask(SiteMask mask, int n) {
    std::vector<int> sites;
    for (int j = 1; j <= n; ++j) {
        if (mask & (SiteMask{1} << (j - 1))) sites.push_back(j);
    }
    return sites;
}

PauliIndex::PauliIndex(int n, PauliCode code) : n_(n), code_(code) {
    check_qubit_count(n);
    if (n < 32 && (code >> (2 * n)) != 0) throw shape_error("Pauli code wider than n sites");
}

PauliIndex::PauliIndex(const std::vector<int>& word) : n_(static_cast<int>(word.size())), code_(0) {
    check_qubit_count(n_);
    for (int symbol : word) {
        if (symbol < 0 || symbol > 3) throw shape_error("Pauli symbol outside {0,1,2,3}");
        code_ = (code_ << 2) | static_cast<PauliCode>(symbol);
    }
}

PauliIndex PauliIndex::from_string(const std::string& word) {
    std::vector<int> symbols;
    symbols.reserve(word.size());
    for (char c : word) {
        if (c < '0' || c > '3') throw shape_error("Pauli word character outside '0'..'3'");
        symbols.push_back(c - '0');
    }
    return PauliIndex(symbols);
}

std::vector<int> PauliIndex::word() const {
    std::vector<int> symbols(n_);
    for (int j = 1; j <= n_; ++j) symbols[j - 1] = digit(j);
    return symbols;
}

std::string PauliIndex::to_string() const {
    std::string text(n_, '0');
    for (int j = 1; j <= n_; ++j) text[j - 1] = static_cast<char>('0' + digit(j));
    return text;
}

std::complex<double> pauli_entry(int k, int r, int c) {
    switch (k) {
        case 0: return r == c ? 1.0 : 0.0;
        case 1: return r != c ? 1.0 : 0.0;
        case 2:
            if (r == c) return 0.0;
            return r == 0 ? std::complex<double>(0.0, -1.0) : std::complex<double>(0.0, 1.0);
        case 3: return r != c ? 0.0 : (r == 0 ? 1.0 : -1.0);
        default: throw shape_error("Pauli symbol outside {0,1,2,3}");
    }
}

}  // namespace qcube
