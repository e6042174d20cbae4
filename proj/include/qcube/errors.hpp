#pragma once

#include <stdexcept>
#include <string>

namespace qcube {

/// Requested qubit count exceeds what the dense representations can hold.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input has the wrong shape (coefficient vector length, matrix dimension, ...).
struct shape_error : std::invalid_argument {
    explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its mathematical domain.
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A caller violated a stated contract (e.g. non-Hermitian input to the eigensolver).
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

/// An inequality's stated norm precondition does not hold for the given operator.
struct norm_precondition_error : std::runtime_error {
    explicit norm_precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcube
