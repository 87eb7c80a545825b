#pragma once

#include <stdexcept>
#include <string>

namespace cedual {

/// Input data failed a structural validator (Jacobi, representation
/// compatibility, group closure, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A theorem hypothesis does not hold for the supplied data
/// (e.g. untwisted duality on a non-unimodular algebra).
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal identity that must hold by construction failed
/// (d∘d ≠ 0, image not inside kernel, no uniform chain sign, ...).
class BrokenInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cedual
