#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

// Argument outside the region where an evaluator is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A series or quadrature did not reach the requested accuracy.
class Unconverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonAdmissible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Re(s) outside the strip covered by the Euler-Maclaurin remainder.
class StripExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

// Argument at a pole: s = 1, lambda a positive integer, gamma a nonpositive integer.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ZeroConstantTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace mzv
