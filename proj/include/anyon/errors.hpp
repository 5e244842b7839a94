#pragma once

#include <stdexcept>
#include <string>

namespace anyon {

// Bad caller input: k < 1, vertex outside V_k, malformed shapes. Maps to CLI exit 2.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoRootFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularAtOrigin : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline void require_level(int k) {
    if (k < 1) throw InvalidArgument("level k must be >= 1, got " + std::to_string(k));
}

inline void require_steps(int n) {
    if (n < 0) throw InvalidArgument("step count n must be >= 0, got " + std::to_string(n));
}

}  // namespace anyon
