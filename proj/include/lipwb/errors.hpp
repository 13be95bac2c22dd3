#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lipwb {

// Malformed input shape (non-square matrix, disconnected tree, ...).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (p == q, x outside [a,b], ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside the admissible range, unknown model names, or a
// truncation that breaks a metric axiom.
struct ModelDefinitionError : std::runtime_error {
    ModelDefinitionError(const std::string& msg, std::vector<std::size_t> w = {})
        : std::runtime_error(msg), witness(std::move(w)) {}
    std::vector<std::size_t> witness;
};

// A limit clause needs a closed form the model does not declare.
struct LimitsUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lipwb
