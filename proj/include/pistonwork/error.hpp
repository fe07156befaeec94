#pragma once

#include <stdexcept>
#include <string>

namespace pistonwork {

// Invalid arguments, violated preconditions, malformed input files.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Quadrature non-convergence, truncation cap exceeded, rank deficiency, ...
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pistonwork
