#pragma once

#include <stdexcept>
#include <string>

namespace hyperclust {

// Rejected input: failed precondition, bad dimensions, malformed file.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Iterative method ran out of iterations before reaching its tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double residual, long iterations)
        : std::runtime_error(what), residual(residual), iterations(iterations) {}

    double residual;
    long iterations;
};

}  // namespace hyperclust
