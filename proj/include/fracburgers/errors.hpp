#pragma once

#include <stdexcept>
#include <string>

namespace fracburgers {

/// Invalid user-facing configuration: bad parameter ranges, incompatible
/// initial data, malformed run options.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated API precondition (caller bug rather than user input).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Exactly singular pivot met during a banded factorization.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Time-marching failure. Carries the failing step index so a study can
/// report which row broke.
class SolveError : public std::runtime_error {
public:
    enum class Kind { FixedPointDivergence, NumericalBlowup, LinearSolveFailure };

    SolveError(Kind kind, int step, double last_increment, const std::string& what)
        : std::runtime_error(what), kind_(kind), step_(step), last_increment_(last_increment) {}

    Kind kind() const { return kind_; }
    int step() const { return step_; }
    double last_increment() const { return last_increment_; }

private:
    Kind kind_;
    int step_;
    double last_increment_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracburgers
