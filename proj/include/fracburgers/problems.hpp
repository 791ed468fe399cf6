#pragma once

#include <string>
#include <vector>

#include "fracburgers/stepper.hpp"

namespace fracburgers {

struct NamedProblem {
    std::string key;
    std::function<ProblemSpec(double alpha, double mu1, double mu2, double lambda)> build;
};

/// Manufactured solution u = (t^(2+alpha) + 1) sin(pi x) on the unit domain.
ProblemSpec example1(double alpha, double mu1, double mu2, double lambda);

/// Manufactured solution u = t^(3/2) sin(2 pi x); u_tt blows up like
/// t^(-1/2) at the origin, so the run exercises the scheme under a weak
/// initial-time singularity. alpha is pinned to 1/2.
ProblemSpec example2(double mu1, double mu2, double lambda);

/// Polynomial initial hump x^2 (x-L)^2 (x^2 - L x + L^2), zero source, no
/// closed-form solution; studied through self-convergence metrics.
ProblemSpec example3(double alpha, double mu1, double mu2, double lambda);

const std::vector<NamedProblem>& problem_registry();

/// Looks up `key` in the registry and builds the problem. Throws ConfigError
/// for unknown keys or parameter values the problem does not admit.
ProblemSpec build_problem(const std::string& key, double alpha, double mu1, double mu2,
                          double lambda);

}  // namespace fracburgers
