#include "fracburgers/problems.hpp"

#include <cmath>
#include <numbers>

namespace fracburgers {

namespace {

constexpr double pi = std::numbers::pi_v<double>;

}  // namespace

ProblemSpec example1(double alpha, double mu1, double mu2, double lambda) {
    ProblemSpec p;
    p.mu1 = mu1;
    p.mu2 = mu2;
    p.lambda = lambda;
    p.alpha = alpha;
    p.length = 1.0;
    p.horizon = 1.0;
    p.initial_value = [](double x) { return std::sin(pi * x); };
    p.initial_slope = [](double) { return 0.0; };
    const double gamma3a = std::tgamma(3.0 + alpha);
    p.source = [=](double x, double t) {
        const double growth = std::pow(t, 2.0 + alpha) + 1.0;
        return gamma3a * t * std::sin(pi * x) * (mu1 + 0.5 * mu2 * t) +
               0.5 * pi * std::sin(2.0 * pi * x) * growth * growth +
               lambda * pi * pi * std::sin(pi * x) * growth;
    };
    p.exact = [=](double x, double t) {
        return (std::pow(t, 2.0 + alpha) + 1.0) * std::sin(pi * x);
    };
    p.validate();
    return p;
}

ProblemSpec example2(double mu1, double mu2, double lambda) {
    ProblemSpec p;
    p.mu1 = mu1;
    p.mu2 = mu2;
    p.lambda = lambda;
    p.alpha = 0.5;
    p.length = 1.0;
    p.horizon = 1.0;
    p.initial_value = [](double) { return 0.0; };
    p.initial_slope = [](double) { return 0.0; };
    const double sqrt_pi = std::sqrt(pi);
    p.source = [=](double x, double t) {
        return 0.75 * sqrt_pi * std::sin(2.0 * pi * x) * (mu1 + mu2 * t) +
               pi * t * t * t * std::sin(4.0 * pi * x) +
               4.0 * lambda * pi * pi * std::pow(t, 1.5) * std::sin(2.0 * pi * x);
    };
    p.exact = [](double x, double t) { return std::pow(t, 1.5) * std::sin(2.0 * pi * x); };
    p.validate();
    return p;
}

ProblemSpec example3(double alpha, double mu1, double mu2, double lambda) {
    ProblemSpec p;
    p.mu1 = mu1;
    p.mu2 = mu2;
    p.lambda = lambda;
    p.alpha = alpha;
    p.length = 1.0;
    p.horizon = 1.0;
    const double length = p.length;
    p.initial_value = [=](double x) {
        const double a = x * x;
        const double b = (x - length) * (x - length);
        return a * b * (x * x - length * x + length * length);
    };
    p.initial_slope = [](double) { return 0.0; };
    p.source = [](double, double) { return 0.0; };
    p.validate();
    return p;
}

const std::vector<NamedProblem>& problem_registry() {
    static const std::vector<NamedProblem> registry = {
        {"example1",
         [](double alpha, double mu1, double mu2, double lambda) {
             return example1(alpha, mu1, mu2, lambda);
         }},
        {"example2",
         [](double alpha, double mu1, double mu2, double lambda) {
             if (alpha != 0.5) {
                 throw ConfigError("example2 fixes alpha = 0.5");
             }
             return example2(mu1, mu2, lambda);
         }},
        {"example3",
         [](double alpha, double mu1, double mu2, double lambda) {
             return example3(alpha, mu1, mu2, lambda);
         }},
    };
    return registry;
}

ProblemSpec build_problem(const std::string& key, double alpha, double mu1, double mu2,
                          double lambda) {
    for (const NamedProblem& p : problem_registry()) {
        if (p.key == key) {
            return p.build(alpha, mu1, mu2, lambda);
        }
    }
    throw ConfigError("unknown problem key '" + key + "'");
}

}  // namespace fracburgers
