#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracburgers/stepper.hpp"

namespace fracburgers {

struct ReportRow {
    long refine_param;
    double error;
    std::optional<double> order;
};

/// One refinement study: (parameter, error, observed order) rows plus the
/// configuration they were produced under. Orders relate consecutive rows
/// whose parameter doubles; errors below the degeneracy floor report no
/// order at all.
struct ConvergenceReport {
    std::string problem_key;
    double alpha = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double lambda = 0.0;
    std::string fixed_name;
    long fixed_value = 0;
    std::string metric;
    std::vector<ReportRow> rows;
};

struct StudyOptions {
    SolverConfig solver;
    int workers = 1;
};

/// Floor below which a log2 error ratio is noise, not an order.
inline constexpr double degenerate_error_floor = 1e-13;

/// Max over all time levels of the nodewise gap to the exact solution.
/// Prefers the stored trajectory; falls back to the running max accumulated
/// during the march. Requires the problem to carry an exact solution.
double error_sup_over_time(const SolveResult& result, const ProblemSpec& problem);

/// One solve per N in `n_list` (strictly doubling) at fixed M; errors against
/// the exact solution, orders log2(err(2 tau)/err(tau)).
ConvergenceReport temporal_order_study(const std::string& problem_key, const ProblemSpec& problem,
                                       int m_fixed, std::span<const int> n_list,
                                       const StudyOptions& options = {});

/// One solve per M in `m_list` (strictly doubling) at fixed N.
ConvergenceReport spatial_order_study(const std::string& problem_key, const ProblemSpec& problem,
                                      int n_fixed, std::span<const int> m_list,
                                      const StudyOptions& options = {});

/// Self-convergence in time without an exact solution: row N compares the
/// final-time solution at N steps against the one at 2N steps on the same
/// spatial grid.
ConvergenceReport self_convergence_time(const std::string& problem_key, const ProblemSpec& problem,
                                        int m_fixed, std::span<const int> n_list,
                                        const StudyOptions& options = {});

/// Self-convergence in space: row M compares coarse nodes against the
/// coinciding fine-grid nodes (index doubling) at fixed N.
ConvergenceReport self_convergence_space(const std::string& problem_key, const ProblemSpec& problem,
                                         int n_fixed, std::span<const int> m_list,
                                         const StudyOptions& options = {});

/// Runs the problem twice, the second time with the initial value perturbed
/// by epsilon * sin(pi x / L), and returns the final-state sup-norm gap
/// divided by epsilon.
double perturbation_amplification(const ProblemSpec& problem, const GridPtr& grid,
                                  const TimeMesh& tmesh, double epsilon,
                                  const SolverConfig& config = {});

}  // namespace fracburgers
