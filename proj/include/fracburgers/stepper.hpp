#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fracburgers/banded.hpp"
#include "fracburgers/grid.hpp"
#include "fracburgers/l1.hpp"

namespace fracburgers {

/// One instance of the mixed-type fractional Burgers problem
///
///   mu1 * D_t^(alpha+1) u + mu2 * D_t^(alpha) u + u u_x = lambda u_xx + f
///
/// on (0, L) x (0, T] with homogeneous Dirichlet boundary values and initial
/// data u(x,0) = phi1, u_t(x,0) = phi2.
struct ProblemSpec {
    double mu1 = 0.0;
    double mu2 = 1.0;
    double lambda = 1.0;
    double alpha = 0.5;
    double length = 1.0;
    double horizon = 1.0;
    std::function<double(double)> initial_value;          // phi1
    std::function<double(double)> initial_slope;          // phi2
    std::function<double(double, double)> source;         // f(x, t)
    std::function<double(double, double)> exact;          // optional

    bool has_exact() const { return static_cast<bool>(exact); }
    void validate() const;
};

/// Scalars of the linearized step: xi1 u^n + xi2 u^{n-1} equals the mixed
/// half-step value mu1 dt(u) + mu2 avg(u).
struct IterationCoefficients {
    double xi1;
    double xi2;
    double theta;

    static IterationCoefficients make(const ProblemSpec& problem, double tau);
};

struct SolverConfig {
    double fp_tolerance = 1e-8;
    int max_fp_iterations = 100;
    bool nan_guard = true;

    void validate() const;
};

struct InitialState {
    GridFunction u0;
    GridFunction w0;
    HistoryBuffer history;
};

struct AssembledSystem {
    BandedMatrix matrix;
    std::vector<double> rhs;
};

struct StepOutcome {
    GridFunction u;
    GridFunction w;
    int iterations;
};

struct SolveResult {
    GridFunction final_u;
    GridFunction final_w;
    std::vector<int> iteration_counts;
    HistoryBuffer history;
    std::optional<std::vector<std::pair<double, GridFunction>>> trajectory;
    /// Running max over all time levels of the nodewise error against the
    /// problem's exact solution; valid when has_error_metric is set.
    double max_error_vs_exact = 0.0;
    bool has_error_metric = false;
};

/// Samples the initial data, recovers w^0, and seeds the history with the
/// mixed initial value mu1*phi2 + mu2*u^0. Initial data must vanish at the
/// boundary within 1e-12.
InitialState initialize(const ProblemSpec& problem, const GridPtr& grid, const TimeMesh& tmesh);

/// Builds the banded linear system for one fixed-point iteration of step n.
/// The unknown is the new iterate at the interior nodes.
AssembledSystem assemble_iteration_system(const GridFunction& u_prev, const GridFunction& w_prev,
                                          const HistoryBuffer& history, const L1Weights& weights,
                                          const GridFunction& u_lagged, const GridFunction& w_lagged,
                                          const ProblemSpec& problem, const TimeMesh& tmesh,
                                          int step);

/// Advances one time step with the lagged-coefficient fixed-point iteration,
/// starting from the previous solution. On success appends the new history
/// entry and returns the accepted state.
StepOutcome fixed_point_step(const GridFunction& u_prev, const GridFunction& w_prev,
                             HistoryBuffer& history, const L1Weights& weights,
                             const ProblemSpec& problem, const TimeMesh& tmesh, int step,
                             const SolverConfig& config);

/// Marches the scheme over the whole time mesh.
SolveResult solve(const ProblemSpec& problem, const GridPtr& grid, const TimeMesh& tmesh,
                  const SolverConfig& config = {}, bool keep_trajectory = false);

}  // namespace fracburgers
