#include "fracburgers/stepper.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fracburgers/compact.hpp"
#include "fracburgers/operators.hpp"

namespace fracburgers {

namespace {

constexpr double kBoundaryCompatibilityTol = 1e-12;

double memory_prefactor(double alpha, double tau) {
    return 1.0 / (tau * std::tgamma(1.0 - alpha));
}

GridFunction sample_initial(const std::function<double(double)>& f, const GridPtr& grid) {
    if (!f) {
        return GridFunction::zeros(grid);
    }
    return GridFunction::sample(grid, f);
}

GridFunction sample_source_half(const ProblemSpec& problem, const GridPtr& grid,
                                const TimeMesh& tmesh, int step) {
    GridFunction out(grid);
    if (!problem.source) {
        return out;
    }
    const double t_prev = tmesh.t(step - 1);
    const double t_next = tmesh.t(step);
    for (int i = 0; i < out.node_count(); ++i) {
        const double x = grid->node(i);
        out[i] = 0.5 * (problem.source(x, t_prev) + problem.source(x, t_next));
    }
    return out;
}

/// Shared assembly core. `explicit_memory` is the step-constant part of the
/// fractional memory operator, `source_half` the time-averaged source sample.
AssembledSystem assemble_core(const GridFunction& u_prev, const GridFunction& w_prev,
                              const GridFunction& explicit_memory, const GridFunction& source_half,
                              const GridFunction& u_lagged, const GridFunction& w_lagged,
                              const ProblemSpec& problem, const IterationCoefficients& co,
                              double prefactor, double b0) {
    const GridPtr& grid = u_prev.grid();
    const int m = grid->subdivisions() - 1;
    const double h = grid->step();
    const double h2 = h * h;
    const double lambda = problem.lambda;

    // Tridiagonal map of the unknown inside the convection terms:
    // the lagged-sum form of psi(u^n,u^n) plus both exact linearizations
    // against the previous solution, each entering with weight 1/4.
    PsiCoefficients t_sum = psi_semi_implicit_diag(u_lagged);
    t_sum.add_scaled(psi_linearized_in_first(u_prev), 1.0);
    t_sum.add_scaled(psi_linearized_in_second(u_prev), 1.0);
    t_sum.scale(0.25);

    BandedMatrix a(m, 2, 2);
    const double mem = prefactor * b0 * co.xi1;
    for (int r = 0; r < m; ++r) {
        const int i = r + 1;
        a.add(r, r, mem * (10.0 / 12.0) + lambda / h2);
        if (r - 1 >= 0) {
            a.add(r, r - 1, mem / 12.0 - 0.5 * lambda / h2);
        }
        if (r + 1 < m) {
            a.add(r, r + 1, mem / 12.0 - 0.5 * lambda / h2);
        }

        // Compact average composed with the tridiagonal convection map.
        const bool has_lower_row = i - 1 >= 1;
        const bool has_upper_row = i + 1 <= m;
        if (has_lower_row && r - 2 >= 0) {
            a.add(r, r - 2, t_sum.lower(i - 1) / 12.0);
        }
        if (r - 1 >= 0) {
            double v = 10.0 * t_sum.lower(i);
            if (has_lower_row) {
                v += t_sum.diag(i - 1);
            }
            a.add(r, r - 1, v / 12.0);
        }
        {
            double v = 10.0 * t_sum.diag(i);
            if (has_lower_row) {
                v += t_sum.upper(i - 1);
            }
            if (has_upper_row) {
                v += t_sum.lower(i + 1);
            }
            a.add(r, r, v / 12.0);
        }
        if (r + 1 < m) {
            double v = 10.0 * t_sum.upper(i);
            if (has_upper_row) {
                v += t_sum.diag(i + 1);
            }
            a.add(r, r + 1, v / 12.0);
        }
        if (has_upper_row && r + 2 < m) {
            a.add(r, r + 2, t_sum.upper(i + 1) / 12.0);
        }
    }

    // Everything that does not involve the unknown, compact-filtered in one
    // pass: memory tail, lagged convection, averaged source.
    GridFunction za(grid);
    {
        const GridFunction psi_prev = psi_apply(u_prev, u_prev);
        GridFunction psi_lagged = psi_apply(w_lagged, u_lagged);
        psi_lagged.add_scaled(psi_apply(w_lagged, u_prev), 1.0);
        psi_lagged.add_scaled(psi_apply(w_prev, u_lagged), 1.0);
        psi_lagged.add_scaled(psi_apply(w_prev, u_prev), 1.0);
        const double mem_rhs = prefactor;
        for (int i = 0; i < za.node_count(); ++i) {
            const double memory_tail = b0 * co.xi2 * u_prev[i] + explicit_memory[i];
            za[i] = -mem_rhs * memory_tail - 0.25 * psi_prev[i] + (h2 / 8.0) * psi_lagged[i] +
                    source_half[i];
        }
    }
    const GridFunction hza = compact_average_apply(za);
    const GridFunction d2u_prev = second_diff_field(u_prev);

    std::vector<double> rhs(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const int i = r + 1;
        rhs[static_cast<std::size_t>(r)] = hza[i] + 0.5 * lambda * d2u_prev[i];
    }
    return AssembledSystem{std::move(a), std::move(rhs)};
}

}  // namespace

void ProblemSpec::validate() const {
    if (mu1 < 0.0 || mu2 < 0.0 || mu1 * mu1 + mu2 * mu2 <= 0.0) {
        throw ConfigError("problem needs mu1, mu2 >= 0 with mu1^2 + mu2^2 > 0");
    }
    if (!(lambda > 0.0)) {
        throw ConfigError("problem needs a positive viscosity lambda");
    }
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw ConfigError("problem needs alpha in (0,1), got " + std::to_string(alpha));
    }
    if (!(length > 0.0) || !(horizon > 0.0)) {
        throw ConfigError("problem needs positive domain length and horizon");
    }
    if (!initial_value) {
        throw ConfigError("problem needs initial data phi1");
    }
}

IterationCoefficients IterationCoefficients::make(const ProblemSpec& problem, double tau) {
    IterationCoefficients co{};
    co.xi1 = problem.mu1 / tau + 0.5 * problem.mu2;
    co.xi2 = 0.5 * problem.mu2 - problem.mu1 / tau;
    co.theta = std::pow(tau, problem.alpha) * std::tgamma(1.0 - problem.alpha);
    return co;
}

void SolverConfig::validate() const {
    if (!(fp_tolerance > 0.0)) {
        throw ConfigError("fixed-point tolerance must be positive");
    }
    if (max_fp_iterations < 1) {
        throw ConfigError("max fixed-point iterations must be at least 1");
    }
}

InitialState initialize(const ProblemSpec& problem, const GridPtr& grid, const TimeMesh& tmesh) {
    problem.validate();
    if (grid->length() != problem.length) {
        throw ConfigError("grid length does not match the problem domain");
    }
    if (tmesh.horizon() != problem.horizon) {
        throw ConfigError("time mesh horizon does not match the problem");
    }

    GridFunction u0 = sample_initial(problem.initial_value, grid);
    if (std::abs(u0[0]) > kBoundaryCompatibilityTol ||
        std::abs(u0[u0.last_index()]) > kBoundaryCompatibilityTol) {
        throw ConfigError("initial data phi1 is incompatible with the boundary condition");
    }
    u0.zero_boundary();

    GridFunction w0 = recover_w(u0);

    GridFunction g0 = sample_initial(problem.initial_slope, grid);
    if (std::abs(g0[0]) > kBoundaryCompatibilityTol ||
        std::abs(g0[g0.last_index()]) > kBoundaryCompatibilityTol) {
        throw ConfigError("initial slope phi2 is incompatible with the boundary condition");
    }
    g0.scale(problem.mu1);
    g0.add_scaled(u0, problem.mu2);
    g0.zero_boundary();

    HistoryBuffer history(grid, static_cast<std::size_t>(tmesh.steps()) + 1);
    history.append(g0);
    return InitialState{std::move(u0), std::move(w0), std::move(history)};
}

AssembledSystem assemble_iteration_system(const GridFunction& u_prev, const GridFunction& w_prev,
                                          const HistoryBuffer& history, const L1Weights& weights,
                                          const GridFunction& u_lagged, const GridFunction& w_lagged,
                                          const ProblemSpec& problem, const TimeMesh& tmesh,
                                          int step) {
    const GridFunction explicit_memory =
        l1_explicit_part(weights, history, static_cast<std::size_t>(step));
    const GridFunction source_half = sample_source_half(problem, u_prev.grid(), tmesh, step);
    const IterationCoefficients co = IterationCoefficients::make(problem, tmesh.tau());
    return assemble_core(u_prev, w_prev, explicit_memory, source_half, u_lagged, w_lagged, problem,
                         co, memory_prefactor(problem.alpha, tmesh.tau()),
                         weights.implicit_coefficient());
}

StepOutcome fixed_point_step(const GridFunction& u_prev, const GridFunction& w_prev,
                             HistoryBuffer& history, const L1Weights& weights,
                             const ProblemSpec& problem, const TimeMesh& tmesh, int step,
                             const SolverConfig& config) {
    if (step < 1) {
        throw ContractViolation("fixed_point_step: step index must be >= 1");
    }
    const GridPtr& grid = u_prev.grid();
    const double tau = tmesh.tau();
    const IterationCoefficients co = IterationCoefficients::make(problem, tau);
    const double prefactor = memory_prefactor(problem.alpha, tau);
    const double b0 = weights.implicit_coefficient();

    const GridFunction explicit_memory =
        l1_explicit_part(weights, history, static_cast<std::size_t>(step));
    const GridFunction source_half = sample_source_half(problem, grid, tmesh, step);

    GridFunction u_k = u_prev;
    GridFunction w_k = w_prev;
    double increment = 0.0;
    for (int k = 0; k < config.max_fp_iterations; ++k) {
        AssembledSystem system = assemble_core(u_prev, w_prev, explicit_memory, source_half, u_k,
                                               w_k, problem, co, prefactor, b0);
        try {
            BandedLU lu = BandedLU::factor(system.matrix);
            lu.solve(system.rhs);
        } catch (const SingularMatrixError& e) {
            throw SolveError(SolveError::Kind::LinearSolveFailure, step, increment,
                             "step " + std::to_string(step) + ": " + e.what());
        }

        GridFunction u_next(grid);
        for (int i = 1; i < u_next.last_index(); ++i) {
            u_next[i] = system.rhs[static_cast<std::size_t>(i - 1)];
        }
        if (config.nan_guard && !u_next.all_finite()) {
            throw SolveError(SolveError::Kind::NumericalBlowup, step, increment,
                             "step " + std::to_string(step) + ": iterate is not finite");
        }

        increment = sup_norm_diff(u_next, u_k);
        if (increment <= config.fp_tolerance) {
            GridFunction w_next = recover_w(u_next);
            GridFunction g = GridFunction::linear_combination(co.xi1, u_next, co.xi2, u_prev);
            g.zero_boundary();
            history.append(g);
            return StepOutcome{std::move(u_next), std::move(w_next), k + 1};
        }
        u_k = std::move(u_next);
        w_k = recover_w(u_k);
    }
    throw SolveError(SolveError::Kind::FixedPointDivergence, step, increment,
                     "step " + std::to_string(step) + ": fixed-point iteration did not reach " +
                         std::to_string(config.fp_tolerance) + " within " +
                         std::to_string(config.max_fp_iterations) + " iterations (last increment " +
                         std::to_string(increment) + ")");
}

SolveResult solve(const ProblemSpec& problem, const GridPtr& grid, const TimeMesh& tmesh,
                  const SolverConfig& config, bool keep_trajectory) {
    config.validate();
    InitialState init = initialize(problem, grid, tmesh);

    GridFunction u = std::move(init.u0);
    GridFunction w = std::move(init.w0);
    HistoryBuffer history = std::move(init.history);
    const L1Weights weights(problem.alpha, tmesh.tau(), static_cast<std::size_t>(tmesh.steps()));

    std::optional<std::vector<std::pair<double, GridFunction>>> trajectory;
    if (keep_trajectory) {
        trajectory.emplace();
        trajectory->reserve(static_cast<std::size_t>(tmesh.steps()) + 1);
        trajectory->emplace_back(0.0, u);
    }

    const bool track_error = problem.has_exact();
    double max_error = 0.0;
    auto record_error = [&](const GridFunction& state, double t) {
        for (int i = 0; i < state.node_count(); ++i) {
            max_error = std::max(max_error, std::abs(problem.exact(grid->node(i), t) - state[i]));
        }
    };
    if (track_error) {
        record_error(u, 0.0);
    }

    std::vector<int> iteration_counts;
    iteration_counts.reserve(static_cast<std::size_t>(tmesh.steps()));
    for (int n = 1; n <= tmesh.steps(); ++n) {
        StepOutcome out = fixed_point_step(u, w, history, weights, problem, tmesh, n, config);
        u = std::move(out.u);
        w = std::move(out.w);
        iteration_counts.push_back(out.iterations);
        if (trajectory) {
            trajectory->emplace_back(tmesh.t(n), u);
        }
        if (track_error) {
            record_error(u, tmesh.t(n));
        }
    }

    return SolveResult{std::move(u),          std::move(w), std::move(iteration_counts),
                       std::move(history),    std::move(trajectory),
                       track_error ? max_error : 0.0, track_error};
}

}  // namespace fracburgers
