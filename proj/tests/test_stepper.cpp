#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fracburgers/compact.hpp"
#include "fracburgers/operators.hpp"
#include "fracburgers/problems.hpp"
#include "fracburgers/stepper.hpp"
#include "support/random_fields.hpp"

using namespace fracburgers;

namespace {

constexpr double pi = std::numbers::pi_v<double>;

ProblemSpec homogeneous_problem() {
    ProblemSpec p;
    p.mu1 = 1.0;
    p.mu2 = 1.0;
    p.lambda = 1.0;
    p.alpha = 0.5;
    p.initial_value = [](double) { return 0.0; };
    p.initial_slope = [](double) { return 0.0; };
    p.source = [](double, double) { return 0.0; };
    return p;
}

GridFunction sample_exact(const ProblemSpec& problem, const GridPtr& grid, double t) {
    GridFunction u = GridFunction::sample(grid, [&](double x) { return problem.exact(x, t); });
    u.zero_boundary();
    return u;
}

/// Sup norm over all time steps of the compact-filtered residual of the
/// scheme evaluated on exact-solution samples; both the assembled route and
/// a direct evaluation of the marching identity must agree.
std::pair<double, double> exact_sample_residual(const ProblemSpec& problem, int m, int n_steps,
                                                double skip_before_t) {
    const GridPtr grid = make_grid(problem.length, m);
    const TimeMesh tmesh(problem.horizon, n_steps);
    const double tau = tmesh.tau();
    const IterationCoefficients co = IterationCoefficients::make(problem, tau);
    const double prefactor = 1.0 / (tau * std::tgamma(1.0 - problem.alpha));
    const L1Weights weights(problem.alpha, tau, static_cast<std::size_t>(n_steps));

    std::vector<GridFunction> u_levels, w_levels;
    for (int j = 0; j <= n_steps; ++j) {
        u_levels.push_back(sample_exact(problem, grid, tmesh.t(j)));
        w_levels.push_back(recover_w(u_levels.back()));
    }

    HistoryBuffer history(grid, static_cast<std::size_t>(n_steps) + 1);
    {
        GridFunction g0 = GridFunction::sample(grid, problem.initial_slope);
        g0.scale(problem.mu1);
        g0.add_scaled(u_levels[0], problem.mu2);
        g0.zero_boundary();
        history.append(g0);
    }
    for (int j = 1; j <= n_steps; ++j) {
        GridFunction g = GridFunction::linear_combination(co.xi1, u_levels[static_cast<std::size_t>(j)],
                                                          co.xi2, u_levels[static_cast<std::size_t>(j - 1)]);
        g.zero_boundary();
        history.append(g);
    }

    double max_assembled = 0.0;
    double max_direct = 0.0;
    for (int n = 1; n <= n_steps; ++n) {
        if (tmesh.t(n) < skip_before_t) {
            continue;
        }
        const GridFunction& u_prev = u_levels[static_cast<std::size_t>(n - 1)];
        const GridFunction& u_next = u_levels[static_cast<std::size_t>(n)];
        const GridFunction& w_prev = w_levels[static_cast<std::size_t>(n - 1)];
        const GridFunction& w_next = w_levels[static_cast<std::size_t>(n)];

        AssembledSystem system = assemble_iteration_system(u_prev, w_prev, history, weights,
                                                           u_next, w_next, problem, tmesh, n);
        const int unknowns = m - 1;
        std::vector<double> interior(static_cast<std::size_t>(unknowns));
        for (int i = 1; i < m; ++i) {
            interior[static_cast<std::size_t>(i - 1)] = u_next[i];
        }
        const std::vector<double> ax = system.matrix.multiply(interior);
        for (int r = 0; r < unknowns; ++r) {
            max_assembled = std::max(
                max_assembled,
                std::abs(ax[static_cast<std::size_t>(r)] - system.rhs[static_cast<std::size_t>(r)]));
        }

        // Direct evaluation of the marching identity, then compact filtering.
        const GridFunction memory = l1_memory_sum(weights, history, static_cast<std::size_t>(n));
        const GridFunction u_half = half_step_average(u_prev, u_next);
        const GridFunction w_half = half_step_average(w_prev, w_next);
        const GridFunction conv = psi_apply(u_half, u_half);
        const GridFunction conv_w = psi_apply(w_half, u_half);
        const double h2 = grid->step() * grid->step();
        GridFunction raw(grid);
        for (int i = 0; i <= m; ++i) {
            const double x = grid->node(i);
            const double f_half =
                0.5 * (problem.source(x, tmesh.t(n - 1)) + problem.source(x, tmesh.t(n)));
            raw[i] = prefactor * memory[i] + conv[i] - 0.5 * h2 * conv_w[i] -
                     problem.lambda * w_half[i] - f_half;
        }
        const GridFunction filtered = compact_average_apply(raw);
        for (int i = 1; i < m; ++i) {
            max_direct = std::max(max_direct, std::abs(filtered[i]));
        }
    }
    return {max_assembled, max_direct};
}

}  // namespace

TEST_CASE("iteration coefficients reproduce the mixed half-step value") {
    ProblemSpec p = homogeneous_problem();
    p.mu1 = 0.7;
    p.mu2 = 2.5;
    const double tau = 0.03125;
    const IterationCoefficients co = IterationCoefficients::make(p, tau);
    CHECK(co.xi1 == doctest::Approx(p.mu1 / tau + 0.5 * p.mu2).epsilon(1e-15));
    CHECK(co.xi2 == doctest::Approx(0.5 * p.mu2 - p.mu1 / tau).epsilon(1e-15));
    CHECK(co.theta ==
          doctest::Approx(std::pow(tau, p.alpha) * std::tgamma(1.0 - p.alpha)).epsilon(1e-14));

    const GridPtr grid = make_grid(1.0, 8);
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const GridFunction a = oracle::random_field(grid, rng);
        const GridFunction b = oracle::random_field(grid, rng);
        const GridFunction lhs = GridFunction::linear_combination(co.xi1, b, co.xi2, a);
        const GridFunction dt = time_diff(a, b, tau);
        const GridFunction avg = half_step_average(a, b);
        for (int i = 0; i <= 8; ++i) {
            const double rhs = p.mu1 * dt[i] + p.mu2 * avg[i];
            const double scale = std::abs(rhs) + (std::abs(a[i]) + std::abs(b[i])) / tau + 1e-30;
            CHECK(std::abs(lhs[i] - rhs) <= 4.0 * 2.220446049250313e-16 * scale);
        }
    }
}

TEST_CASE("initialize samples the data and seeds the history") {
    SUBCASE("zero data") {
        const ProblemSpec p = homogeneous_problem();
        const GridPtr grid = make_grid(1.0, 8);
        const TimeMesh tmesh(1.0, 4);
        const InitialState st = initialize(p, grid, tmesh);
        CHECK(sup_norm(st.u0) == 0.0);
        CHECK(sup_norm(st.w0) == 0.0);
        CHECK(st.history.size() == 1);
        CHECK(sup_norm(st.history.entry(0)) == 0.0);
    }

    SUBCASE("example1 samples sin(pi x)") {
        const ProblemSpec p = example1(0.5, 1.0, 1.0, 1.0);
        const GridPtr grid = make_grid(1.0, 16);
        const InitialState st = initialize(p, grid, TimeMesh(1.0, 4));
        for (int i = 0; i <= 16; ++i) {
            if (i == 0 || i == 16) {
                CHECK(st.u0[i] == 0.0);
            } else {
                CHECK(st.u0[i] == doctest::Approx(std::sin(pi * grid->node(i))).epsilon(1e-14));
            }
        }
    }

    SUBCASE("example3 initial hump") {
        const ProblemSpec p = example3(0.25, 1.0, 1.0, 1.0);
        const GridPtr grid = make_grid(1.0, 8);
        const InitialState st = initialize(p, grid, TimeMesh(1.0, 4));
        CHECK(st.u0[4] == doctest::Approx(0.046875).epsilon(1e-14));
    }

    SUBCASE("incompatible boundary data is rejected") {
        ProblemSpec p = homogeneous_problem();
        p.initial_value = [](double) { return 1.0; };
        CHECK_THROWS_AS(initialize(p, make_grid(1.0, 8), TimeMesh(1.0, 4)), ConfigError);
    }
}

TEST_CASE("homogeneous problem stays zero and converges immediately") {
    const ProblemSpec p = homogeneous_problem();
    const GridPtr grid = make_grid(1.0, 16);
    const TimeMesh tmesh(1.0, 4);
    const SolveResult result = solve(p, grid, tmesh);
    CHECK(sup_norm(result.final_u) == 0.0);
    CHECK(sup_norm(result.final_w) == 0.0);
    for (int count : result.iteration_counts) {
        CHECK(count == 1);
    }

    // Assembly of the zero state has an identically zero right-hand side.
    const L1Weights weights(p.alpha, tmesh.tau(), 4);
    const InitialState st = initialize(p, grid, tmesh);
    const AssembledSystem system = assemble_iteration_system(
        st.u0, st.w0, st.history, weights, st.u0, st.w0, p, tmesh, 1);
    for (double v : system.rhs) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("assembled rows stay within the compact stencil") {
    const ProblemSpec p = example1(0.5, 1.0, 1.0, 1.0);
    const GridPtr grid = make_grid(1.0, 12);
    const TimeMesh tmesh(1.0, 8);
    const InitialState st = initialize(p, grid, tmesh);
    const L1Weights weights(p.alpha, tmesh.tau(), 8);
    const AssembledSystem system = assemble_iteration_system(
        st.u0, st.w0, st.history, weights, st.u0, st.w0, p, tmesh, 1);

    const int m = system.matrix.size();
    CHECK(m == 11);
    for (int r = 0; r < m; ++r) {
        int nonzeros = 0;
        for (int j = 0; j < m; ++j) {
            if (system.matrix.get(r, j) != 0.0) {
                ++nonzeros;
            }
        }
        if (r == 0 || r == m - 1) {
            CHECK(nonzeros <= 4);
        } else {
            CHECK(nonzeros <= 5);
        }
    }
}

TEST_CASE("exact samples leave a residual of the scheme's order") {
    const ProblemSpec p = example1(0.5, 1.0, 1.0, 1.0);
    // Residuals measured away from the initial layer where the memory
    // weights see the t^(1+alpha) derivative kink.
    const auto [a64, d64] = exact_sample_residual(p, 80, 64, 0.25);
    const auto [a128, d128] = exact_sample_residual(p, 80, 128, 0.25);
    const auto [a256, d256] = exact_sample_residual(p, 80, 256, 0.25);

    // Both evaluation routes of the same identity agree.
    CHECK(a64 == doctest::Approx(d64).epsilon(1e-6));
    CHECK(a128 == doctest::Approx(d128).epsilon(1e-6));
    CHECK(a256 == doctest::Approx(d256).epsilon(1e-6));

    const double order1 = std::log2(a64 / a128);
    const double order2 = std::log2(a128 / a256);
    CHECK(order1 == doctest::Approx(1.5).epsilon(0.2));
    CHECK(order2 == doctest::Approx(1.5).epsilon(0.2));
}

TEST_CASE("fixed-point iteration on example1 meshes") {
    const ProblemSpec p = example1(0.5, 1.0, 1.0, 1.0);
    const GridPtr grid = make_grid(1.0, 80);
    const TimeMesh tmesh(1.0, 64);
    const SolveResult result = solve(p, grid, tmesh);
    for (int count : result.iteration_counts) {
        CHECK(count >= 1);
        CHECK(count <= 100);
    }
    CHECK(result.final_u.is_dirichlet());
    CHECK(result.final_w.is_dirichlet());
    CHECK(result.history.size() == 65);

    // At convergence the accepted state nearly solves its own assembled
    // system.
    const L1Weights weights(p.alpha, tmesh.tau(), 64);
    SolveResult base = solve(p, grid, tmesh, SolverConfig{}, true);
    const auto& traj = *base.trajectory;
    const GridFunction& u_prev = traj[63].second;
    const GridFunction& u_last = traj[64].second;
    HistoryBuffer history(grid, 65);
    for (std::size_t j = 0; j < 64; ++j) {
        history.append(base.history.entry(j));
    }
    const GridFunction w_prev = recover_w(u_prev);
    const GridFunction w_last = recover_w(u_last);
    const AssembledSystem system = assemble_iteration_system(u_prev, w_prev, history, weights,
                                                             u_last, w_last, p, tmesh, 64);
    std::vector<double> interior(79);
    for (int i = 1; i < 80; ++i) {
        interior[static_cast<std::size_t>(i - 1)] = u_last[i];
    }
    const std::vector<double> ax = system.matrix.multiply(interior);
    double residual = 0.0;
    for (std::size_t r = 0; r < ax.size(); ++r) {
        residual = std::max(residual, std::abs(ax[r] - system.rhs[r]));
    }
    CHECK(residual <= 10.0 * 1e-8 * system.matrix.inf_norm());
}

TEST_CASE("tolerance tightening changes the step only marginally") {
    const ProblemSpec p = example1(0.5, 1.0, 1.0, 1.0);
    const GridPtr grid = make_grid(1.0, 40);
    const TimeMesh tmesh(1.0, 8);

    SolverConfig loose;
    loose.fp_tolerance = 1e-8;
    SolverConfig tight;
    tight.fp_tolerance = 1e-10;

    const SolveResult a = solve(p, grid, tmesh, loose);
    const SolveResult b = solve(p, grid, tmesh, tight);
    CHECK(sup_norm_diff(a.final_u, b.final_u) <= 1e-7);
}

TEST_CASE("degenerate coefficient regimes run") {
    SUBCASE("mu1 = 0 (single low-order derivative)") {
        const ProblemSpec p = example1(0.5, 0.0, 1.0, 1.0);
        const SolveResult result = solve(p, make_grid(1.0, 40), TimeMesh(1.0, 32));
        CHECK(result.has_error_metric);
        CHECK(result.max_error_vs_exact < 5e-3);
    }
    SUBCASE("mu2 = 0 (single high-order derivative)") {
        const ProblemSpec p = example1(0.5, 1.0, 0.0, 1.0);
        const SolveResult result = solve(p, make_grid(1.0, 40), TimeMesh(1.0, 32));
        CHECK(result.max_error_vs_exact < 5e-3);
    }
}

TEST_CASE("single-step homogeneous solve returns zero") {
    const ProblemSpec p = homogeneous_problem();
    const SolveResult result = solve(p, make_grid(1.0, 8), TimeMesh(1.0, 1));
    CHECK(sup_norm(result.final_u) == 0.0);
}

TEST_CASE("divergence is reported with the failing step") {
    ProblemSpec p = example1(0.5, 1.0, 1.0, 1.0);
    SolverConfig config;
    config.max_fp_iterations = 1;
    config.fp_tolerance = 1e-16;
    try {
        solve(p, make_grid(1.0, 20), TimeMesh(1.0, 4), config);
        FAIL("expected SolveError");
    } catch (const SolveError& e) {
        CHECK(e.kind() == SolveError::Kind::FixedPointDivergence);
        CHECK(e.step() >= 1);
    }
}

TEST_CASE("boundary values stay exactly zero along the march") {
    const ProblemSpec p = example1(0.25, 1.0, 1.0, 1.0);
    const SolveResult result = solve(p, make_grid(1.0, 24), TimeMesh(1.0, 16), SolverConfig{}, true);
    for (const auto& [t, state] : *result.trajectory) {
        CHECK(state[0] == 0.0);
        CHECK(state[24] == 0.0);
    }
    for (std::size_t j = 0; j < result.history.size(); ++j) {
        CHECK(result.history.entry(static_cast<std::size_t>(j)).is_dirichlet());
    }
}
