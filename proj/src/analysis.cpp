#include "fracburgers/analysis.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "fracburgers/operators.hpp"

namespace fracburgers {

namespace {

void require_doubling(std::span<const int> list, const char* what) {
    if (list.empty()) {
        throw ConfigError(std::string(what) + ": refinement list is empty");
    }
    for (std::size_t k = 0; k + 1 < list.size(); ++k) {
        if (list[k + 1] != 2 * list[k]) {
            throw ConfigError(std::string(what) + ": refinement list must double, got " +
                              std::to_string(list[k + 1]) + " after " + std::to_string(list[k]));
        }
    }
    if (list.front() < 1) {
        throw ConfigError(std::string(what) + ": refinement parameters must be positive");
    }
}

/// Runs fn(0..count-1), optionally on a small worker pool. Any exception is
/// rethrown on the caller thread.
void run_indexed(int count, int workers, const std::function<void(int)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (int k = 0; k < count; ++k) {
            fn(k);
        }
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    auto worker = [&] {
        while (true) {
            const int k = next.fetch_add(1);
            if (k >= count) {
                return;
            }
            try {
                fn(k);
            } catch (...) {
                errors[static_cast<std::size_t>(k)] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min(workers, count);
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    for (std::thread& t : pool) {
        t.join();
    }
    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

std::optional<double> order_between(double coarse_error, double fine_error) {
    if (coarse_error < degenerate_error_floor || fine_error < degenerate_error_floor) {
        return std::nullopt;
    }
    return std::log2(coarse_error / fine_error);
}

ConvergenceReport make_report(const std::string& key, const ProblemSpec& problem,
                              const std::string& fixed_name, long fixed_value,
                              const std::string& metric) {
    ConvergenceReport report;
    report.problem_key = key;
    report.alpha = problem.alpha;
    report.mu1 = problem.mu1;
    report.mu2 = problem.mu2;
    report.lambda = problem.lambda;
    report.fixed_name = fixed_name;
    report.fixed_value = fixed_value;
    report.metric = metric;
    return report;
}

void fill_orders(ConvergenceReport& report) {
    for (std::size_t k = 1; k < report.rows.size(); ++k) {
        report.rows[k].order = order_between(report.rows[k - 1].error, report.rows[k].error);
    }
}

SolveResult solve_annotated(const ProblemSpec& problem, int m, int n, const SolverConfig& config) {
    try {
        return solve(problem, make_grid(problem.length, m), TimeMesh(problem.horizon, n), config);
    } catch (const SolveError& e) {
        throw SolveError(e.kind(), e.step(), e.last_increment(),
                         "study row (M=" + std::to_string(m) + ", N=" + std::to_string(n) +
                             "): " + e.what());
    }
}

}  // namespace

double error_sup_over_time(const SolveResult& result, const ProblemSpec& problem) {
    if (!problem.has_exact()) {
        throw ConfigError("error_sup_over_time needs a problem with an exact solution");
    }
    if (result.trajectory) {
        double max_error = 0.0;
        for (const auto& [t, state] : *result.trajectory) {
            const GridPtr& grid = state.grid();
            for (int i = 0; i < state.node_count(); ++i) {
                max_error =
                    std::max(max_error, std::abs(problem.exact(grid->node(i), t) - state[i]));
            }
        }
        return max_error;
    }
    if (!result.has_error_metric) {
        throw ConfigError("solve result carries neither a trajectory nor a running error");
    }
    return result.max_error_vs_exact;
}

ConvergenceReport temporal_order_study(const std::string& problem_key, const ProblemSpec& problem,
                                       int m_fixed, std::span<const int> n_list,
                                       const StudyOptions& options) {
    require_doubling(n_list, "temporal_order_study");
    if (!problem.has_exact()) {
        throw ConfigError("temporal_order_study needs an exact solution");
    }
    std::vector<double> errors(n_list.size());
    run_indexed(static_cast<int>(n_list.size()), options.workers, [&](int k) {
        const SolveResult result =
            solve_annotated(problem, m_fixed, n_list[static_cast<std::size_t>(k)], options.solver);
        errors[static_cast<std::size_t>(k)] = error_sup_over_time(result, problem);
    });
    ConvergenceReport report = make_report(problem_key, problem, "M", m_fixed, "E_inf");
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        report.rows.push_back({n_list[k], errors[k], std::nullopt});
    }
    fill_orders(report);
    return report;
}

ConvergenceReport spatial_order_study(const std::string& problem_key, const ProblemSpec& problem,
                                      int n_fixed, std::span<const int> m_list,
                                      const StudyOptions& options) {
    require_doubling(m_list, "spatial_order_study");
    if (!problem.has_exact()) {
        throw ConfigError("spatial_order_study needs an exact solution");
    }
    std::vector<double> errors(m_list.size());
    run_indexed(static_cast<int>(m_list.size()), options.workers, [&](int k) {
        const SolveResult result =
            solve_annotated(problem, m_list[static_cast<std::size_t>(k)], n_fixed, options.solver);
        errors[static_cast<std::size_t>(k)] = error_sup_over_time(result, problem);
    });
    ConvergenceReport report = make_report(problem_key, problem, "N", n_fixed, "E_inf");
    for (std::size_t k = 0; k < m_list.size(); ++k) {
        report.rows.push_back({m_list[k], errors[k], std::nullopt});
    }
    fill_orders(report);
    return report;
}

ConvergenceReport self_convergence_time(const std::string& problem_key, const ProblemSpec& problem,
                                        int m_fixed, std::span<const int> n_list,
                                        const StudyOptions& options) {
    require_doubling(n_list, "self_convergence_time");
    // Row N compares the solves at N and 2N; the full solve set is the list
    // plus one extra halving of the step.
    std::vector<int> solve_ns(n_list.begin(), n_list.end());
    solve_ns.push_back(2 * n_list.back());
    std::vector<GridFunction> finals;
    finals.reserve(solve_ns.size());
    for (std::size_t k = 0; k < solve_ns.size(); ++k) {
        finals.emplace_back(make_grid(problem.length, m_fixed));
    }
    run_indexed(static_cast<int>(solve_ns.size()), options.workers, [&](int k) {
        SolveResult result =
            solve_annotated(problem, m_fixed, solve_ns[static_cast<std::size_t>(k)], options.solver);
        finals[static_cast<std::size_t>(k)] = std::move(result.final_u);
    });
    ConvergenceReport report = make_report(problem_key, problem, "M", m_fixed, "F1_inf");
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        const double error = sup_norm_diff(finals[k], finals[k + 1]);
        report.rows.push_back({n_list[k], error, std::nullopt});
    }
    fill_orders(report);
    return report;
}

ConvergenceReport self_convergence_space(const std::string& problem_key, const ProblemSpec& problem,
                                         int n_fixed, std::span<const int> m_list,
                                         const StudyOptions& options) {
    require_doubling(m_list, "self_convergence_space");
    std::vector<int> solve_ms(m_list.begin(), m_list.end());
    solve_ms.push_back(2 * m_list.back());
    std::vector<std::optional<GridFunction>> finals(solve_ms.size());
    run_indexed(static_cast<int>(solve_ms.size()), options.workers, [&](int k) {
        SolveResult result =
            solve_annotated(problem, solve_ms[static_cast<std::size_t>(k)], n_fixed, options.solver);
        finals[static_cast<std::size_t>(k)] = std::move(result.final_u);
    });
    ConvergenceReport report = make_report(problem_key, problem, "N", n_fixed, "G1_inf");
    for (std::size_t k = 0; k < m_list.size(); ++k) {
        const GridFunction& coarse = *finals[k];
        const GridFunction& fine = *finals[k + 1];
        double error = 0.0;
        for (int i = 0; i < coarse.node_count(); ++i) {
            error = std::max(error, std::abs(coarse[i] - fine[2 * i]));
        }
        report.rows.push_back({m_list[k], error, std::nullopt});
    }
    fill_orders(report);
    return report;
}

double perturbation_amplification(const ProblemSpec& problem, const GridPtr& grid,
                                  const TimeMesh& tmesh, double epsilon,
                                  const SolverConfig& config) {
    if (!(epsilon > 0.0)) {
        throw ConfigError("perturbation_amplification needs epsilon > 0");
    }
    const SolveResult base = solve(problem, grid, tmesh, config);

    ProblemSpec perturbed = problem;
    const double length = problem.length;
    const auto phi1 = problem.initial_value;
    perturbed.initial_value = [=](double x) {
        return phi1(x) + epsilon * std::sin(std::numbers::pi_v<double> * x / length);
    };
    const SolveResult shifted = solve(perturbed, grid, tmesh, config);

    return sup_norm_diff(base.final_u, shifted.final_u) / epsilon;
}

}  // namespace fracburgers
