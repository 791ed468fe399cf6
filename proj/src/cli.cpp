#include "fracburgers/cli.hpp"

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "fracburgers/csv.hpp"
#include "fracburgers/problems.hpp"

namespace fracburgers {

std::string study_kind_name(StudyKind kind) {
    switch (kind) {
        case StudyKind::Single: return "single";
        case StudyKind::TimeOrder: return "time-order";
        case StudyKind::SpaceOrder: return "space-order";
        case StudyKind::SelfTime: return "self-time";
        case StudyKind::SelfSpace: return "self-space";
        case StudyKind::Stability: return "stability";
    }
    return "single";
}

std::optional<StudyKind> parse_study_kind(const std::string& name) {
    if (name == "single") return StudyKind::Single;
    if (name == "time-order") return StudyKind::TimeOrder;
    if (name == "space-order") return StudyKind::SpaceOrder;
    if (name == "self-time") return StudyKind::SelfTime;
    if (name == "self-space") return StudyKind::SelfSpace;
    if (name == "stability") return StudyKind::Stability;
    return std::nullopt;
}

void RunConfig::validate() const {
    bool known = false;
    for (const NamedProblem& p : problem_registry()) {
        known = known || p.key == problem;
    }
    if (!known) {
        throw ConfigError("problem: unknown key '" + problem + "'");
    }
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw ConfigError("alpha: must lie in the open interval (0,1), got " +
                          format_g17(alpha));
    }
    if (mu1 < 0.0 || mu2 < 0.0 || mu1 * mu1 + mu2 * mu2 <= 0.0) {
        throw ConfigError("mu1/mu2: need mu1, mu2 >= 0 and mu1^2 + mu2^2 > 0");
    }
    if (!(lambda > 0.0)) {
        throw ConfigError("lambda: viscosity must be positive, got " + format_g17(lambda));
    }
    if (space_m < 4) {
        throw ConfigError("M: needs at least 4 subdivisions, got " + std::to_string(space_m));
    }
    if (time_n < 1) {
        throw ConfigError("N: needs at least 1 step, got " + std::to_string(time_n));
    }
    if (!(fp_tolerance > 0.0)) {
        throw ConfigError("fp-tol: must be positive, got " + format_g17(fp_tolerance));
    }
    if (max_fp_iterations < 1) {
        throw ConfigError("max-fp-iters: must be at least 1");
    }
    if (!(epsilon > 0.0)) {
        throw ConfigError("epsilon: must be positive, got " + format_g17(epsilon));
    }
    if (study != StudyKind::Single && study != StudyKind::Stability) {
        if (refinement_list.empty()) {
            throw ConfigError("refine: study '" + study_kind_name(study) +
                              "' needs a refinement list");
        }
        const bool spatial = study == StudyKind::SpaceOrder || study == StudyKind::SelfSpace;
        if (refinement_list.front() < (spatial ? 4 : 1)) {
            throw ConfigError("refine: first entry too small");
        }
        for (std::size_t k = 0; k + 1 < refinement_list.size(); ++k) {
            if (refinement_list[k + 1] != 2 * refinement_list[k]) {
                throw ConfigError("refine: list must double at every entry, but " +
                                  std::to_string(refinement_list[k + 1]) + " != 2*" +
                                  std::to_string(refinement_list[k]));
            }
        }
    }
}

ParseOutcome parse_config(const std::vector<std::string>& args) {
    CLI::App app{"Compact finite-difference solver for the mixed-type time-fractional "
                 "Burgers equation"};
    app.set_config("--config", "", "Flat key=value configuration file; flags override");
    app.allow_config_extras(CLI::config_extras_mode::error);

    RunConfig config;
    std::string study_name = "single";
    app.add_option("--problem", config.problem, "Problem key (example1|example2|example3)")
        ->capture_default_str();
    app.add_option("--alpha", config.alpha, "Fractional order in (0,1)")->capture_default_str();
    app.add_option("--mu1", config.mu1, "Weight of the order-(alpha+1) derivative")
        ->capture_default_str();
    app.add_option("--mu2", config.mu2, "Weight of the order-alpha derivative")
        ->capture_default_str();
    app.add_option("--lambda", config.lambda, "Kinematic viscosity")->capture_default_str();
    app.add_option("--M", config.space_m, "Spatial subdivisions")->capture_default_str();
    app.add_option("--N", config.time_n, "Time steps")->capture_default_str();
    app.add_option("--fp-tol", config.fp_tolerance, "Fixed-point stopping tolerance")
        ->capture_default_str();
    app.add_option("--max-fp-iters", config.max_fp_iterations, "Fixed-point iteration cap")
        ->capture_default_str();
    app.add_option("--out", config.output_path, "Output CSV path")->capture_default_str();
    app.add_option("--study", study_name,
                   "single|time-order|space-order|self-time|self-space|stability")
        ->capture_default_str();
    app.add_option("--refine", config.refinement_list,
                   "Doubling refinement list for order studies (comma separated)")
        ->delimiter(',');
    app.add_option("--epsilon", config.epsilon, "Initial-data perturbation size (stability)")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("fracburgers");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }

    ParseOutcome outcome;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        outcome.exit_code = exit_success;
        outcome.message = app.help();
        return outcome;
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = exit_config_error;
        outcome.message = e.what();
        return outcome;
    }

    const std::optional<StudyKind> kind = parse_study_kind(study_name);
    if (!kind) {
        outcome.exit_code = exit_config_error;
        outcome.message = "study: unknown study '" + study_name + "'";
        return outcome;
    }
    config.study = *kind;

    try {
        config.validate();
    } catch (const ConfigError& e) {
        outcome.exit_code = exit_config_error;
        outcome.message = e.what();
        return outcome;
    }
    outcome.config = std::move(config);
    return outcome;
}

int worker_count_from_env() {
    const char* raw = std::getenv("FRACBURGERS_WORKERS");
    if (raw == nullptr) {
        return 1;
    }
    const int value = std::atoi(raw);
    return value >= 1 ? value : 1;
}

namespace {

MetadataList single_metadata(const RunConfig& config) {
    return {
        {"problem", config.problem},
        {"alpha", format_g17(config.alpha)},
        {"mu1", format_g17(config.mu1)},
        {"mu2", format_g17(config.mu2)},
        {"lambda", format_g17(config.lambda)},
        {"M", std::to_string(config.space_m)},
        {"N", std::to_string(config.time_n)},
    };
}

std::string execute(const RunConfig& config) {
    const ProblemSpec problem =
        build_problem(config.problem, config.alpha, config.mu1, config.mu2, config.lambda);
    SolverConfig solver;
    solver.fp_tolerance = config.fp_tolerance;
    solver.max_fp_iterations = config.max_fp_iterations;
    StudyOptions options;
    options.solver = solver;
    options.workers = worker_count_from_env();

    switch (config.study) {
        case StudyKind::Single: {
            const SolveResult result = solve(problem, make_grid(problem.length, config.space_m),
                                             TimeMesh(problem.horizon, config.time_n), solver);
            return solution_csv(result.final_u, result.final_w, single_metadata(config));
        }
        case StudyKind::TimeOrder:
            return study_csv(temporal_order_study(config.problem, problem, config.space_m,
                                                  config.refinement_list, options));
        case StudyKind::SpaceOrder:
            return study_csv(spatial_order_study(config.problem, problem, config.time_n,
                                                 config.refinement_list, options));
        case StudyKind::SelfTime:
            return study_csv(self_convergence_time(config.problem, problem, config.space_m,
                                                   config.refinement_list, options));
        case StudyKind::SelfSpace:
            return study_csv(self_convergence_space(config.problem, problem, config.time_n,
                                                    config.refinement_list, options));
        case StudyKind::Stability: {
            const GridPtr grid = make_grid(problem.length, config.space_m);
            const TimeMesh tmesh(problem.horizon, config.time_n);
            ConvergenceReport report;
            report.problem_key = config.problem;
            report.alpha = problem.alpha;
            report.mu1 = problem.mu1;
            report.mu2 = problem.mu2;
            report.lambda = problem.lambda;
            report.fixed_name = "N";
            report.fixed_value = config.time_n;
            report.metric = "amplification";
            // Rows k = 0, 1 hold the amplification at epsilon and epsilon/10;
            // agreement between them indicates the linear response regime.
            for (long k = 0; k <= 1; ++k) {
                const double eps = config.epsilon / (k == 0 ? 1.0 : 10.0);
                const double amp = perturbation_amplification(problem, grid, tmesh, eps, solver);
                report.rows.push_back({k, amp, std::nullopt});
            }
            return study_csv(report);
        }
    }
    throw ConfigError("study: unhandled study kind");
}

}  // namespace

int run(const RunConfig& config) {
    try {
        const std::string csv = execute(config);
        write_text_file(config.output_path, csv);
        std::cout << csv;
        std::cout.flush();
        return exit_success;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const SolveError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return exit_solver_error;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return exit_io_error;
    }
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    const ParseOutcome outcome = parse_config(args);
    if (!outcome.config) {
        if (outcome.exit_code == exit_success) {
            std::cout << outcome.message << "\n";
        } else {
            std::cerr << "configuration error: " << outcome.message << "\n";
        }
        return outcome.exit_code;
    }
    return run(*outcome.config);
}

}  // namespace fracburgers
