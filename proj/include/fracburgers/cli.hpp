#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracburgers/errors.hpp"

namespace fracburgers {

enum class StudyKind { Single, TimeOrder, SpaceOrder, SelfTime, SelfSpace, Stability };

std::string study_kind_name(StudyKind kind);
std::optional<StudyKind> parse_study_kind(const std::string& name);

struct RunConfig {
    std::string problem = "example1";
    double alpha = 0.5;
    double mu1 = 1.0;
    double mu2 = 1.0;
    double lambda = 1.0;
    int space_m = 80;
    int time_n = 64;
    double fp_tolerance = 1e-8;
    int max_fp_iterations = 100;
    std::string output_path = "out.csv";
    StudyKind study = StudyKind::Single;
    std::vector<int> refinement_list;
    double epsilon = 1e-6;

    void validate() const;  // throws ConfigError
};

inline constexpr int exit_success = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_solver_error = 3;
inline constexpr int exit_io_error = 4;

struct ParseOutcome {
    std::optional<RunConfig> config;  // empty when help was requested or parse failed
    int exit_code = exit_success;
    std::string message;
};

/// Parses command-line style arguments (flags plus an optional key=value
/// config file referenced with --config; flags override file values) and
/// validates the result. Never throws; diagnostics land in the outcome.
ParseOutcome parse_config(const std::vector<std::string>& args);

/// Executes the configured study, writes the CSV, and mirrors the table on
/// standard output. Returns a process exit code.
int run(const RunConfig& config);

/// Full CLI entry: parse, report, run.
int cli_main(int argc, const char* const* argv);

/// Worker-count environment knob used by study fan-out (default 1).
int worker_count_from_env();

}  // namespace fracburgers
