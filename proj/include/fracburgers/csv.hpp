#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fracburgers/analysis.hpp"
#include "fracburgers/grid.hpp"

namespace fracburgers {

/// Shortest 17-significant-digit decimal form; round-trips any double.
std::string format_g17(double v);

using MetadataList = std::vector<std::pair<std::string, std::string>>;

/// Study CSV: `# key=value` metadata comment lines, a `refine_param,error,order`
/// header, one row per refinement level. The first row's order field is empty.
std::string study_csv(const ConvergenceReport& report);

/// Final-state CSV: metadata lines, then `x,u_final,w_final` with one row per
/// mesh node.
std::string solution_csv(const GridFunction& u, const GridFunction& w,
                         const MetadataList& metadata);

struct ParsedStudy {
    MetadataList metadata;
    std::vector<ReportRow> rows;
};

ParsedStudy parse_study_csv(const std::string& text);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace fracburgers
