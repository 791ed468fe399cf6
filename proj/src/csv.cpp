#include "fracburgers/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fracburgers {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

MetadataList report_metadata(const ConvergenceReport& report) {
    return {
        {"problem", report.problem_key},
        {"alpha", format_g17(report.alpha)},
        {"mu1", format_g17(report.mu1)},
        {"mu2", format_g17(report.mu2)},
        {"lambda", format_g17(report.lambda)},
        {"fixed_" + report.fixed_name, std::to_string(report.fixed_value)},
        {"metric", report.metric},
    };
}

void append_metadata(std::string& out, const MetadataList& metadata) {
    for (const auto& [key, value] : metadata) {
        out += "# " + key + "=" + value + "\n";
    }
}

}  // namespace

std::string study_csv(const ConvergenceReport& report) {
    std::string out;
    append_metadata(out, report_metadata(report));
    out += "refine_param,error,order\n";
    for (const ReportRow& row : report.rows) {
        out += std::to_string(row.refine_param);
        out += ',';
        out += format_g17(row.error);
        out += ',';
        if (row.order) {
            out += format_g17(*row.order);
        }
        out += '\n';
    }
    return out;
}

std::string solution_csv(const GridFunction& u, const GridFunction& w,
                         const MetadataList& metadata) {
    std::string out;
    append_metadata(out, metadata);
    out += "x,u_final,w_final\n";
    for (int i = 0; i < u.node_count(); ++i) {
        out += format_g17(u.grid()->node(i));
        out += ',';
        out += format_g17(u[i]);
        out += ',';
        out += format_g17(w[i]);
        out += '\n';
    }
    return out;
}

ParsedStudy parse_study_csv(const std::string& text) {
    ParsedStudy parsed;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            std::size_t start = line.find_first_not_of(" \t", 1);
            const std::size_t eq = line.find('=', start);
            if (start == std::string::npos || eq == std::string::npos) {
                throw IoError("malformed metadata line: " + line);
            }
            parsed.metadata.emplace_back(line.substr(start, eq - start), line.substr(eq + 1));
            continue;
        }
        if (!header_seen) {
            if (line != "refine_param,error,order") {
                throw IoError("unexpected study CSV header: " + line);
            }
            header_seen = true;
            continue;
        }
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw IoError("malformed study CSV row: " + line);
        }
        ReportRow row{};
        row.refine_param = std::strtol(line.substr(0, c1).c_str(), nullptr, 10);
        row.error = std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr);
        const std::string order_field = line.substr(c2 + 1);
        if (!order_field.empty()) {
            row.order = std::strtod(order_field.c_str(), nullptr);
        }
        parsed.rows.push_back(row);
    }
    if (!header_seen) {
        throw IoError("study CSV has no header row");
    }
    return parsed;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace fracburgers
