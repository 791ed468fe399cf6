#include "fracburgers/grid.hpp"

#include <cmath>
#include <string>

namespace fracburgers {

Grid1D::Grid1D(double length, int subdivisions)
    : length_(length), subdivisions_(subdivisions) {
    if (!(length > 0.0)) {
        throw ConfigError("grid length must be positive, got " + std::to_string(length));
    }
    if (subdivisions < 4) {
        throw ConfigError("grid needs at least 4 subdivisions for the compact stencils, got " +
                          std::to_string(subdivisions));
    }
    step_ = length_ / subdivisions_;
    nodes_.resize(static_cast<std::size_t>(subdivisions_) + 1);
    for (int i = 0; i <= subdivisions_; ++i) {
        nodes_[static_cast<std::size_t>(i)] = i * step_;
    }
}

GridPtr make_grid(double length, int subdivisions) {
    return std::make_shared<const Grid1D>(length, subdivisions);
}

TimeMesh::TimeMesh(double horizon, int steps) : horizon_(horizon), steps_(steps) {
    if (!(horizon > 0.0)) {
        throw ConfigError("time horizon must be positive, got " + std::to_string(horizon));
    }
    if (steps < 1) {
        throw ConfigError("time mesh needs at least one step, got " + std::to_string(steps));
    }
    tau_ = horizon_ / steps_;
}

GridFunction::GridFunction(GridPtr grid) : grid_(std::move(grid)) {
    values_.assign(static_cast<std::size_t>(grid_->subdivisions()) + 1, 0.0);
}

GridFunction GridFunction::sample(GridPtr grid, const std::function<double(double)>& f) {
    GridFunction out(std::move(grid));
    for (int i = 0; i < out.node_count(); ++i) {
        out[i] = f(out.grid()->node(i));
    }
    return out;
}

void GridFunction::add_scaled(const GridFunction& g, double s) {
    require_same_grid(*this, g, "GridFunction::add_scaled");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        values_[i] += s * g.values_[i];
    }
}

void GridFunction::scale(double s) {
    for (double& v : values_) {
        v *= s;
    }
}

GridFunction GridFunction::linear_combination(double a, const GridFunction& u,
                                              double b, const GridFunction& v) {
    require_same_grid(u, v, "GridFunction::linear_combination");
    GridFunction out(u.grid());
    for (int i = 0; i < out.node_count(); ++i) {
        out[i] = a * u[i] + b * v[i];
    }
    return out;
}

bool GridFunction::all_finite() const {
    for (double v : values_) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

void require_same_grid(const GridFunction& u, const GridFunction& v, const char* where) {
    if (!u.same_grid(v)) {
        throw ContractViolation(std::string(where) + ": grid mismatch");
    }
}

}  // namespace fracburgers
