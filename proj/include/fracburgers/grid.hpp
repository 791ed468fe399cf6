#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "fracburgers/errors.hpp"

namespace fracburgers {

/// Uniform spatial mesh on [0, L] with M subdivisions, nodes x_i = i*h.
class Grid1D {
public:
    Grid1D(double length, int subdivisions);

    double length() const { return length_; }
    int subdivisions() const { return subdivisions_; }
    double step() const { return step_; }
    double node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    std::span<const double> nodes() const { return nodes_; }

    bool same_mesh(const Grid1D& other) const {
        return length_ == other.length_ && subdivisions_ == other.subdivisions_;
    }

private:
    double length_;
    int subdivisions_;
    double step_;
    std::vector<double> nodes_;
};

using GridPtr = std::shared_ptr<const Grid1D>;

GridPtr make_grid(double length, int subdivisions);

/// Uniform time mesh on [0, T] with N steps, t_n = n*tau.
class TimeMesh {
public:
    TimeMesh(double horizon, int steps);

    double horizon() const { return horizon_; }
    int steps() const { return steps_; }
    double tau() const { return tau_; }
    double t(int n) const { return tau_ * n; }

private:
    double horizon_;
    int steps_;
    double tau_;
};

/// Values of a scalar field at all M+1 mesh nodes, boundary included.
class GridFunction {
public:
    explicit GridFunction(GridPtr grid);

    static GridFunction zeros(GridPtr grid) { return GridFunction(std::move(grid)); }
    static GridFunction sample(GridPtr grid, const std::function<double(double)>& f);

    const GridPtr& grid() const { return grid_; }
    int node_count() const { return static_cast<int>(values_.size()); }
    int last_index() const { return node_count() - 1; }

    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return values_[static_cast<std::size_t>(i)]; }

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    bool is_dirichlet() const { return values_.front() == 0.0 && values_.back() == 0.0; }
    void zero_boundary() {
        values_.front() = 0.0;
        values_.back() = 0.0;
    }

    bool same_grid(const GridFunction& other) const {
        return grid_ == other.grid_ || grid_->same_mesh(*other.grid_);
    }

    /// this += s * g, nodewise.
    void add_scaled(const GridFunction& g, double s);
    void scale(double s);

    static GridFunction linear_combination(double a, const GridFunction& u,
                                           double b, const GridFunction& v);

    bool all_finite() const;

private:
    GridPtr grid_;
    std::vector<double> values_;
};

void require_same_grid(const GridFunction& u, const GridFunction& v, const char* where);

}  // namespace fracburgers
