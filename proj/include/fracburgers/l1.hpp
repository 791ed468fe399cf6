#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracburgers/grid.hpp"

namespace fracburgers {

/// L1 quadrature weights b_i = tau^(1-alpha)/(1-alpha) * ((i+1)^(1-alpha) - i^(1-alpha)),
/// the cell integrals of s^(-alpha) on a uniform time mesh. Strictly positive
/// and strictly decreasing.
class L1Weights {
public:
    L1Weights(double alpha, double tau, std::size_t count);

    double alpha() const { return alpha_; }
    double tau() const { return tau_; }
    std::size_t count() const { return weights_.size(); }
    double b(std::size_t i) const { return weights_[i]; }
    std::span<const double> coefficients() const { return weights_; }

    /// Weight multiplying the newest sequence entry in the memory operator.
    double implicit_coefficient() const { return weights_.front(); }

private:
    double alpha_;
    double tau_;
    std::vector<double> weights_;
};

/// Contiguous store of the mixed half-step sequence g^j feeding the memory
/// operator. Entry 0 holds the initial mixed value; entry j >= 1 holds the
/// half-step value appended after completing time step j. Append-only,
/// owned by one solver instance.
class HistoryBuffer {
public:
    explicit HistoryBuffer(GridPtr grid, std::size_t expected_entries = 0);

    /// Entries must satisfy the homogeneous Dirichlet condition exactly.
    void append(const GridFunction& entry);

    std::size_t size() const { return entries_; }
    std::size_t stride() const { return stride_; }
    const double* data() const { return storage_.data(); }
    std::span<const double> row(std::size_t j) const;
    GridFunction entry(std::size_t j) const;
    const GridPtr& grid() const { return grid_; }

private:
    GridPtr grid_;
    std::size_t stride_;
    std::size_t entries_ = 0;
    std::vector<double> storage_;
};

/// Discrete memory operator of the L1 scheme at step n (history must hold
/// entries 0..n):
///   b_0 g^n - sum_{j=1}^{n-1} (b_{n-j-1} - b_{n-j}) g^j - b_{n-1} g^0
GridFunction l1_memory_sum(const L1Weights& weights, const HistoryBuffer& history, std::size_t n);

/// The part of the memory operator independent of g^n (history entries
/// 0..n-1 suffice), so that
///   l1_memory_sum(n) = implicit_coefficient * g^n + l1_explicit_part(n).
GridFunction l1_explicit_part(const L1Weights& weights, const HistoryBuffer& history, std::size_t n);

double l1_implicit_coefficient(const L1Weights& weights);

}  // namespace fracburgers
