#include "fracburgers/l1.hpp"

#include <cmath>
#include <string>

#include "fracburgers/kernels.hpp"

namespace fracburgers {

L1Weights::L1Weights(double alpha, double tau, std::size_t count)
    : alpha_(alpha), tau_(tau) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw ConfigError("L1 weights need alpha in (0,1), got " + std::to_string(alpha));
    }
    if (!(tau > 0.0)) {
        throw ConfigError("L1 weights need tau > 0, got " + std::to_string(tau));
    }
    if (count == 0) {
        throw ConfigError("L1 weights need a positive count");
    }
    weights_.resize(count);
    const double p = 1.0 - alpha;
    const double scale = std::pow(tau, p) / p;
    for (std::size_t i = 0; i < count; ++i) {
        const double a = static_cast<double>(i);
        weights_[i] = scale * (std::pow(a + 1.0, p) - std::pow(a, p));
    }
}

HistoryBuffer::HistoryBuffer(GridPtr grid, std::size_t expected_entries)
    : grid_(std::move(grid)), stride_(static_cast<std::size_t>(grid_->subdivisions()) + 1) {
    storage_.reserve(stride_ * (expected_entries + 1));
}

void HistoryBuffer::append(const GridFunction& entry) {
    if (!(entry.grid() == grid_ || entry.grid()->same_mesh(*grid_))) {
        throw ContractViolation("HistoryBuffer::append: grid mismatch");
    }
    if (!entry.is_dirichlet()) {
        throw ContractViolation("HistoryBuffer::append: entry violates the Dirichlet condition");
    }
    storage_.insert(storage_.end(), entry.values().begin(), entry.values().end());
    ++entries_;
}

std::span<const double> HistoryBuffer::row(std::size_t j) const {
    if (j >= entries_) {
        throw ContractViolation("HistoryBuffer::row: index " + std::to_string(j) +
                                " >= size " + std::to_string(entries_));
    }
    return {storage_.data() + j * stride_, stride_};
}

GridFunction HistoryBuffer::entry(std::size_t j) const {
    GridFunction out(grid_);
    auto r = row(j);
    std::copy(r.begin(), r.end(), out.values().begin());
    return out;
}

GridFunction l1_explicit_part(const L1Weights& weights, const HistoryBuffer& history,
                              std::size_t n) {
    if (n < 1) {
        throw ContractViolation("l1_explicit_part: step index must be >= 1");
    }
    if (history.size() < n) {
        throw ContractViolation("l1_explicit_part: history holds " +
                                std::to_string(history.size()) + " entries, step " +
                                std::to_string(n) + " needs " + std::to_string(n));
    }
    if (weights.count() < n) {
        throw ContractViolation("l1_explicit_part: not enough L1 weights");
    }
    GridFunction out(history.grid());
    kernels::l1_explicit_combine(weights.coefficients(), history.data(), history.stride(), n,
                                 out.values());
    return out;
}

GridFunction l1_memory_sum(const L1Weights& weights, const HistoryBuffer& history,
                           std::size_t n) {
    if (history.size() < n + 1) {
        throw ContractViolation("l1_memory_sum: history holds " + std::to_string(history.size()) +
                                " entries, step " + std::to_string(n) + " needs " +
                                std::to_string(n + 1));
    }
    GridFunction out = l1_explicit_part(weights, history, n);
    const double b0 = weights.implicit_coefficient();
    auto newest = history.row(n);
    for (int i = 0; i < out.node_count(); ++i) {
        out[i] += b0 * newest[static_cast<std::size_t>(i)];
    }
    return out;
}

double l1_implicit_coefficient(const L1Weights& weights) {
    return weights.implicit_coefficient();
}

}  // namespace fracburgers
