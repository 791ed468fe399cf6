#include "fracburgers/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fracburgers::kernels {

namespace {

inline double coefficient(std::span<const double> b, std::size_t n, std::size_t j) {
    return j == 0 ? -b[n - 1] : b[n - j] - b[n - j - 1];
}

}  // namespace

void l1_explicit_combine_reference(std::span<const double> weights_b, const double* rows,
                                   std::size_t stride, std::size_t entry_count,
                                   std::span<double> out) {
    const std::size_t n = entry_count;
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double c = coefficient(weights_b, n, j);
        const double* row = rows + j * stride;
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += c * row[i];
        }
    }
}

void l1_explicit_combine(std::span<const double> weights_b, const double* rows,
                         std::size_t stride, std::size_t entry_count,
                         std::span<double> out) {
    const std::size_t n = entry_count;
    const std::size_t nodes = out.size();
    const std::size_t nblocks = (n + history_block_rows - 1) / history_block_rows;

    if (nblocks <= 1) {
        l1_explicit_combine_reference(weights_b, rows, stride, entry_count, out);
        return;
    }

    std::vector<double> partial(nblocks * nodes, 0.0);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t blk = 0; blk < static_cast<std::ptrdiff_t>(nblocks); ++blk) {
        const std::size_t j0 = static_cast<std::size_t>(blk) * history_block_rows;
        const std::size_t j1 = std::min(j0 + history_block_rows, n);
        double* acc = partial.data() + static_cast<std::size_t>(blk) * nodes;
        for (std::size_t j = j0; j < j1; ++j) {
            const double c = coefficient(weights_b, n, j);
            const double* row = rows + j * stride;
            for (std::size_t i = 0; i < nodes; ++i) {
                acc[i] += c * row[i];
            }
        }
    }

    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t blk = 0; blk < nblocks; ++blk) {
        const double* acc = partial.data() + blk * nodes;
        for (std::size_t i = 0; i < nodes; ++i) {
            out[i] += acc[i];
        }
    }
}

double max_abs_diff_reference(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static) reduction(max : m)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
        m = std::max(m, std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]));
    }
    return m;
}

}  // namespace fracburgers::kernels
