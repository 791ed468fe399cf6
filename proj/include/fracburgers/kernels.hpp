#pragma once

#include <cstddef>
#include <span>

namespace fracburgers::kernels {

/// Row-block size of the fractional-memory combination kernel. Partial sums
/// are formed per block and folded in block order, so results are identical
/// for any OpenMP thread count.
inline constexpr std::size_t history_block_rows = 512;

/// Explicit part of the discrete fractional memory operator at step n:
///
///   out[i] = -b[n-1] * rows(0)[i] + sum_{j=1}^{n-1} (b[n-j] - b[n-j-1]) * rows(j)[i]
///
/// where rows(j) = rows + j*stride points at the j-th stored history entry
/// and entry_count = n >= 1. `weights_b` must hold at least n coefficients.
/// OpenMP-parallel over row blocks; deterministic independent of threads.
void l1_explicit_combine(std::span<const double> weights_b, const double* rows,
                         std::size_t stride, std::size_t entry_count,
                         std::span<double> out);

/// Plain streaming implementation of the same sum, kept as the reference
/// for tests and benchmarks.
void l1_explicit_combine_reference(std::span<const double> weights_b, const double* rows,
                                   std::size_t stride, std::size_t entry_count,
                                   std::span<double> out);

/// max_i |a[i] - b[i]| with an OpenMP max reduction.
double max_abs_diff(std::span<const double> a, std::span<const double> b);

double max_abs_diff_reference(std::span<const double> a, std::span<const double> b);

}  // namespace fracburgers::kernels
