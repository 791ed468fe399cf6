#pragma once

#include "fracburgers/grid.hpp"

namespace fracburgers {

/// Backward difference at the half node i-1/2: (v_i - v_{i-1})/h, 1 <= i <= M.
double diff_forward_half(const GridFunction& v, int i);

/// Central difference (v_{i+1} - v_{i-1})/(2h), 1 <= i <= M-1.
double central_diff(const GridFunction& v, int i);

/// Second difference (v_{i+1} - 2 v_i + v_{i-1})/h^2, 1 <= i <= M-1.
double second_diff(const GridFunction& v, int i);

/// Second difference at every interior node; boundary entries are zero.
GridFunction second_diff_field(const GridFunction& v);

/// Interior inner product h * sum_{i=1}^{M-1} u_i v_i.
double inner_product(const GridFunction& u, const GridFunction& v);

double l2_norm(const GridFunction& v);

/// |v|_1 = sqrt(h * sum_{i=1}^{M} (diff_forward_half)^2).
double h1_seminorm(const GridFunction& v);

/// max_{0<=i<=M} |v_i|, boundary nodes included.
double sup_norm(const GridFunction& v);

double sup_norm_diff(const GridFunction& u, const GridFunction& v);

/// (v_next + v_prev)/2 nodewise.
GridFunction half_step_average(const GridFunction& v_prev, const GridFunction& v_next);

/// (v_next - v_prev)/tau nodewise.
GridFunction time_diff(const GridFunction& v_prev, const GridFunction& v_next, double tau);

}  // namespace fracburgers
