#include "fracburgers/operators.hpp"

#include <cmath>
#include <string>

namespace fracburgers {

namespace {

void require_index(int i, int lo, int hi, const char* where) {
    if (i < lo || i > hi) {
        throw ContractViolation(std::string(where) + ": index " + std::to_string(i) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

}  // namespace

double diff_forward_half(const GridFunction& v, int i) {
    require_index(i, 1, v.last_index(), "diff_forward_half");
    return (v[i] - v[i - 1]) / v.grid()->step();
}

double central_diff(const GridFunction& v, int i) {
    require_index(i, 1, v.last_index() - 1, "central_diff");
    return (v[i + 1] - v[i - 1]) / (2.0 * v.grid()->step());
}

double second_diff(const GridFunction& v, int i) {
    require_index(i, 1, v.last_index() - 1, "second_diff");
    const double h = v.grid()->step();
    return (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
}

GridFunction second_diff_field(const GridFunction& v) {
    GridFunction out(v.grid());
    const double h = v.grid()->step();
    const double inv_h2 = 1.0 / (h * h);
    for (int i = 1; i < v.last_index(); ++i) {
        out[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) * inv_h2;
    }
    return out;
}

double inner_product(const GridFunction& u, const GridFunction& v) {
    require_same_grid(u, v, "inner_product");
    double sum = 0.0;
    for (int i = 1; i < u.last_index(); ++i) {
        sum += u[i] * v[i];
    }
    return u.grid()->step() * sum;
}

double l2_norm(const GridFunction& v) {
    return std::sqrt(inner_product(v, v));
}

double h1_seminorm(const GridFunction& v) {
    const double h = v.grid()->step();
    double sum = 0.0;
    for (int i = 1; i <= v.last_index(); ++i) {
        const double d = (v[i] - v[i - 1]) / h;
        sum += d * d;
    }
    return std::sqrt(h * sum);
}

double sup_norm(const GridFunction& v) {
    double m = 0.0;
    for (double x : v.values()) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double sup_norm_diff(const GridFunction& u, const GridFunction& v) {
    require_same_grid(u, v, "sup_norm_diff");
    double m = 0.0;
    for (int i = 0; i < u.node_count(); ++i) {
        m = std::max(m, std::abs(u[i] - v[i]));
    }
    return m;
}

GridFunction half_step_average(const GridFunction& v_prev, const GridFunction& v_next) {
    return GridFunction::linear_combination(0.5, v_prev, 0.5, v_next);
}

GridFunction time_diff(const GridFunction& v_prev, const GridFunction& v_next, double tau) {
    return GridFunction::linear_combination(-1.0 / tau, v_prev, 1.0 / tau, v_next);
}

}  // namespace fracburgers
