#pragma once

#include <vector>

#include "fracburgers/grid.hpp"

namespace fracburgers {

/// Three-point convection operator psi(u, v)_i = (1/3) [u_i Dx(v)_i + Dx(u v)_i]
/// at interior nodes, zero at the boundary. Bilinear, not commutative, and
/// orthogonal to its second argument under the interior inner product.
GridFunction psi_apply(const GridFunction& u, const GridFunction& v);

/// psi frozen in one argument is an exact tridiagonal map in the other.
/// Stores one (lower, diag, upper) multiplier triple per interior node.
class PsiCoefficients {
public:
    explicit PsiCoefficients(GridPtr grid);

    double lower(int i) const { return lower_[static_cast<std::size_t>(i)]; }
    double diag(int i) const { return diag_[static_cast<std::size_t>(i)]; }
    double upper(int i) const { return upper_[static_cast<std::size_t>(i)]; }

    double& lower(int i) { return lower_[static_cast<std::size_t>(i)]; }
    double& diag(int i) { return diag_[static_cast<std::size_t>(i)]; }
    double& upper(int i) { return upper_[static_cast<std::size_t>(i)]; }

    const GridPtr& grid() const { return grid_; }
    int last_interior() const { return grid_->subdivisions() - 1; }

    void add_scaled(const PsiCoefficients& other, double s);
    void scale(double s);

    /// out_i = lower_i v_{i-1} + diag_i v_i + upper_i v_{i+1}, boundary zero.
    GridFunction apply(const GridFunction& v) const;

private:
    GridPtr grid_;
    std::vector<double> lower_, diag_, upper_;
};

/// psi(u_frozen, .) as a tridiagonal map in the second argument.
PsiCoefficients psi_linearized_in_second(const GridFunction& u_frozen);

/// psi(., v_frozen) as a tridiagonal map in the first argument.
PsiCoefficients psi_linearized_in_first(const GridFunction& v_frozen);

/// The lagged-sum form of psi(u, u): v -> (u_{i-1}+u_i+u_{i+1})/(6h) * (v_{i+1}-v_{i-1})
/// with the sum factor frozen at the previous iterate.
PsiCoefficients psi_semi_implicit_diag(const GridFunction& u_lagged);

/// Compact averaging H v = v + (h^2/12) * second difference at interior nodes;
/// boundary values pass through unchanged.
GridFunction compact_average_apply(const GridFunction& v);

/// Recovers the auxiliary second-derivative field: solves H w = second_diff(u)
/// with w = 0 at the boundary. The tridiagonal system is strictly diagonally
/// dominant.
GridFunction recover_w(const GridFunction& u);

}  // namespace fracburgers
