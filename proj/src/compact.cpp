#include "fracburgers/compact.hpp"

#include "fracburgers/banded.hpp"
#include "fracburgers/operators.hpp"

namespace fracburgers {

GridFunction psi_apply(const GridFunction& u, const GridFunction& v) {
    require_same_grid(u, v, "psi_apply");
    GridFunction out(u.grid());
    const double inv6h = 1.0 / (6.0 * u.grid()->step());
    for (int i = 1; i < u.last_index(); ++i) {
        out[i] = inv6h * (u[i] * (v[i + 1] - v[i - 1]) + u[i + 1] * v[i + 1] - u[i - 1] * v[i - 1]);
    }
    return out;
}

PsiCoefficients::PsiCoefficients(GridPtr grid) : grid_(std::move(grid)) {
    const std::size_t count = static_cast<std::size_t>(grid_->subdivisions()) + 1;
    lower_.assign(count, 0.0);
    diag_.assign(count, 0.0);
    upper_.assign(count, 0.0);
}

void PsiCoefficients::add_scaled(const PsiCoefficients& other, double s) {
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        lower_[i] += s * other.lower_[i];
        diag_[i] += s * other.diag_[i];
        upper_[i] += s * other.upper_[i];
    }
}

void PsiCoefficients::scale(double s) {
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        lower_[i] *= s;
        diag_[i] *= s;
        upper_[i] *= s;
    }
}

GridFunction PsiCoefficients::apply(const GridFunction& v) const {
    if (!(v.grid() == grid_ || v.grid()->same_mesh(*grid_))) {
        throw ContractViolation("PsiCoefficients::apply: grid mismatch");
    }
    GridFunction out(grid_);
    for (int i = 1; i <= last_interior(); ++i) {
        out[i] = lower(i) * v[i - 1] + diag(i) * v[i] + upper(i) * v[i + 1];
    }
    return out;
}

PsiCoefficients psi_linearized_in_second(const GridFunction& u_frozen) {
    PsiCoefficients c(u_frozen.grid());
    const double inv6h = 1.0 / (6.0 * u_frozen.grid()->step());
    for (int i = 1; i <= c.last_interior(); ++i) {
        c.lower(i) = -(u_frozen[i] + u_frozen[i - 1]) * inv6h;
        c.diag(i) = 0.0;
        c.upper(i) = (u_frozen[i] + u_frozen[i + 1]) * inv6h;
    }
    return c;
}

PsiCoefficients psi_linearized_in_first(const GridFunction& v_frozen) {
    PsiCoefficients c(v_frozen.grid());
    const double inv6h = 1.0 / (6.0 * v_frozen.grid()->step());
    for (int i = 1; i <= c.last_interior(); ++i) {
        c.lower(i) = -v_frozen[i - 1] * inv6h;
        c.diag(i) = (v_frozen[i + 1] - v_frozen[i - 1]) * inv6h;
        c.upper(i) = v_frozen[i + 1] * inv6h;
    }
    return c;
}

PsiCoefficients psi_semi_implicit_diag(const GridFunction& u_lagged) {
    PsiCoefficients c(u_lagged.grid());
    const double inv6h = 1.0 / (6.0 * u_lagged.grid()->step());
    for (int i = 1; i <= c.last_interior(); ++i) {
        const double s = (u_lagged[i - 1] + u_lagged[i] + u_lagged[i + 1]) * inv6h;
        c.lower(i) = -s;
        c.diag(i) = 0.0;
        c.upper(i) = s;
    }
    return c;
}

GridFunction compact_average_apply(const GridFunction& v) {
    GridFunction out(v.grid());
    out[0] = v[0];
    out[v.last_index()] = v[v.last_index()];
    for (int i = 1; i < v.last_index(); ++i) {
        out[i] = (v[i - 1] + 10.0 * v[i] + v[i + 1]) / 12.0;
    }
    return out;
}

GridFunction recover_w(const GridFunction& u) {
    if (!u.is_dirichlet()) {
        throw ContractViolation("recover_w: input must satisfy the Dirichlet condition");
    }
    const int m = u.last_index() - 1;
    BandedMatrix h_op(m, 1, 1);
    for (int r = 0; r < m; ++r) {
        h_op.at(r, r) = 10.0 / 12.0;
        if (r > 0) {
            h_op.at(r, r - 1) = 1.0 / 12.0;
        }
        if (r + 1 < m) {
            h_op.at(r, r + 1) = 1.0 / 12.0;
        }
    }
    std::vector<double> rhs(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        rhs[static_cast<std::size_t>(i - 1)] = second_diff(u, i);
    }
    BandedLU lu = BandedLU::factor(h_op);
    lu.solve(rhs);

    GridFunction w(u.grid());
    for (int i = 1; i <= m; ++i) {
        w[i] = rhs[static_cast<std::size_t>(i - 1)];
    }
    return w;
}

}  // namespace fracburgers
