#pragma once

#include <span>
#include <vector>

#include "fracburgers/errors.hpp"

namespace fracburgers {

/// Square banded matrix with dense storage of the diagonals. Entries
/// outside the band are structural zeros.
class BandedMatrix {
public:
    BandedMatrix(int n, int lower_bandwidth, int upper_bandwidth);

    int size() const { return n_; }
    int lower_bandwidth() const { return kl_; }
    int upper_bandwidth() const { return ku_; }

    bool in_band(int i, int j) const {
        return i >= 0 && i < n_ && j >= 0 && j < n_ && j - i >= -kl_ && j - i <= ku_;
    }

    double& at(int i, int j);
    void add(int i, int j, double v) { at(i, j) += v; }
    double get(int i, int j) const;

    std::vector<double> multiply(std::span<const double> x) const;

    /// Max absolute row sum.
    double inf_norm() const;

private:
    int n_, kl_, ku_, width_;
    std::vector<double> bands_;
};

/// LU factorization of a banded matrix with partial pivoting. Fill grows the
/// upper bandwidth to kl+ku, which the working storage accommodates.
class BandedLU {
public:
    /// Throws SingularMatrixError on an exactly zero pivot.
    static BandedLU factor(const BandedMatrix& a);

    /// Solves A x = rhs in place.
    void solve(std::span<double> rhs) const;

private:
    BandedLU(int n, int kl, int ku);

    double& w(int i, int j) { return work_[static_cast<std::size_t>(i) * width_ + (j - i + kl_)]; }
    double wc(int i, int j) const {
        return work_[static_cast<std::size_t>(i) * width_ + (j - i + kl_)];
    }

    int n_, kl_, ku_, width_;
    std::vector<double> work_;
    std::vector<int> pivot_;
};

}  // namespace fracburgers
