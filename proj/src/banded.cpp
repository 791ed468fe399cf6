#include "fracburgers/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fracburgers {

BandedMatrix::BandedMatrix(int n, int lower_bandwidth, int upper_bandwidth)
    : n_(n), kl_(lower_bandwidth), ku_(upper_bandwidth), width_(kl_ + ku_ + 1) {
    if (n < 1 || kl_ < 0 || ku_ < 0) {
        throw ContractViolation("BandedMatrix: invalid dimensions");
    }
    bands_.assign(static_cast<std::size_t>(n_) * width_, 0.0);
}

double& BandedMatrix::at(int i, int j) {
    if (!in_band(i, j)) {
        throw ContractViolation("BandedMatrix::at(" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside the band");
    }
    return bands_[static_cast<std::size_t>(i) * width_ + (j - i + kl_)];
}

double BandedMatrix::get(int i, int j) const {
    if (!in_band(i, j)) {
        return 0.0;
    }
    return bands_[static_cast<std::size_t>(i) * width_ + (j - i + kl_)];
}

std::vector<double> BandedMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        const int j0 = std::max(0, i - kl_);
        const int j1 = std::min(n_ - 1, i + ku_);
        double s = 0.0;
        for (int j = j0; j <= j1; ++j) {
            s += bands_[static_cast<std::size_t>(i) * width_ + (j - i + kl_)] *
                 x[static_cast<std::size_t>(j)];
        }
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

double BandedMatrix::inf_norm() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) {
        const int j0 = std::max(0, i - kl_);
        const int j1 = std::min(n_ - 1, i + ku_);
        double s = 0.0;
        for (int j = j0; j <= j1; ++j) {
            s += std::abs(bands_[static_cast<std::size_t>(i) * width_ + (j - i + kl_)]);
        }
        m = std::max(m, s);
    }
    return m;
}

BandedLU::BandedLU(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), width_(2 * kl + ku + 1) {
    work_.assign(static_cast<std::size_t>(n_) * width_, 0.0);
    pivot_.assign(static_cast<std::size_t>(n_), 0);
}

BandedLU BandedLU::factor(const BandedMatrix& a) {
    const int n = a.size();
    const int kl = a.lower_bandwidth();
    const int ku = a.upper_bandwidth();
    BandedLU lu(n, kl, ku);

    for (int i = 0; i < n; ++i) {
        const int j0 = std::max(0, i - kl);
        const int j1 = std::min(n - 1, i + ku);
        for (int j = j0; j <= j1; ++j) {
            lu.w(i, j) = a.get(i, j);
        }
    }

    const int ext = kl + ku;  // upper extent of U rows after pivoting fill
    for (int k = 0; k < n; ++k) {
        const int rmax = std::min(n - 1, k + kl);
        int p = k;
        double best = std::abs(lu.w(k, k));
        for (int r = k + 1; r <= rmax; ++r) {
            const double cand = std::abs(lu.w(r, k));
            if (cand > best) {
                best = cand;
                p = r;
            }
        }
        lu.pivot_[static_cast<std::size_t>(k)] = p;
        if (best == 0.0) {
            throw SingularMatrixError("banded LU: zero pivot in column " + std::to_string(k));
        }
        if (p != k) {
            const int jend = std::min(n - 1, k + ext);
            for (int j = k; j <= jend; ++j) {
                std::swap(lu.w(k, j), lu.w(p, j));
            }
        }
        const double ukk = lu.w(k, k);
        for (int r = k + 1; r <= rmax; ++r) {
            const double m = lu.w(r, k) / ukk;
            lu.w(r, k) = m;
            if (m != 0.0) {
                const int jend = std::min(n - 1, k + ext);
                for (int j = k + 1; j <= jend; ++j) {
                    lu.w(r, j) -= m * lu.w(k, j);
                }
            }
        }
    }
    return lu;
}

void BandedLU::solve(std::span<double> rhs) const {
    if (static_cast<int>(rhs.size()) != n_) {
        throw ContractViolation("BandedLU::solve: rhs size mismatch");
    }
    for (int k = 0; k < n_; ++k) {
        const int p = pivot_[static_cast<std::size_t>(k)];
        if (p != k) {
            std::swap(rhs[static_cast<std::size_t>(k)], rhs[static_cast<std::size_t>(p)]);
        }
        const int rmax = std::min(n_ - 1, k + kl_);
        for (int r = k + 1; r <= rmax; ++r) {
            rhs[static_cast<std::size_t>(r)] -= wc(r, k) * rhs[static_cast<std::size_t>(k)];
        }
    }
    const int ext = kl_ + ku_;
    for (int k = n_ - 1; k >= 0; --k) {
        double s = rhs[static_cast<std::size_t>(k)];
        const int jend = std::min(n_ - 1, k + ext);
        for (int j = k + 1; j <= jend; ++j) {
            s -= wc(k, j) * rhs[static_cast<std::size_t>(j)];
        }
        rhs[static_cast<std::size_t>(k)] = s / wc(k, k);
    }
}

}  // namespace fracburgers
