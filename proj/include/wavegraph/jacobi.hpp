#pragma once

#include <vector>

namespace wavegraph {

/// Dense square matrix, row-major. Small-N spectral work only.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int n() const { return n_; }
    double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    double max_asymmetry() const;
    double frobenius() const;
    double offdiag_frobenius() const;

private:
    int n_ = 0;
    std::vector<double> a_;
};

struct EigenResult {
    std::vector<double> values;           // ascending
    std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
    double achieved_offdiag = 0.0;
    int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a symmetric matrix. Stops once the
/// off-diagonal Frobenius norm falls below tol * ||S||_F; throws after
/// `max_sweeps` sweeps, reporting the residual reached. Eigenvector signs
/// are canonicalized (largest-magnitude entry positive).
EigenResult jacobi_eigen(Matrix S, double tol = 1e-12, int max_sweeps = 100);

}  // namespace wavegraph
