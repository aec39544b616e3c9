#include "wavegraph/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wavegraph {

double Matrix::max_asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) m = std::max(m, std::abs(at(i, j) - at(j, i)));
    return m;
}

double Matrix::frobenius() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double Matrix::offdiag_frobenius() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
}

EigenResult jacobi_eigen(Matrix S, double tol, int max_sweeps) {
    const int n = S.n();
    if (n == 0) throw std::invalid_argument("jacobi_eigen: empty matrix");
    if (!(tol > 0.0)) throw std::invalid_argument("jacobi_eigen: tol must be > 0");
    const double norm = S.frobenius();
    if (S.max_asymmetry() > tol * std::max(1.0, norm))
        throw std::invalid_argument("jacobi_eigen: matrix is not symmetric (asymmetry " +
                                    std::to_string(S.max_asymmetry()) + ")");
    const double threshold = tol * std::max(norm, 1e-300);

    Matrix V(n);
    for (int i = 0; i < n; ++i) V.at(i, i) = 1.0;

    int sweeps = 0;
    double off = S.offdiag_frobenius();
    while (off > threshold) {
        if (sweeps >= max_sweeps)
            throw std::runtime_error("jacobi_eigen: no convergence after " +
                                     std::to_string(max_sweeps) + " sweeps (off-diagonal " +
                                     std::to_string(off) + ", threshold " +
                                     std::to_string(threshold) + ")");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = S.at(p, q);
                if (apq == 0.0) continue;
                double tau = (S.at(q, q) - S.at(p, p)) / (2.0 * apq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double skp = S.at(k, p), skq = S.at(k, q);
                    S.at(k, p) = c * skp - s * skq;
                    S.at(k, q) = s * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    double spk = S.at(p, k), sqk = S.at(q, k);
                    S.at(p, k) = c * spk - s * sqk;
                    S.at(q, k) = s * spk + c * sqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = V.at(k, p), vkq = V.at(k, q);
                    V.at(k, p) = c * vkp - s * vkq;
                    V.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
        ++sweeps;
        off = S.offdiag_frobenius();
    }

    EigenResult res;
    res.achieved_offdiag = off;
    res.sweeps = sweeps;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return S.at(a, a) < S.at(b, b); });
    res.values.reserve(n);
    res.vectors.reserve(n);
    for (int i : order) {
        res.values.push_back(S.at(i, i));
        std::vector<double> v(n);
        for (int k = 0; k < n; ++k) v[k] = V.at(k, i);
        int imax = 0;
        for (int k = 1; k < n; ++k)
            if (std::abs(v[k]) > std::abs(v[imax])) imax = k;
        if (v[imax] < 0.0)
            for (double& x : v) x = -x;
        res.vectors.push_back(std::move(v));
    }
    return res;
}

}  // namespace wavegraph
