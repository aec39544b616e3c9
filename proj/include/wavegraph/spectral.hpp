#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "wavegraph/graph.hpp"
#include "wavegraph/jacobi.hpp"
#include "wavegraph/laplacian.hpp"

namespace wavegraph {

/// Dirichlet wave data on a finite Omega: initial value g0 and velocity h0,
/// both supported exactly on Omega; u vanishes on the vertex boundary.
struct DirichletProblem {
    std::shared_ptr<const WeightedGraph> graph;
    VertexSet omega;
    VertexFunction g0;
    VertexFunction h0;

    static DirichletProblem make(std::shared_ptr<const WeightedGraph> graph, VertexSet omega,
                                 VertexFunction g0, VertexFunction h0);
};

struct DirichletMatrices {
    VertexSet omega;
    Matrix L;  // -Laplacian with zero boundary data, rows scaled by 1/mu_x
    Matrix S;  // mu-symmetrized form M^{1/2} L M^{-1/2}
};

/// Matrix of -Delta on Omega with zero boundary data. Every connected piece
/// of Omega must touch its vertex boundary, otherwise the Dirichlet spectrum
/// is not strictly positive and the request is rejected.
DirichletMatrices dirichlet_matrix(const WeightedGraph& g, const VertexSet& omega);

/// Dirichlet eigenpairs on Omega: 0 < lambda_1 <= ... <= lambda_N with
/// mu-orthonormal eigenvectors psi_i (psi[i] is ordered like omega.ids()).
struct SpectralData {
    VertexSet omega;
    VertexSet boundary;
    std::vector<double> mu;
    std::vector<double> lambda;
    std::vector<std::vector<double>> psi;
    double orthonormality_error = 0.0;  // max |<psi_i,psi_j>_mu - delta_ij|
    double eigen_residual = 0.0;        // max_i sup |(-Delta)psi_i - lambda_i psi_i|
    int sweeps = 0;

    std::size_t n() const { return lambda.size(); }
    double inner_mu(const VertexFunction& f, std::size_t i) const;
};

SpectralData eigendecompose(const WeightedGraph& g, const VertexSet& omega,
                            double tol = 1e-12, int max_sweeps = 100);

/// Eigen-expansion solution of the homogeneous Dirichlet wave problem:
///   u(t,x) = sum_i cos(t sqrt(l_i)) a_i psi_i(x)
///          + sum_i sin(t sqrt(l_i))/sqrt(l_i) b_i psi_i(x),
/// analytic in t with exact termwise derivatives of any order.
class WaveSolution {
public:
    WaveSolution(std::shared_ptr<const WeightedGraph> graph, SpectralData spectral,
                 std::vector<double> a, std::vector<double> b);

    double evaluate(double t, VertexId x) const;
    double time_derivative(double t, VertexId x, int order) const;

    /// max over samples and x in Omega of |d2u/dt2 - Delta u| (zero extension).
    double residual(const std::vector<double>& t_samples) const;

    /// Conserved energy (kinetic + Dirichlet form) at time t.
    double energy(double t) const;

    /// Worst sup-norm defect of sum a_i psi_i = g0 and sum b_i psi_i = h0.
    double reconstruction_error(const VertexFunction& g0, const VertexFunction& h0) const;

    const SpectralData& spectral() const { return spectral_; }
    const std::vector<double>& coefficients_a() const { return a_; }
    const std::vector<double>& coefficients_b() const { return b_; }
    const WeightedGraph& graph() const { return *graph_; }

    // test hook: perturbing coefficients breaks reconstruction, not the PDE
    void perturb_coefficient_a(std::size_t i, double delta) { a_.at(i) += delta; }

private:
    double laplacian_of_slice(double t, int omega_idx) const;

    std::shared_ptr<const WeightedGraph> graph_;
    SpectralData spectral_;
    std::vector<double> a_;
    std::vector<double> b_;
};

WaveSolution solve_wave(const DirichletProblem& problem, double tol = 1e-12);

/// Time-indexed source term for the inhomogeneous problem.
using SourceTerm = std::function<double(double t, VertexId x)>;

/// Duhamel extension: adds mode-wise convolutions
///   int_0^t sin((t-s) sqrt(l_i))/sqrt(l_i) f_i(s) ds
/// evaluated by composite Simpson quadrature at the given step. With f == 0
/// this reproduces the homogeneous solution exactly.
class ForcedWaveSolution {
public:
    ForcedWaveSolution(WaveSolution base, SourceTerm f, double step);

    double evaluate(double t, VertexId x) const;
    double time_derivative(double t, VertexId x, int order) const;  // order <= 2

    const WaveSolution& base() const { return base_; }

private:
    struct ModeIntegrals {
        std::vector<double> C;  // int_0^t cos(s sqrt(l_i)) f_i(s) ds
        std::vector<double> S;  // int_0^t sin(s sqrt(l_i)) f_i(s) ds
    };
    ModeIntegrals integrate(double t) const;

    WaveSolution base_;
    SourceTerm f_;
    double step_;
};

ForcedWaveSolution solve_wave_forced(const DirichletProblem& problem, SourceTerm f,
                                     double step, double tol = 1e-12);

}  // namespace wavegraph
