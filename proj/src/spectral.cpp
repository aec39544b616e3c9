#include "wavegraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavegraph {

namespace {

// Components of the subgraph induced on omega; each must reach delta-omega.
void require_positive_spectrum(const WeightedGraph& g, const VertexSet& omega) {
    std::vector<VertexId> todo(omega.begin(), omega.end());
    std::unordered_map<VertexId, int> comp;
    int ncomp = 0;
    for (VertexId seed : todo) {
        if (comp.count(seed)) continue;
        std::vector<VertexId> stack{seed};
        comp[seed] = ncomp;
        while (!stack.empty()) {
            VertexId cur = stack.back();
            stack.pop_back();
            for (const auto& nb : g.neighbors(cur)) {
                VertexId y = g.id_at(nb.idx);
                if (omega.contains(y) && !comp.count(y)) {
                    comp[y] = ncomp;
                    stack.push_back(y);
                }
            }
        }
        ++ncomp;
    }
    std::vector<char> touches(ncomp, 0);
    for (VertexId v : omega)
        for (const auto& nb : g.neighbors(v))
            if (!omega.contains(g.id_at(nb.idx))) touches[comp[v]] = 1;
    for (int c = 0; c < ncomp; ++c)
        if (!touches[c])
            throw std::invalid_argument(
                "dirichlet_matrix: Dirichlet spectrum not strictly positive (a component of "
                "Omega has empty vertex boundary)");
}

int omega_pos(const VertexSet& omega, VertexId v) {
    const auto& ids = omega.ids();
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    return static_cast<int>(it - ids.begin());
}

}  // namespace

DirichletProblem DirichletProblem::make(std::shared_ptr<const WeightedGraph> graph,
                                        VertexSet omega, VertexFunction g0,
                                        VertexFunction h0) {
    if (!graph) throw std::invalid_argument("DirichletProblem: null graph");
    for (VertexId v : omega) graph->index_of(v);
    if (g0.support() != omega)
        throw std::invalid_argument("DirichletProblem: g0 must be supported exactly on Omega");
    if (h0.support() != omega)
        throw std::invalid_argument("DirichletProblem: h0 must be supported exactly on Omega");
    return DirichletProblem{std::move(graph), std::move(omega), std::move(g0), std::move(h0)};
}

DirichletMatrices dirichlet_matrix(const WeightedGraph& g, const VertexSet& omega) {
    if (omega.empty()) throw std::invalid_argument("dirichlet_matrix: Omega is empty");
    for (VertexId v : omega) g.index_of(v);
    require_positive_spectrum(g, omega);

    const int n = static_cast<int>(omega.size());
    DirichletMatrices out;
    out.omega = omega;
    out.L = Matrix(n);
    out.S = Matrix(n);
    int i = 0;
    for (VertexId x : omega) {
        out.L.at(i, i) = g.degree(x);
        out.S.at(i, i) = g.degree(x);
        for (const auto& nb : g.neighbors(x)) {
            VertexId y = g.id_at(nb.idx);
            if (!omega.contains(y)) continue;
            int j = omega_pos(omega, y);
            out.L.at(i, j) = -nb.w / g.mu(x);
            out.S.at(i, j) = -nb.w / std::sqrt(g.mu(x) * g.mu(y));
        }
        ++i;
    }
    return out;
}

double SpectralData::inner_mu(const VertexFunction& f, std::size_t i) const {
    double s = 0.0;
    std::size_t j = 0;
    for (VertexId v : omega) {
        s += mu[j] * f(v) * psi[i][j];
        ++j;
    }
    return s;
}

SpectralData eigendecompose(const WeightedGraph& g, const VertexSet& omega, double tol,
                            int max_sweeps) {
    DirichletMatrices mats = dirichlet_matrix(g, omega);
    EigenResult eig = jacobi_eigen(mats.S, tol, max_sweeps);

    SpectralData sd;
    sd.omega = omega;
    sd.boundary = vertex_boundary(g, omega);
    sd.sweeps = eig.sweeps;
    const std::size_t n = omega.size();
    sd.mu.reserve(n);
    for (VertexId v : omega) sd.mu.push_back(g.mu(v));
    sd.lambda = std::move(eig.values);
    sd.psi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        sd.psi[i].resize(n);
        for (std::size_t j = 0; j < n; ++j)
            sd.psi[i][j] = eig.vectors[i][j] / std::sqrt(sd.mu[j]);
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) dot += sd.mu[k] * sd.psi[i][k] * sd.psi[j][k];
            double target = (i == j) ? 1.0 : 0.0;
            sd.orthonormality_error = std::max(sd.orthonormality_error, std::abs(dot - target));
        }

    // eigen-residual through the graph Laplacian itself, zero on the boundary
    VertexSet closure = set_union(omega, sd.boundary);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = 0;
        std::vector<double> vals(omega.size());
        for (j = 0; j < n; ++j) vals[j] = sd.psi[i][j];
        VertexFunction psi_f(omega, vals);
        VertexFunction ext = psi_f.extended_by_zero(closure);
        j = 0;
        for (VertexId v : omega) {
            double r = -apply_laplacian(g, ext, v) - sd.lambda[i] * sd.psi[i][j];
            sd.eigen_residual = std::max(sd.eigen_residual, std::abs(r));
            ++j;
        }
    }
    return sd;
}

WaveSolution::WaveSolution(std::shared_ptr<const WeightedGraph> graph, SpectralData spectral,
                           std::vector<double> a, std::vector<double> b)
    : graph_(std::move(graph)),
      spectral_(std::move(spectral)),
      a_(std::move(a)),
      b_(std::move(b)) {
    if (a_.size() != spectral_.n() || b_.size() != spectral_.n())
        throw std::invalid_argument("WaveSolution: coefficient count does not match modes");
}

double WaveSolution::evaluate(double t, VertexId x) const {
    return time_derivative(t, x, 0);
}

double WaveSolution::time_derivative(double t, VertexId x, int order) const {
    if (order < 0) throw std::invalid_argument("time_derivative: order must be >= 0");
    if (spectral_.boundary.contains(x)) return 0.0;
    if (!spectral_.omega.contains(x))
        throw std::invalid_argument("evaluate: vertex " + std::to_string(x) +
                                    " is outside Omega and its boundary");
    const int j = omega_pos(spectral_.omega, x);
    double acc = 0.0;
    for (std::size_t i = 0; i < spectral_.n(); ++i) {
        double w = std::sqrt(spectral_.lambda[i]);
        double phase = w * t;
        double ca, cb;
        switch (order % 4) {  // d/dt cycles cos -> -sin -> -cos -> sin
            case 0: ca = std::cos(phase); cb = std::sin(phase); break;
            case 1: ca = -std::sin(phase); cb = std::cos(phase); break;
            case 2: ca = -std::cos(phase); cb = -std::sin(phase); break;
            default: ca = std::sin(phase); cb = -std::cos(phase); break;
        }
        double wa = std::pow(w, order);
        double wb = (order == 0) ? 1.0 / w : std::pow(w, order - 1);
        acc += wa * ca * a_[i] * spectral_.psi[i][j] + wb * cb * b_[i] * spectral_.psi[i][j];
    }
    return acc;
}

double WaveSolution::laplacian_of_slice(double t, int omega_idx) const {
    VertexId x = spectral_.omega.ids()[static_cast<std::size_t>(omega_idx)];
    double ux = time_derivative(t, x, 0);
    double acc = 0.0;
    for (const auto& nb : graph_->neighbors(x)) {
        VertexId y = graph_->id_at(nb.idx);
        double uy;
        if (spectral_.omega.contains(y))
            uy = time_derivative(t, y, 0);
        else if (spectral_.boundary.contains(y))
            uy = 0.0;
        else
            throw std::runtime_error("residual: neighbor " + std::to_string(y) +
                                     " of Omega lies outside the closure");
        acc += nb.w * (uy - ux);
    }
    return acc / graph_->mu(x);
}

double WaveSolution::residual(const std::vector<double>& t_samples) const {
    double worst = 0.0;
    for (double t : t_samples) {
        int j = 0;
        for (VertexId x : spectral_.omega) {
            double r = time_derivative(t, x, 2) - laplacian_of_slice(t, j);
            worst = std::max(worst, std::abs(r));
            ++j;
        }
    }
    return worst;
}

double WaveSolution::energy(double t) const {
    double kinetic = 0.0;
    std::size_t j = 0;
    for (VertexId x : spectral_.omega) {
        double v = time_derivative(t, x, 1);
        kinetic += 0.5 * spectral_.mu[j] * v * v;
        ++j;
    }
    auto value_at = [&](VertexId v) -> double {
        if (spectral_.omega.contains(v)) return time_derivative(t, v, 0);
        return 0.0;  // boundary and beyond
    };
    double potential = 0.0;
    VertexSet closure = set_union(spectral_.omega, spectral_.boundary);
    for (VertexId x : closure) {
        double ux = value_at(x);
        for (const auto& nb : graph_->neighbors(x)) {
            VertexId y = graph_->id_at(nb.idx);
            if (!closure.contains(y)) continue;
            double d = value_at(y) - ux;
            potential += 0.25 * nb.w * d * d;  // ordered pairs count each edge twice
        }
    }
    return kinetic + potential;
}

double WaveSolution::reconstruction_error(const VertexFunction& g0,
                                          const VertexFunction& h0) const {
    double worst = 0.0;
    std::size_t j = 0;
    for (VertexId x : spectral_.omega) {
        double sg = 0.0, sh = 0.0;
        for (std::size_t i = 0; i < spectral_.n(); ++i) {
            sg += a_[i] * spectral_.psi[i][j];
            sh += b_[i] * spectral_.psi[i][j];
        }
        worst = std::max(worst, std::abs(sg - g0(x)));
        worst = std::max(worst, std::abs(sh - h0(x)));
        ++j;
    }
    return worst;
}

WaveSolution solve_wave(const DirichletProblem& problem, double tol) {
    SpectralData sd = eigendecompose(*problem.graph, problem.omega, tol);
    std::vector<double> a(sd.n()), b(sd.n());
    for (std::size_t i = 0; i < sd.n(); ++i) {
        a[i] = sd.inner_mu(problem.g0, i);
        b[i] = sd.inner_mu(problem.h0, i);
    }
    return WaveSolution(problem.graph, std::move(sd), std::move(a), std::move(b));
}

ForcedWaveSolution::ForcedWaveSolution(WaveSolution base, SourceTerm f, double step)
    : base_(std::move(base)), f_(std::move(f)), step_(step) {
    if (!(step > 0.0)) throw std::invalid_argument("solve_wave_forced: step must be > 0");
    if (!f_) throw std::invalid_argument("solve_wave_forced: null source term");
}

ForcedWaveSolution::ModeIntegrals ForcedWaveSolution::integrate(double t) const {
    const auto& sd = base_.spectral();
    const std::size_t nmode = sd.n();
    ModeIntegrals mi;
    mi.C.assign(nmode, 0.0);
    mi.S.assign(nmode, 0.0);
    if (t == 0.0) return mi;

    long panels = std::lround(std::ceil(std::abs(t) / step_));
    if (panels < 2) panels = 2;
    if (panels % 2 != 0) ++panels;
    const double h = t / static_cast<double>(panels);

    std::vector<double> fi(nmode);
    for (long k = 0; k <= panels; ++k) {
        const double s = h * static_cast<double>(k);
        const double wsimp = (k == 0 || k == panels) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        std::fill(fi.begin(), fi.end(), 0.0);
        std::size_t j = 0;
        for (VertexId x : sd.omega) {
            double fx = f_(s, x);
            for (std::size_t i = 0; i < nmode; ++i) fi[i] += sd.mu[j] * fx * sd.psi[i][j];
            ++j;
        }
        for (std::size_t i = 0; i < nmode; ++i) {
            double w = std::sqrt(sd.lambda[i]);
            mi.C[i] += wsimp * std::cos(w * s) * fi[i];
            mi.S[i] += wsimp * std::sin(w * s) * fi[i];
        }
    }
    for (std::size_t i = 0; i < nmode; ++i) {
        mi.C[i] *= h / 3.0;
        mi.S[i] *= h / 3.0;
    }
    return mi;
}

double ForcedWaveSolution::evaluate(double t, VertexId x) const {
    return time_derivative(t, x, 0);
}

double ForcedWaveSolution::time_derivative(double t, VertexId x, int order) const {
    const auto& sd = base_.spectral();
    if (order < 0 || order > 2)
        throw std::invalid_argument("forced time_derivative: order must be 0, 1 or 2");
    if (sd.boundary.contains(x)) return 0.0;
    double hom = base_.time_derivative(t, x, order);
    const int j = omega_pos(sd.omega, x);
    ModeIntegrals mi = integrate(t);
    double add = 0.0;
    for (std::size_t i = 0; i < sd.n(); ++i) {
        double w = std::sqrt(sd.lambda[i]);
        // I(t) = [sin(wt) C(t) - cos(wt) S(t)] / w, I' = cos C + sin S,
        // I'' = f_i(t) - lambda I
        double I = (std::sin(w * t) * mi.C[i] - std::cos(w * t) * mi.S[i]) / w;
        double term;
        if (order == 0)
            term = I;
        else if (order == 1)
            term = std::cos(w * t) * mi.C[i] + std::sin(w * t) * mi.S[i];
        else {
            double fi = 0.0;
            std::size_t jj = 0;
            for (VertexId v : sd.omega) {
                fi += sd.mu[jj] * f_(t, v) * sd.psi[i][jj];
                ++jj;
            }
            term = fi - sd.lambda[i] * I;
        }
        add += term * sd.psi[i][j];
    }
    return hom + add;
}

ForcedWaveSolution solve_wave_forced(const DirichletProblem& problem, SourceTerm f,
                                     double step, double tol) {
    return ForcedWaveSolution(solve_wave(problem, tol), std::move(f), step);
}

}  // namespace wavegraph
