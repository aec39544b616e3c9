#include "wavegraph/analyticity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wavegraph {

double first_derivative_bound(double M0, double M2, double a, double b) {
    if (!(b > a)) throw std::invalid_argument("first_derivative_bound: need b > a");
    if (M0 < 0 || M2 < 0)
        throw std::invalid_argument("first_derivative_bound: sup norms must be nonnegative");
    return 2.0 / (b - a) * M0 + (b - a) * M2;
}

mpq_class ore_K(int i, int n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("ore_K: need 1 <= i <= n (got i = " + std::to_string(i) +
                                    ", n = " + std::to_string(n) + ")");
    mpz_class num(1);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(i));
    mpz_class n2 = mpz_class(n) * n;
    for (int j = 0; j < i; ++j) num *= n2 - mpz_class(j) * j;
    mpz_class den(1);
    for (int j = 1; j <= i; ++j) den *= 2 * j - 1;
    mpq_class k(num, den);
    k.canonicalize();
    return k;
}

double intermediate_derivative_bound(double M0, double M_top, double a, double b, int i, int n) {
    mpq_class K = ore_K(i, n);  // also validates i, n
    if (!(b > a)) throw std::invalid_argument("intermediate_derivative_bound: need b > a");
    if (M0 < 0 || M_top < 0)
        throw std::invalid_argument("intermediate_derivative_bound: sup norms must be nonnegative");
    double h = b - a;
    double fact = 1.0;
    for (int j = 2; j <= n + 1; ++j) fact *= j;
    return K.get_d() / std::pow(h, i) * (M0 + std::pow(h, n + 1) / fact * M_top);
}

ClassCertificate certify_class_membership(const TimeEvaluable& u, const WeightedGraph& g,
                                          VertexId p, double alpha, double A1, double C,
                                          const SampleGrid& grid) {
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw std::invalid_argument("certify_class_membership: alpha must lie in [0, 2]");
    if (!(A1 >= 0.0 && A1 <= 2.0 - alpha))
        throw std::invalid_argument(
            "certify_class_membership: A1 must lie in [0, 2 - alpha], the admissible exponent "
            "range of the uniqueness class");
    if (!(C > 0.0)) throw std::invalid_argument("certify_class_membership: C must be > 0");
    g.index_of(p);

    ClassCertificate cert;
    cert.p = p;
    cert.alpha = alpha;
    cert.A1 = A1;
    cert.C = C;
    cert.holds = true;
    cert.worst_margin = std::numeric_limits<double>::infinity();
    cert.samples.reserve(grid.size());
    for (const auto& [t, x] : grid) {
        if (x == p)
            throw std::invalid_argument(
                "certify_class_membership: grid contains the base vertex p; the bound "
                "degenerates at distance 0");
        auto dist = distance(g, x, p);
        if (!dist)
            throw std::invalid_argument("certify_class_membership: vertex " + std::to_string(x) +
                                        " is unreachable from p");
        double d = static_cast<double>(*dist);
        ClassSample s;
        s.t = t;
        s.x = x;
        s.abs_u = std::abs(u.value(t, x));
        s.bound = C * std::pow(d, A1 * d);
        cert.T = std::max(cert.T, std::abs(t));
        cert.worst_margin = std::min(cert.worst_margin, s.bound - s.abs_u);
        if (s.abs_u > s.bound) cert.holds = false;
        cert.samples.push_back(s);
    }
    if (grid.empty()) {
        cert.holds = false;  // an empty grid certifies nothing
        cert.worst_margin = 0.0;
    }
    return cert;
}

RadiusReport analytic_radius_lower_bound(double D, double alpha, double A1) {
    if (!(D > 0.0)) throw std::invalid_argument("analytic_radius_lower_bound: D must be > 0");
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw std::invalid_argument("analytic_radius_lower_bound: alpha must lie in [0, 2]");
    if (!(A1 >= 0.0 && A1 <= 2.0 - alpha))
        throw std::invalid_argument(
            "analytic_radius_lower_bound: A1 must lie in [0, 2 - alpha]");
    RadiusReport r;
    r.D = D;
    r.alpha = alpha;
    r.A1 = A1;
    r.eps = 2.0 - alpha - A1;
    if (r.eps > 0.0) {
        r.radius_unbounded = true;
        r.radius = std::numeric_limits<double>::infinity();
    } else {
        r.radius = std::exp(-1.0) * std::sqrt(2.0 / D);
    }
    return r;
}

RadiusReport analytic_radius_lower_bound(double D, double alpha, double A1, double dt, int k_max,
                                         double C, int d) {
    RadiusReport r = analytic_radius_lower_bound(D, alpha, A1);
    if (!(dt > 0.0)) throw std::invalid_argument("analytic_radius_lower_bound: dt must be > 0");
    if (k_max < 1) throw std::invalid_argument("analytic_radius_lower_bound: k_max must be >= 1");
    r.dt = dt;
    r.remainder_trace.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k)
        r.remainder_trace.push_back({k, taylor_remainder_log_bound(k, D, alpha, A1, C, d, dt)});
    r.decreasing_from = -1;
    for (std::size_t i = r.remainder_trace.size(); i-- > 1;) {
        if (r.remainder_trace[i].log_bound < r.remainder_trace[i - 1].log_bound)
            r.decreasing_from = r.remainder_trace[i - 1].k;
        else
            break;
    }
    return r;
}

double taylor_remainder_log_bound(int k, double D, double alpha, double A1, double C, int d,
                                  double dt) {
    if (k < 1) throw std::invalid_argument("taylor_remainder_log_bound: k must be >= 1");
    if (!(D > 0.0) || !(dt > 0.0) || !(C > 0.0) || d < 0)
        throw std::invalid_argument("taylor_remainder_log_bound: D, dt, C must be > 0 and d >= 0");
    double kd = static_cast<double>(k + d);
    return k * std::log(2.0 * D) + alpha * k * std::log(kd) + std::log(C) +
           A1 * kd * std::log(kd) - std::lgamma(2.0 * k + 1.0) + 2.0 * k * std::log(dt);
}

double taylor_remainder_bound(int k, double D, double alpha, double A1, double C, int d,
                              double dt) {
    return std::exp(taylor_remainder_log_bound(k, D, alpha, A1, C, d, dt));
}

TaylorReconstruction taylor_reconstruct(const TimeEvaluable& sol, VertexId x0, double t0, int N,
                                        double t) {
    if (N < 0) throw std::invalid_argument("taylor_reconstruct: N must be >= 0");
    TaylorReconstruction out;
    double weight = 1.0;  // (t-t0)^k / k!, updated incrementally to dodge overflow
    for (int k = 0; k <= N; ++k) {
        if (k > 0) weight *= (t - t0) / static_cast<double>(k);
        double term = sol.derivative(t0, x0, k) * weight;
        out.value += term;
        if (k == N) out.tail = std::abs(term);
    }
    return out;
}

UniquenessReport uniqueness_gap(const TimeEvaluable& u, const TimeEvaluable& v,
                                const ClassCertificate& cert_u, const ClassCertificate& cert_v,
                                const SampleGrid& grid, double data_tol) {
    UniquenessReport rep;
    rep.cert_u_holds = cert_u.holds;
    rep.cert_v_holds = cert_v.holds;
    for (const auto& [t, x] : grid) {
        rep.gap = std::max(rep.gap, std::abs(u.value(t, x) - v.value(t, x)));
        rep.data_gap = std::max(rep.data_gap, std::abs(u.value(0.0, x) - v.value(0.0, x)));
        rep.data_gap = std::max(rep.data_gap,
                                std::abs(u.derivative(0.0, x, 1) - v.derivative(0.0, x, 1)));
    }
    rep.data_agrees = rep.data_gap <= data_tol;
    rep.hypotheses_met = rep.cert_u_holds && rep.cert_v_holds && rep.data_agrees && !grid.empty();
    rep.label = rep.hypotheses_met ? "uniqueness-class hypotheses hold" : "hypotheses unmet";
    return rep;
}

}  // namespace wavegraph
