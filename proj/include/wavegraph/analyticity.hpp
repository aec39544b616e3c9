#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wavegraph/bigreal.hpp"
#include "wavegraph/graph.hpp"
#include "wavegraph/solution.hpp"

namespace wavegraph {

/// Landau-type bound for the first derivative on [a, b]:
///   max|f'| <= 2/(b-a) * M0 + (b-a) * M2,
/// where M0 >= max|f| and M2 >= max|f''|.
double first_derivative_bound(double M0, double M2, double a, double b);

/// Ore's combinatorial constant
///   K(i,n) = 2^i * n^2 (n^2-1) ... (n^2-(i-1)^2) / (1*3*5*...*(2i-1)),
/// exact; requires 1 <= i <= n.
mpq_class ore_K(int i, int n);

/// Ore-type bound for intermediate derivatives on [a, b]:
///   max|f^(i)| <= K(i,n)/(b-a)^i * (M0 + (b-a)^(n+1)/(n+1)! * M_top),
/// where M_top >= max|f^(n+1)|. At i = n = 1 this is exactly the
/// first-derivative bound above in Taylor-remainder form.
double intermediate_derivative_bound(double M0, double M_top, double a, double b, int i, int n);

struct ClassSample {
    double t = 0.0;
    VertexId x = 0;
    double abs_u = 0.0;
    double bound = 0.0;
};

/// Sample-based certificate that |u(t,x)| <= C * d(x,p)^(A1 * d(x,p)) on a
/// named grid. A certificate is a statement about its samples only, never a
/// proof over all of space-time; `grid` records exactly what was checked.
struct ClassCertificate {
    VertexId p = 0;
    double alpha = 0.0;
    double A1 = 0.0;
    double C = 0.0;
    double T = 0.0;  // largest |t| among the samples
    std::vector<ClassSample> samples;
    bool holds = false;
    double worst_margin = 0.0;  // min over samples of bound - |u|
};

using SampleGrid = std::vector<std::pair<double, VertexId>>;

/// Checks the growth bound at every grid sample. A1 must lie in [0, 2-alpha]
/// (the admissible exponent range for the uniqueness class); samples at x = p
/// are rejected since d(x,p)^(A1*d) degenerates there.
ClassCertificate certify_class_membership(const TimeEvaluable& u, const WeightedGraph& g,
                                          VertexId p, double alpha, double A1, double C,
                                          const SampleGrid& grid);

struct RemainderTracePoint {
    int k = 0;
    double log_bound = 0.0;  // natural log of the even-order remainder bound
};

struct RadiusReport {
    double D = 0.0;
    double alpha = 0.0;
    double A1 = 0.0;
    double eps = 0.0;  // 2 - alpha - A1
    bool radius_unbounded = false;
    double radius = 0.0;  // (1/e) * sqrt(2/D) on the critical branch
    double dt = 0.0;      // step used for the remainder trace; 0 = none requested
    std::vector<RemainderTracePoint> remainder_trace;
    int decreasing_from = -1;  // first k from which the trace decreases to the end; -1 = never
};

/// Lower bound for the analytic radius in t of solutions obeying the class
/// bound with exponent A1: unbounded when A1 < 2 - alpha, else (1/e)sqrt(2/D)
/// where D bounds the weighted degree. Requires 0 <= alpha <= 2 and
/// 0 <= A1 <= 2 - alpha.
RadiusReport analytic_radius_lower_bound(double D, double alpha, double A1);

/// Same report with a remainder trace at step dt for k = 1..k_max attached.
RadiusReport analytic_radius_lower_bound(double D, double alpha, double A1, double dt,
                                         int k_max, double C = 1.0, int d = 1);

/// Natural log of the even-order Taylor remainder bound
///   [2^k D^k (k+d)^(alpha k) * C (k+d)^(A1 (k+d)) / (2k)!] * dt^(2k),
/// assembled in log-space (log-Gamma for the factorial) so k in the hundreds
/// stays representable.
double taylor_remainder_log_bound(int k, double D, double alpha, double A1, double C, int d,
                                  double dt);

/// The bound itself; overflows to +inf / underflows to 0 outside double range.
double taylor_remainder_bound(int k, double D, double alpha, double A1, double C, int d,
                              double dt);

struct TaylorReconstruction {
    double value = 0.0;
    double tail = 0.0;  // magnitude of the last term kept, a truncation proxy
};

/// Taylor partial sum sum_{k<=N} d^k u/dt^k (t0,x0) / k! * (t-t0)^k.
TaylorReconstruction taylor_reconstruct(const TimeEvaluable& sol, VertexId x0, double t0, int N,
                                        double t);

struct UniquenessReport {
    double gap = 0.0;       // max |u - v| over the grid
    double data_gap = 0.0;  // max mismatch of value and velocity at t = 0
    bool cert_u_holds = false;
    bool cert_v_holds = false;
    bool data_agrees = false;
    bool hypotheses_met = false;
    std::string label;
};

/// Compares two solutions over a grid. Only when both class certificates
/// hold and the t = 0 data agree does the report claim the uniqueness
/// hypotheses are met; otherwise the gap is still reported, labeled
/// "hypotheses unmet" — a large gap there is expected, not an error.
UniquenessReport uniqueness_gap(const TimeEvaluable& u, const TimeEvaluable& v,
                                const ClassCertificate& cert_u, const ClassCertificate& cert_v,
                                const SampleGrid& grid, double data_tol = 1e-10);

}  // namespace wavegraph
