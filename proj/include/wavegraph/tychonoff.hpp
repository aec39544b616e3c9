#pragma once

#include "wavegraph/bigreal.hpp"
#include "wavegraph/bump.hpp"

namespace wavegraph {

/// Product of the 2k consecutive integers x-k+1, ..., x+k (exact). Equals
/// (x+k)!/(x-k)! for k <= x and vanishes for k > x >= 0 (a zero factor
/// appears), which is what terminates the counterexample series. k = 0
/// returns 1 by convention, matching the leading g(t) term.
mpz_class spatial_product(long x, int k);

struct NonanalyticityCertificate {
    long x = 0;
    int jet_order = 0;      // derivatives 0..jet_order checked at t = 0
    bool jet_vanishes = false;
    mpq_class t_probe;
    Real probe_value;
    bool probe_nonzero = false;
    bool certified = false;  // flat jet and a nonzero value cannot coexist for an analytic u
};

/// Nonzero solution of  d^m u / dt^m = u(t,x+1) + u(t,x-1) - 2 u(t,x)  on the
/// integer line with identically zero initial data:
///   u(t,x) = g(t) + sum_{k=1..x} g^(mk)(t)/(2k)! * spatial_product(x,k)
/// for x >= 0, extended by the symmetry u(t,x) = u(t,-x-1) for x <= -1
/// (the construction is symmetric about x = -1/2). m = 2 is the wave case.
///
/// Every time derivative vanishes at t = 0, so the solution shares all data
/// with the zero solution yet is nonzero for t > 0: uniqueness fails without
/// a growth restriction. Rational parts of every evaluation are exact; the
/// single transcendental factor exp(-t^(-beta)) is the only rounding.
class CounterexampleSolution {
public:
    CounterexampleSolution(int beta, int m, mpfr_prec_t precision, int table_depth);

    int beta() const { return table_.beta(); }
    int order() const { return m_; }
    mpfr_prec_t precision() const { return precision_; }
    int depth() const { return table_.k_max(); }
    const BumpTable& table() const { return table_; }

    /// Symmetry fold: the series is evaluated at x for x >= 0, at -x-1 below.
    static long fold(long x) { return x >= 0 ? x : -x - 1; }

    /// d^derivative_order/dt^order of u at (t, x). Exact zero for t <= 0.
    Real evaluate(const mpq_class& t, long x, int derivative_order = 0) const;

    /// d^m u/dt^m - [u(x+1) + u(x-1) - 2 u(x)] at (t, x). The rational part
    /// is computed exactly, so a correct table yields an exact zero; any
    /// structural defect would surface as exp(-t^(-beta)) times a nonzero
    /// rational, not as rounding noise.
    Real pde_residual(const mpq_class& t, long x) const;

    /// |u(t,x)| * exp(-(2+eps) * x * ln x) for x >= 2; requires beta > 2/eps,
    /// the regime where the growth estimate makes the ratio decay.
    Real growth_ratio(const mpq_class& t, long x, double eps) const;

    /// Checks d^k u/dt^k (0, x) = 0 exactly for all k <= jet_order while
    /// |u(t_probe, x)| > 0.
    NonanalyticityCertificate nonanalyticity_certificate(long x, int jet_order,
                                                         const mpq_class& t_probe) const;

private:
    // exact rational A with u^(order)(t, x_folded) = A * exp(-t^(-beta))
    mpq_class series_bracket(const mpq_class& s, long x_folded, int derivative_order) const;
    void require_depth(long x_folded, int derivative_order) const;

    int m_;
    mpfr_prec_t precision_;
    BumpTable table_;
};

}  // namespace wavegraph
