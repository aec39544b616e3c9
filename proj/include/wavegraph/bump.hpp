#pragma once

#include <vector>

#include "wavegraph/bigreal.hpp"

namespace wavegraph {

/// Derivative table for the flat bump
///   g(t) = exp(-t^(-beta))  for t > 0,      g(t) = 0  for t <= 0,
/// in the factored form g^(k)(t) = Q_k(1/t) * g(t), where Q_0 = 1 and
///   Q_{k+1}(s) = beta * s^(beta+1) * Q_k(s) - s^2 * Q_k'(s)
/// holds exactly over the rationals. Every one-sided derivative at 0
/// vanishes, so g is smooth and flat at the origin.
///
/// beta is restricted to positive integers: that is what keeps the Q_k
/// honest polynomials with exact coefficients. deg Q_k = k*(beta+1).
class BumpTable {
public:
    BumpTable(int beta, int k_max);

    int beta() const { return beta_; }
    int k_max() const { return k_max_; }

    /// Coefficients of Q_k; index = power of s.
    const std::vector<mpq_class>& poly(int k) const;

    /// Q_k(s) at an exact rational point.
    mpq_class poly_value(int k, const mpq_class& s) const;

private:
    int beta_;
    int k_max_;
    std::vector<std::vector<mpq_class>> q_;
};

BumpTable build_bump_table(int beta, int k_max);

/// g^(k)(t) at `precision` bits. Exact zero for t <= 0. For t > 0 the
/// polynomial part Q_k(1/t) is evaluated in exact rational arithmetic, so
/// the only roundings are exp(-t^(-beta)) and one multiply, both performed
/// with padded precision: relative error <= 2^(8 - precision).
Real bump_derivative(const BumpTable& table, int k, const mpq_class& t, mpfr_prec_t precision);

/// g(t) itself (k = 0).
Real bump_value(const BumpTable& table, const mpq_class& t, mpfr_prec_t precision);

/// exp(q) with the padding needed so the *relative* error stays below
/// 2^(-precision - 8) even when |q| is large. Exposed for the modules that
/// share the bump's exponential factor.
Real exp_rational(const mpq_class& q, mpfr_prec_t precision);

}  // namespace wavegraph
