#include "wavegraph/tychonoff.hpp"

#include <stdexcept>
#include <string>

namespace wavegraph {

mpz_class spatial_product(long x, int k) {
    mpz_class prod(1);
    for (long j = x - k + 1; j <= x + k; ++j) {
        if (j == 0) return mpz_class(0);
        prod *= j;
    }
    return prod;
}

CounterexampleSolution::CounterexampleSolution(int beta, int m, mpfr_prec_t precision,
                                               int table_depth)
    : m_(m), precision_(precision), table_(beta, table_depth) {
    if (m < 2) throw std::invalid_argument("CounterexampleSolution: equation order m must be >= 2");
    if (precision < 8)
        throw std::invalid_argument("CounterexampleSolution: precision below 8 bits");
}

void CounterexampleSolution::require_depth(long x_folded, int derivative_order) const {
    long need = derivative_order + static_cast<long>(m_) * x_folded;
    if (need > table_.k_max())
        throw std::invalid_argument("table too shallow: evaluation at |x| = " +
                                    std::to_string(x_folded) + ", derivative order " +
                                    std::to_string(derivative_order) + " needs depth >= " +
                                    std::to_string(need) + " (have " +
                                    std::to_string(table_.k_max()) + ")");
}

mpq_class CounterexampleSolution::series_bracket(const mpq_class& s, long x_folded,
                                                 int derivative_order) const {
    mpq_class acc = table_.poly_value(derivative_order, s);
    mpz_class fact(1);
    for (long k = 1; k <= x_folded; ++k) {
        fact *= 2 * k - 1;
        fact *= 2 * k;
        mpz_class prod = spatial_product(x_folded, static_cast<int>(k));
        if (prod == 0) continue;  // cannot happen for k <= x, kept as a guard
        mpq_class term = table_.poly_value(derivative_order + m_ * static_cast<int>(k), s);
        term *= mpq_class(prod);
        term /= mpq_class(fact);
        acc += term;
    }
    return acc;
}

Real CounterexampleSolution::evaluate(const mpq_class& t, long x, int derivative_order) const {
    if (derivative_order < 0)
        throw std::invalid_argument("evaluate: derivative order must be >= 0");
    long xf = fold(x);
    require_depth(xf, derivative_order);
    if (t <= 0) return Real(precision_);  // flat: every derivative is exactly 0

    mpq_class s = 1 / t;
    mpq_class a = series_bracket(s, xf, derivative_order);
    if (a == 0) return Real(precision_);

    mpq_class exponent(0);
    mpz_pow_ui(exponent.get_num().get_mpz_t(), s.get_num().get_mpz_t(),
               static_cast<unsigned long>(table_.beta()));
    mpz_pow_ui(exponent.get_den().get_mpz_t(), s.get_den().get_mpz_t(),
               static_cast<unsigned long>(table_.beta()));
    exponent.canonicalize();
    Real e = exp_rational(-exponent, precision_);
    Real av(a, e.precision());
    return (av * e).rounded_to(precision_);
}

Real CounterexampleSolution::pde_residual(const mpq_class& t, long x) const {
    for (long xn : {x - 1, x, x + 1}) require_depth(fold(xn), 0);
    require_depth(fold(x), m_);
    if (t <= 0) return Real(precision_);

    mpq_class s = 1 / t;
    mpq_class b = series_bracket(s, fold(x), m_);
    b -= series_bracket(s, fold(x + 1), 0);
    b -= series_bracket(s, fold(x - 1), 0);
    b += 2 * series_bracket(s, fold(x), 0);
    if (b == 0) return Real(precision_);

    mpq_class exponent(0);
    mpz_pow_ui(exponent.get_num().get_mpz_t(), s.get_num().get_mpz_t(),
               static_cast<unsigned long>(table_.beta()));
    mpz_pow_ui(exponent.get_den().get_mpz_t(), s.get_den().get_mpz_t(),
               static_cast<unsigned long>(table_.beta()));
    exponent.canonicalize();
    Real e = exp_rational(-exponent, precision_);
    Real bv(b, e.precision());
    return (bv * e).rounded_to(precision_);
}

Real CounterexampleSolution::growth_ratio(const mpq_class& t, long x, double eps) const {
    if (!(eps > 0)) throw std::invalid_argument("growth_ratio: eps must be > 0");
    if (static_cast<double>(table_.beta()) * eps <= 2.0)
        throw std::invalid_argument("growth_ratio requires beta > 2/eps (beta = " +
                                    std::to_string(table_.beta()) + ", eps = " +
                                    std::to_string(eps) + ")");
    if (x < 2) throw std::invalid_argument("growth_ratio: x must be >= 2");
    if (t <= 0) return Real(precision_);

    Real u = evaluate(t, x, 0);
    mpfr_prec_t work = precision_ + 64;
    Real xr(static_cast<double>(x), work);
    Real coeff = Real(2.0, work) + Real(eps, work);
    Real damp = exp(-(coeff * xr * log(xr)));
    return (abs(u).rounded_to(work) * damp).rounded_to(precision_);
}

NonanalyticityCertificate CounterexampleSolution::nonanalyticity_certificate(
    long x, int jet_order, const mpq_class& t_probe) const {
    if (jet_order < 0)
        throw std::invalid_argument("nonanalyticity_certificate: jet_order must be >= 0");
    if (t_probe <= 0)
        throw std::invalid_argument("nonanalyticity_certificate: t_probe must be > 0");
    require_depth(fold(x), jet_order);

    NonanalyticityCertificate cert;
    cert.x = x;
    cert.jet_order = jet_order;
    cert.t_probe = t_probe;
    cert.jet_vanishes = true;
    for (int k = 0; k <= jet_order; ++k)
        if (!evaluate(mpq_class(0), x, k).is_zero()) {
            cert.jet_vanishes = false;
            break;
        }
    cert.probe_value = evaluate(t_probe, x, 0);
    cert.probe_nonzero = !cert.probe_value.is_zero();
    cert.certified = cert.jet_vanishes && cert.probe_nonzero;
    return cert;
}

}  // namespace wavegraph
