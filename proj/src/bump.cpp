#include "wavegraph/bump.hpp"

#include <stdexcept>
#include <string>

namespace wavegraph {

BumpTable::BumpTable(int beta, int k_max) : beta_(beta), k_max_(k_max) {
    if (beta < 1) throw std::invalid_argument("build_bump_table: beta must be a positive integer");
    if (k_max < 0) throw std::invalid_argument("build_bump_table: k_max must be >= 0");
    q_.reserve(static_cast<std::size_t>(k_max) + 1);
    q_.push_back({mpq_class(1)});
    for (int k = 0; k < k_max; ++k) {
        const auto& cur = q_.back();
        // next = beta * s^(beta+1) * cur - s^2 * cur'
        std::vector<mpq_class> next(cur.size() + static_cast<std::size_t>(beta) + 1, mpq_class(0));
        for (std::size_t p = 0; p < cur.size(); ++p) {
            if (cur[p] == 0) continue;
            next[p + static_cast<std::size_t>(beta) + 1] += beta * cur[p];
            if (p >= 1) next[p + 1] -= static_cast<long>(p) * cur[p];
        }
        q_.push_back(std::move(next));
    }
}

BumpTable build_bump_table(int beta, int k_max) { return BumpTable(beta, k_max); }

const std::vector<mpq_class>& BumpTable::poly(int k) const {
    if (k < 0 || k > k_max_)
        throw std::out_of_range("bump table holds derivatives up to k = " + std::to_string(k_max_) +
                                ", requested k = " + std::to_string(k));
    return q_[static_cast<std::size_t>(k)];
}

mpq_class BumpTable::poly_value(int k, const mpq_class& s) const {
    const auto& c = poly(k);
    mpq_class acc(0);  // Horner
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + c[i];
    return acc;
}

Real exp_rational(const mpq_class& q, mpfr_prec_t precision) {
    // exp amplifies the argument's rounding by |q|, so pad by its magnitude.
    long pad = 32 + std::max(0L, rational_log2_bound(q));
    mpfr_prec_t work = precision + static_cast<mpfr_prec_t>(pad);
    Real arg(q, work);
    return exp(arg);
}

Real bump_derivative(const BumpTable& table, int k, const mpq_class& t, mpfr_prec_t precision) {
    if (k < 0 || k > table.k_max())
        throw std::out_of_range("bump_derivative: table holds k <= " +
                                std::to_string(table.k_max()) + ", requested k = " +
                                std::to_string(k));
    if (t <= 0) return Real(precision);  // exact zero: g vanishes on t <= 0

    mpq_class s = 1 / t;  // exact
    mpq_class poly = table.poly_value(k, s);
    mpq_class exponent(0);
    mpz_pow_ui(exponent.get_num().get_mpz_t(), s.get_num().get_mpz_t(),
               static_cast<unsigned long>(table.beta()));
    mpz_pow_ui(exponent.get_den().get_mpz_t(), s.get_den().get_mpz_t(),
               static_cast<unsigned long>(table.beta()));
    exponent.canonicalize();

    Real e = exp_rational(-exponent, precision);
    Real p(poly, e.precision());
    return (p * e).rounded_to(precision);
}

Real bump_value(const BumpTable& table, const mpq_class& t, mpfr_prec_t precision) {
    return bump_derivative(table, 0, t, precision);
}

}  // namespace wavegraph
