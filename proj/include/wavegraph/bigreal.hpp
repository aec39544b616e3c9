#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace wavegraph {

/// Arbitrary-precision float (MPFR, round-to-nearest). Binary operations
/// carry the larger operand precision; callers pick the precision budget.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 53) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(const mpq_class& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    Real rounded_to(mpfr_prec_t prec) const;

    /// Decimal rendering with a fixed number of significant digits ("%.*Rg").
    std::string decimal(int significant_digits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);
    friend Real abs(const Real& a);
    friend Real exp(const Real& a);
    friend Real log(const Real& a);
    friend Real sqrt(const Real& a);

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend int cmp(const Real& a, double b) { return mpfr_cmp_d(a.v_, b); }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }

private:
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& r);

/// Upper bound for log2|q| (0 for q == 0); drives precision padding when an
/// exact rational feeds a rounding operation.
long rational_log2_bound(const mpq_class& q);

/// Parse "3", "-0.25", "1/4" or "2.5e-3" into an exact rational.
mpq_class rational_from_decimal(const std::string& text);

mpz_class factorial_exact(unsigned long n);

}  // namespace wavegraph
