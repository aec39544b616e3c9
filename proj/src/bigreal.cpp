#include "wavegraph/bigreal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace wavegraph {

namespace {

mpfr_prec_t joint_prec(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

Real Real::rounded_to(mpfr_prec_t prec) const {
    Real out(prec);
    mpfr_set(out.v_, v_, MPFR_RNDN);
    return out;
}

std::string Real::decimal(int significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    int need = mpfr_snprintf(nullptr, 0, "%.*Rg", significant_digits, v_);
    if (need < 0) throw std::runtime_error("decimal: formatting failed");
    std::vector<char> buf(static_cast<std::size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, v_);
    return std::string(buf.data());
}

#define WAVEGRAPH_REAL_BINOP(op, fn)                        \
    Real operator op(const Real& a, const Real& b) {        \
        Real out(joint_prec(a, b));                         \
        fn(out.v_, a.v_, b.v_, MPFR_RNDN);                  \
        return out;                                         \
    }

WAVEGRAPH_REAL_BINOP(+, mpfr_add)
WAVEGRAPH_REAL_BINOP(-, mpfr_sub)
WAVEGRAPH_REAL_BINOP(*, mpfr_mul)
WAVEGRAPH_REAL_BINOP(/, mpfr_div)
#undef WAVEGRAPH_REAL_BINOP

Real operator-(const Real& a) {
    Real out(a.precision());
    mpfr_neg(out.v_, a.v_, MPFR_RNDN);
    return out;
}

Real abs(const Real& a) {
    Real out(a.precision());
    mpfr_abs(out.v_, a.v_, MPFR_RNDN);
    return out;
}

Real exp(const Real& a) {
    Real out(a.precision());
    mpfr_exp(out.v_, a.v_, MPFR_RNDN);
    return out;
}

Real log(const Real& a) {
    Real out(a.precision());
    mpfr_log(out.v_, a.v_, MPFR_RNDN);
    return out;
}

Real sqrt(const Real& a) {
    Real out(a.precision());
    mpfr_sqrt(out.v_, a.v_, MPFR_RNDN);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Real& r) {
    return os << r.decimal(20);
}

long rational_log2_bound(const mpq_class& q) {
    if (q == 0) return 0;
    long num = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
    long den = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    return num - den + 1;
}

mpq_class rational_from_decimal(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("rational_from_decimal: empty string");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0 || q.get_den() == 0)
            throw std::invalid_argument("rational_from_decimal: bad fraction '" + text + "'");
        q.canonicalize();
        return q;
    }

    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        try {
            exp10 = std::stol(s.substr(epos + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("rational_from_decimal: bad exponent in '" + text + "'");
        }
        s = s.substr(0, epos);
    }
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw std::invalid_argument("rational_from_decimal: bad number '" + text + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits.push_back(s[i]);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw std::invalid_argument("rational_from_decimal: bad character in '" + text + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("rational_from_decimal: no digits in '" + text + "'");

    mpz_class mant(digits.empty() ? "0" : digits, 10);
    if (neg) mant = -mant;
    mpq_class q(mant);
    long shift = exp10 - frac_digits;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        q *= mpq_class(pow10);
    else
        q /= mpq_class(pow10);
    q.canonicalize();
    return q;
}

mpz_class factorial_exact(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace wavegraph
