#include "msc/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace msc {

BigFloat BigFloat::from_int(const Int& n, long prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rat(const Rat& q, long prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double d, long prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(long prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt_int(const Int& n, long prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long e, long prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

#define MSC_BF_BINOP(name, fn)                                    \
    BigFloat BigFloat::operator name(const BigFloat& o) const {   \
        BigFloat r(std::max(precision(), o.precision()));         \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                            \
        return r;                                                 \
    }

MSC_BF_BINOP(+, mpfr_add)
MSC_BF_BINOP(-, mpfr_sub)
MSC_BF_BINOP(*, mpfr_mul)
MSC_BF_BINOP(/, mpfr_div)
#undef MSC_BF_BINOP

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(precision());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

std::pair<BigFloat, BigFloat> BigFloat::sin_cos() const {
    BigFloat s(precision()), c(precision());
    mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

std::pair<Int, BigFloat> BigFloat::round_to_int() const {
    BigFloat nearest(precision());
    mpfr_rint(nearest.v_, v_, MPFR_RNDN);
    Int n;
    mpfr_get_z(n.get_mpz_t(), nearest.v_, MPFR_RNDN);
    BigFloat diff = (*this - nearest).abs();
    return {std::move(n), std::move(diff)};
}

std::string BigFloat::to_string(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
    const int need = mpfr_snprintf(nullptr, 0, fmt, v_);
    std::vector<char> buf(static_cast<std::size_t>(need) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

}  // namespace msc
