#ifndef MSC_BIGFLOAT_HPP
#define MSC_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "msc/integer.hpp"

namespace msc {

/// Arbitrary-precision binary float (MPFR-backed). Every value carries its
/// working precision in bits; each individual operation is correctly rounded
/// to the result's precision (round-to-nearest). Binary operations round at
/// the larger of the two operand precisions.
class BigFloat {
  public:
    explicit BigFloat(long prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_int(const Int& n, long prec);
    static BigFloat from_rat(const Rat& q, long prec);
    static BigFloat from_double(double d, long prec);
    static BigFloat pi(long prec);
    /// sqrt of a nonnegative integer at the given precision.
    static BigFloat sqrt_int(const Int& n, long prec);

    long precision() const { return mpfr_get_prec(v_); }

    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat operator-() const;

    BigFloat sqrt() const;
    BigFloat exp() const;
    BigFloat abs() const;
    /// (sin x, cos x) as one call.
    std::pair<BigFloat, BigFloat> sin_cos() const;

    int sign() const { return mpfr_sgn(v_); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    /// 2^e at this value's precision.
    static BigFloat pow2(long e, long prec);

    /// Nearest integer together with |x - nearest|.
    std::pair<Int, BigFloat> round_to_int() const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal form with the given number of significant digits.
    std::string to_string(int digits = 20) const;

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

  private:
    mpfr_t v_;
};

}  // namespace msc

#endif
