#ifndef MSC_BIG_COMPLEX_HPP
#define MSC_BIG_COMPLEX_HPP

#include "msc/bigfloat.hpp"

namespace msc {

/// Complex number over BigFloat. Component operations are individually
/// correctly rounded at the working precision.
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(long prec = 64) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    long precision() const { return std::max(re.precision(), im.precision()); }

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const {
        BigFloat d = o.norm2();
        BigComplex n = *this * o.conj();
        return {n.re / d, n.im / d};
    }
    BigComplex conj() const { return {re, -im}; }
    /// |z|^2
    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const { return norm2().sqrt(); }

    BigComplex operator*(const BigFloat& s) const { return {re * s, im * s}; }
    BigComplex operator+(const BigFloat& s) const { return {re + s, im}; }

    /// z + n for integer n.
    BigComplex add_int(const Int& n) const {
        return {re + BigFloat::from_int(n, re.precision()), im};
    }
};

/// e^(2*pi*i*tau) for tau = x + iy: magnitude e^(-2*pi*y), phase 2*pi*x.
BigComplex exp_2pi_i(const BigComplex& tau);

}  // namespace msc

#endif
