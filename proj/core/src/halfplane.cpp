#include "msc/halfplane.hpp"

#include <stdexcept>

#include "msc/errors.hpp"

namespace msc {

namespace {

Int floor_int(const BigFloat& x) {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(x.raw()));
    mpfr_floor(t, x.raw());
    Int n;
    mpfr_get_z(n.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return n;
}

BigFloat boundary_tolerance(long prec) { return BigFloat::pow2(-(prec / 2), prec); }

BigComplex moebius_numeric(const IntMatrix2& g, const BigComplex& z) {
    const long prec = z.precision();
    BigComplex num = z * BigFloat::from_int(g.a, prec) + BigFloat::from_int(g.b, prec);
    BigComplex den = z * BigFloat::from_int(g.c, prec) + BigFloat::from_int(g.d, prec);
    return num / den;
}

}  // namespace

HPoint act(const IntMatrix2& g, const HPoint& z) {
    if (g.det() <= 0) throw std::invalid_argument("act: matrix must have positive determinant");
    if (z.has_tag()) return HPoint::from_form(z.tag().transformed(g), z.precision());
    return HPoint::from_value(moebius_numeric(g, z.value()));
}

bool in_fundamental_domain(const HPoint& z) {
    if (z.has_tag()) return z.tag().is_reduced();

    const long prec = z.precision();
    const BigFloat tol = boundary_tolerance(prec);
    const BigFloat half = BigFloat::from_rat(Rat(1, 2), prec);
    const BigFloat one = BigFloat::from_int(1, prec);
    const BigFloat& re = z.value().re;
    const BigFloat n2 = z.value().norm2();

    if ((re + half).abs() <= tol || (re - half).abs() <= tol || (n2 - one).abs() <= tol)
        throw AmbiguousBoundary("in_fundamental_domain: numeric point within tolerance of the boundary");
    return re > -half && re < half && n2 > one;
}

ReduceResult reduce_to_fundamental(const HPoint& z) {
    if (z.has_tag()) {
        ReducedForm r = gauss_reduce(z.tag());
        return {HPoint::from_form(r.form, z.precision()), r.gamma};
    }

    const long prec = z.precision();
    const BigFloat tol = boundary_tolerance(prec);
    const BigFloat half = BigFloat::from_rat(Rat(1, 2), prec);
    const BigFloat one = BigFloat::from_int(1, prec);
    BigComplex cur = z.value();
    IntMatrix2 gamma = IntMatrix2::identity();

    for (int guard = 0; guard < 10000; ++guard) {
        Int k = floor_int(cur.re + half);
        if (k != 0) {
            cur = cur.add_int(-k);
            gamma = IntMatrix2::translation(-k) * gamma;
        }
        const BigFloat n2 = cur.norm2();
        if ((n2 - one).abs() <= tol)
            throw AmbiguousBoundary("reduce_to_fundamental: |z| numerically on the unit circle");
        if (n2 > one) {
            HPoint out = HPoint::from_value(cur);
            // raises AmbiguousBoundary if Re sits on the strip boundary
            if (!in_fundamental_domain(out))
                throw AmbiguousBoundary("reduce_to_fundamental: cannot certify membership");
            return {std::move(out), gamma};
        }
        // |z| < 1: invert, -1/z = (-re + i im)/|z|^2
        cur = BigComplex(-cur.re / n2, cur.im / n2);
        gamma = IntMatrix2::inversion() * gamma;
    }
    throw std::logic_error("reduce_to_fundamental: did not terminate");
}

FixedPointClass fixed_point_discriminant(const IntMatrix2& g) {
    const Int n = g.det();
    if (n <= 0)
        throw std::invalid_argument("fixed_point_discriminant: determinant must be positive");
    if (g.is_scalar()) return {FixedPointClass::Kind::NotCM, Int(0)};
    const Int h = gcd(g.c, g.d - g.a, g.b);
    const Int tr = g.a + g.d;
    Int disc = (tr * tr - 4 * n) / (h * h);
    if (disc >= 0) return {FixedPointClass::Kind::NoFixedPointInH, std::move(disc)};
    return {FixedPointClass::Kind::CM, std::move(disc)};
}

bool same_orbit(const HPoint& z, const HPoint& w) {
    ReduceResult rz = reduce_to_fundamental(z);
    ReduceResult rw = reduce_to_fundamental(w);
    if (rz.point.has_tag() && rw.point.has_tag()) return rz.point.tag() == rw.point.tag();
    const long prec = std::min(rz.point.precision(), rw.point.precision());
    const BigComplex a = rz.point.has_tag() ? rz.point.value_at(prec) : rz.point.value();
    const BigComplex b = rw.point.has_tag() ? rw.point.value_at(prec) : rw.point.value();
    return (a - b).abs() <= boundary_tolerance(prec);
}

}  // namespace msc
