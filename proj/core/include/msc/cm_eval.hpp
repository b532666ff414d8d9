#ifndef MSC_CM_EVAL_HPP
#define MSC_CM_EVAL_HPP

#include "msc/big_complex.hpp"
#include "msc/hpoint.hpp"
#include "msc/int_polynomial.hpp"

namespace msc {

/// j(tau) with absolute error below 2^-precision. The point is reduced to
/// the fundamental domain first, so Im tau >= sqrt(3)/2 and the series tail
/// is geometric.
BigComplex j_eval(const HPoint& tau, long precision);

/// Hilbert class polynomial: monic, integer, degree h(disc), roots exactly
/// the singular moduli of the discriminant.
struct ClassPolynomial {
    Int disc;
    IntPolynomial poly;
};

/// Conjugate product over T_disc at floating precision with verified integer
/// rounding: a rounded coefficient must sit within 1/4 of its float (and the
/// imaginary part below 1/4), else the precision is doubled. A bounded number
/// of doublings ends in PrecisionEscalationFailed.
ClassPolynomial class_polynomial(const Int& disc, unsigned threads = 1);

}  // namespace msc

#endif
