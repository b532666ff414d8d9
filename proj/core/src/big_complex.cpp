#include "msc/big_complex.hpp"

namespace msc {

BigComplex exp_2pi_i(const BigComplex& tau) {
    const long prec = tau.precision();
    BigFloat two_pi = BigFloat::pi(prec) * BigFloat::from_double(2.0, prec);
    BigFloat mag = (-(two_pi * tau.im)).exp();
    auto [s, c] = (two_pi * tau.re).sin_cos();
    return {mag * c, mag * s};
}

}  // namespace msc
