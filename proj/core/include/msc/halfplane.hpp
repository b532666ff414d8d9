#ifndef MSC_HALFPLANE_HPP
#define MSC_HALFPLANE_HPP

#include "msc/hpoint.hpp"
#include "msc/int_matrix2.hpp"

namespace msc {

/// Fractional linear action (az+b)/(cz+d); requires det g > 0. Exact tags
/// are propagated (the image of a quadratic point under a rational matrix
/// is quadratic).
HPoint act(const IntMatrix2& g, const HPoint& z);

/// Membership in the fundamental domain: Re in [-1/2, 1/2), |z| >= 1, and
/// on |z| = 1 additionally Re in [-1/2, 0]. Tagged points are decided
/// exactly; numeric points within tolerance of a boundary raise
/// AmbiguousBoundary.
bool in_fundamental_domain(const HPoint& z);

struct ReduceResult {
    HPoint point;
    IntMatrix2 gamma;  // det 1, point == gamma . input
};

/// Translate / invert until the point lands in the fundamental domain,
/// accumulating the SL2(Z) word as an exact integer matrix.
ReduceResult reduce_to_fundamental(const HPoint& z);

struct FixedPointClass {
    enum class Kind { CM, NotCM, NoFixedPointInH };
    Kind kind;
    Int disc;  // valid when kind == CM
};

/// Discriminant of j at a fixed point of g (det g = N > 0):
/// ((a+d)^2 - 4N)/h^2 with h = gcd(c, d-a, b). Scalar matrices are NotCM;
/// nonnegative values mean the fixed points are not in H.
FixedPointClass fixed_point_discriminant(const IntMatrix2& g);

/// Same SL2(Z) orbit: reduce both and compare (exactly via tags when both
/// are tagged, else numerically within tolerance).
bool same_orbit(const HPoint& z, const HPoint& w);

}  // namespace msc

#endif
