#ifndef MSC_HPOINT_HPP
#define MSC_HPOINT_HPP

#include <optional>

#include "msc/big_complex.hpp"
#include "msc/quad_form.hpp"

namespace msc {

/// Point of the upper half plane. CM points carry an exact tag: the
/// primitive form (a, b, c) with the point equal to
/// (-b + sqrt(|b^2-4ac|) i) / (2a). All boundary decisions on tagged
/// points are exact; untagged points are numeric only.
class HPoint {
  public:
    /// Exact CM point from its form tag; the numeric value is materialized
    /// at the requested precision.
    static HPoint from_form(const QuadForm& f, long prec = 128);
    /// Numeric point; imaginary part must be positive.
    static HPoint from_value(BigComplex v);

    bool has_tag() const { return tag_.has_value(); }
    const QuadForm& tag() const { return *tag_; }
    const BigComplex& value() const { return value_; }
    long precision() const { return value_.precision(); }

    /// Numeric value recomputed from the tag at a given precision
    /// (tagged points only).
    BigComplex value_at(long prec) const;

    /// Exact real part as a rational (tagged points only).
    Rat exact_re() const;

  private:
    HPoint(std::optional<QuadForm> tag, BigComplex value)
        : tag_(std::move(tag)), value_(std::move(value)) {}

    std::optional<QuadForm> tag_;
    BigComplex value_;
};

/// CM point of a reduced form: (-b + sqrt(|disc|) i)/(2a). Reduced forms
/// land in the fundamental domain.
HPoint cm_point(const QuadForm& f, long prec = 128);

}  // namespace msc

#endif
