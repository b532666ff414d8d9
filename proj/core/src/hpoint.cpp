#include "msc/hpoint.hpp"

#include <stdexcept>

namespace msc {

HPoint HPoint::from_form(const QuadForm& f, long prec) {
    BigFloat two_a = BigFloat::from_int(2 * f.a, prec);
    BigFloat re = BigFloat::from_int(-f.b, prec) / two_a;
    BigFloat im = BigFloat::sqrt_int(-f.disc(), prec) / two_a;
    return HPoint(f, BigComplex(std::move(re), std::move(im)));
}

HPoint HPoint::from_value(BigComplex v) {
    if (v.im.sign() <= 0)
        throw std::invalid_argument("HPoint: imaginary part must be positive");
    return HPoint(std::nullopt, std::move(v));
}

BigComplex HPoint::value_at(long prec) const {
    if (!tag_) throw std::invalid_argument("HPoint::value_at: untagged point");
    return from_form(*tag_, prec).value();
}

Rat HPoint::exact_re() const {
    if (!tag_) throw std::invalid_argument("HPoint::exact_re: untagged point");
    Rat r(-tag_->b, 2 * tag_->a);
    r.canonicalize();
    return r;
}

HPoint cm_point(const QuadForm& f, long prec) {
    if (!f.is_reduced()) throw std::invalid_argument("cm_point: form must be reduced");
    return HPoint::from_form(f, prec);
}

}  // namespace msc
