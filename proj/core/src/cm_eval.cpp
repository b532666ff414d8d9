#include "msc/cm_eval.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "msc/errors.hpp"
#include "msc/halfplane.hpp"
#include "msc/j_series.hpp"
#include "msc/parallel.hpp"
#include "msc/quad_form.hpp"

namespace msc {

namespace {

// Smallest series order M so that sum_{m>M} c(m) |q|^m < 2^-(target+8),
// using c(m) <= e^(4 pi sqrt(m)) and the geometric ratio bound
// t(m+1)/t(m) <= e^(4 pi (sqrt(2)-1) - 2 pi y), valid for y >= sqrt(3)/2.
long series_order_for(double y, long target) {
    const double pi = 3.14159265358979323846;
    const double log_ratio = 4 * pi * (std::sqrt(2.0) - 1.0) - 2 * pi * y;
    if (log_ratio >= -0.1) throw std::logic_error("series_order_for: Im tau too small");
    const double goal = -(static_cast<double>(target) + 8.0) * std::log(2.0);
    const double log_one_minus_ratio = std::log1p(-std::exp(log_ratio));
    for (long m = 1;; ++m) {
        // log of tail bound t(m)/(1-ratio) where the tail starts at m
        const double lt = 4 * pi * std::sqrt(static_cast<double>(m)) - 2 * pi * y * m;
        if (lt - log_one_minus_ratio < goal) return m - 1;
        if (m > 100000000) throw std::logic_error("series_order_for: runaway order");
    }
}

BigComplex j_eval_reduced(const HPoint& tau, long precision) {
    const long wp = precision + 32;
    const BigComplex t = tau.has_tag() ? tau.value_at(wp) : tau.value();
    const double y = t.im.to_double();
    const long order = series_order_for(y, precision);
    auto series = j_series_cached(order);

    const BigComplex q = exp_2pi_i(t);
    // Horner over m = order .. 1, then + 744 + 1/q.
    BigComplex acc(wp);
    for (long m = order; m >= 1; --m) {
        acc = acc * q;
        acc.re = acc.re + BigFloat::from_int(series->c(m), wp);
    }
    acc = acc * q;
    acc.re = acc.re + BigFloat::from_int(Int(744), wp);
    BigComplex one(wp);
    one.re = BigFloat::from_int(Int(1), wp);
    return acc + one / q;
}

}  // namespace

BigComplex j_eval(const HPoint& tau, long precision) {
    if (precision < 16) throw std::invalid_argument("j_eval: precision too small");
    HPoint reduced = reduce_to_fundamental(tau).point;
    if (reduced.has_tag() && reduced.precision() < precision + 32)
        reduced = HPoint::from_form(reduced.tag(), precision + 32);
    return j_eval_reduced(reduced, precision);
}

ClassPolynomial class_polynomial(const Int& disc, unsigned threads) {
    const std::vector<QuadForm> forms = reduced_forms(disc);
    const std::size_t h = forms.size();

    // Initial precision: the dominant term of log2 |j(tau_f)| is
    // pi sqrt(|disc|) / (a_f ln 2); the product's coefficients are bounded
    // by the sum over conjugates, plus slack for cross terms and rounding.
    double inv_a = 0;
    for (const auto& f : forms) inv_a += 1.0 / f.a.get_d();
    const double pi = 3.14159265358979323846;
    long prec = static_cast<long>(std::ceil(pi * std::sqrt(mpz_class(-disc).get_d()) / std::log(2.0) * inv_a));
    prec += 64 + 16 * static_cast<long>(h);

    for (int attempt = 0; attempt < 6; ++attempt, prec *= 2) {
        std::vector<BigComplex> roots(h, BigComplex(prec));
        parallel_for_ordered(h, threads, [&](std::size_t i) {
            roots[i] = j_eval(cm_point(forms[i], prec + 32), prec);
        });

        // monic product of (X - root_i), constant term first
        std::vector<BigComplex> poly;
        poly.emplace_back(prec);
        poly[0].re = BigFloat::from_int(Int(1), prec);
        for (const auto& r : roots) {
            std::vector<BigComplex> next(poly.size() + 1, BigComplex(prec));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = next[i + 1] + poly[i];
                next[i] = next[i] - poly[i] * r;
            }
            poly = std::move(next);
        }

        const BigFloat quarter = BigFloat::from_rat(Rat(1, 4), prec);
        std::vector<Int> coeffs;
        coeffs.reserve(h + 1);
        bool ok = true;
        for (const auto& c : poly) {
            auto [n, diff] = c.re.round_to_int();
            if (!(diff < quarter) || !(c.im.abs() < quarter)) {
                ok = false;
                break;
            }
            coeffs.push_back(std::move(n));
        }
        if (ok) return {disc, IntPolynomial(std::move(coeffs))};
    }
    throw PrecisionEscalationFailed("class_polynomial: rounding kept failing for disc " +
                                    disc.get_str());
}

}  // namespace msc
