#ifndef MSC_QUADRATIC_NUMBER_HPP
#define MSC_QUADRATIC_NUMBER_HPP

#include "msc/int_polynomial.hpp"
#include "msc/integer.hpp"

namespace msc {

/// Real algebraic number of degree at most 2 in the canonical form
/// p + q sqrt(d) with rational p, q and squarefree integer d > 1
/// (rational numbers have q = 0, d = 1). All comparisons are exact.
class QuadraticNumber {
  public:
    QuadraticNumber() : p_(0), q_(0), d_(1) {}
    QuadraticNumber(Rat p) : p_(std::move(p)), q_(0), d_(1) { p_.canonicalize(); }
    /// p + q sqrt(d); d > 0 is reduced to its squarefree core.
    QuadraticNumber(Rat p, Rat q, Int d);

    bool is_rational() const { return q_ == 0; }
    const Rat& rational_part() const { return p_; }
    const Rat& surd_coefficient() const { return q_; }
    const Int& radicand() const { return d_; }

    /// Exact sign: -1, 0, +1.
    int sign() const;
    int compare(const Rat& r) const { return (*this - r).sign(); }
    bool operator<(const Rat& r) const { return compare(r) < 0; }
    bool operator<=(const Rat& r) const { return compare(r) <= 0; }
    bool operator==(const QuadraticNumber& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_;
    }

    QuadraticNumber operator-() const;
    QuadraticNumber operator-(const Rat& r) const;
    QuadraticNumber operator+(const Rat& r) const;
    QuadraticNumber scaled(const Rat& r) const;
    QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }
    /// p - q sqrt(d).
    QuadraticNumber conjugate() const { return {p_, -q_, d_, 0}; }

    double to_double() const;

    /// Primitive integer minimal polynomial, degree 1 or 2, positive leading
    /// coefficient.
    IntPolynomial minimal_polynomial() const;

  private:
    QuadraticNumber(Rat p, Rat q, Int d, int /*already canonical*/)
        : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}
    Rat p_, q_;
    Int d_;
};

}  // namespace msc

#endif
