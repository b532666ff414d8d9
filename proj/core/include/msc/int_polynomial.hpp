#ifndef MSC_INT_POLYNOMIAL_HPP
#define MSC_INT_POLYNOMIAL_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "msc/integer.hpp"

namespace msc {

/// Dense univariate polynomial over Z, constant term first. The zero
/// polynomial is the empty coefficient sequence; otherwise the trailing
/// (highest-degree) coefficient is nonzero.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPolynomial(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }
    explicit IntPolynomial(const Int& constant) : c_{constant} { normalize(); }

    static IntPolynomial zero() { return {}; }
    static IntPolynomial one() { return IntPolynomial{Int(1)}; }
    /// c * X^k
    static IntPolynomial monomial(const Int& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return c_; }
    /// Coefficient of X^k (zero beyond the stored range).
    const Int& coeff(std::size_t k) const;
    const Int& leading() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& s) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    IntPolynomial pow(unsigned long e) const;

    /// Horner evaluation.
    Int eval(const Int& x) const;

    /// gcd of all coefficients (0 for the zero polynomial).
    Int content() const;

    /// One-line text form, terms in descending degree with explicit signs,
    /// e.g. "-X^4 + 2978*X^3 + 40449375*X^2 + 17496000000*X - 157464000000000".
    std::string to_string(const std::string& var = "X") const;

  private:
    void normalize();
    std::vector<Int> c_;
};

inline IntPolynomial operator*(const Int& s, const IntPolynomial& p) { return p * s; }

/// Exact product.
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);

/// Exact quotient r with q*r == p over Z, or nullopt if p is not divisible
/// by q in Z[X]. Division by the zero polynomial is a contract violation.
std::optional<IntPolynomial> poly_divexact(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace msc

#endif
