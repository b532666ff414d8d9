#ifndef MSC_MODULAR_POLYNOMIAL_HPP
#define MSC_MODULAR_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "msc/hecke.hpp"
#include "msc/int_polynomial.hpp"
#include "msc/puiseux.hpp"

namespace msc {

/// q-expansion of j(gz) for g = (a, b, d): sum of c(m) zeta_d^(bm) q^(am/d)
/// over m >= -1, truncated beyond total exponent `order`.
PuiseuxSeries j_of_gz_series(const HeckeMatrix& g, long order);

/// F_N(X) = Phi_N(X, X), computed from the exact Puiseux product
/// prod_{g in C(N)} (j - j(g.)) followed by pole-order reduction against
/// powers of the j-series. Integrality of the product and exactness of the
/// zero remainder are verified (NonIntegralSeries / NonzeroRemainder signal
/// bugs, never expected states).
IntPolynomial f_polynomial(long n);

/// Phi_N(X, Y) as the list of X^i coefficients, each a polynomial in Y.
struct ModularPolynomial {
    long level = 0;
    std::vector<IntPolynomial> x_coeffs;

    long x_degree() const { return static_cast<long>(x_coeffs.size()) - 1; }
    /// Coefficient of X^i Y^j.
    const Int& coefficient(std::size_t i, std::size_t j) const;
    /// Phi_N(X, X).
    IntPolynomial diagonal() const;
};

/// Guard rail: levels above max_level are rejected (the bivariate expansion
/// grows quickly and larger levels are out of scope).
ModularPolynomial modular_polynomial(long n, long max_level = 8);

/// F_N = sign * content * prod H_disc^mult, obtained by exhaustive trial
/// division by every class polynomial with |disc| <= 4N. A non-constant
/// leftover raises NonConstantRemainder.
struct FNFactorization {
    int sign = 1;
    Int content;
    std::vector<std::pair<Int, long>> factors;  // (disc, multiplicity), |disc| ascending
};

FNFactorization factor_f_into_class_polys(long n, unsigned threads = 1);

}  // namespace msc

#endif
