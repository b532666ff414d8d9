#ifndef MSC_EXPONENT_LATTICE_HPP
#define MSC_EXPONENT_LATTICE_HPP

#include <map>
#include <optional>
#include <vector>

#include "msc/integer.hpp"

namespace msc {

/// Nonzero rational in fully factored form: sign and a finite prime ->
/// exponent map. Multiplication adds exponent maps; reassembly is exact.
struct FactoredRational {
    int sign = 1;
    std::map<Int, Int> exponents;

    static FactoredRational one() { return {}; }
    static FactoredRational from_integer(const Int& n);
    static FactoredRational from_rational(const Rat& q);

    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational pow(const Int& e) const;
    bool is_one() const { return sign == 1 && exponents.empty(); }
    Rat value() const;
};

using ExponentVector = std::vector<Int>;

/// Basis of the integer kernel lattice {v : A v = 0} for integer rows A,
/// via unimodular column reduction of A stacked over the identity.
std::vector<ExponentVector> integer_kernel(const std::vector<ExponentVector>& rows,
                                           std::size_t cols);

/// Basis of {v : prod values_i^(v_i) = 1}: integer kernel of the prime
/// exponent matrix, restricted to even total weight on the negative-sign
/// coordinates (a GF(2) parity row, folded in by doubling one basis vector
/// when needed).
std::vector<ExponentVector> multiplicative_kernel(const std::vector<FactoredRational>& values);

/// For each index i: one minimal multiplicatively dependent subset
/// containing i (empty when i lies in none). Minimal means dependent with
/// every proper nonempty subset independent.
std::vector<std::vector<long>> minimal_dependent_subsets(
    const std::vector<FactoredRational>& values);

/// Witness of the all-nonzero combination: the inductive step adds
/// lambda = 1 + max(|entries so far|, |entries of the incoming vector|)
/// times the incoming vector whenever the target coordinate is still zero;
/// each step satisfies |u_i| <= 2 lambda^2.
struct CombineStep {
    std::size_t index;
    Int lambda;
};

struct CombineResult {
    ExponentVector vector;
    std::vector<CombineStep> steps;
};

/// vectors[i][i] must be nonzero; returns an integer combination with every
/// coordinate nonzero, certified step by step.
CombineResult combine_all_nonzero(const std::vector<ExponentVector>& vectors);

/// Integer vector in the span of `basis` on which every listed functional
/// (given as a coefficient vector) is nonzero; nullopt when some functional
/// vanishes on the whole span. Deterministic small-coefficient scan; the
/// result is primitive with positive first nonzero entry.
std::optional<ExponentVector> span_element_avoiding(const std::vector<ExponentVector>& basis,
                                                    const std::vector<ExponentVector>& functionals);

/// Divide by the gcd and make the first nonzero entry positive.
void make_primitive(ExponentVector& v);

Int dot(const ExponentVector& a, const ExponentVector& b);

}  // namespace msc

#endif
