#ifndef MSC_FACTORIZER_HPP
#define MSC_FACTORIZER_HPP

#include <map>

#include "msc/integer.hpp"

namespace msc {

bool is_probable_prime(const Int& n);

/// Complete factorization of |n| into prime powers: trial division up to
/// 10^6, then Brent's variant of Pollard rho with a step budget on the
/// survivors. A cofactor that resists the budget raises
/// FactorizationIncomplete (reported, never guessed).
std::map<Int, Int> factorize(const Int& n);

}  // namespace msc

#endif
