#ifndef MSC_J_SERIES_HPP
#define MSC_J_SERIES_HPP

#include <memory>
#include <vector>

#include "msc/integer.hpp"

namespace msc {

/// Exact q-expansion of the modular j-function:
/// j = q^-1 + 744 + sum_{m>=1} c(m) q^m, computed as E4^3 / Delta with
/// E4 = 1 + 240 sum sigma_3(m) q^m and Delta = q prod (1-q^m)^24.
struct JSeries {
    /// coeffs[m+1] = c(m); coeffs[0] = c(-1) = 1, coeffs[1] = c(0) = 744.
    std::vector<Int> coeffs;

    long order() const { return static_cast<long>(coeffs.size()) - 2; }
    const Int& c(long m) const { return coeffs.at(static_cast<std::size_t>(m + 1)); }
};

/// Coefficients through c(order), exact.
JSeries j_series(long order);

/// Shared cache; the returned snapshot covers at least the requested order.
std::shared_ptr<const JSeries> j_series_cached(long order);

}  // namespace msc

#endif
