#ifndef MSC_ERRORS_HPP
#define MSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msc {

/// Base class for failures raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A purely numeric point lies within tolerance of a fundamental-domain
/// boundary and the test cannot be decided. Retry at higher precision.
struct AmbiguousBoundary : Error {
    explicit AmbiguousBoundary(const std::string& what) : Error(what) {}
};

/// Coefficient rounding kept failing after the configured number of
/// precision doublings. Indicates a bug, not an expected condition.
struct PrecisionEscalationFailed : Error {
    explicit PrecisionEscalationFailed(const std::string& what) : Error(what) {}
};

/// A series that must collapse to integral exponents and integer
/// coefficients did not.
struct NonIntegralSeries : Error {
    explicit NonIntegralSeries(const std::string& what) : Error(what) {}
};

/// Pole-order reduction left a nonzero remainder.
struct NonzeroRemainder : Error {
    explicit NonzeroRemainder(const std::string& what) : Error(what) {}
};

/// Class-polynomial trial division left a non-constant quotient.
struct NonConstantRemainder : Error {
    explicit NonConstantRemainder(const std::string& what) : Error(what) {}
};

/// The transporter search strategy gave up. The underlying coset argument
/// guarantees existence, so this signals a configuration problem.
struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& what) : Error(what) {}
};

/// A factorization exceeded the configured effort budget; carries the
/// offending value so the caller can report rather than guess.
struct FactorizationIncomplete : Error {
    std::string value;
    FactorizationIncomplete(const std::string& what, std::string v)
        : Error(what), value(std::move(v)) {}
};

/// A curve's defining polynomial identity failed; carries the degree of
/// the first mismatching coefficient.
struct IdentityFailed : Error {
    long degree;
    IdentityFailed(const std::string& what, long deg) : Error(what), degree(deg) {}
};

}  // namespace msc

#endif
