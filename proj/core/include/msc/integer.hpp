#ifndef MSC_INTEGER_HPP
#define MSC_INTEGER_HPP

#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace msc {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b, const Int& c) { return gcd(gcd(a, b), c); }

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

/// Floor division (rounds toward minus infinity, unlike mpz_class's '/').
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Nonnegative remainder of a mod b, b > 0.
inline Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Ceiling division.
inline Int cdiv(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline long to_long(const Int& a) { return mpz_get_si(a.get_mpz_t()); }

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

}  // namespace msc

#endif
