#include "msc/factorizer.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "msc/errors.hpp"

namespace msc {

namespace {

constexpr long kTrialBound = 1000000;
constexpr long kRhoBudget = 40000000;

const std::vector<long>& small_primes() {
    static std::vector<long> primes;
    static std::once_flag once;
    std::call_once(once, [] {
        std::vector<bool> sieve(kTrialBound + 1, true);
        for (long i = 2; i * i <= kTrialBound; ++i)
            if (sieve[static_cast<std::size_t>(i)])
                for (long j = i * i; j <= kTrialBound; j += i) sieve[static_cast<std::size_t>(j)] = false;
        for (long i = 2; i <= kTrialBound; ++i)
            if (sieve[static_cast<std::size_t>(i)]) primes.push_back(i);
    });
    return primes;
}

// Brent's cycle-finding rho; returns a nontrivial factor of composite n,
// or 0 when the step budget runs out.
Int pollard_rho(const Int& n) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(2463534242UL);
    long steps = 0;
    while (steps < kRhoBudget) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x = y, q = 1, g = 1, ys = y;
        long r = 1;
        const long m = 128;
        while (g == 1 && steps < kRhoBudget) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && g == 1) {
                ys = y;
                const long lim = std::min(m, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                steps += lim;
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
                ++steps;
            }
        }
        if (g != n && g > 1) return g;
    }
    return 0;
}

void factor_into(const Int& n, std::map<Int, Int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Int f = pollard_rho(n);
    if (f == 0)
        throw FactorizationIncomplete("factorize: effort budget exceeded", n.get_str());
    factor_into(f, out);
    factor_into(n / f, out);
}

}  // namespace

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<Int, Int> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    Int m = abs(n);
    std::map<Int, Int> out;
    for (long p : small_primes()) {
        if (Int(p) * p > m) break;
        while (m % p == 0) {
            out[Int(p)] += 1;
            m /= p;
        }
        if (m == 1) break;
    }
    if (m > 1) factor_into(m, out);
    return out;
}

}  // namespace msc
