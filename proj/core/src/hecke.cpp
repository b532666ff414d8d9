#include "msc/hecke.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "msc/errors.hpp"

namespace msc {

Int psi(long n) {
    if (n < 1) throw std::invalid_argument("psi: n must be positive");
    Int num = n, den = 1;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        num *= p + 1;
        den *= p;
    }
    if (m > 1) {
        num *= m + 1;
        den *= m;
    }
    return num / den;
}

std::vector<HeckeMatrix> hecke_set(long n) {
    if (n < 1) throw std::invalid_argument("hecke_set: n must be positive");
    std::vector<HeckeMatrix> out;
    for (long a = 1; a <= n; ++a) {
        if (n % a != 0) continue;
        const long d = n / a;
        const Int ga = gcd(Int(a), Int(d));
        for (long b = 0; b < d; ++b) {
            if (gcd(ga, Int(b)) != 1) continue;
            out.push_back({Int(a), Int(b), Int(d)});
        }
    }
    return out;  // (a, b) enumeration order is already the canonical sort
}

JMap JMap::constant(SingularModulusRef ref) {
    JMap m;
    m.constant_ = true;
    m.ref_ = std::move(ref);
    return m;
}

JMap JMap::modular(Rat r, Rat s) {
    if (r <= 0) throw std::invalid_argument("JMap: r must be positive");
    if (s < 0 || s >= 1) throw std::invalid_argument("JMap: s must lie in [0, 1)");
    JMap m;
    m.r_ = std::move(r);
    m.s_ = std::move(s);
    m.r_.canonicalize();
    m.s_.canonicalize();
    return m;
}

JMap JMap::of_matrix(const IntMatrix2& g) {
    NormalizedJMap n = jmap_normalize(g);
    Rat r(n.rep.a, n.rep.d), s(n.rep.b, n.rep.d);
    r.canonicalize();
    s.canonicalize();
    return modular(std::move(r), std::move(s));
}

const SingularModulusRef& JMap::ref() const {
    if (!constant_) throw std::invalid_argument("JMap::ref: non-constant map");
    return ref_;
}

const Rat& JMap::r() const {
    if (constant_) throw std::invalid_argument("JMap::r: constant map");
    return r_;
}

const Rat& JMap::s() const {
    if (constant_) throw std::invalid_argument("JMap::s: constant map");
    return s_;
}

bool JMap::operator==(const JMap& o) const {
    if (constant_ != o.constant_) return false;
    if (constant_) return ref_ == o.ref_;
    return r_ == o.r_ && s_ == o.s_;
}

NormalizedJMap jmap_normalize(const IntMatrix2& g) {
    if (g.det() <= 0) throw std::invalid_argument("jmap_normalize: determinant must be positive");

    // Left SL2(Z)-multiplication to upper-triangular form with positive
    // diagonal: [[m, n], [-c/mu, a/mu]] for mu = gcd(a, c) = m a + n c.
    Int A = g.a, B = g.b, D = g.d;
    if (g.c != 0) {
        Int mu, m, n;
        mpz_gcdext(mu.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t(), g.a.get_mpz_t(), g.c.get_mpz_t());
        A = mu;
        B = m * g.b + n * g.d;
        D = g.det() / mu;
    } else if (A < 0) {
        A = -A;
        B = -B;
        D = -D;
    }
    // mu = gcd > 0 and det > 0 force D > 0 in the first branch.

    Int content = gcd(A, B, D);
    A /= content;
    B /= content;
    D /= content;
    B = fmod(B, D);
    HeckeMatrix rep{std::move(A), std::move(B), std::move(D)};
    Int level = rep.level();
    return {std::move(level), std::move(rep)};
}

HeckeMatrix hecke_right_action(const HeckeMatrix& g, const IntMatrix2& gamma) {
    if (gamma.det() != 1) throw std::invalid_argument("hecke_right_action: gamma must be unimodular");
    NormalizedJMap n = jmap_normalize(g.matrix() * gamma);
    if (n.level != g.level())
        throw std::logic_error("hecke_right_action: level changed; input was not primitive");
    return n.rep;
}

IntMatrix2 hecke_transporter(const HeckeMatrix& g, const HeckeMatrix& h) {
    if (g.level() != h.level())
        throw std::invalid_argument("hecke_transporter: matrices of different level");

    // Breadth-first search over right multiplications by S, T, T^-1,
    // deduplicated on the induced C(N) element; the action is transitive so
    // every state is reachable.
    const IntMatrix2 gens[3] = {IntMatrix2::inversion(), IntMatrix2::translation(Int(1)),
                                IntMatrix2::translation(Int(-1))};
    std::map<HeckeMatrix, IntMatrix2> seen;
    std::deque<HeckeMatrix> queue;
    seen.emplace(g, IntMatrix2::identity());
    queue.push_back(g);
    while (!queue.empty()) {
        HeckeMatrix cur = queue.front();
        queue.pop_front();
        const IntMatrix2 word = seen.at(cur);
        if (cur == h) {
            if (hecke_right_action(g, word) != h)
                throw std::logic_error("hecke_transporter: certificate check failed");
            return word;
        }
        for (const auto& gen : gens) {
            IntMatrix2 next_word = word * gen;
            HeckeMatrix next = hecke_right_action(cur, gen);
            if (seen.emplace(next, next_word).second) queue.push_back(next);
        }
    }
    throw SearchExhausted("hecke_transporter: search space exhausted");
}

}  // namespace msc
