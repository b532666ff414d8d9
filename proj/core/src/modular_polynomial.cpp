#include "msc/modular_polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "msc/cm_eval.hpp"
#include "msc/errors.hpp"
#include "msc/j_series.hpp"

namespace msc {

namespace {

// Polynomial in X with Puiseux-series coefficients, constant term first.
using SeriesPoly = std::vector<PuiseuxSeries>;

SeriesPoly sp_mul(const SeriesPoly& a, const SeriesPoly& b) {
    SeriesPoly out(a.size() + b.size() - 1);
    std::vector<bool> set(out.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            PuiseuxSeries prod = a[i] * b[j];
            if (set[i + j])
                out[i + j] = out[i + j] + prod;
            else {
                out[i + j] = std::move(prod);
                set[i + j] = true;
            }
        }
    return out;
}

SeriesPoly sp_twist(const SeriesPoly& a, long t, long m) {
    SeriesPoly out;
    out.reserve(a.size());
    for (const auto& s : a) out.push_back(s.twisted(t, m));
    return out;
}

long smallest_prime_factor(long n) {
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

// prod over beta mod d of the beta-twist of P (substitution w -> zeta_d^beta w),
// computed by peeling one prime at a time. The p-fold subproduct is invariant
// under w -> zeta_p w, so only exponents divisible by p survive and the
// coefficients collapse to rational integers; both facts are checked.
SeriesPoly twisted_norm_product(SeriesPoly p, long d) {
    while (d > 1) {
        const long q = smallest_prime_factor(d);
        if (q == 2) {
            p = sp_mul(p, sp_twist(p, 1, 2));
        } else {
            SeriesPoly acc = p;
            for (long t = 1; t < q; ++t) acc = sp_mul(acc, sp_twist(p, t, q));
            for (auto& s : acc) s = s.rationalized();
            p = std::move(acc);
        }
        for (auto& s : p) s = s.compressed(q);
        d /= q;
    }
    return p;
}

PuiseuxSeries jz_in_w(long denom, const Rat& trunc, const JSeries& js) {
    Rat t = trunc;
    Int nmax_i;
    mpz_cdiv_q(nmax_i.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    const long nmax = to_long(nmax_i) - 1;
    if (nmax < -1) return PuiseuxSeries::zero(trunc, denom);
    if (nmax > js.order()) throw std::logic_error("jz_in_w: series order too small");
    std::vector<CycloInt> slots(static_cast<std::size_t>((nmax + 1) * denom) + 1);
    for (long n = -1; n <= nmax; ++n)
        slots[static_cast<std::size_t>((n + 1) * denom)] = CycloInt(js.c(n));
    return PuiseuxSeries::from_slots(denom, -denom, std::move(slots), trunc);
}

// j((az+b)/d) in w = q^(1/denom); the matrix d must divide denom.
PuiseuxSeries jgz_in_w(long a, long b, long d, long denom, const Rat& trunc, const JSeries& js) {
    if (denom % d != 0) throw std::logic_error("jgz_in_w: denominator mismatch");
    const long step = a * (denom / d);  // exponent numerator per unit m
    Rat mt = trunc * denom / step;
    mt.canonicalize();
    Int mmax_i;
    mpz_cdiv_q(mmax_i.get_mpz_t(), mt.get_num_mpz_t(), mt.get_den_mpz_t());
    const long mmax = to_long(mmax_i) - 1;
    if (mmax < -1) return PuiseuxSeries::zero(trunc, denom);
    if (mmax > js.order()) throw std::logic_error("jgz_in_w: series order too small");
    std::vector<CycloInt> slots(static_cast<std::size_t>((mmax + 1) * step) + 1);
    for (long m = -1; m <= mmax; ++m) {
        const long k = ((b % d) * (m % d)) % d;
        slots[static_cast<std::size_t>((m + 1) * step)] =
            (k == 0) ? CycloInt(js.c(m)) : CycloInt::zeta_power(d, k, js.c(m));
    }
    return PuiseuxSeries::from_slots(denom, -step, std::move(slots), trunc);
}

// Laurent-series pole clearing: subtract lambda * j^k from the top down,
// accumulating the polynomial; the remainder must vanish identically.
IntPolynomial pole_reduce(PuiseuxSeries s, const JSeries& js) {
    if (s.denominator() != 1) throw NonIntegralSeries("pole_reduce: fractional exponents");
    if (s.known_zero()) return IntPolynomial::zero();
    const long deg = std::max<long>(0, -s.lowest_numerator());
    const Rat t0 = s.truncation() + deg;
    PuiseuxSeries jz = jz_in_w(1, t0, js);
    std::vector<PuiseuxSeries> jpow(static_cast<std::size_t>(deg) + 1);
    jpow[0] = PuiseuxSeries::constant(CycloInt(Int(1)), t0);
    for (long k = 1; k <= deg; ++k)
        jpow[static_cast<std::size_t>(k)] = jpow[static_cast<std::size_t>(k - 1)] * jz;

    std::vector<Int> coeffs(static_cast<std::size_t>(deg) + 1, Int(0));
    for (long k = deg; k >= 0; --k) {
        Int lam = s.int_coefficient(-k);
        if (lam != 0) {
            s = s - jpow[static_cast<std::size_t>(k)].scaled(CycloInt(lam));
            coeffs[static_cast<std::size_t>(k)] = std::move(lam);
        }
    }
    if (!s.known_zero())
        throw NonzeroRemainder("pole_reduce: nonzero remainder at exponent " +
                               s.effective_lowest().get_str());
    return IntPolynomial(std::move(coeffs));
}

struct BlockKey {
    long a, d;
    bool operator<(const BlockKey& o) const { return a != o.a ? a < o.a : d < o.d; }
};

// One (a, d) block of the product over C(N). mode_phi: factors are
// (X - j(gz)); otherwise (j - j(gz)).
SeriesPoly block_product(long a, long d, const std::vector<long>& bs, bool mode_phi, long window,
                         const JSeries& js) {
    const Rat low = mode_phi ? Rat(-a, d) : std::min(Rat(-1), Rat(-a, d));
    Rat tr = low + window;
    tr.canonicalize();
    const Rat tr_one = Rat(window);

    auto make_factor = [&](long b) {
        SeriesPoly f;
        if (mode_phi) {
            f.push_back(-jgz_in_w(a, b, d, d, tr, js));
            f.push_back(PuiseuxSeries::constant(CycloInt(Int(1)), tr_one, d));
        } else {
            f.push_back(jz_in_w(d, tr, js) - jgz_in_w(a, b, d, d, tr, js));
        }
        return f;
    };

    SeriesPoly result;
    if (std::gcd(a, d) == 1) {
        // Full block: all residues b mod d occur, as the beta-twists of the
        // b = 0 factor (b = beta * a runs over Z/d).
        result = twisted_norm_product(make_factor(0), d);
    } else {
        bool first = true;
        for (long b : bs) {
            SeriesPoly f = make_factor(b);
            result = first ? std::move(f) : sp_mul(result, f);
            first = false;
        }
    }
    for (auto& s : result) s = s.collapsed_to_integral();
    return result;
}

SeriesPoly product_over_hecke_set(long n, bool mode_phi, long window, const JSeries& js) {
    std::map<BlockKey, std::vector<long>> blocks;
    for (const auto& g : hecke_set(n))
        blocks[{to_long(g.a), to_long(g.d)}].push_back(to_long(g.b));

    SeriesPoly total;
    bool first = true;
    for (const auto& [key, bs] : blocks) {
        SeriesPoly blk = block_product(key.a, key.d, bs, mode_phi, window, js);
        total = first ? std::move(blk) : sp_mul(total, blk);
        first = false;
    }
    return total;
}

// Series order needed so every factor of the product is exact on a window
// of `window` q-units above its lowest exponent.
long series_order_needed(long n, long window) {
    long max_m = window + 2;
    for (const auto& g : hecke_set(n)) {
        const long a = to_long(g.a), d = to_long(g.d);
        // highest exponent: low + window with low >= -max(1, a/d) - 1
        const Rat hi = Rat(window) + 1;
        Rat mb = hi * d / a;
        Int mi;
        mpz_cdiv_q(mi.get_mpz_t(), mb.get_num_mpz_t(), mb.get_den_mpz_t());
        max_m = std::max(max_m, to_long(mi));
    }
    return max_m;
}

}  // namespace

PuiseuxSeries j_of_gz_series(const HeckeMatrix& g, long order) {
    const long a = to_long(g.a), b = to_long(g.b), d = to_long(g.d);
    Rat tr = Rat(order) + Rat(1, d);
    tr.canonicalize();
    Rat mt = tr * d / a;
    Int mi;
    mpz_cdiv_q(mi.get_mpz_t(), mt.get_num_mpz_t(), mt.get_den_mpz_t());
    auto js = j_series_cached(std::max<long>(0, to_long(mi)));
    return jgz_in_w(a, b, d, d, tr, *js);
}

IntPolynomial f_polynomial(long n) {
    if (n < 2) throw std::invalid_argument("f_polynomial: n must be at least 2");
    // deg F_N = sum over C(N) of max(1, a/d): lowest exponent of the product
    Rat deg_r(0);
    for (const auto& g : hecke_set(n)) deg_r += std::max(Rat(1), Rat(g.a, g.d));
    deg_r.canonicalize();
    if (deg_r.get_den() != 1) throw std::logic_error("f_polynomial: non-integral degree bound");
    const long window = to_long(Int(deg_r.get_num())) + 3;

    auto js = j_series_cached(series_order_needed(n, window));
    SeriesPoly total = product_over_hecke_set(n, /*mode_phi=*/false, window, *js);
    if (total.size() != 1) throw std::logic_error("f_polynomial: unexpected polynomial shape");
    return pole_reduce(std::move(total[0]), *js);
}

const Int& ModularPolynomial::coefficient(std::size_t i, std::size_t j) const {
    static const Int zero = 0;
    if (i >= x_coeffs.size()) return zero;
    return x_coeffs[i].coeff(j);
}

IntPolynomial ModularPolynomial::diagonal() const {
    IntPolynomial acc;
    for (std::size_t i = 0; i < x_coeffs.size(); ++i)
        acc = acc + x_coeffs[i] * IntPolynomial::monomial(Int(1), i);
    return acc;
}

ModularPolynomial modular_polynomial(long n, long max_level) {
    if (n < 2) throw std::invalid_argument("modular_polynomial: n must be at least 2");
    if (n > max_level)
        throw std::invalid_argument("modular_polynomial: level exceeds the configured bound");
    const long psi_n = to_long(psi(n));
    const long window = psi_n + 3;

    auto js = j_series_cached(series_order_needed(n, window));
    SeriesPoly total = product_over_hecke_set(n, /*mode_phi=*/true, window, *js);
    if (static_cast<long>(total.size()) != psi_n + 1)
        throw std::logic_error("modular_polynomial: wrong X-degree");

    ModularPolynomial out;
    out.level = n;
    out.x_coeffs.reserve(total.size());
    for (auto& s : total) out.x_coeffs.push_back(pole_reduce(std::move(s), *js));
    if (out.x_coeffs.back() != IntPolynomial::one())
        throw std::logic_error("modular_polynomial: not monic in X");
    return out;
}

FNFactorization factor_f_into_class_polys(long n, unsigned threads) {
    IntPolynomial rem = f_polynomial(n);
    FNFactorization out;
    for (Int disc = -3; disc >= -4 * Int(n); disc -= 1) {
        if (!is_valid_discriminant(disc)) continue;
        ClassPolynomial h = class_polynomial(disc, threads);
        long mult = 0;
        while (true) {
            auto q = poly_divexact(rem, h.poly);
            if (!q) break;
            rem = std::move(*q);
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(disc, mult);
    }
    if (!rem.is_constant() || rem.is_zero())
        throw NonConstantRemainder("factor_f_into_class_polys: leftover of degree " +
                                   std::to_string(rem.degree()));
    out.sign = rem.coeff(0) < 0 ? -1 : 1;
    out.content = abs(rem.coeff(0));
    return out;
}

}  // namespace msc
