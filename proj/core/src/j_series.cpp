#include "msc/j_series.hpp"

#include <mutex>
#include <stdexcept>

namespace msc {

namespace {

// Dense series in q, index = exponent, arithmetic truncated beyond `size`.
using Dense = std::vector<Int>;

Dense mul_trunc(const Dense& a, const Dense& b, std::size_t size) {
    Dense r(size, Int(0));
    for (std::size_t i = 0; i < a.size() && i < size; ++i) {
        if (a[i] == 0) continue;
        const std::size_t jmax = std::min(b.size(), size - i);
        for (std::size_t j = 0; j < jmax; ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

// a / b with b[0] = +-1, truncated at `size`.
Dense div_trunc(const Dense& a, const Dense& b, std::size_t size) {
    if (b.empty() || (b[0] != 1 && b[0] != -1))
        throw std::logic_error("div_trunc: divisor must have unit constant term");
    Dense q(size, Int(0));
    for (std::size_t k = 0; k < size; ++k) {
        Int acc = k < a.size() ? a[k] : Int(0);
        const std::size_t imax = std::min(k, b.size() - 1);
        for (std::size_t i = 1; i <= imax; ++i)
            mpz_submul(acc.get_mpz_t(), b[i].get_mpz_t(), q[k - i].get_mpz_t());
        q[k] = b[0] == 1 ? acc : -acc;
    }
    return q;
}

JSeries compute(long order) {
    if (order < 0) throw std::invalid_argument("j_series: order must be nonnegative");
    const std::size_t size = static_cast<std::size_t>(order) + 2;  // powers 0 .. order+1

    // E4 = 1 + 240 sum sigma_3(m) q^m
    Dense e4(size, Int(0));
    e4[0] = 1;
    for (std::size_t d = 1; d < size; ++d) {
        const Int cube = Int(static_cast<long>(d)) * static_cast<long>(d) * static_cast<long>(d);
        for (std::size_t m = d; m < size; m += d) e4[m] += cube;
    }
    for (std::size_t m = 1; m < size; ++m) e4[m] *= 240;

    // eta-type product prod (1-q^m) by the pentagonal number theorem
    Dense eta(size, Int(0));
    eta[0] = 1;
    for (long k = 1;; ++k) {
        const long g1 = k * (3 * k - 1) / 2;
        const long g2 = k * (3 * k + 1) / 2;
        if (g1 >= static_cast<long>(size) && g2 >= static_cast<long>(size)) break;
        const Int sign = (k % 2 == 0) ? 1 : -1;
        if (g1 < static_cast<long>(size)) eta[static_cast<std::size_t>(g1)] += sign;
        if (g2 < static_cast<long>(size)) eta[static_cast<std::size_t>(g2)] += sign;
    }

    Dense e2 = mul_trunc(eta, eta, size);
    Dense p4 = mul_trunc(e2, e2, size);
    Dense p8 = mul_trunc(p4, p4, size);
    Dense p16 = mul_trunc(p8, p8, size);
    Dense p24 = mul_trunc(p16, p8, size);  // prod (1-q^m)^24 = Delta / q

    Dense num = mul_trunc(mul_trunc(e4, e4, size), e4, size);
    Dense jq = div_trunc(num, p24, size);  // q * j

    JSeries out;
    out.coeffs.assign(jq.begin(), jq.end());
    if (out.coeffs.size() < 2 || out.coeffs[0] != 1 || out.coeffs[1] != 744)
        throw std::logic_error("j_series: self-check failed");
    return out;
}

std::mutex g_mutex;
std::shared_ptr<const JSeries> g_cache;

}  // namespace

JSeries j_series(long order) {
    auto snap = j_series_cached(order);
    JSeries out;
    out.coeffs.assign(snap->coeffs.begin(), snap->coeffs.begin() + order + 2);
    return out;
}

std::shared_ptr<const JSeries> j_series_cached(long order) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (!g_cache || g_cache->order() < order) {
        long target = std::max(order, g_cache ? 2 * g_cache->order() : 64);
        g_cache = std::make_shared<const JSeries>(compute(target));
    }
    return g_cache;
}

}  // namespace msc
