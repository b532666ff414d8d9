#include "msc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace msc {

namespace {

std::mutex g_cyclo_mutex;
std::map<long, IntPolynomial> g_cyclo_cache;

IntPolynomial x_pow_minus_one(long n) {
    std::vector<Int> v(static_cast<std::size_t>(n) + 1, Int(0));
    v[0] = -1;
    v[static_cast<std::size_t>(n)] = 1;
    return IntPolynomial(std::move(v));
}

// Phi_d = (x^d - 1) / prod_{e|d, e<d} Phi_e. Callers hold the lock.
const IntPolynomial& cyclo_locked(long d) {
    auto it = g_cyclo_cache.find(d);
    if (it != g_cyclo_cache.end()) return it->second;
    IntPolynomial num = x_pow_minus_one(d);
    for (long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto q = poly_divexact(num, cyclo_locked(e));
        if (!q) throw std::logic_error("cyclotomic polynomial division failed");
        num = std::move(*q);
    }
    return g_cyclo_cache.emplace(d, std::move(num)).first->second;
}

// Rows for reducing x^(phi+t) modulo Phi_d, t = 0 .. phi-2.
struct ReductionTable {
    long phi;
    std::vector<std::vector<Int>> row;
};

std::mutex g_red_mutex;
std::map<long, ReductionTable> g_red_cache;

const ReductionTable& reduction_table(long d) {
    std::lock_guard<std::mutex> lock(g_red_mutex);
    auto it = g_red_cache.find(d);
    if (it != g_red_cache.end()) return it->second;

    const IntPolynomial& phi_poly = cyclotomic_polynomial(d);
    const long phi = phi_poly.degree();
    ReductionTable t;
    t.phi = phi;
    // x^phi = -(Phi_d - x^phi) since Phi_d is monic; successive rows give
    // x^(phi+t). Covers raw zeta powers (< d) and product degrees (<= 2phi-2).
    const long rows = std::max(d, 2 * phi) + 2;
    std::vector<Int> cur(static_cast<std::size_t>(phi), Int(0));
    for (long i = 0; i < phi; ++i) cur[static_cast<std::size_t>(i)] = -phi_poly.coeff(static_cast<std::size_t>(i));
    for (long r = 0; r < rows; ++r) {
        t.row.push_back(cur);
        std::vector<Int> nxt(static_cast<std::size_t>(phi), Int(0));
        for (long i = 0; i + 1 < phi; ++i) nxt[static_cast<std::size_t>(i + 1)] = cur[static_cast<std::size_t>(i)];
        const Int top = cur[static_cast<std::size_t>(phi - 1)];
        if (top != 0)
            for (long i = 0; i < phi; ++i)
                nxt[static_cast<std::size_t>(i)] += top * t.row[0][static_cast<std::size_t>(i)];
        cur = std::move(nxt);
    }
    return g_red_cache.emplace(d, std::move(t)).first->second;
}

// Reduce a raw coefficient vector mod Phi_d.
std::vector<Int> reduce_mod_cyclo(long d, std::vector<Int> v) {
    const ReductionTable& t = reduction_table(d);
    const long phi = t.phi;
    for (long k = static_cast<long>(v.size()) - 1; k >= phi; --k) {
        Int c = std::move(v[static_cast<std::size_t>(k)]);
        v[static_cast<std::size_t>(k)] = 0;
        if (c == 0) continue;
        if (static_cast<std::size_t>(k - phi) >= t.row.size())
            throw std::logic_error("cyclotomic reduction table too short");
        const auto& row = t.row[static_cast<std::size_t>(k - phi)];
        for (long i = 0; i < phi; ++i)
            mpz_addmul(v[static_cast<std::size_t>(i)].get_mpz_t(), c.get_mpz_t(), row[static_cast<std::size_t>(i)].get_mpz_t());
    }
    v.resize(static_cast<std::size_t>(phi));
    return v;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: index must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclo_locked(d);
}

long euler_phi(long d) {
    long result = d;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            result -= result / p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

CycloInt CycloInt::zeta_power(long d, long k, const Int& scale) {
    if (d < 1) throw std::invalid_argument("CycloInt: modulus index must be positive");
    if (scale == 0) return CycloInt();
    k %= d;
    if (k < 0) k += d;
    const long phi = cyclotomic_polynomial(d).degree();
    std::vector<Int> v(static_cast<std::size_t>(std::max(k + 1, phi)), Int(0));
    v[static_cast<std::size_t>(k)] = scale;
    return CycloInt(d, reduce_mod_cyclo(d, std::move(v)));
}

long CycloInt::common_index(const CycloInt& a, const CycloInt& b) {
    if (a.d_ == b.d_) return a.d_;
    return to_long(lcm(Int(a.d_), Int(b.d_)));
}

CycloInt CycloInt::promoted(long m) const {
    if (m == d_) return *this;
    if (m % d_ != 0) throw std::invalid_argument("CycloInt::promoted: old index must divide new");
    const long stride = m / d_;
    std::vector<Int> v(static_cast<std::size_t>((res_.empty() ? 0 : (res_.size() - 1) * stride) + 1), Int(0));
    for (std::size_t i = 0; i < res_.size(); ++i) v[i * static_cast<std::size_t>(stride)] = res_[i];
    return CycloInt(m, reduce_mod_cyclo(m, std::move(v)));
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
    const long m = common_index(*this, o);
    CycloInt a = promoted(m), b = o.promoted(m);
    std::vector<Int> v(std::max(a.res_.size(), b.res_.size()), Int(0));
    for (std::size_t i = 0; i < a.res_.size(); ++i) v[i] = a.res_[i];
    for (std::size_t i = 0; i < b.res_.size(); ++i) v[i] += b.res_[i];
    return CycloInt(m, std::move(v));
}

CycloInt CycloInt::operator-(const CycloInt& o) const { return *this + (-o); }

CycloInt CycloInt::operator-() const {
    CycloInt r(*this);
    for (auto& x : r.res_) x = -x;
    return r;
}

void CycloInt::add_assign(const CycloInt& o) {
    if (o.is_zero()) return;
    if (d_ != o.d_) {
        *this = *this + o;
        return;
    }
    if (res_.size() < o.res_.size()) res_.resize(o.res_.size(), Int(0));
    for (std::size_t i = 0; i < o.res_.size(); ++i) res_[i] += o.res_[i];
    trim();
}

CycloInt CycloInt::operator*(const CycloInt& o) const {
    if (is_zero() || o.is_zero()) return CycloInt();
    const long m = common_index(*this, o);
    CycloInt a = promoted(m), b = o.promoted(m);
    std::vector<Int> v(a.res_.size() + b.res_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.res_.size(); ++i) {
        if (a.res_[i] == 0) continue;
        for (std::size_t j = 0; j < b.res_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), a.res_[i].get_mpz_t(), b.res_[j].get_mpz_t());
    }
    return CycloInt(m, reduce_mod_cyclo(m, std::move(v)));
}

void CycloInt::addmul(const CycloInt& a, const CycloInt& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (d_ == 1 && a.d_ == 1 && b.d_ == 1) {
        if (res_.empty()) res_.resize(1, Int(0));
        mpz_addmul(res_[0].get_mpz_t(), a.res_[0].get_mpz_t(), b.res_[0].get_mpz_t());
        trim();
        return;
    }
    add_assign(a * b);
}

bool CycloInt::operator==(const CycloInt& o) const {
    if (d_ == o.d_) return res_ == o.res_;
    const long m = common_index(*this, o);
    return promoted(m).res_ == o.promoted(m).res_;
}

}  // namespace msc
