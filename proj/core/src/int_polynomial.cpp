#include "msc/int_polynomial.hpp"

#include <stdexcept>

namespace msc {

namespace {
const Int kZero = 0;
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return IntPolynomial(std::move(v));
}

const Int& IntPolynomial::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const Int& IntPolynomial::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            mpz_addmul(v[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    if (s == 0) return {};
    IntPolynomial r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

IntPolynomial IntPolynomial::pow(unsigned long e) const {
    IntPolynomial r = one();
    IntPolynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const auto& x : c_) g = gcd(g, x);
    return g;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const Int& a = c_[k];
        if (a == 0) continue;
        const bool neg = a < 0;
        Int mag = abs(a);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += "*";
            }
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

std::optional<IntPolynomial> poly_divexact(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("poly_divexact: division by zero polynomial");
    if (p.is_zero()) return IntPolynomial::zero();
    if (p.degree() < q.degree()) return std::nullopt;

    // Long division from the top; every quotient coefficient must divide
    // exactly and the remainder must vanish.
    std::vector<Int> rem(p.coefficients());
    const long dq = q.degree();
    const Int& lead = q.leading();
    std::vector<Int> quot(static_cast<std::size_t>(p.degree() - dq + 1), Int(0));
    for (long k = p.degree() - dq; k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k + dq)];
        if (top == 0) continue;
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[static_cast<std::size_t>(k)] = c;
        for (long j = 0; j <= dq; ++j)
            mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(),
                       q.coeff(static_cast<std::size_t>(j)).get_mpz_t());
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

}  // namespace msc
