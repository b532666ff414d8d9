#include "msc/quadratic_number.hpp"

#include <cmath>
#include <stdexcept>

#include "msc/factorizer.hpp"

namespace msc {

QuadraticNumber::QuadraticNumber(Rat p, Rat q, Int d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (d_ <= 0) throw std::invalid_argument("QuadraticNumber: radicand must be positive");
    p_.canonicalize();
    q_.canonicalize();
    if (q_ == 0) {
        d_ = 1;
        return;
    }
    // pull the square part of d into q
    Int square = 1, core = 1;
    for (const auto& [prime, e] : factorize(d_)) {
        const long exp = to_long(e);
        for (long i = 0; i + 1 < exp; i += 2) square *= prime;
        if (exp % 2 == 1) core *= prime;
    }
    q_ *= Rat(square);
    q_.canonicalize();
    d_ = core;
    if (d_ == 1) {
        p_ += q_;
        q_ = 0;
        p_.canonicalize();
    }
}

int QuadraticNumber::sign() const {
    const int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p^2 against q^2 d; equality is impossible for
    // squarefree d > 1
    const Rat lhs = p_ * p_, rhs = q_ * q_ * Rat(d_);
    return lhs > rhs ? sp : sq;
}

QuadraticNumber QuadraticNumber::operator-() const { return {-p_, -q_, d_, 0}; }

QuadraticNumber QuadraticNumber::operator-(const Rat& r) const {
    Rat p = p_ - r;
    p.canonicalize();
    return {std::move(p), q_, d_, 0};
}

QuadraticNumber QuadraticNumber::operator+(const Rat& r) const {
    Rat p = p_ + r;
    p.canonicalize();
    return {std::move(p), q_, d_, 0};
}

QuadraticNumber QuadraticNumber::scaled(const Rat& r) const {
    if (r == 0) return QuadraticNumber(Rat(0));
    Rat p = p_ * r, q = q_ * r;
    p.canonicalize();
    q.canonicalize();
    return {std::move(p), std::move(q), d_, 0};
}

double QuadraticNumber::to_double() const {
    return p_.get_d() + q_.get_d() * std::sqrt(d_.get_d());
}

IntPolynomial QuadraticNumber::minimal_polynomial() const {
    if (is_rational()) {
        // q x - p for p_ = p/q in lowest terms
        IntPolynomial poly{-Int(p_.get_num()), Int(p_.get_den())};
        return poly;
    }
    // (x - p)^2 = q^2 d: x^2 - 2p x + (p^2 - q^2 d), cleared to primitive
    const Rat c1 = -2 * p_;
    const Rat c0 = p_ * p_ - q_ * q_ * Rat(d_);
    Int den = lcm(Int(c1.get_den()), Int(c0.get_den()));
    Int a2 = den;
    Int a1 = Int(c1.get_num()) * (den / Int(c1.get_den()));
    Int a0 = Int(c0.get_num()) * (den / Int(c0.get_den()));
    Int g = gcd(a2, a1, a0);
    return IntPolynomial{a0 / g, a1 / g, a2 / g};
}

}  // namespace msc
