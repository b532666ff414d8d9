#include "msc/puiseux.hpp"

#include <stdexcept>

#include "msc/errors.hpp"

namespace msc {

namespace {

// Number of slots with (lowest+i)/denom < trunc (trunc exclusive):
// ceil(trunc*denom) - lowest, clipped at 0.
std::size_t window_size(long denom, long lowest, const Rat& trunc) {
    Rat td = trunc * denom;
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), td.get_num_mpz_t(), td.get_den_mpz_t());
    Int n = c - lowest;
    if (n <= 0) return 0;
    return static_cast<std::size_t>(to_long(n));
}

}  // namespace

void PuiseuxSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        lowest_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        lowest_ += static_cast<long>(lead);
    }
    const std::size_t w = window_size(denom_, lowest_, trunc_);
    if (coeffs_.size() > w) coeffs_.resize(w);
}

PuiseuxSeries PuiseuxSeries::zero(const Rat& trunc, long denom) {
    PuiseuxSeries s;
    s.denom_ = denom;
    s.trunc_ = trunc;
    return s;
}

PuiseuxSeries PuiseuxSeries::constant(const CycloInt& c, const Rat& trunc, long denom) {
    return from_slots(denom, 0, {c}, trunc);
}

PuiseuxSeries PuiseuxSeries::from_slots(long denom, long lowest, std::vector<CycloInt> slots,
                                        const Rat& trunc) {
    if (denom < 1) throw std::invalid_argument("PuiseuxSeries: denominator must be positive");
    PuiseuxSeries s;
    s.denom_ = denom;
    s.lowest_ = lowest;
    s.coeffs_ = std::move(slots);
    s.trunc_ = trunc;
    s.normalize();
    return s;
}

Rat PuiseuxSeries::effective_lowest() const {
    if (coeffs_.empty()) return trunc_;
    Rat r(lowest_, denom_);
    r.canonicalize();
    return r;
}

CycloInt PuiseuxSeries::coefficient(const Rat& e) const {
    if (e >= trunc_) throw std::invalid_argument("PuiseuxSeries::coefficient: beyond truncation");
    Rat idx = e * denom_ - lowest_;
    if (idx.get_den() != 1) return CycloInt();
    Int i = idx.get_num();
    if (i < 0 || i >= Int(static_cast<long>(coeffs_.size()))) return CycloInt();
    return coeffs_[static_cast<std::size_t>(to_long(i))];
}

Int PuiseuxSeries::int_coefficient(long e) const {
    if (denom_ != 1) throw std::invalid_argument("int_coefficient: denominator != 1");
    CycloInt c = coefficient(Rat(e));
    if (!c.is_rational()) throw NonIntegralSeries("int_coefficient: non-rational coefficient");
    return c.rational_value();
}

PuiseuxSeries PuiseuxSeries::rescaled(long new_denom) const {
    if (new_denom == denom_) return *this;
    if (new_denom % denom_ != 0) throw std::invalid_argument("PuiseuxSeries: bad rescale");
    const long r = new_denom / denom_;
    PuiseuxSeries s;
    s.denom_ = new_denom;
    s.lowest_ = lowest_ * r;
    s.trunc_ = trunc_;
    if (!coeffs_.empty()) {
        s.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(r) + 1, CycloInt());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            s.coeffs_[i * static_cast<std::size_t>(r)] = coeffs_[i];
    }
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
    const long nd = to_long(lcm(Int(denom_), Int(o.denom_)));
    PuiseuxSeries a = rescaled(nd), b = o.rescaled(nd);
    PuiseuxSeries s;
    s.denom_ = nd;
    s.trunc_ = std::min(a.trunc_, b.trunc_);
    if (a.coeffs_.empty() && b.coeffs_.empty()) return s;
    const long lo = a.coeffs_.empty() ? b.lowest_
                  : b.coeffs_.empty() ? a.lowest_
                                      : std::min(a.lowest_, b.lowest_);
    s.lowest_ = lo;
    s.coeffs_.assign(window_size(nd, lo, s.trunc_), CycloInt());
    auto acc = [&](const PuiseuxSeries& x) {
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            const long pos = x.lowest_ + static_cast<long>(i) - lo;
            if (pos >= 0 && static_cast<std::size_t>(pos) < s.coeffs_.size())
                s.coeffs_[static_cast<std::size_t>(pos)].add_assign(x.coeffs_[i]);
        }
    };
    acc(a);
    acc(b);
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const { return *this + (-o); }

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
    const long nd = to_long(lcm(Int(denom_), Int(o.denom_)));
    PuiseuxSeries a = rescaled(nd), b = o.rescaled(nd);
    // truncation of a product: each input's truncation shifted by the
    // partner's lowest exponent, pessimistic minimum
    const Rat trunc = std::min(a.trunc_ + b.effective_lowest(), b.trunc_ + a.effective_lowest());
    PuiseuxSeries s;
    s.denom_ = nd;
    s.trunc_ = trunc;
    if (a.coeffs_.empty() || b.coeffs_.empty()) return s;
    s.lowest_ = a.lowest_ + b.lowest_;
    const std::size_t w = window_size(nd, s.lowest_, trunc);
    s.coeffs_.assign(w, CycloInt());
    for (std::size_t i = 0; i < a.coeffs_.size() && i < w; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        const std::size_t jmax = std::min(b.coeffs_.size(), w - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            s.coeffs_[i + j].addmul(a.coeffs_[i], b.coeffs_[j]);
        }
    }
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::scaled(const CycloInt& c) const {
    PuiseuxSeries s;
    s.denom_ = denom_;
    s.trunc_ = trunc_;
    if (c.is_zero()) return s;
    s.lowest_ = lowest_;
    s.coeffs_.reserve(coeffs_.size());
    for (const auto& x : coeffs_) s.coeffs_.push_back(x * c);
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::twisted(long t, long m) const {
    PuiseuxSeries s(*this);
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
        if (s.coeffs_[i].is_zero()) continue;
        const long e = lowest_ + static_cast<long>(i);
        long k = (t % m) * (e % m) % m;
        if (k < 0) k += m;
        if (k == 0) continue;
        if (m == 2)
            s.coeffs_[i] = -s.coeffs_[i];
        else
            s.coeffs_[i] = s.coeffs_[i] * CycloInt::zeta_power(m, k);
    }
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::compressed(long p) const {
    if (denom_ % p != 0) throw std::invalid_argument("PuiseuxSeries::compressed: p must divide denominator");
    PuiseuxSeries s;
    s.denom_ = denom_ / p;
    s.trunc_ = trunc_;
    if (coeffs_.empty()) return s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long e = lowest_ + static_cast<long>(i);
        if (e % p != 0 && !coeffs_[i].is_zero())
            throw NonIntegralSeries("compressed: unexpected exponent survives");
    }
    long lo = lowest_;
    std::size_t first = 0;
    while (lo % p != 0) {
        ++lo;
        ++first;
    }
    s.lowest_ = lo / p;
    for (std::size_t i = first; i < coeffs_.size(); i += static_cast<std::size_t>(p))
        s.coeffs_.push_back(coeffs_[i]);
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::rationalized() const {
    PuiseuxSeries s;
    s.denom_ = denom_;
    s.lowest_ = lowest_;
    s.trunc_ = trunc_;
    s.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!c.is_rational()) throw NonIntegralSeries("rationalized: non-rational coefficient");
        s.coeffs_.push_back(CycloInt(c.rational_value()));
    }
    s.normalize();
    return s;
}

PuiseuxSeries PuiseuxSeries::collapsed_to_integral() const {
    PuiseuxSeries s = denom_ == 1 ? *this : compressed(denom_);
    for (const auto& c : s.coeffs_)
        if (!c.is_rational()) throw NonIntegralSeries("collapse: non-rational coefficient");
    std::vector<CycloInt> flat;
    flat.reserve(s.coeffs_.size());
    for (const auto& c : s.coeffs_) flat.push_back(CycloInt(c.rational_value()));
    return from_slots(1, s.lowest_, std::move(flat), s.trunc_);
}

PuiseuxSeries PuiseuxSeries::truncated(const Rat& new_trunc) const {
    if (new_trunc > trunc_)
        throw std::invalid_argument("PuiseuxSeries::truncated: cannot extend knowledge");
    PuiseuxSeries s(*this);
    s.trunc_ = new_trunc;
    s.normalize();
    return s;
}

}  // namespace msc
