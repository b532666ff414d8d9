#ifndef MSC_PUISEUX_HPP
#define MSC_PUISEUX_HPP

#include <vector>

#include "msc/cyclotomic.hpp"
#include "msc/integer.hpp"

namespace msc {

/// Truncated Laurent/Puiseux series in q^(1/d) with coefficients in a
/// cyclotomic integer ring. Slot i holds the coefficient of
/// q^((lowest+i)/denom); exponents >= truncation are unknown. Arithmetic
/// propagates truncation pessimistically: a product is exact through
/// min(a.trunc + b.lowest, b.trunc + a.lowest).
class PuiseuxSeries {
  public:
    PuiseuxSeries() : denom_(1), lowest_(0), trunc_(0) {}

    static PuiseuxSeries zero(const Rat& trunc, long denom = 1);
    static PuiseuxSeries constant(const CycloInt& c, const Rat& trunc, long denom = 1);
    /// Build from dense slots; slot i sits at exponent (lowest+i)/denom.
    static PuiseuxSeries from_slots(long denom, long lowest, std::vector<CycloInt> slots,
                                    const Rat& trunc);

    long denominator() const { return denom_; }
    long lowest_numerator() const { return lowest_; }
    const Rat& truncation() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t slot_count() const { return coeffs_.size(); }

    /// Lowest known exponent; for a series that is zero on its whole known
    /// window this is the truncation order.
    Rat effective_lowest() const;

    /// Coefficient of q^e. e must lie below the truncation order.
    CycloInt coefficient(const Rat& e) const;
    /// Coefficient of the integer power q^e; requires denominator 1.
    Int int_coefficient(long e) const;

    PuiseuxSeries operator+(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-(const PuiseuxSeries& o) const;
    PuiseuxSeries operator*(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-() const;
    PuiseuxSeries scaled(const CycloInt& c) const;

    /// Substitute w -> zeta_m^t * w where w = q^(1/denom): slot at numerator
    /// E picks up the factor zeta_m^(t*E).
    PuiseuxSeries twisted(long t, long m) const;

    /// Reinterpret a series supported on exponent numerators divisible by p
    /// as a series in q^(p/denom); requires p | denom and vanishing of all
    /// other slots (NonIntegralSeries otherwise).
    PuiseuxSeries compressed(long p) const;

    /// All coefficients must be rational integers (exponents untouched);
    /// returns the series rebuilt over plain integers (NonIntegralSeries
    /// otherwise).
    PuiseuxSeries rationalized() const;

    /// All coefficients must be rational integers and all exponents integral;
    /// returns the same series with denominator 1 (NonIntegralSeries otherwise).
    PuiseuxSeries collapsed_to_integral() const;

    /// Shrink the known window to exponents < new_trunc.
    PuiseuxSeries truncated(const Rat& new_trunc) const;

    /// True if every known coefficient is zero.
    bool known_zero() const { return coeffs_.empty(); }

  private:
    void normalize();
    PuiseuxSeries rescaled(long new_denom) const;

    long denom_;
    long lowest_;
    std::vector<CycloInt> coeffs_;
    Rat trunc_;
};

}  // namespace msc

#endif
