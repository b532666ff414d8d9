#ifndef MSC_CYCLOTOMIC_HPP
#define MSC_CYCLOTOMIC_HPP

#include <vector>

#include "msc/int_polynomial.hpp"
#include "msc/integer.hpp"

namespace msc {

/// The d-th cyclotomic polynomial (cached).
const IntPolynomial& cyclotomic_polynomial(long d);

long euler_phi(long d);

/// Element of Z[zeta_d], stored as the canonical residue modulo the d-th
/// cyclotomic polynomial (degree < phi(d)). Canonical form makes zero
/// testing and rationality testing exact.
class CycloInt {
  public:
    CycloInt() : d_(1), res_() {}
    explicit CycloInt(const Int& n) : d_(1) {
        if (n != 0) res_ = {n};
    }
    /// n * zeta_d^k
    static CycloInt zeta_power(long d, long k, const Int& scale = Int(1));

    long modulus_index() const { return d_; }
    const std::vector<Int>& residue() const { return res_; }

    bool is_zero() const { return res_.empty(); }
    /// True when the canonical residue is a constant polynomial.
    bool is_rational() const { return res_.size() <= 1; }
    /// The rational-integer value; only valid when is_rational().
    Int rational_value() const { return res_.empty() ? Int(0) : res_[0]; }

    /// Reinterpret in Z[zeta_m] for d | m.
    CycloInt promoted(long m) const;

    CycloInt operator+(const CycloInt& o) const;
    CycloInt operator-(const CycloInt& o) const;
    CycloInt operator*(const CycloInt& o) const;
    CycloInt operator-() const;
    void add_assign(const CycloInt& o);
    /// this += a * b; all three must share a modulus index.
    void addmul(const CycloInt& a, const CycloInt& b);
    bool operator==(const CycloInt& o) const;
    bool operator!=(const CycloInt& o) const { return !(*this == o); }

  private:
    CycloInt(long d, std::vector<Int> res) : d_(d), res_(std::move(res)) { trim(); }
    void trim() {
        while (!res_.empty() && res_.back() == 0) res_.pop_back();
    }
    static long common_index(const CycloInt& a, const CycloInt& b);

    long d_;
    std::vector<Int> res_;

    friend class CycloRing;
};

}  // namespace msc

#endif
