#ifndef MSC_HECKE_HPP
#define MSC_HECKE_HPP

#include <vector>

#include "msc/int_matrix2.hpp"
#include "msc/integer.hpp"
#include "msc/quad_form.hpp"

namespace msc {

/// Element of the Hecke set C(N): upper-triangular [[a, b], [0, d]] with
/// ad = N, a > 0, 0 <= b < d, gcd(a, b, d) = 1.
struct HeckeMatrix {
    Int a, b, d;

    Int level() const { return a * d; }
    IntMatrix2 matrix() const { return {a, b, Int(0), d}; }

    bool operator==(const HeckeMatrix& o) const { return a == o.a && b == o.b && d == o.d; }
    bool operator!=(const HeckeMatrix& o) const { return !(*this == o); }
    bool operator<(const HeckeMatrix& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

/// psi(N) = N prod_{p|N} (1 + 1/p) = |C(N)|.
Int psi(long n);

/// The complete C(N), sorted by (a, b).
std::vector<HeckeMatrix> hecke_set(long n);

/// A j-map in canonical form: a constant singular modulus, or
/// z -> j(rz + s) with r > 0 and s in [0, 1). Two non-constant j-maps are
/// equal exactly when their (r, s) pairs are.
class JMap {
  public:
    static JMap constant(SingularModulusRef ref);
    static JMap modular(Rat r, Rat s);
    static JMap identity() { return modular(Rat(1), Rat(0)); }
    /// Canonical form of z -> j(gz), det g > 0.
    static JMap of_matrix(const IntMatrix2& g);

    bool is_constant() const { return constant_; }
    const SingularModulusRef& ref() const;
    const Rat& r() const;
    const Rat& s() const;

    bool operator==(const JMap& o) const;
    bool operator!=(const JMap& o) const { return !(*this == o); }

  private:
    JMap() = default;
    bool constant_ = false;
    SingularModulusRef ref_;
    Rat r_, s_;
};

struct NormalizedJMap {
    Int level;
    HeckeMatrix rep;
};

/// The unique N and g' in C(N) with j(gz) = j(g'z) for all z: left
/// SL2(Z)-triangularization, primitive rescaling, then the b-shift into
/// [0, d).
NormalizedJMap jmap_normalize(const IntMatrix2& g);

/// The unique h in C(N) with j(g gamma z) = j(hz); gamma must be
/// unimodular. g |-> h is a right action of SL2(Z) on C(N).
HeckeMatrix hecke_right_action(const HeckeMatrix& g, const IntMatrix2& gamma);

/// Some gamma in SL2(Z) with hecke_right_action(g, gamma) == h; the witness
/// is verified before being returned, not canonical.
IntMatrix2 hecke_transporter(const HeckeMatrix& g, const HeckeMatrix& h);

}  // namespace msc

#endif
