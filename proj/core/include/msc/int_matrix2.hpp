#ifndef MSC_INT_MATRIX2_HPP
#define MSC_INT_MATRIX2_HPP

#include "msc/integer.hpp"

namespace msc {

/// 2x2 integer matrix [[a, b], [c, d]].
struct IntMatrix2 {
    Int a, b, c, d;

    IntMatrix2() : a(1), b(0), c(0), d(1) {}
    IntMatrix2(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static IntMatrix2 identity() { return {}; }
    /// Translation z -> z + k.
    static IntMatrix2 translation(const Int& k) { return {Int(1), k, Int(0), Int(1)}; }
    /// Inversion z -> -1/z.
    static IntMatrix2 inversion() { return {Int(0), Int(-1), Int(1), Int(0)}; }

    Int det() const { return a * d - b * c; }

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    /// Adjugate; equals the inverse up to the determinant factor.
    IntMatrix2 adjugate() const { return {d, -b, -c, a}; }

    bool operator==(const IntMatrix2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const IntMatrix2& o) const { return !(*this == o); }

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    /// lambda * Id for some rational lambda != 0.
    bool is_scalar() const { return b == 0 && c == 0 && a == d && a != 0; }
};

}  // namespace msc

#endif
