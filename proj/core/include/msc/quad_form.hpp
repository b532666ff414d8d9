#ifndef MSC_QUAD_FORM_HPP
#define MSC_QUAD_FORM_HPP

#include <vector>

#include "msc/int_matrix2.hpp"
#include "msc/integer.hpp"

namespace msc {

/// Primitive integer binary quadratic form (a, b, c) with a > 0 and
/// b^2 - 4ac < 0. Doubles as the exact tag of the upper half-plane point
/// (-b + sqrt(|disc|) i) / (2a).
struct QuadForm {
    Int a, b, c;

    QuadForm() : a(1), b(0), c(1) {}
    /// Normalizes: divides out the content and flips signs so a > 0.
    QuadForm(Int a_, Int b_, Int c_);

    Int disc() const { return b * b - 4 * a * c; }

    /// T_Delta membership: -a < b <= a < c, or 0 <= b <= a = c.
    bool is_reduced() const;

    /// Tag of z + k.
    QuadForm translated(const Int& k) const;
    /// Tag of g.z for det(g) > 0 (fractional linear action).
    QuadForm transformed(const IntMatrix2& g) const;

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const QuadForm& o) const { return !(*this == o); }
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

struct ReducedForm {
    QuadForm form;
    IntMatrix2 gamma;  // det 1, form == original.transformed-by... gamma maps input point to form's point
};

/// Gauss reduction of a definite form's point into the fundamental domain:
/// returns the reduced form together with the SL2(Z) word carrying the
/// input point to it. Exact integer arithmetic throughout.
ReducedForm gauss_reduce(const QuadForm& f);

/// Is the value a discriminant (negative, 0 or 1 mod 4)?
bool is_valid_discriminant(const Int& disc);

/// The complete reduced-form set T_Delta, sorted lexicographically by (a, b, c).
std::vector<QuadForm> reduced_forms(const Int& disc);

/// |T_Delta|.
long class_number(const Int& disc);

/// (1, k, (k^2 - disc)/4) with k = |disc| mod 2.
QuadForm principal_form(const Int& disc);

/// Canonical name of one singular modulus: a discriminant and the index of
/// its reduced form in the sorted T_Delta.
struct SingularModulusRef {
    Int disc;
    long root_index = 0;

    bool operator==(const SingularModulusRef& o) const {
        return disc == o.disc && root_index == o.root_index;
    }
    bool operator!=(const SingularModulusRef& o) const { return !(*this == o); }
    bool operator<(const SingularModulusRef& o) const {
        // ascending |disc| first, to match the natural size order of the moduli
        Int da = -disc, db = -o.disc;
        if (da != db) return da < db;
        return root_index < o.root_index;
    }
};

/// The reduced form a ref names.
QuadForm ref_form(const SingularModulusRef& ref);

/// Inverse of ref_form: identify a reduced form as (disc, index).
SingularModulusRef ref_of_form(const QuadForm& f);

}  // namespace msc

#endif
