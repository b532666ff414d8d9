#include "msc/quad_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace msc {

QuadForm::QuadForm(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    if (a == 0) throw std::invalid_argument("QuadForm: a must be nonzero");
    Int g = gcd(a, b, c);
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    if (disc() >= 0) throw std::invalid_argument("QuadForm: form must be definite");
}

bool QuadForm::is_reduced() const {
    if (-a < b && b <= a && a < c) return true;
    if (0 <= b && b <= a && a == c) return true;
    return false;
}

QuadForm QuadForm::translated(const Int& k) const {
    // substitute z = w - k into a z^2 + b z + c
    return QuadForm(a, b - 2 * a * k, a * k * k - b * k + c);
}

QuadForm QuadForm::transformed(const IntMatrix2& g) const {
    if (g.det() <= 0) throw std::invalid_argument("QuadForm::transformed: determinant must be positive");
    // w = (p z + q)/(r z + s)  =>  z = (s w - q)/(-r w + p)
    const Int &p = g.a, &q = g.b, &r = g.c, &s = g.d;
    Int a2 = a * s * s - b * s * r + c * r * r;
    Int b2 = -2 * a * q * s + b * (p * s + q * r) - 2 * c * p * r;
    Int c2 = a * q * q - b * q * p + c * p * p;
    return QuadForm(std::move(a2), std::move(b2), std::move(c2));
}

ReducedForm gauss_reduce(const QuadForm& f) {
    QuadForm cur = f;
    IntMatrix2 gamma = IntMatrix2::identity();
    // Translate so Re is in [-1/2, 1/2), i.e. -a < b <= a; invert while |z| < 1
    // or to resolve the |z| = 1 tie onto Re <= 0. Standard reduction of
    // definite forms; terminates since a never increases and strictly drops
    // on every inversion with c < a.
    for (int guard = 0; guard < 100000; ++guard) {
        if (!(-cur.a < cur.b && cur.b <= cur.a)) {
            // b - 2ak in (-a, a]  =>  k = ceil((b - a) / (2a))
            Int k = cdiv(cur.b - cur.a, 2 * cur.a);
            cur = cur.translated(k);
            gamma = IntMatrix2::translation(k) * gamma;
            continue;
        }
        if (cur.c < cur.a || (cur.c == cur.a && cur.b < 0)) {
            cur = QuadForm(cur.c, -cur.b, cur.a);
            gamma = IntMatrix2::inversion() * gamma;
            continue;
        }
        break;
    }
    if (!cur.is_reduced()) throw std::logic_error("gauss_reduce failed to terminate");
    return {cur, gamma};
}

bool is_valid_discriminant(const Int& disc) {
    if (disc >= 0) return false;
    Int m = fmod(disc, Int(4));
    return m == 0 || m == 1;
}

std::vector<QuadForm> reduced_forms(const Int& disc) {
    if (!is_valid_discriminant(disc))
        throw std::invalid_argument("reduced_forms: not a valid discriminant");
    std::vector<QuadForm> out;
    const Int bound = isqrt(-disc / 3);
    for (Int a = 1; a <= bound; ++a) {
        // b runs over the residue class of disc mod 2 with |b| <= a.
        Int bstart = -a;
        if (fmod(bstart, Int(2)) != fmod(disc, Int(2))) bstart += 1;
        for (Int b = bstart; b <= a; b += 2) {
            Int num = b * b - disc;
            if (fmod(num, 4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (gcd(a, b, c) != 1) continue;
            QuadForm f(a, b, c);
            if (f.is_reduced()) out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long class_number(const Int& disc) { return static_cast<long>(reduced_forms(disc).size()); }

QuadForm principal_form(const Int& disc) {
    if (!is_valid_discriminant(disc))
        throw std::invalid_argument("principal_form: not a valid discriminant");
    Int k = fmod(disc, Int(2));
    return QuadForm(Int(1), k, (k * k - disc) / 4);
}

QuadForm ref_form(const SingularModulusRef& ref) {
    auto forms = reduced_forms(ref.disc);
    if (ref.root_index < 0 || static_cast<std::size_t>(ref.root_index) >= forms.size())
        throw std::invalid_argument("ref_form: root index out of range");
    return forms[static_cast<std::size_t>(ref.root_index)];
}

SingularModulusRef ref_of_form(const QuadForm& f) {
    if (!f.is_reduced()) throw std::invalid_argument("ref_of_form: form is not reduced");
    auto forms = reduced_forms(f.disc());
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (forms[i] == f) return {f.disc(), static_cast<long>(i)};
    throw std::logic_error("ref_of_form: reduced form missing from T_Delta");
}

}  // namespace msc
