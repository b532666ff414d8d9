#include "msc/exponent_lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "msc/factorizer.hpp"

namespace msc {

FactoredRational FactoredRational::from_integer(const Int& n) {
    if (n == 0) throw std::invalid_argument("FactoredRational: zero is not representable");
    FactoredRational f;
    f.sign = n < 0 ? -1 : 1;
    if (n != 1 && n != -1)
        for (auto& [p, e] : factorize(n)) f.exponents.emplace(p, e);
    return f;
}

FactoredRational FactoredRational::from_rational(const Rat& q) {
    FactoredRational num = from_integer(Int(q.get_num()));
    FactoredRational den = from_integer(Int(q.get_den()));
    return num * den.pow(Int(-1));
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    FactoredRational f;
    f.sign = sign * o.sign;
    f.exponents = exponents;
    for (const auto& [p, e] : o.exponents) {
        Int& cur = f.exponents[p];
        cur += e;
        if (cur == 0) f.exponents.erase(p);
    }
    return f;
}

FactoredRational FactoredRational::pow(const Int& e) const {
    FactoredRational f;
    if (e == 0) return f;
    f.sign = (sign == -1 && fmod(e, Int(2)) == 1) ? -1 : 1;
    for (const auto& [p, ex] : exponents) f.exponents.emplace(p, ex * e);
    return f;
}

Rat FactoredRational::value() const {
    Rat v(sign);
    for (const auto& [p, e] : exponents) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(to_long(abs(e))));
        if (e > 0)
            v *= Rat(pw);
        else
            v /= Rat(pw);
    }
    v.canonicalize();
    return v;
}

Int dot(const ExponentVector& a, const ExponentVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

void make_primitive(ExponentVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
}

std::vector<ExponentVector> integer_kernel(const std::vector<ExponentVector>& rows,
                                           std::size_t cols) {
    // Columns of [A; I], reduced by unimodular column operations until the
    // A-part is in echelon form; columns whose A-part vanished carry a
    // lattice basis of the kernel in their identity part.
    const std::size_t m = rows.size();
    std::vector<ExponentVector> col(cols, ExponentVector(m + cols, Int(0)));
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t r = 0; r < m; ++r)
            col[j][r] = j < rows[r].size() ? rows[r][j] : Int(0);
        col[j][m + j] = 1;
    }

    std::size_t pivots = 0;
    for (std::size_t r = 0; r < m && pivots < cols; ++r) {
        std::size_t j0 = pivots;
        while (j0 < cols && col[j0][r] == 0) ++j0;
        if (j0 == cols) continue;
        std::swap(col[pivots], col[j0]);
        for (std::size_t j = pivots + 1; j < cols; ++j) {
            if (col[j][r] == 0) continue;
            const Int x = col[pivots][r], y = col[j][r];
            Int g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            const Int xs = x / g, ys = y / g;
            for (std::size_t t = 0; t < m + cols; ++t) {
                Int np = u * col[pivots][t] + v * col[j][t];
                Int nj = xs * col[j][t] - ys * col[pivots][t];
                col[pivots][t] = std::move(np);
                col[j][t] = std::move(nj);
            }
        }
        ++pivots;
    }

    std::vector<ExponentVector> basis;
    for (std::size_t j = pivots; j < cols; ++j) {
        ExponentVector v(col[j].begin() + static_cast<long>(m), col[j].end());
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<ExponentVector> multiplicative_kernel(const std::vector<FactoredRational>& values) {
    const std::size_t n = values.size();
    std::set<Int> primes;
    for (const auto& v : values)
        for (const auto& [p, e] : v.exponents) primes.insert(p);

    std::vector<ExponentVector> rows;
    for (const auto& p : primes) {
        ExponentVector row(n, Int(0));
        for (std::size_t i = 0; i < n; ++i) {
            auto it = values[i].exponents.find(p);
            if (it != values[i].exponents.end()) row[i] = it->second;
        }
        rows.push_back(std::move(row));
    }
    std::vector<ExponentVector> basis = integer_kernel(rows, n);

    // sign parity: sum of v_i over negative-sign coordinates must be even
    ExponentVector srow(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) srow[i] = values[i].sign == -1 ? 1 : 0;
    std::size_t odd = basis.size();
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (fmod(dot(srow, basis[j]), Int(2)) == 1) {
            odd = j;
            break;
        }
    if (odd != basis.size()) {
        // basis of the index-2 even sublattice: subtract the odd pivot from
        // the other odd vectors, double the pivot
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j == odd || fmod(dot(srow, basis[j]), Int(2)) == 0) continue;
            for (std::size_t t = 0; t < n; ++t) basis[j][t] -= basis[odd][t];
        }
        for (auto& x : basis[odd]) x *= 2;
    }
    return basis;
}

namespace {

std::vector<FactoredRational> subset_values(const std::vector<FactoredRational>& values,
                                            const std::vector<long>& idx) {
    std::vector<FactoredRational> out;
    out.reserve(idx.size());
    for (long i : idx) out.push_back(values[static_cast<std::size_t>(i)]);
    return out;
}

// Some relation on values[idx] with a nonzero coefficient at position `pos`?
bool relation_involving(const std::vector<FactoredRational>& values, const std::vector<long>& idx,
                        std::size_t pos) {
    auto basis = multiplicative_kernel(subset_values(values, idx));
    for (const auto& b : basis)
        if (b[pos] != 0) return true;
    return false;
}

}  // namespace

std::vector<std::vector<long>> minimal_dependent_subsets(
    const std::vector<FactoredRational>& values) {
    const long n = static_cast<long>(values.size());
    std::vector<std::vector<long>> result(static_cast<std::size_t>(n));
    std::vector<long> all(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;

    for (long i = 0; i < n; ++i) {
        if (!relation_involving(values, all, static_cast<std::size_t>(i))) continue;
        std::vector<long> s = all;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                if (s[drop] == i) continue;
                std::vector<long> t = s;
                t.erase(t.begin() + static_cast<long>(drop));
                const std::size_t pos = static_cast<std::size_t>(
                    std::find(t.begin(), t.end(), i) - t.begin());
                if (relation_involving(values, t, pos)) {
                    s = std::move(t);
                    changed = true;
                    break;
                }
            }
        }
        result[static_cast<std::size_t>(i)] = std::move(s);
    }
    return result;
}

CombineResult combine_all_nonzero(const std::vector<ExponentVector>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("combine_all_nonzero: no vectors");
    const std::size_t n = vectors.size();
    for (std::size_t i = 0; i < n; ++i)
        if (i >= vectors[i].size() || vectors[i][i] == 0)
            throw std::invalid_argument("combine_all_nonzero: diagonal entry is zero");

    auto maxabs = [](const ExponentVector& v) {
        Int m = 0;
        for (const auto& x : v) m = std::max(m, abs(x));
        return m;
    };

    CombineResult out;
    out.vector = vectors[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (out.vector.size() < vectors[i].size()) out.vector.resize(vectors[i].size(), Int(0));
        if (out.vector[i] != 0) continue;
        const Int lambda = 1 + std::max(maxabs(out.vector), maxabs(vectors[i]));
        for (std::size_t t = 0; t < vectors[i].size(); ++t)
            out.vector[t] += lambda * vectors[i][t];
        // the dominating lambda keeps every previously nonzero coordinate
        // nonzero and caps all entries at 2 lambda^2
        const Int bound = 2 * lambda * lambda;
        for (std::size_t t = 0; t <= i; ++t)
            if (out.vector[t] == 0)
                throw std::logic_error("combine_all_nonzero: coordinate unexpectedly vanished");
        for (const auto& x : out.vector)
            if (abs(x) > bound)
                throw std::logic_error("combine_all_nonzero: step bound violated");
        out.steps.push_back({i, lambda});
    }
    for (std::size_t i = 0; i < n; ++i)
        if (out.vector[i] == 0)
            throw std::logic_error("combine_all_nonzero: output has a zero coordinate");
    return out;
}

std::optional<ExponentVector> span_element_avoiding(const std::vector<ExponentVector>& basis,
                                                    const std::vector<ExponentVector>& functionals) {
    if (basis.empty()) return std::nullopt;
    for (const auto& f : functionals) {
        bool hits = false;
        for (const auto& b : basis)
            if (dot(f, b) != 0) {
                hits = true;
                break;
            }
        if (!hits) return std::nullopt;
    }
    const std::size_t dim = basis[0].size();
    // v(t) = sum t^j basis[j]; each functional is a nonzero polynomial in t
    // of degree < |basis|, so a small scan suffices.
    const long limit = static_cast<long>(basis.size() * (functionals.size() + 1) + 2);
    for (long t = 0; t <= limit; ++t) {
        ExponentVector v(dim, Int(0));
        Int w = 1;
        for (const auto& b : basis) {
            for (std::size_t k = 0; k < dim; ++k) v[k] += w * b[k];
            w *= t;
        }
        bool good = true;
        for (const auto& f : functionals)
            if (dot(f, v) == 0) {
                good = false;
                break;
            }
        if (good) {
            make_primitive(v);
            return v;
        }
    }
    return std::nullopt;
}

}  // namespace msc
