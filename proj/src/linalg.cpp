#include "prefcone/linalg.hpp"

#include "prefcone/error.hpp"

namespace prefcone {

Rational dot(const RVector& a, const RVector& b) {
    if (a.size() != b.size())
        throw validation_error("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RVector add(const RVector& a, const RVector& b) {
    if (a.size() != b.size())
        throw validation_error("add: dimension mismatch");
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RVector sub(const RVector& a, const RVector& b) {
    if (a.size() != b.size())
        throw validation_error("sub: dimension mismatch");
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RVector scale(const RVector& a, const Rational& s) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

RVector neg(const RVector& a) {
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool is_zero(const RVector& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

RVector zero_vector(std::size_t dim) { return RVector(dim, Rational(0)); }

int lex_compare(const RVector& a, const RVector& b) {
    if (a.size() != b.size())
        throw validation_error("lex_compare: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (b[i] < a[i]) return 1;
    }
    return 0;
}

RVector primitive(const RVector& v) {
    // lcm of denominators, then gcd of the resulting integer entries.
    mpz_class l = 1;
    for (const auto& x : v)
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    mpz_class g = 0;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        mpz_class e = x.num() * (l / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    }
    if (g == 0) return zero_vector(v.size()); // v == 0
    RVector r(v.size());
    Rational f(l, g);
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * f;
    return r;
}

RVector primitive_signed(const RVector& v) {
    RVector r = primitive(v);
    for (const auto& x : r) {
        if (x.is_zero()) continue;
        if (x.sign() < 0) return neg(r);
        break;
    }
    return r;
}

RrefResult rref(const RMatrix& m, std::size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols)
            throw validation_error("rref: ragged matrix");
    RMatrix a = m;
    RrefResult out;
    std::size_t pr = 0; // next pivot row
    for (std::size_t pc = 0; pc < cols && pr < a.size(); ++pc) {
        // first row at or below pr with a nonzero entry in column pc
        std::size_t sel = a.size();
        for (std::size_t r = pr; r < a.size(); ++r)
            if (!a[r][pc].is_zero()) { sel = r; break; }
        if (sel == a.size()) continue;
        std::swap(a[pr], a[sel]);
        Rational inv = Rational(1) / a[pr][pc];
        for (std::size_t c = pc; c < cols; ++c) a[pr][c] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == pr || a[r][pc].is_zero()) continue;
            Rational f = a[r][pc];
            for (std::size_t c = pc; c < cols; ++c)
                a[r][c] -= f * a[pr][c];
        }
        out.pivot_cols.push_back(static_cast<int>(pc));
        ++pr;
    }
    out.reduced.assign(a.begin(), a.begin() + static_cast<long>(pr));
    return out;
}

std::size_t rank(const RMatrix& m, std::size_t cols) {
    return rref(m, cols).pivot_cols.size();
}

RMatrix kernel_basis(const RMatrix& m, std::size_t cols) {
    RrefResult rr = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    RMatrix basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        RVector v = zero_vector(cols);
        v[fc] = Rational(1);
        for (std::size_t r = 0; r < rr.reduced.size(); ++r)
            v[static_cast<std::size_t>(rr.pivot_cols[r])] = -rr.reduced[r][fc];
        basis.push_back(primitive(v));
    }
    return basis;
}

std::optional<RVector> solve(const RMatrix& m, const RVector& b, std::size_t cols) {
    if (m.size() != b.size())
        throw validation_error("solve: row count mismatch");
    RMatrix aug = m;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    RrefResult rr = rref(aug, cols + 1);
    RVector x = zero_vector(cols);
    for (std::size_t r = 0; r < rr.reduced.size(); ++r) {
        if (rr.pivot_cols[r] == static_cast<int>(cols))
            return std::nullopt; // 0 = 1 row
        x[static_cast<std::size_t>(rr.pivot_cols[r])] = rr.reduced[r][cols];
    }
    return x;
}

RVector mat_vec(const RMatrix& m, const RVector& x) {
    RVector r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(dot(row, x));
    return r;
}

} // namespace prefcone
