#pragma once

#include <optional>
#include <vector>

#include "prefcone/rational.hpp"

namespace prefcone {

/// Dense exact-rational vector / row-major matrix. Equality is entrywise;
/// all routines are deterministic (no pivoting heuristics beyond
/// first-nonzero scanning).
using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

// --- vector arithmetic ------------------------------------------------------

Rational dot(const RVector& a, const RVector& b);
RVector add(const RVector& a, const RVector& b);
RVector sub(const RVector& a, const RVector& b);
RVector scale(const RVector& a, const Rational& s);
RVector neg(const RVector& a);
bool is_zero(const RVector& a);
RVector zero_vector(std::size_t dim);

/// Lexicographic comparison; -1 / 0 / +1.
int lex_compare(const RVector& a, const RVector& b);
struct LexLess {
    bool operator()(const RVector& a, const RVector& b) const {
        return lex_compare(a, b) < 0;
    }
};

/// Scale a nonzero vector to the unique primitive integer vector on the same
/// ray: clear denominators, divide by the gcd of the entries. Keeps
/// orientation. The zero vector maps to itself.
RVector primitive(const RVector& v);

/// primitive(), then flip sign so the first nonzero entry is positive.
/// Canonical representative of a *line* (sign-free direction).
RVector primitive_signed(const RVector& v);

// --- elimination ------------------------------------------------------------

struct RrefResult {
    RMatrix reduced;             // reduced row-echelon form, zero rows dropped
    std::vector<int> pivot_cols; // one per surviving row, strictly increasing
};

/// Exact Gauss-Jordan reduction. Column count must be uniform.
RrefResult rref(const RMatrix& m, std::size_t cols);

std::size_t rank(const RMatrix& m, std::size_t cols);

/// Basis of { x : m x = 0 } in R^cols, one row per free column, in
/// ascending free-column order; each row normalized to primitive form.
RMatrix kernel_basis(const RMatrix& m, std::size_t cols);

/// One solution of m x = b (free variables set to 0), or nullopt if the
/// system is inconsistent.
std::optional<RVector> solve(const RMatrix& m, const RVector& b, std::size_t cols);

/// Matrix-vector product (rows of m against x).
RVector mat_vec(const RMatrix& m, const RVector& x);

} // namespace prefcone
