#include "prefcone/feasibility.hpp"

#include "prefcone/error.hpp"

namespace prefcone {

// Phase-1 simplex on  A lambda + I a = t', minimize sum(a), where A's columns
// are the generators and rows with negative target entry are sign-flipped so
// the all-artificial basis starts feasible. Bland's rule (smallest eligible
// index for both the entering column and the leaving row's basic variable)
// rules out cycling, so termination is unconditional.
ConicCertificate conic_express(const RMatrix& generators, const RVector& target) {
    const std::size_t n = target.size();   // rows
    const std::size_t m = generators.size(); // lambda columns
    for (const auto& g : generators)
        if (g.size() != n)
            throw validation_error("conic_express: generator dimension mismatch");

    ConicCertificate out;
    if (n == 0) { // everything lives in R^0; the empty sum matches
        out.member = true;
        out.coefficients = zero_vector(m);
        return out;
    }

    // tableau: n rows, columns [0, m) lambda, [m, m + n) artificial, rhs.
    std::vector<int> sign(n, 1);
    RMatrix tab(n, RVector(m + n + 1, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (target[i].sign() < 0) sign[i] = -1;
        for (std::size_t j = 0; j < m; ++j)
            tab[i][j] = sign[i] < 0 ? -generators[j][i] : generators[j][i];
        tab[i][m + i] = Rational(1);
        tab[i][m + n] = sign[i] < 0 ? -target[i] : target[i];
    }
    std::vector<std::size_t> basic(n);
    for (std::size_t i = 0; i < n; ++i) basic[i] = m + i;

    auto reduced_cost = [&](std::size_t j) {
        // cost 1 on artificials, 0 on lambda columns
        Rational r = j >= m ? Rational(1) : Rational(0);
        for (std::size_t i = 0; i < n; ++i)
            if (basic[i] >= m) r -= tab[i][j];
        return r;
    };

    for (;;) {
        // entering: smallest column index with negative reduced cost
        std::size_t enter = m + n;
        for (std::size_t j = 0; j < m + n; ++j) {
            if (reduced_cost(j).sign() < 0) { enter = j; break; }
        }
        if (enter == m + n) break; // optimal

        // leaving: min ratio, ties by smallest basic variable index
        std::size_t leave = n;
        Rational best;
        for (std::size_t i = 0; i < n; ++i) {
            if (tab[i][enter].sign() <= 0) continue;
            Rational ratio = tab[i][m + n] / tab[i][enter];
            if (leave == n || ratio < best ||
                (ratio == best && basic[i] < basic[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == n)
            throw validation_error("conic_express: unbounded phase-1 (internal)");

        // pivot on (leave, enter)
        Rational inv = Rational(1) / tab[leave][enter];
        for (auto& x : tab[leave]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == leave || tab[i][enter].is_zero()) continue;
            Rational f = tab[i][enter];
            for (std::size_t j = 0; j <= m + n; ++j)
                tab[i][j] -= f * tab[leave][j];
        }
        basic[leave] = enter;
    }

    Rational objective;
    for (std::size_t i = 0; i < n; ++i)
        if (basic[i] >= m) objective += tab[i][m + n];

    if (objective.is_zero()) {
        out.member = true;
        out.coefficients = zero_vector(m);
        for (std::size_t i = 0; i < n; ++i)
            if (basic[i] < m) out.coefficients[basic[i]] = tab[i][m + n];
        return out;
    }

    // Infeasible. The artificial columns carry B^{-1}, so the dual prices are
    // y_i = sum over artificial-basic rows r of tab[r][m+i]; for the scaled
    // system y.A' <= 0 and y.t' > 0. Undo the row scaling and negate.
    out.member = false;
    out.farkas = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational y;
        for (std::size_t r = 0; r < n; ++r)
            if (basic[r] >= m) y += tab[r][m + i];
        out.farkas[i] = sign[i] < 0 ? y : -y;
    }
    return out;
}

bool check_combination(const RMatrix& generators, const RVector& target,
                       const RVector& coefficients) {
    if (coefficients.size() != generators.size()) return false;
    RVector acc = zero_vector(target.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (coefficients[i].sign() < 0) return false;
        if (generators[i].size() != target.size()) return false;
        acc = add(acc, scale(generators[i], coefficients[i]));
    }
    return acc == target;
}

bool check_farkas(const RMatrix& generators, const RVector& target,
                  const RVector& farkas) {
    if (farkas.size() != target.size()) return false;
    for (const auto& g : generators)
        if (dot(farkas, g).sign() < 0) return false;
    return dot(farkas, target).sign() < 0;
}

} // namespace prefcone
