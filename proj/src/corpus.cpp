#include "prefcone/corpus.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prefcone/error.hpp"

namespace prefcone {

PreorderedSpace fosd_order(std::size_t n) {
    if (n < 1) throw validation_error("fosd_order requires n >= 1");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back("d" + std::to_string(i));
    MixtureSpace s = MixtureSpace::simplex(labels);
    std::vector<std::pair<MPoint, MPoint>> cmp;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        RVector hi = zero_vector(n), lo = zero_vector(n);
        hi[i + 1] = Rational(1);
        lo[i] = Rational(1);
        cmp.emplace_back(s.point(hi), s.point(lo));
    }
    return PreorderedSpace::build(s, std::move(cmp));
}

PreorderedSpace pointwise_order(std::size_t n) {
    if (n < 1) throw validation_error("pointwise_order requires n >= 1");
    MixtureSpace v = MixtureSpace::vectorspace(n);
    MPoint origin = v.point(zero_vector(n));
    std::vector<std::pair<MPoint, MPoint>> cmp;
    for (std::size_t i = 0; i < n; ++i) {
        RVector e = zero_vector(n);
        e[i] = Rational(1);
        cmp.emplace_back(v.point(e), origin);
    }
    return PreorderedSpace::build(v, std::move(cmp));
}

PreorderedSpace norm_cone_order(std::size_t d) {
    if (d < 1) throw validation_error("norm_cone_order requires d >= 1");
    MixtureSpace v = MixtureSpace::vectorspace(d + 1);
    MPoint origin = v.point(zero_vector(d + 1));
    std::vector<std::pair<MPoint, MPoint>> cmp;
    for (std::size_t i = 0; i < d; ++i) {
        for (int sign : {+1, -1}) {
            RVector g = zero_vector(d + 1);
            g[i] = Rational(sign);
            g[d] = Rational(1);
            cmp.emplace_back(v.point(g), origin);
        }
    }
    return PreorderedSpace::build(v, std::move(cmp));
}

PreorderedSpace product_order(const PreorderedSpace& p1, std::size_t dim2,
                              std::size_t dim3) {
    std::size_t d1 = p1.space().dimension();
    std::size_t total = d1 + dim2 + dim3;
    MixtureSpace v = MixtureSpace::vectorspace(total);
    MPoint origin = v.point(zero_vector(total));
    std::vector<std::pair<MPoint, MPoint>> cmp;
    for (const auto& g : p1.gamma()) {
        RVector row = zero_vector(total);
        for (std::size_t i = 0; i < d1; ++i) row[i] = g[i];
        cmp.emplace_back(v.point(row), origin);
    }
    for (std::size_t j = 0; j < dim2; ++j) {
        for (int sign : {+1, -1}) {
            RVector row = zero_vector(total);
            row[d1 + j] = Rational(sign);
            cmp.emplace_back(v.point(row), origin);
        }
    }
    return PreorderedSpace::build(v, std::move(cmp));
}

KleeTruncation klee_truncation(std::size_t n, std::size_t max_n) {
    if (n < 1) throw validation_error("klee_truncation requires n >= 1");
    if (n > max_n)
        throw budget_error("klee truncation size exceeds the generator budget");
    RMatrix gens;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) ++size;
        Rational inv(1, static_cast<long>(size) * static_cast<long>(size));
        RVector g = zero_vector(n + 1);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) g[i] = inv;
        g[n] = Rational(1);
        gens.push_back(std::move(g));
    }
    return KleeTruncation{n, Cone::from_generators(n + 1, gens)};
}

bool klee_subcone_identity(const KleeTruncation& k) {
    std::size_t n = k.n;
    for (std::size_t keep = 0; keep < (std::size_t{1} << n); ++keep) {
        // intersect with the span of the kept coordinates plus b0
        RMatrix eqs = k.cone.defining_equalities();
        for (std::size_t i = 0; i < n; ++i)
            if (!(keep & (std::size_t{1} << i))) {
                RVector e = zero_vector(n + 1);
                e[i] = Rational(1);
                eqs.push_back(std::move(e));
            }
        Cone sliced = Cone::from_halfspaces(
            n + 1, k.cone.defining_inequalities(), eqs);

        RMatrix gens;
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            if ((mask & keep) != mask) continue;
            std::size_t size = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) ++size;
            Rational inv(1, static_cast<long>(size) * static_cast<long>(size));
            RVector g = zero_vector(n + 1);
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) g[i] = inv;
            g[n] = Rational(1);
            gens.push_back(std::move(g));
        }
        if (!cone_equal(sliced, Cone::from_generators(n + 1, gens)))
            return false;
    }
    return true;
}

Rational klee_separation_margin(const KleeTruncation& k) {
    // the witness functional: n on every basis element, -1 on b0
    RVector f(k.n + 1, Rational(static_cast<long>(k.n)));
    f[k.n] = Rational(-1);
    for (const auto& g : k.cone.support_generators())
        if (dot(f, g).sign() < 0)
            throw std::logic_error("klee margin witness infeasible");
    // the A' = A constraint forces sum_A f >= n^2, hence max_A f >= mean >= n;
    // the constant-n functional above attains that bound
    return Rational(static_cast<long>(k.n));
}

bool LexOrder::positive(const RVector& d) const {
    if (d.size() != n)
        throw validation_error("lex comparison of the wrong dimension");
    for (const auto& c : d) {
        if (c.sign() > 0) return true;
        if (c.sign() < 0) return false;
    }
    return true;  // the zero vector
}

bool LexOrder::geq(const RVector& f, const RVector& g) const {
    return positive(sub(f, g));
}

bool LexOrder::strictly(const RVector& f, const RVector& g) const {
    return geq(f, g) && !geq(g, f);
}

LexWitness lex_mc_witness(std::size_t n) {
    if (n < 2)
        throw validation_error(
            "the lexicographic order is mixture-continuous below two "
            "coordinates");
    LexOrder lex{n};
    LexWitness out;
    out.n = n;
    out.v = zero_vector(n);
    out.v[1] = Rational(-1);
    out.w = zero_vector(n);
    out.w[0] = Rational(1);
    out.w[1] = Rational(-1);
    // certify: the endpoint is out, a grid of the half-open segment is in
    if (lex.positive(out.v))
        throw std::logic_error("lex witness endpoint unexpectedly inside");
    for (int k = 1; k <= 16; ++k) {
        Rational a(1, k);
        RVector p = add(scale(out.w, a), scale(out.v, Rational(1) - a));
        if (!lex.positive(p))
            throw std::logic_error("lex witness segment point outside");
    }
    out.verdict = "not algebraically closed";
    return out;
}

namespace {

void check_unit(const Rational& a) {
    if (a.sign() < 0 || a > Rational(1))
        throw validation_error("herstein comparator inputs must lie in [0,1]");
}

}  // namespace

bool HersteinFixture::geq(const Rational& a, const Rational& b) const {
    check_unit(a);
    check_unit(b);
    return a == Rational(1) || b < Rational(1);
}

bool HersteinFixture::strictly(const Rational& a, const Rational& b) const {
    return geq(a, b) && !geq(b, a);
}

bool HersteinFixture::indifferent(const Rational& a, const Rational& b) const {
    return geq(a, b) && geq(b, a);
}

HersteinFixture::WConWitness HersteinFixture::wcon_witness() const {
    WConWitness w;
    w.x = Rational(0);
    w.y = Rational(0);
    w.z = Rational(0);
    w.w = Rational(1);
    w.lo = Rational(0);
    w.hi = Rational(1);
    w.lo_included = false;
    w.hi_included = true;
    w.closed = false;
    return w;
}

bool HersteinFixture::wcon_alpha_in_set(const Rational& alpha) const {
    check_unit(alpha);
    WConWitness wit = wcon_witness();
    Rational left = alpha * wit.x + (Rational(1) - alpha) * wit.y;
    Rational right = alpha * wit.z + (Rational(1) - alpha) * wit.w;
    return geq(left, right);
}

HersteinFixture::SIWitness HersteinFixture::si_witness() const {
    return SIWitness{Rational(0), Rational(1), Rational(0), Rational(1, 2)};
}

bool HersteinFixture::ind_holds_on_grid() const {
    std::vector<Rational> grid;
    for (int k = 0; k <= 4; ++k) grid.emplace_back(k, 4);
    for (const auto& a : grid)
        for (const auto& b : grid) {
            if (!indifferent(a, b)) continue;
            for (const auto& z : grid) {
                Rational ma = (a + z) / Rational(2);
                Rational mb = (b + z) / Rational(2);
                if (!indifferent(ma, mb)) return false;
            }
        }
    return true;
}

HersteinFixture herstein_fixture() { return HersteinFixture{}; }

}  // namespace prefcone
