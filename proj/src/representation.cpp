#include "prefcone/representation.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

#include "prefcone/error.hpp"
#include "prefcone/feasibility.hpp"

namespace prefcone {

MultiRep::MultiRep(std::vector<AffineFunctional> functionals)
    : functionals_(std::move(functionals)) {
    if (functionals_.empty())
        throw validation_error("a multi-representation must be nonempty");
    for (const auto& f : functionals_)
        if (f.space() != functionals_.front().space())
            throw validation_error(
                "multi-representation functionals must share one space");
}

MultiRep synthesize(const PreorderedSpace& p) {
    auto rep = p.ensure_rep([&]() -> std::shared_ptr<const MultiRep> {
        const MixtureSpace& m = p.space();
        Cone d = dual(p.cone());
        std::vector<AffineFunctional> fns;
        for (const auto& g : d.generators())
            fns.emplace_back(m, g, Rational(0));
        if (fns.empty())
            fns.emplace_back(m, zero_vector(m.dimension()), Rational(0));
        return std::make_shared<const MultiRep>(std::move(fns));
    });
    return *rep;
}

namespace {

RMatrix linear_parts(const MultiRep& u) {
    RMatrix rows;
    rows.reserve(u.functionals().size());
    for (const auto& f : u.functionals()) rows.push_back(f.linear());
    return rows;
}

}  // namespace

VerifyResult verify(const PreorderedSpace& p, const MultiRep& u) {
    if (u.space() != p.space())
        throw validation_error(
            "representation belongs to a different space than the preorder");
    RMatrix rows = linear_parts(u);
    Cone represented = Cone::from_halfspaces(p.space().dimension(), rows);
    VerifyResult out;
    out.ok = cone_equal(p.cone(), represented);
    if (out.ok) return out;

    // first direction: an input comparison some functional ranks backwards
    for (std::size_t i = 0; i < p.gamma().size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (dot(rows[j], p.gamma()[i]).sign() < 0) {
                const auto& [x, y] = p.comparisons()[i];
                out.violated = std::make_pair(DominancePair{x, y}, j);
                return out;
            }

    // otherwise the represented cone is strictly larger: find one of its
    // generators outside the positive cone and scale it into a point pair
    for (const auto& g : represented.support_generators())
        if (!member(p.cone(), g).member) {
            out.unrelated = difference_pair(p.space(), g);
            return out;
        }
    throw std::logic_error("verification failed without a witness");
}

MultiRep minimize(const PreorderedSpace& p, const MultiRep& u) {
    if (!verify(p, u).ok)
        throw validation_error("cannot minimize: the family does not verify");
    std::vector<AffineFunctional> pool(u.functionals().begin(),
                                       u.functionals().end());
    std::vector<bool> kept(pool.size(), true);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        std::size_t remaining = 0;
        for (bool k : kept) remaining += k;
        if (remaining <= 1) break;
        RMatrix others;
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (kept[j] && j != i) others.push_back(pool[j].linear());
        if (conic_express(others, pool[i].linear()).member) kept[i] = false;
    }
    std::vector<AffineFunctional> out;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (kept[i]) out.push_back(pool[i]);
    return MultiRep(std::move(out));
}

AffineFunctional strict_functional(const PreorderedSpace& p) {
    const MixtureSpace& m = p.space();
    std::size_t d = m.dimension();
    MultiRep rep = synthesize(p);
    RVector sum = zero_vector(d);
    Rational weight(1, 2);
    std::size_t index = 1;
    for (const auto& f : rep.functionals()) {
        RVector l = f.linear();
        // rescale so the first min(index, d) entries have absolute value <= 1
        Rational bound(1);
        std::size_t limit = index < d ? index : d;
        for (std::size_t j = 0; j < limit; ++j)
            bound = max(bound, l[j].abs());
        for (auto& c : l) c = c / bound;
        sum = add(sum, scale(l, weight));
        weight = weight / Rational(2);
        ++index;
    }
    return AffineFunctional(m, std::move(sum), Rational(0));
}

StrictFamily strict_family(const PreorderedSpace& p) {
    return StrictFamily{strict_functional(p), synthesize(p)};
}

bool smr_holds(const StrictFamily& f, const MPoint& x, const MPoint& y) {
    if (f.base_strict.value(x) < f.base_strict.value(y)) return false;
    for (const auto& u : f.amplifiers.functionals())
        if (u.value(x) < u.value(y)) return false;
    return true;
}

bool same_preorder(const MixtureSpace& m, const MultiRep& u,
                   const MultiRep& v) {
    if (u.space() != m || v.space() != m)
        throw validation_error(
            "representations compared over a different space");
    std::size_t d = m.dimension();
    auto lifted = [&](const MultiRep& r) {
        RMatrix gens;
        for (const auto& f : r.functionals()) {
            RVector row = f.linear();
            row.push_back(f.constant());
            gens.push_back(std::move(row));
        }
        RVector up = zero_vector(d + 1), down = zero_vector(d + 1);
        up[d] = Rational(1);
        down[d] = Rational(-1);
        gens.push_back(std::move(up));
        gens.push_back(std::move(down));
        return Cone::from_generators(d + 1, gens);
    };
    return cone_equal(lifted(u), lifted(v));
}

}  // namespace prefcone
