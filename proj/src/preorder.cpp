#include "prefcone/preorder.hpp"

#include <mutex>
#include <utility>

#include "prefcone/error.hpp"
#include "prefcone/feasibility.hpp"

namespace prefcone {

struct PreorderedSpace::Impl {
    MixtureSpace space;
    std::vector<std::pair<MPoint, MPoint>> comparisons;
    RMatrix gamma;
    Cone cone;

    mutable std::once_flag rep_once;
    mutable std::shared_ptr<const MultiRep> rep;

    Impl(MixtureSpace s, std::vector<std::pair<MPoint, MPoint>> cmp,
         RMatrix g, Cone c)
        : space(std::move(s)),
          comparisons(std::move(cmp)),
          gamma(std::move(g)),
          cone(std::move(c)) {}
};

PreorderedSpace::PreorderedSpace(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

PreorderedSpace PreorderedSpace::build(
    const MixtureSpace& space,
    std::vector<std::pair<MPoint, MPoint>> comparisons) {
    RMatrix gamma;
    gamma.reserve(comparisons.size());
    for (const auto& [x, y] : comparisons) {
        if (x.space() != space || y.space() != space)
            throw validation_error("comparison uses a point of another space");
        gamma.push_back(space.embed(x.coords(), y.coords()));
    }
    Cone cone = Cone::from_generators(space.dimension(), gamma);
    return PreorderedSpace(std::make_shared<Impl>(
        space, std::move(comparisons), std::move(gamma), std::move(cone)));
}

const MixtureSpace& PreorderedSpace::space() const { return impl_->space; }

const std::vector<std::pair<MPoint, MPoint>>& PreorderedSpace::comparisons()
    const {
    return impl_->comparisons;
}

const RMatrix& PreorderedSpace::gamma() const { return impl_->gamma; }

const Cone& PreorderedSpace::cone() const { return impl_->cone; }

Comparison PreorderedSpace::compare(const MPoint& x, const MPoint& y) const {
    if (x.space() != impl_->space || y.space() != impl_->space)
        throw validation_error("query uses a point of another space");
    RVector d = impl_->space.embed(x.coords(), y.coords());
    ConicCertificate cert = conic_express(impl_->gamma, d);
    Comparison out;
    out.geq = cert.member;
    if (cert.member)
        out.coefficients = std::move(cert.coefficients);
    else
        out.farkas = std::move(cert.farkas);
    return out;
}

bool PreorderedSpace::geq(const MPoint& x, const MPoint& y) const {
    return compare(x, y).geq;
}

bool PreorderedSpace::strictly(const MPoint& x, const MPoint& y) const {
    return geq(x, y) && !geq(y, x);
}

bool PreorderedSpace::indifferent(const MPoint& x, const MPoint& y) const {
    return geq(x, y) && geq(y, x);
}

AlphaInterval PreorderedSpace::comparison_interval(const MPoint& x,
                                                   const MPoint& y,
                                                   const MPoint& z,
                                                   const MPoint& w) const {
    for (const MPoint* p : {&x, &y, &z, &w})
        if (p->space() != impl_->space)
            throw validation_error("query uses a point of another space");
    // mix(x,y,a) - mix(z,w,a) = a (x - z) + (1 - a) (y - w)
    RVector p = impl_->space.embed(x.coords(), z.coords());
    RVector q = impl_->space.embed(y.coords(), w.coords());
    return segment_cone_interval(impl_->cone, p, q);
}

DominancePair PreorderedSpace::related(const MPoint& x, const MPoint& y) const {
    if (!geq(x, y))
        throw validation_error("pair is not related: x >= y fails");
    return DominancePair{x, y};
}

bool PreorderedSpace::weak_dominates(const DominancePair& a,
                                     const DominancePair& b) const {
    for (const MPoint* p : {&a.x, &a.y, &b.x, &b.y})
        if (p->space() != impl_->space)
            throw validation_error("query uses a point of another space");
    RVector da = impl_->space.embed(a.x.coords(), a.y.coords());
    RVector db = impl_->space.embed(b.x.coords(), b.y.coords());
    if (!member(impl_->cone, da).member || !member(impl_->cone, db).member)
        throw validation_error("weak dominance requires both pairs related");
    return member(smallest_face(impl_->cone, da).face_cone, db).member;
}

std::shared_ptr<const MultiRep> PreorderedSpace::ensure_rep(
    const std::function<std::shared_ptr<const MultiRep>()>& make) const {
    std::call_once(impl_->rep_once, [&] { impl_->rep = make(); });
    return impl_->rep;
}

}  // namespace prefcone
