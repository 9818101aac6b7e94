#include "prefcone/mixture.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "prefcone/error.hpp"
#include "prefcone/feasibility.hpp"

namespace prefcone {

struct MixtureSpace::Impl {
    Kind kind;
    std::size_t coordinate_dim;
    std::vector<std::string> outcomes;  // simplex payload
    RMatrix vertices;                   // polytope payload
    RVector base_point;
    RMatrix embedding_basis;  // rows: direction-space basis, ambient coords
    RMatrix basis_columns;    // coordinate_dim x |basis|, for coordinate solves
    RMatrix homogenized;      // polytope vertices with a trailing 1, for membership
};

namespace {

// Greedy rank-growing scan of generator differences from the base point.
RMatrix greedy_basis(const RVector& base, const RMatrix& generators) {
    RMatrix basis;
    for (const auto& g : generators) {
        RVector d = sub(g, base);
        if (is_zero(d)) continue;
        RMatrix trial = basis;
        trial.push_back(d);
        if (rank(trial, base.size()) == basis.size() + 1)
            basis.push_back(std::move(d));
    }
    return basis;
}

RMatrix to_columns(std::size_t rows, const RMatrix& basis) {
    RMatrix cols(rows, RVector(basis.size(), Rational(0)));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t r = 0; r < rows; ++r) cols[r][j] = basis[j][r];
    return cols;
}

}  // namespace

MixtureSpace::MixtureSpace(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

MixtureSpace MixtureSpace::simplex(std::vector<std::string> outcomes) {
    if (outcomes.empty())
        throw validation_error("simplex requires at least one outcome");
    std::set<std::string> seen;
    for (const auto& label : outcomes) {
        if (label.empty())
            throw validation_error("simplex outcome labels must be nonempty");
        if (!seen.insert(label).second)
            throw validation_error("duplicate simplex outcome label: " + label);
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::simplex;
    impl->coordinate_dim = outcomes.size();
    impl->outcomes = std::move(outcomes);
    RMatrix units;
    for (std::size_t i = 0; i < impl->coordinate_dim; ++i) {
        RVector e = zero_vector(impl->coordinate_dim);
        e[i] = Rational(1);
        units.push_back(std::move(e));
    }
    impl->base_point = units[0];
    impl->embedding_basis = greedy_basis(impl->base_point, units);
    impl->basis_columns = to_columns(impl->coordinate_dim, impl->embedding_basis);
    return MixtureSpace(std::move(impl));
}

MixtureSpace MixtureSpace::polytope(std::size_t coordinate_dim,
                                    RMatrix vertices) {
    if (vertices.empty())
        throw validation_error("polytope requires at least one vertex");
    for (const auto& v : vertices)
        if (v.size() != coordinate_dim)
            throw validation_error("polytope vertex has wrong dimension");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::polytope;
    impl->coordinate_dim = coordinate_dim;
    impl->vertices = std::move(vertices);
    impl->base_point = impl->vertices[0];
    impl->embedding_basis = greedy_basis(impl->base_point, impl->vertices);
    impl->basis_columns = to_columns(coordinate_dim, impl->embedding_basis);
    for (const auto& v : impl->vertices) {
        RVector h = v;
        h.push_back(Rational(1));
        impl->homogenized.push_back(std::move(h));
    }
    return MixtureSpace(std::move(impl));
}

MixtureSpace MixtureSpace::vectorspace(std::size_t dim) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::vectorspace;
    impl->coordinate_dim = dim;
    impl->base_point = zero_vector(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        RVector e = zero_vector(dim);
        e[i] = Rational(1);
        impl->embedding_basis.push_back(std::move(e));
    }
    impl->basis_columns = to_columns(dim, impl->embedding_basis);
    return MixtureSpace(std::move(impl));
}

MixtureSpace::Kind MixtureSpace::kind() const { return impl_->kind; }

std::size_t MixtureSpace::coordinate_dim() const {
    return impl_->coordinate_dim;
}

std::size_t MixtureSpace::dimension() const {
    return impl_->embedding_basis.size();
}

const RVector& MixtureSpace::base_point() const { return impl_->base_point; }

const RMatrix& MixtureSpace::embedding_basis() const {
    return impl_->embedding_basis;
}

const std::vector<std::string>& MixtureSpace::outcomes() const {
    return impl_->outcomes;
}

const RMatrix& MixtureSpace::vertices() const { return impl_->vertices; }

bool MixtureSpace::contains(const RVector& coords) const {
    if (coords.size() != impl_->coordinate_dim) return false;
    switch (impl_->kind) {
        case Kind::simplex: {
            Rational sum(0);
            for (const auto& c : coords) {
                if (c.sign() < 0) return false;
                sum += c;
            }
            return sum == Rational(1);
        }
        case Kind::polytope: {
            RVector target = coords;
            target.push_back(Rational(1));
            return conic_express(impl_->homogenized, target).member;
        }
        case Kind::vectorspace:
            return true;
    }
    return false;
}

MPoint MixtureSpace::point(RVector coords) const {
    return MPoint(*this, std::move(coords));
}

MPoint MixtureSpace::base() const { return MPoint(*this, impl_->base_point); }

RVector MixtureSpace::embed(const RVector& x_coords,
                            const RVector& y_coords) const {
    if (x_coords.size() != impl_->coordinate_dim ||
        y_coords.size() != impl_->coordinate_dim)
        throw validation_error("embed: coordinate vector has wrong dimension");
    RVector diff = sub(x_coords, y_coords);
    if (impl_->embedding_basis.empty()) {
        if (!is_zero(diff))
            throw validation_error(
                "embed: difference lies outside the direction space");
        return {};
    }
    auto sol = solve(impl_->basis_columns, diff, impl_->embedding_basis.size());
    if (!sol)
        throw validation_error(
            "embed: difference lies outside the direction space");
    return *sol;
}

bool operator==(const MixtureSpace& a, const MixtureSpace& b) {
    if (a.impl_ == b.impl_) return true;
    if (a.impl_->kind != b.impl_->kind) return false;
    if (a.impl_->coordinate_dim != b.impl_->coordinate_dim) return false;
    return a.impl_->outcomes == b.impl_->outcomes &&
           a.impl_->vertices == b.impl_->vertices;
}

MPoint::MPoint(const MixtureSpace& space, RVector coords)
    : space_(space), coords_(std::move(coords)) {
    if (coords_.size() != space_.coordinate_dim())
        throw validation_error("point has wrong coordinate dimension");
    if (!space_.contains(coords_))
        throw validation_error("coordinates do not describe a point of the space");
}

MPoint mix(const MPoint& x, const MPoint& y, const Rational& alpha) {
    if (x.space() != y.space())
        throw validation_error("mix: points belong to different spaces");
    if (alpha.sign() < 0 || alpha > Rational(1))
        throw validation_error("mix: weight must lie in [0,1]");
    RVector c = add(scale(x.coords(), alpha),
                    scale(y.coords(), Rational(1) - alpha));
    return MPoint(x.space(), std::move(c));
}

RVector embed_difference(const MPoint& x, const MPoint& y) {
    if (x.space() != y.space())
        throw validation_error(
            "embed_difference: points belong to different spaces");
    return x.space().embed(x.coords(), y.coords());
}

AffineFunctional::AffineFunctional(const MixtureSpace& space, RVector linear,
                                   Rational constant)
    : space_(space), linear_(std::move(linear)), constant_(std::move(constant)) {
    if (linear_.size() != space_.dimension())
        throw validation_error(
            "functional linear part does not match the space dimension");
}

Rational AffineFunctional::value(const MPoint& x) const {
    if (x.space() != space_)
        throw validation_error("functional applied to a foreign point");
    return constant_ + dot(linear_, space_.embed(x.coords(), space_.base_point()));
}

AffineFunctional extend_functional(const MixtureSpace& m, RVector linear_part,
                                   Rational constant) {
    return AffineFunctional(m, std::move(linear_part), std::move(constant));
}

namespace {

// A point in the relative interior of the space.
RVector center_coords(const MixtureSpace& m) {
    switch (m.kind()) {
        case MixtureSpace::Kind::simplex: {
            std::size_t n = m.coordinate_dim();
            return RVector(n, Rational(1, static_cast<long>(n)));
        }
        case MixtureSpace::Kind::polytope: {
            RVector sum = zero_vector(m.coordinate_dim());
            for (const auto& v : m.vertices()) sum = add(sum, v);
            return scale(sum,
                         Rational(1, static_cast<long>(m.vertices().size())));
        }
        case MixtureSpace::Kind::vectorspace:
            return zero_vector(m.coordinate_dim());
    }
    throw std::logic_error("unreachable mixture kind");
}

}  // namespace

std::pair<MPoint, MPoint> difference_pair(const MixtureSpace& m,
                                          const RVector& v) {
    if (v.size() != m.dimension())
        throw validation_error(
            "difference_pair: direction does not match the space dimension");
    RVector c = center_coords(m);
    RVector dir = zero_vector(m.coordinate_dim());
    for (std::size_t i = 0; i < v.size(); ++i)
        dir = add(dir, scale(m.embedding_basis()[i], v[i]));
    Rational eps(1);
    for (int k = 0; k < 128; ++k) {
        RVector half = scale(dir, eps / Rational(2));
        RVector xc = add(c, half);
        RVector yc = sub(c, half);
        if (m.contains(xc) && m.contains(yc))
            return {m.point(std::move(xc)), m.point(std::move(yc))};
        eps = eps / Rational(2);
    }
    throw std::logic_error("could not scale a direction into the space");
}

}  // namespace prefcone
