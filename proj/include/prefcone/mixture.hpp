#pragma once

#include "prefcone/linalg.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace prefcone {

class MPoint;

// A finite-dimensional mixture space presented as a convex subset of Q^n:
// a probability simplex over labeled outcomes, the convex hull of a vertex
// list, or a whole coordinate vector space.  Construction fixes a base point
// and a basis of the direction space Span{p - base : p in the space}, so
// differences of points have canonical coordinates of length dimension().
class MixtureSpace {
  public:
    enum class Kind { simplex, polytope, vectorspace };

    // Probability distributions over the listed outcomes (labels must be
    // nonempty and distinct); native coordinates are probabilities in list
    // order.
    static MixtureSpace simplex(std::vector<std::string> outcomes);
    // Convex hull of the given vertex list in Q^coordinate_dim (nonempty).
    static MixtureSpace polytope(std::size_t coordinate_dim, RMatrix vertices);
    // All of Q^dim.
    static MixtureSpace vectorspace(std::size_t dim);

    Kind kind() const;
    std::size_t coordinate_dim() const;
    // Dimension of the direction space; equals the embedding basis size.
    std::size_t dimension() const;
    const RVector& base_point() const;
    // Rows are the basis vectors of the direction space, in ambient
    // coordinates, chosen by a greedy rank-growing scan of generator
    // differences from the base point.
    const RMatrix& embedding_basis() const;
    // Outcome labels (simplex spaces only; empty otherwise).
    const std::vector<std::string>& outcomes() const;
    // Vertex list (polytope spaces only; empty otherwise).
    const RMatrix& vertices() const;

    bool contains(const RVector& coords) const;
    // Validating point factory; throws validation_error when the coordinates
    // do not describe a point of the space.
    MPoint point(RVector coords) const;
    MPoint base() const;

    // Coordinates of x - y in the embedding basis.  Both arguments are
    // native coordinate vectors of points of the space.
    RVector embed(const RVector& x_coords, const RVector& y_coords) const;

    // Structural equality: same kind, same ambient dimension, same payload.
    friend bool operator==(const MixtureSpace& a, const MixtureSpace& b);
    friend bool operator!=(const MixtureSpace& a, const MixtureSpace& b) {
        return !(a == b);
    }

  private:
    struct Impl;
    explicit MixtureSpace(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// A validated point of a mixture space in the space's native coordinates.
class MPoint {
  public:
    MPoint(const MixtureSpace& space, RVector coords);

    const MixtureSpace& space() const { return space_; }
    const RVector& coords() const { return coords_; }

    friend bool operator==(const MPoint& a, const MPoint& b) {
        return a.space_ == b.space_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const MPoint& a, const MPoint& b) {
        return !(a == b);
    }

  private:
    MixtureSpace space_;
    RVector coords_;
};

// The convex combination alpha*x + (1-alpha)*y; alpha must lie in [0,1] and
// the points must belong to the same space.
MPoint mix(const MPoint& x, const MPoint& y, const Rational& alpha);

// Coordinates of x - y in the embedding basis of the common space.
RVector embed_difference(const MPoint& x, const MPoint& y);

// A mixture-preserving function on a space: value(x) equals
// constant + linear . embed(x - base_point).  Affinity in the mixing weight
// holds exactly by construction.
class AffineFunctional {
  public:
    AffineFunctional(const MixtureSpace& space, RVector linear,
                     Rational constant);

    const MixtureSpace& space() const { return space_; }
    const RVector& linear() const { return linear_; }
    const Rational& constant() const { return constant_; }

    Rational value(const MPoint& x) const;

  private:
    MixtureSpace space_;
    RVector linear_;
    Rational constant_;
};

// Validated constructor for the functional whose linear part is expressed
// over the embedding basis of m.
AffineFunctional extend_functional(const MixtureSpace& m, RVector linear_part,
                                   Rational constant);

// A pair of space points (x, y) with embed(x - y) a positive multiple of v
// (equal to v itself whenever the unit scaling fits inside the space).  The
// points straddle a relative-interior center of the space; v is given in
// embedding coordinates.
std::pair<MPoint, MPoint> difference_pair(const MixtureSpace& m,
                                          const RVector& v);

}  // namespace prefcone
