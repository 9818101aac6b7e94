#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "prefcone/feasibility.hpp"
#include "prefcone/linalg.hpp"

namespace prefcone {

/// A polyhedral convex cone in Q^dim, value-semantic over a shared immutable
/// body. Both descriptions are kept:
///  - V-rep: lineality basis + extreme rays (canonical primitive vectors,
///    rays reduced modulo the lineality space, sorted);
///  - H-rep: a canonical basis of the valid equalities plus one inequality
///    per facet (primitive, reduced modulo the equality span, sorted).
/// Whichever side a cone was not constructed from is materialized lazily and
/// exactly once (std::call_once); all query paths are chosen by construction
/// origin, never by materialization state, so results are run-order
/// independent.
class Cone {
  public:
    /// Conic hull of the rows of `gens` (each row length == dim).
    /// Rows are normalized to primitive form, deduplicated, zero rows
    /// dropped, and sorted before anything else sees them.
    static Cone from_generators(std::size_t dim, const RMatrix& gens);

    /// { x : a.x >= 0 for rows a of inequalities, e.x = 0 for rows e of
    /// equalities }. Rows normalized and sorted the same way.
    static Cone from_halfspaces(std::size_t dim, const RMatrix& inequalities,
                                const RMatrix& equalities = {});

    std::size_t dim() const;

    /// Canonical generator list: each lineality basis vector with both signs,
    /// then the extreme rays, as one lexicographically sorted list. A double
    /// description round trip through from_generators reproduces it exactly.
    const RMatrix& generators() const;
    const RMatrix& lineality_basis() const;
    const RMatrix& extreme_rays() const;
    const RMatrix& inequalities() const;
    const RMatrix& equalities() const;

    bool is_pointed() const { return lineality_basis().empty(); }

    /// True when built via from_generators. Decides the membership code path.
    bool generator_built() const;

    /// The generator list membership certificates refer to: the (normalized)
    /// input list for generator-built cones -- available without any
    /// materialization -- and the canonical list otherwise.
    const RMatrix& support_generators() const;

    /// H-rep rows valid for evaluation: the normalized input rows for
    /// halfspace-built cones (no materialization), the canonical rows for
    /// generator-built ones.
    const RMatrix& defining_inequalities() const;
    const RMatrix& defining_equalities() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Cone(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// Certificate-carrying membership verdict. `support` names the generator
/// list the combination indexes into, so the certificate can be re-checked
/// by plain arithmetic with no other context.
struct MemberResult {
    bool member = false;
    RMatrix support;
    RVector combination; // member: nonneg, sum_i combination[i]*support[i] == v
    RVector farkas;      // non-member: farkas.support[i] >= 0, farkas.v < 0
};

MemberResult member(const Cone& c, const RVector& v);

/// Dual cone { a : a.x >= 0 for all x in c }.
Cone dual(const Cone& c);

/// A face of a cone, identified by its closed active set of inequality
/// indices (sorted, indices into c.inequalities()). `ray_support` lists the
/// indices of the extreme rays of c lying on the face; the face equals the
/// conic hull of those rays plus the lineality space.
struct Face {
    std::vector<int> active_set;
    std::vector<int> ray_support;
    Cone face_cone;
};

/// Smallest face containing v. Requires member(c, v); throws
/// validation_error otherwise.
Face smallest_face(const Cone& c, const RVector& v);

/// All faces (the cone itself and the lineality face included), sorted by
/// (active-set size, active set lex). Throws budget_error if the count
/// exceeds `budget`.
std::vector<Face> enumerate_faces(const Cone& c, std::size_t budget = 10000);

/// A point in the relative interior: the primitive normalization of the sum
/// of the extreme rays (zero vector for linear subspaces and {0}).
RVector relint_point(const Cone& c);

/// Set equality, decided by mutual generator membership.
bool cone_equal(const Cone& a, const Cone& b);

/// { alpha in [0,1] : alpha p + (1-alpha) q in c }, exact. Closed (possibly
/// degenerate) interval or empty -- never half-open, which is exactly the
/// closedness property the callers certify.
struct AlphaInterval {
    bool empty = true;
    Rational lo, hi;
};

AlphaInterval segment_cone_interval(const Cone& c, const RVector& p, const RVector& q);

} // namespace prefcone
