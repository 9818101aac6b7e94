#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "prefcone/cone.hpp"
#include "prefcone/mixture.hpp"

namespace prefcone {

class MultiRep;

// Verdict of a geq query, carrying a certificate either way: a nonnegative
// combination of the input comparison differences when the answer is yes, a
// separating functional on the embedding space when it is no.
struct Comparison {
    bool geq = false;
    // indexed by the comparison list; embed(x - y) equals the combination
    RVector coefficients;
    // functional nonnegative on every comparison difference, negative on
    // embed(x - y)
    RVector farkas;
};

// An ordered pair (x, y) certified to satisfy x >= y; weak-dominance queries
// are defined on these.
struct DominancePair {
    MPoint x;
    MPoint y;
};

// A mixture space together with the smallest mixture-continuous preorder
// containing a finite list of comparisons; all order queries reduce to
// membership in the positive cone over the embedding space.
class PreorderedSpace {
  public:
    static PreorderedSpace build(
        const MixtureSpace& space,
        std::vector<std::pair<MPoint, MPoint>> comparisons);

    const MixtureSpace& space() const;
    const std::vector<std::pair<MPoint, MPoint>>& comparisons() const;
    // Rows: embed(x_i - y_i) for each input comparison, in list order.
    const RMatrix& gamma() const;
    const Cone& cone() const;

    Comparison compare(const MPoint& x, const MPoint& y) const;
    bool geq(const MPoint& x, const MPoint& y) const;
    bool strictly(const MPoint& x, const MPoint& y) const;
    bool indifferent(const MPoint& x, const MPoint& y) const;

    // {alpha in [0,1] : mix(x,y,alpha) >= mix(z,w,alpha)}; always a closed
    // rational interval or empty.
    AlphaInterval comparison_interval(const MPoint& x, const MPoint& y,
                                      const MPoint& z, const MPoint& w) const;

    // Validating factory for related pairs; throws when x >= y fails.
    DominancePair related(const MPoint& x, const MPoint& y) const;

    // Does (a.x, a.y) weakly dominate (b.x, b.y)?  Decided as membership of
    // embed(b.x - b.y) in the smallest face containing embed(a.x - a.y).
    // Both pairs must satisfy >=.
    bool weak_dominates(const DominancePair& a, const DominancePair& b) const;

    // Compute-once slot used by the representation layer to cache the
    // synthesized multi-representation for this preorder.
    std::shared_ptr<const MultiRep> ensure_rep(
        const std::function<std::shared_ptr<const MultiRep>()>& make) const;

  private:
    struct Impl;
    explicit PreorderedSpace(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace prefcone
