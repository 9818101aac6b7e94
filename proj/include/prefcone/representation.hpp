#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "prefcone/preorder.hpp"

namespace prefcone {

// A nonempty family of mixture-preserving functionals on a common space;
// the represented preorder ranks x over y when every functional does.
class MultiRep {
  public:
    explicit MultiRep(std::vector<AffineFunctional> functionals);

    const std::vector<AffineFunctional>& functionals() const {
        return functionals_;
    }
    const MixtureSpace& space() const { return functionals_.front().space(); }

  private:
    std::vector<AffineFunctional> functionals_;
};

// A multi-representation of the preorder: the canonical generators of the
// dual cone as functionals vanishing at the base point.  When the cone is
// the whole space the result is a single constant functional.  The result
// is cached on the preorder, so repeated calls are cheap and identical.
MultiRep synthesize(const PreorderedSpace& p);

struct VerifyResult {
    bool ok = false;
    // When some input comparison x >= y is ranked the other way: that pair
    // and the index of a functional with u(x) < u(y).
    std::optional<std::pair<DominancePair, std::size_t>> violated;
    // When the functionals under-constrain the order: a pair with
    // u(x) >= u(y) for every functional but x >= y false.
    std::optional<std::pair<MPoint, MPoint>> unrelated;
};

// Does the family represent exactly the preorder?  Decided by cone equality
// between the positive cone and the dual of the functionals' linear parts;
// on failure one of the two witnesses above is produced.
VerifyResult verify(const PreorderedSpace& p, const MultiRep& u);

// A subfamily that still represents the preorder, obtained by greedily
// discarding functionals whose linear parts are conic combinations of the
// others'.  The input must verify; the output has no removable element
// (except that a last functional is always kept so the family stays
// nonempty).
MultiRep minimize(const PreorderedSpace& p, const MultiRep& u);

// A single strictly increasing mixture-preserving functional: x > y implies
// a strictly larger value, indifference implies equality.  Built as the
// 2^-i weighted sum of the synthesized linear parts after rescaling each to
// have entries of absolute value at most 1 in its leading coordinates.
AffineFunctional strict_functional(const PreorderedSpace& p);

// The strict multi-representation {base + n * amplifier : n in {0,1,...}},
// evaluated symbolically.
struct StrictFamily {
    AffineFunctional base_strict;
    MultiRep amplifiers;
};

StrictFamily strict_family(const PreorderedSpace& p);

// Does every member of the infinite family rank x at least as high as y?
// Equivalent to: the base functional agrees and every amplifier agrees (the
// large-n members enforce the amplifier condition).
bool smr_holds(const StrictFamily& f, const MPoint& x, const MPoint& y);

// Do the two families induce the same preorder on the space?  Decided as
// equality of the conic hulls of the lifted functionals (linear part plus
// constant) together with the line of constant functions.
bool same_preorder(const MixtureSpace& m, const MultiRep& u,
                   const MultiRep& v);

}  // namespace prefcone
