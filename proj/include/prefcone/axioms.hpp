#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "prefcone/preorder.hpp"

namespace prefcone {

// The poset of Archimedean classes of related pairs.  Classes correspond
// one-to-one to the nonempty faces of the positive cone; a class sits higher
// when its face is smaller, so the unique top is the indifference class
// (the lineality face) and the unique bottom is the class of the whole cone.
struct ArchStructure {
    // All nonempty faces, in the deterministic enumeration order
    // (increasing tight-set size, then lexicographic).
    std::vector<Face> classes;
    // One related pair per class whose difference realizes the face.
    std::vector<DominancePair> representatives;
    // leq[i][j]: class i is below class j, i.e. face j is contained in
    // face i; equivalently the tight set of i is a subset of that of j.
    std::vector<std::vector<bool>> leq;
    // Covering edges (lower, upper); arrows point toward the indifference
    // class.
    std::vector<std::pair<std::size_t, std::size_t>> hasse;
    std::size_t minimal_class = 0;
    std::size_t maximal_class = 0;
};

ArchStructure arch_structure(const PreorderedSpace& p,
                             std::size_t face_budget = 10000);

struct AxiomReport {
    bool si = true;  // strong independence: holds by construction
    bool mc = true;  // mixture continuity: polyhedral cones are closed
    bool ar = false;
    bool sd = true;
    bool cd = true;
    // A related pair dominating every related pair (its difference lies in
    // the relative interior of the cone).
    std::optional<DominancePair> sd_witness;
    // When ar fails: two related pairs in distinct Archimedean classes,
    // neither of them the indifference class.
    std::optional<std::pair<DominancePair, DominancePair>> ar_violation;
    // Dimension of the span of the cone: a cofinal family of that size
    // witnesses countable domination quantitatively.
    std::size_t cofinal_dim = 0;
};

AxiomReport check_axioms(const PreorderedSpace& p,
                         std::size_t face_budget = 10000);

}  // namespace prefcone
