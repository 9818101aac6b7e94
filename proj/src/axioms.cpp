#include "prefcone/axioms.hpp"

#include <stdexcept>
#include <utility>

#include "prefcone/error.hpp"

namespace prefcone {

namespace {

// A related pair (x, y) of space points with embed(x - y) a positive
// multiple of v; v must be a cone member expressed in embedding coordinates.
DominancePair realize_difference(const PreorderedSpace& p, const RVector& v) {
    auto [x, y] = difference_pair(p.space(), v);
    return p.related(x, y);
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t j = 0;
    for (int x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
        ++j;
    }
    return true;
}

}  // namespace

ArchStructure arch_structure(const PreorderedSpace& p,
                             std::size_t face_budget) {
    ArchStructure out;
    out.classes = enumerate_faces(p.cone(), face_budget);
    std::size_t n = out.classes.size();
    out.representatives.reserve(n);
    for (const auto& f : out.classes)
        out.representatives.push_back(
            realize_difference(p, relint_point(f.face_cone)));

    out.leq.assign(n, std::vector<bool>(n, false));
    std::size_t full = p.cone().defining_inequalities().size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            out.leq[i][j] =
                is_subset(out.classes[i].active_set, out.classes[j].active_set);
        if (out.classes[i].active_set.empty()) out.minimal_class = i;
        if (out.classes[i].active_set.size() == full) out.maximal_class = i;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !out.leq[i][j]) continue;
            bool covered = false;
            for (std::size_t k = 0; k < n && !covered; ++k)
                if (k != i && k != j && out.leq[i][k] && out.leq[k][j])
                    covered = true;
            if (!covered) out.hasse.emplace_back(i, j);
        }
    return out;
}

AxiomReport check_axioms(const PreorderedSpace& p, std::size_t face_budget) {
    AxiomReport rep;
    std::vector<Face> faces = enumerate_faces(p.cone(), face_budget);
    rep.ar = faces.size() <= 2;
    rep.sd = true;
    rep.cd = true;
    rep.sd_witness = realize_difference(p, relint_point(p.cone()));
    rep.cofinal_dim = rank(p.gamma(), p.space().dimension());
    if (!rep.ar) {
        // the first two enumerated faces are the whole cone and a proper
        // face; neither is the lineality face when there are three or more
        std::size_t full = p.cone().defining_inequalities().size();
        std::vector<std::size_t> picks;
        for (std::size_t i = 0; i < faces.size() && picks.size() < 2; ++i)
            if (faces[i].active_set.size() < full) picks.push_back(i);
        rep.ar_violation = std::make_pair(
            realize_difference(p, relint_point(faces[picks[0]].face_cone)),
            realize_difference(p, relint_point(faces[picks[1]].face_cone)));
    }
    return rep;
}

}  // namespace prefcone
