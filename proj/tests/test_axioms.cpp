#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "prefcone/axioms.hpp"
#include "prefcone/error.hpp"

using namespace prefcone;
using testsupport::delta;
using testsupport::fosd;
using testsupport::pointwise;
using testsupport::simplex_n;

using testsupport::norm_cone_1;

namespace {

std::size_t class_of(const ArchStructure& a, const PreorderedSpace& p,
                     const DominancePair& d) {
    RVector diff = embed_difference(d.x, d.y);
    auto active = smallest_face(p.cone(), diff).active_set;
    for (std::size_t i = 0; i < a.classes.size(); ++i)
        if (a.classes[i].active_set == active) return i;
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("axioms: arch structure of the planar componentwise order") {
    PreorderedSpace p = pointwise(2);
    ArchStructure a = arch_structure(p);
    REQUIRE(a.classes.size() == 4);
    CHECK(a.classes[0].active_set.empty());
    CHECK(a.classes[1].active_set == std::vector<int>{0});
    CHECK(a.classes[2].active_set == std::vector<int>{1});
    CHECK(a.classes[3].active_set == std::vector<int>{0, 1});
    CHECK(a.minimal_class == 0);
    CHECK(a.maximal_class == 3);
    CHECK(a.hasse ==
          std::vector<std::pair<std::size_t, std::size_t>>{
              {0, 1}, {0, 2}, {1, 3}, {2, 3}});

    // representatives realize their faces
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        RVector diff =
            embed_difference(a.representatives[i].x, a.representatives[i].y);
        CHECK(smallest_face(p.cone(), diff).active_set ==
              a.classes[i].active_set);
    }
}

TEST_CASE("axioms: componentwise orders have subset-lattice structures") {
    for (std::size_t n = 1; n <= 3; ++n) {
        PreorderedSpace p = pointwise(n);
        ArchStructure a = arch_structure(p);
        CHECK(a.classes.size() == (std::size_t{1} << n));
        std::set<std::vector<int>> actives;
        for (const auto& f : a.classes) actives.insert(f.active_set);
        CHECK(actives.size() == a.classes.size());
        // the tight sets run over all subsets of the n facet rows, and the
        // class order is exactly subset inclusion
        CHECK(p.cone().defining_inequalities().size() == n);
        for (std::size_t i = 0; i < a.classes.size(); ++i)
            for (std::size_t j = 0; j < a.classes.size(); ++j) {
                const auto& ai = a.classes[i].active_set;
                const auto& aj = a.classes[j].active_set;
                bool subset = std::includes(aj.begin(), aj.end(), ai.begin(),
                                            ai.end());
                CHECK(a.leq[i][j] == subset);
            }
    }
}

TEST_CASE("axioms: arch structure of FOSD-3 and of complete indifference") {
    ArchStructure f3 = arch_structure(fosd(3));
    CHECK(f3.classes.size() == 4);

    // opposite comparisons on a one-dimensional space: the cone is the whole
    // line, a single class
    MixtureSpace s = simplex_n(2);
    MPoint d1 = delta(s, 0), d2 = delta(s, 1);
    PreorderedSpace ind = PreorderedSpace::build(s, {{d1, d2}, {d2, d1}});
    ArchStructure ai = arch_structure(ind);
    CHECK(ai.classes.size() == 1);
    CHECK(ai.minimal_class == ai.maximal_class);
    CHECK(ai.hasse.empty());
}

TEST_CASE("axioms: the top class is the lineality face") {
    for (auto& p : {pointwise(2), fosd(3), norm_cone_1()}) {
        ArchStructure a = arch_structure(p);
        const Face& top = a.classes[a.maximal_class];
        CHECK(top.ray_support.empty());
        CHECK(top.face_cone.extreme_rays().empty());
        CHECK(top.face_cone.lineality_basis() ==
              p.cone().lineality_basis());
        // everything is below the top and above the bottom
        for (std::size_t i = 0; i < a.classes.size(); ++i) {
            CHECK(a.leq[i][a.maximal_class]);
            CHECK(a.leq[a.minimal_class][i]);
        }
    }
}

TEST_CASE("axioms: weak dominance agrees with the class order") {
    testsupport::Rng rng(117);
    PreorderedSpace p = pointwise(3);
    ArchStructure a = arch_structure(p);
    const MixtureSpace& v = p.space();
    for (int t = 0; t < 60; ++t) {
        RVector base = rng.vector(3, 2, 1);
        RVector shift = base;
        for (std::size_t i = 0; i < 3; ++i)
            if (rng.next(2) == 0) shift[i] = shift[i] + rng.nonneg_rational(2, 1);
        DominancePair da = p.related(v.point(shift), v.point(base));
        RVector base2 = rng.vector(3, 2, 1);
        RVector shift2 = base2;
        for (std::size_t i = 0; i < 3; ++i)
            if (rng.next(2) == 0)
                shift2[i] = shift2[i] + rng.nonneg_rational(2, 1);
        DominancePair db = p.related(v.point(shift2), v.point(base2));
        // a dominates b exactly when a's class lies below b's class
        CHECK(p.weak_dominates(da, db) ==
              a.leq[class_of(a, p, da)][class_of(a, p, db)]);
    }
}

TEST_CASE("axioms: battery verdicts on the standard fixtures") {
    AxiomReport p1 = check_axioms(pointwise(1));
    CHECK(p1.si);
    CHECK(p1.mc);
    CHECK(p1.ar);
    CHECK(p1.sd);
    CHECK(p1.cd);
    CHECK(p1.cofinal_dim == 1);
    CHECK_FALSE(p1.ar_violation.has_value());

    AxiomReport p2 = check_axioms(pointwise(2));
    CHECK(p2.si);
    CHECK(p2.mc);
    CHECK_FALSE(p2.ar);
    CHECK(p2.sd);
    CHECK(p2.cd);
    CHECK(p2.cofinal_dim == 2);
    REQUIRE(p2.ar_violation.has_value());

    AxiomReport f3 = check_axioms(fosd(3));
    CHECK_FALSE(f3.ar);
    CHECK(f3.cofinal_dim == 2);

    AxiomReport nc = check_axioms(norm_cone_1());
    CHECK(nc.mc);
    CHECK(nc.sd);
    CHECK_FALSE(nc.ar);
    CHECK(nc.cofinal_dim == 2);
    REQUIRE(nc.sd_witness.has_value());
    CHECK(embed_difference(nc.sd_witness->x, nc.sd_witness->y) ==
          RVector{Rational(0), Rational(1)});

    // empty comparison set: a single class, Ar trivially
    MixtureSpace s = simplex_n(3);
    AxiomReport none = check_axioms(PreorderedSpace::build(s, {}));
    CHECK(none.ar);
    CHECK(none.cofinal_dim == 0);
}

TEST_CASE("axioms: the SD witness dominates every sampled related pair") {
    testsupport::Rng rng(118);
    for (auto& p : {pointwise(2), fosd(3), norm_cone_1()}) {
        AxiomReport rep = check_axioms(p);
        REQUIRE(rep.sd_witness.has_value());
        // the witness difference lies in the relative interior: its smallest
        // face is the whole cone
        RVector wd = embed_difference(rep.sd_witness->x, rep.sd_witness->y);
        CHECK(smallest_face(p.cone(), wd).active_set.empty());
        // and it weakly dominates the generators' pairs
        for (const auto& [x, y] : p.comparisons())
            CHECK(p.weak_dominates(*rep.sd_witness, p.related(x, y)));
    }
}

TEST_CASE("axioms: ar violation pairs land in distinct proper classes") {
    for (auto& p : {pointwise(2), fosd(3), norm_cone_1()}) {
        AxiomReport rep = check_axioms(p);
        REQUIRE(rep.ar_violation.has_value());
        const auto& [a, b] = *rep.ar_violation;
        auto fa = smallest_face(p.cone(), embed_difference(a.x, a.y)).active_set;
        auto fb = smallest_face(p.cone(), embed_difference(b.x, b.y)).active_set;
        CHECK(fa != fb);
        std::size_t full = p.cone().defining_inequalities().size();
        CHECK(fa.size() < full);
        CHECK(fb.size() < full);
    }
}

TEST_CASE("axioms: face budget propagates") {
    CHECK_THROWS_AS(arch_structure(pointwise(3), 4), budget_error);
    CHECK_THROWS_AS(check_axioms(pointwise(3), 4), budget_error);
}
