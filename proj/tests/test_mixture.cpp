#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "prefcone/error.hpp"
#include "prefcone/mixture.hpp"

using namespace prefcone;

namespace {

MixtureSpace simplex_n(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back("d" + std::to_string(i));
    return MixtureSpace::simplex(labels);
}

MPoint delta(const MixtureSpace& s, std::size_t i) {
    RVector c = zero_vector(s.coordinate_dim());
    c[i] = Rational(1);
    return s.point(c);
}

MPoint random_simplex_point(testsupport::Rng& rng, const MixtureSpace& s) {
    RVector c(s.coordinate_dim());
    Rational sum(0);
    for (auto& v : c) {
        v = rng.nonneg_rational(3, 2);
        sum += v;
    }
    if (sum.is_zero()) {
        c[0] = Rational(1);
        sum = Rational(1);
    }
    for (auto& v : c) v = v / sum;
    return s.point(c);
}

}  // namespace

TEST_CASE("mixture: simplex construction and embedding basis") {
    MixtureSpace s = simplex_n(3);
    CHECK(s.kind() == MixtureSpace::Kind::simplex);
    CHECK(s.coordinate_dim() == 3);
    CHECK(s.dimension() == 2);
    CHECK(s.base_point() == RVector{Rational(1), Rational(0), Rational(0)});
    REQUIRE(s.embedding_basis().size() == 2);
    CHECK(s.embedding_basis()[0] ==
          RVector{Rational(-1), Rational(1), Rational(0)});
    CHECK(s.embedding_basis()[1] ==
          RVector{Rational(-1), Rational(0), Rational(1)});

    CHECK_THROWS_AS(MixtureSpace::simplex({}), validation_error);
    CHECK_THROWS_AS(MixtureSpace::simplex({"a", "a"}), validation_error);
    CHECK_THROWS_AS(MixtureSpace::simplex({"a", ""}), validation_error);
}

TEST_CASE("mixture: dimension formulas") {
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(simplex_n(n).dimension() == n - 1);
    CHECK(MixtureSpace::vectorspace(5).dimension() == 5);
    CHECK(MixtureSpace::vectorspace(0).dimension() == 0);
    CHECK(MixtureSpace::polytope(3, {{Rational(1), Rational(2), Rational(3)}})
              .dimension() == 0);
}

TEST_CASE("mixture: point validation") {
    MixtureSpace s = simplex_n(3);
    CHECK(s.contains({Rational(1, 2), Rational(0), Rational(1, 2)}));
    CHECK_FALSE(s.contains({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    CHECK_FALSE(s.contains({Rational(3, 2), Rational(-1, 2), Rational(0)}));
    CHECK_FALSE(s.contains({Rational(1)}));
    CHECK_THROWS_AS(s.point({Rational(1), Rational(1), Rational(-1)}),
                    validation_error);
    CHECK_THROWS_AS(s.point({Rational(1)}), validation_error);

    MixtureSpace v = MixtureSpace::vectorspace(2);
    CHECK(v.contains({Rational(-7), Rational(1, 3)}));
    CHECK_FALSE(v.contains({Rational(1)}));
}

TEST_CASE("mixture: polytope membership is decided exactly") {
    // unit square
    MixtureSpace sq = MixtureSpace::polytope(
        2, {{Rational(0), Rational(0)},
            {Rational(1), Rational(0)},
            {Rational(0), Rational(1)},
            {Rational(1), Rational(1)}});
    CHECK(sq.dimension() == 2);
    CHECK(sq.contains({Rational(1, 2), Rational(1, 2)}));
    CHECK(sq.contains({Rational(1), Rational(1)}));
    CHECK_FALSE(sq.contains({Rational(2), Rational(0)}));
    CHECK_FALSE(sq.contains({Rational(1, 2), Rational(-1, 100)}));
    CHECK_THROWS_AS(sq.point({Rational(2), Rational(0)}), validation_error);

    // collinear vertices: a segment presented with a redundant middle vertex
    MixtureSpace seg = MixtureSpace::polytope(2, {{Rational(0), Rational(0)},
                                                  {Rational(2), Rational(0)},
                                                  {Rational(1), Rational(0)}});
    CHECK(seg.dimension() == 1);
    CHECK(seg.contains({Rational(3, 2), Rational(0)}));
    CHECK_FALSE(seg.contains({Rational(3, 2), Rational(1, 2)}));
    CHECK_FALSE(seg.contains({Rational(5, 2), Rational(0)}));

    CHECK_THROWS_AS(MixtureSpace::polytope(2, {}), validation_error);
    CHECK_THROWS_AS(MixtureSpace::polytope(2, {{Rational(1)}}),
                    validation_error);
}

TEST_CASE("mixture: mix arithmetic and input checking") {
    MixtureSpace s = simplex_n(3);
    MPoint d1 = delta(s, 0), d3 = delta(s, 2);
    MPoint m = mix(d1, d3, Rational(1, 2));
    CHECK(m.coords() == RVector{Rational(1, 2), Rational(0), Rational(1, 2)});
    CHECK(mix(d1, d3, Rational(1)) == d1);
    CHECK(mix(d1, d3, Rational(0)) == d3);
    CHECK(mix(d1, d1, Rational(1, 3)) == d1);

    CHECK_THROWS_AS(mix(d1, d3, Rational(-1, 10)), validation_error);
    CHECK_THROWS_AS(mix(d1, d3, Rational(11, 10)), validation_error);
    MixtureSpace other = simplex_n(3);
    CHECK(mix(other.point(d1.coords()), d3, Rational(1, 2)) == m);
    MixtureSpace notsame = MixtureSpace::vectorspace(3);
    CHECK_THROWS_AS(mix(notsame.point(d1.coords()), d3, Rational(1, 2)),
                    validation_error);
}

TEST_CASE("mixture: mixing axioms hold on random points") {
    testsupport::Rng rng(901);
    MixtureSpace s = simplex_n(4);
    for (int t = 0; t < 60; ++t) {
        MPoint x = random_simplex_point(rng, s);
        MPoint y = random_simplex_point(rng, s);
        MPoint z = random_simplex_point(rng, s);
        Rational a = rng.open01();
        Rational b = rng.open01();

        // identity and idempotence
        CHECK(mix(x, y, Rational(1)) == x);
        CHECK(mix(x, x, a) == x);
        // commutation: x a y = y (1-a) x
        CHECK(mix(x, y, a) == mix(y, x, Rational(1) - a));
        // associativity identity: (x b y) a y = x (ab) y
        CHECK(mix(mix(x, y, b), y, a) == mix(x, y, a * b));
        // cancellation in the first argument for a != 0
        if (mix(x, z, a) == mix(y, z, a)) CHECK(x == y);
    }
}

TEST_CASE("mixture: embed_difference frozen values on simplex(3)") {
    MixtureSpace s = simplex_n(3);
    MPoint d1 = delta(s, 0), d2 = delta(s, 1), d3 = delta(s, 2);
    CHECK(embed_difference(d2, d1) == RVector{Rational(1), Rational(0)});
    CHECK(embed_difference(d3, d1) == RVector{Rational(0), Rational(1)});
    CHECK(embed_difference(d3, d2) == RVector{Rational(-1), Rational(1)});
    CHECK(embed_difference(d2, d2) == RVector{Rational(0), Rational(0)});
}

TEST_CASE("mixture: embed_difference is mixture-affine") {
    testsupport::Rng rng(902);
    MixtureSpace s = simplex_n(4);
    for (int t = 0; t < 60; ++t) {
        MPoint x = random_simplex_point(rng, s);
        MPoint y = random_simplex_point(rng, s);
        MPoint z = random_simplex_point(rng, s);
        Rational a = rng.open01();
        RVector lhs = embed_difference(mix(x, y, a), z);
        RVector rhs = add(scale(embed_difference(x, z), a),
                          scale(embed_difference(y, z), Rational(1) - a));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mixture: vectorspace embedding is the identity") {
    testsupport::Rng rng(903);
    MixtureSpace v = MixtureSpace::vectorspace(3);
    for (int t = 0; t < 30; ++t) {
        RVector a = rng.vector(3), b = rng.vector(3);
        CHECK(v.embed(a, b) == sub(a, b));
    }
}

TEST_CASE("mixture: functionals evaluate affinely") {
    MixtureSpace s = simplex_n(3);
    // linear part (1,0) with constant 0 picks out the second coordinate
    AffineFunctional u =
        extend_functional(s, {Rational(1), Rational(0)}, Rational(0));
    testsupport::Rng rng(904);
    for (int t = 0; t < 40; ++t) {
        MPoint p = random_simplex_point(rng, s);
        CHECK(u.value(p) == p.coords()[1]);
    }

    // zero linear part: constant function
    AffineFunctional c =
        extend_functional(s, {Rational(0), Rational(0)}, Rational(7, 3));
    CHECK(c.value(delta(s, 0)) == Rational(7, 3));
    CHECK(c.value(delta(s, 2)) == Rational(7, 3));

    // mixture preservation on random triples
    AffineFunctional w =
        extend_functional(s, {Rational(2, 3), Rational(-5)}, Rational(1, 2));
    for (int t = 0; t < 40; ++t) {
        MPoint x = random_simplex_point(rng, s);
        MPoint y = random_simplex_point(rng, s);
        Rational a = rng.open01();
        CHECK(w.value(mix(x, y, a)) ==
              a * w.value(x) + (Rational(1) - a) * w.value(y));
    }

    CHECK_THROWS_AS(extend_functional(s, {Rational(1)}, Rational(0)),
                    validation_error);
    MixtureSpace v2 = MixtureSpace::vectorspace(2);
    CHECK_THROWS_AS(u.value(v2.point({Rational(0), Rational(0)})),
                    validation_error);
}

TEST_CASE("mixture: space equality is structural") {
    CHECK(simplex_n(3) == simplex_n(3));
    CHECK(simplex_n(3) != simplex_n(4));
    CHECK(MixtureSpace::simplex({"a", "b"}) != MixtureSpace::simplex({"b", "a"}));
    CHECK(MixtureSpace::vectorspace(2) == MixtureSpace::vectorspace(2));
    CHECK(MixtureSpace::vectorspace(2) != MixtureSpace::vectorspace(3));
    MixtureSpace p1 = MixtureSpace::polytope(1, {{Rational(0)}, {Rational(1)}});
    MixtureSpace p2 = MixtureSpace::polytope(1, {{Rational(0)}, {Rational(1)}});
    MixtureSpace p3 = MixtureSpace::polytope(1, {{Rational(1)}, {Rational(0)}});
    CHECK(p1 == p2);
    CHECK(p1 != p3);
    CHECK(p1 != MixtureSpace::vectorspace(1));
}
