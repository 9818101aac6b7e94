#pragma once

// Shared fixture builders for the model-layer tests.  These construct the
// standard spaces and orders inline (not via the corpus module) so that
// corpus tests retain an independent reference.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "prefcone/mixture.hpp"
#include "prefcone/preorder.hpp"

namespace testsupport {

inline prefcone::MixtureSpace simplex_n(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back("d" + std::to_string(i));
    return prefcone::MixtureSpace::simplex(labels);
}

inline prefcone::MPoint delta(const prefcone::MixtureSpace& s, std::size_t i) {
    prefcone::RVector c = prefcone::zero_vector(s.coordinate_dim());
    c[i] = prefcone::Rational(1);
    return s.point(c);
}

inline prefcone::MPoint random_simplex_point(Rng& rng,
                                             const prefcone::MixtureSpace& s) {
    prefcone::RVector c(s.coordinate_dim());
    prefcone::Rational sum(0);
    for (auto& v : c) {
        v = rng.nonneg_rational(3, 2);
        sum += v;
    }
    if (sum.is_zero()) {
        c[0] = prefcone::Rational(1);
        sum = prefcone::Rational(1);
    }
    for (auto& v : c) v = v / sum;
    return s.point(c);
}

// First-order stochastic dominance on n ordered outcomes: d_{i+1} >= d_i.
inline prefcone::PreorderedSpace fosd(std::size_t n) {
    prefcone::MixtureSpace s = simplex_n(n);
    std::vector<std::pair<prefcone::MPoint, prefcone::MPoint>> cmp;
    for (std::size_t i = 0; i + 1 < n; ++i)
        cmp.emplace_back(delta(s, i + 1), delta(s, i));
    return prefcone::PreorderedSpace::build(s, std::move(cmp));
}

// The 1-norm cone order on the plane: (x, t) >= 0 iff |x| <= t, generated
// by (1,1) >= 0 and (-1,1) >= 0.
inline prefcone::PreorderedSpace norm_cone_1() {
    prefcone::MixtureSpace v = prefcone::MixtureSpace::vectorspace(2);
    prefcone::MPoint origin = v.point(prefcone::zero_vector(2));
    using prefcone::Rational;
    return prefcone::PreorderedSpace::build(
        v, {{v.point({Rational(1), Rational(1)}), origin},
            {v.point({Rational(-1), Rational(1)}), origin}});
}

// Componentwise order on vectorspace(n): e_i >= 0 for each coordinate.
inline prefcone::PreorderedSpace pointwise(std::size_t n) {
    prefcone::MixtureSpace v = prefcone::MixtureSpace::vectorspace(n);
    prefcone::MPoint origin = v.point(prefcone::zero_vector(n));
    std::vector<std::pair<prefcone::MPoint, prefcone::MPoint>> cmp;
    for (std::size_t i = 0; i < n; ++i) {
        prefcone::RVector e = prefcone::zero_vector(n);
        e[i] = prefcone::Rational(1);
        cmp.emplace_back(v.point(e), origin);
    }
    return prefcone::PreorderedSpace::build(v, std::move(cmp));
}

}  // namespace testsupport
