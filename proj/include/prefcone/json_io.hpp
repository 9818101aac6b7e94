#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "prefcone/cone.hpp"
#include "prefcone/mixture.hpp"
#include "prefcone/representation.hpp"

namespace prefcone::jsonio {

// Insertion-ordered document type: emission order is the order keys are
// written in code, which is what makes output byte-deterministic.
using Json = nlohmann::ordered_json;

// Rationals travel as strings ("p" or "p/q"); integers are accepted on
// input, floating point is rejected outright.
Json rational_json(const Rational& r);
Rational parse_rational(const Json& j);

Json vector_json(const RVector& v);
RVector parse_vector(const Json& j);

Json matrix_json(const RMatrix& m);
RMatrix parse_matrix(const Json& j);

// {"type":"simplex","outcomes":[...]} | {"type":"polytope","dim":d,
// "vertices":[[...],...]} | {"type":"vectorspace","dim":d}
Json space_json(const MixtureSpace& m);
MixtureSpace parse_space(const Json& j);

// {"dim":n,"generators":[[...],...]} or {"dim":n,"inequalities":[[...],...]
//  ,"equalities":[[...],...]} -- exactly one description.
Json cone_json(const Cone& c);
Cone parse_cone(const Json& j);

// {"linear":[...],"constant":"..."}
Json functional_json(const AffineFunctional& f);
AffineFunctional parse_functional(const MixtureSpace& m, const Json& j);

// A problem file: the space, optional named points, the comparison list,
// and optional functional sets for the representation commands.
struct Problem {
    MixtureSpace space;
    std::vector<std::pair<std::string, MPoint>> named_points;
    std::vector<std::pair<MPoint, MPoint>> comparisons;
    std::vector<AffineFunctional> functionals;
    std::vector<AffineFunctional> functionals_b;
};

Problem parse_problem(const Json& j);
Json problem_json(const Problem& p);

// A point reference: a coordinate array, the name of an entry in "points",
// or (on a simplex) an outcome label denoting its vertex distribution.
MPoint parse_point(const MixtureSpace& space,
                   const std::vector<std::pair<std::string, MPoint>>& named,
                   const Json& ref);

// Parsing wrappers that convert library errors to validation_error.
Json parse_text(const std::string& text);
Json load_json_file(const std::string& path);

// Canonical bytes: two-space indent, trailing newline, UTF-8 throughout.
std::string dump_json(const Json& j);

}  // namespace prefcone::jsonio
