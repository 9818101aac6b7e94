#include "prefcone/json_io.hpp"

#include <fstream>
#include <sstream>

#include "prefcone/error.hpp"

namespace prefcone::jsonio {

Json rational_json(const Rational& r) { return Json(r.str()); }

Rational parse_rational(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_float())
        throw validation_error(
            "floating point is not accepted; write rationals as strings");
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<long long>()));
    throw validation_error("expected a rational as \"p/q\" string or integer");
}

Json vector_json(const RVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_json(x));
    return out;
}

RVector parse_vector(const Json& j) {
    if (!j.is_array()) throw validation_error("expected an array of rationals");
    RVector out;
    for (const auto& e : j) out.push_back(parse_rational(e));
    return out;
}

Json matrix_json(const RMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(vector_json(row));
    return out;
}

RMatrix parse_matrix(const Json& j) {
    if (!j.is_array())
        throw validation_error("expected an array of rational vectors");
    RMatrix out;
    for (const auto& e : j) out.push_back(parse_vector(e));
    return out;
}

namespace {

const Json& require_field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw validation_error(std::string(what) + ": missing field \"" + key +
                               "\"");
    return j.at(key);
}

std::size_t parse_dim(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw validation_error(std::string(what) +
                               ": \"dim\" must be a nonnegative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

Json space_json(const MixtureSpace& m) {
    Json out = Json::object();
    switch (m.kind()) {
        case MixtureSpace::Kind::simplex: {
            out["type"] = "simplex";
            Json labels = Json::array();
            for (const auto& s : m.outcomes()) labels.push_back(s);
            out["outcomes"] = std::move(labels);
            break;
        }
        case MixtureSpace::Kind::polytope:
            out["type"] = "polytope";
            out["dim"] = m.coordinate_dim();
            out["vertices"] = matrix_json(m.vertices());
            break;
        case MixtureSpace::Kind::vectorspace:
            out["type"] = "vectorspace";
            out["dim"] = m.coordinate_dim();
            break;
    }
    return out;
}

MixtureSpace parse_space(const Json& j) {
    const Json& type = require_field(j, "type", "space");
    if (!type.is_string())
        throw validation_error("space: \"type\" must be a string");
    const std::string kind = type.get<std::string>();
    if (kind == "simplex") {
        const Json& outcomes = require_field(j, "outcomes", "simplex space");
        if (!outcomes.is_array())
            throw validation_error("simplex space: \"outcomes\" must be an array");
        std::vector<std::string> labels;
        for (const auto& e : outcomes) {
            if (!e.is_string())
                throw validation_error(
                    "simplex space: outcome labels must be strings");
            labels.push_back(e.get<std::string>());
        }
        return MixtureSpace::simplex(std::move(labels));
    }
    if (kind == "polytope") {
        std::size_t dim =
            parse_dim(require_field(j, "dim", "polytope space"), "polytope space");
        return MixtureSpace::polytope(
            dim, parse_matrix(require_field(j, "vertices", "polytope space")));
    }
    if (kind == "vectorspace") {
        return MixtureSpace::vectorspace(parse_dim(
            require_field(j, "dim", "vector space"), "vector space"));
    }
    throw validation_error("space: unknown type \"" + kind + "\"");
}

Json cone_json(const Cone& c) {
    Json out = Json::object();
    out["dim"] = c.dim();
    out["generators"] = matrix_json(c.generators());
    return out;
}

Cone parse_cone(const Json& j) {
    std::size_t dim = parse_dim(require_field(j, "dim", "cone"), "cone");
    const bool has_gens = j.contains("generators");
    const bool has_half = j.contains("inequalities") || j.contains("equalities");
    if (has_gens == has_half)
        throw validation_error(
            "cone: give exactly one of \"generators\" or "
            "\"inequalities\"/\"equalities\"");
    if (has_gens) return Cone::from_generators(dim, parse_matrix(j.at("generators")));
    RMatrix ineqs = j.contains("inequalities")
                        ? parse_matrix(j.at("inequalities"))
                        : RMatrix{};
    RMatrix eqs = j.contains("equalities") ? parse_matrix(j.at("equalities"))
                                           : RMatrix{};
    return Cone::from_halfspaces(dim, ineqs, eqs);
}

Json functional_json(const AffineFunctional& f) {
    Json out = Json::object();
    out["linear"] = vector_json(f.linear());
    out["constant"] = rational_json(f.constant());
    return out;
}

AffineFunctional parse_functional(const MixtureSpace& m, const Json& j) {
    RVector linear = parse_vector(require_field(j, "linear", "functional"));
    Rational constant = j.contains("constant")
                            ? parse_rational(j.at("constant"))
                            : Rational(0);
    return extend_functional(m, std::move(linear), std::move(constant));
}

MPoint parse_point(const MixtureSpace& space,
                   const std::vector<std::pair<std::string, MPoint>>& named,
                   const Json& ref) {
    if (ref.is_array()) return space.point(parse_vector(ref));
    if (ref.is_string()) {
        const std::string name = ref.get<std::string>();
        for (const auto& [label, point] : named)
            if (label == name) return point;
        if (space.kind() == MixtureSpace::Kind::simplex) {
            const auto& outcomes = space.outcomes();
            for (std::size_t i = 0; i < outcomes.size(); ++i)
                if (outcomes[i] == name) {
                    RVector coords = zero_vector(outcomes.size());
                    coords[i] = Rational(1);
                    return space.point(std::move(coords));
                }
        }
        throw validation_error("unknown point name \"" + name + "\"");
    }
    throw validation_error(
        "point reference must be a coordinate array or a name");
}

Problem parse_problem(const Json& j) {
    Problem p{parse_space(require_field(j, "space", "problem")), {}, {}, {}, {}};
    if (j.contains("points")) {
        const Json& pts = j.at("points");
        if (!pts.is_object())
            throw validation_error(
                "problem: \"points\" must be an object of name -> coordinates");
        for (const auto& [name, coords] : pts.items()) {
            if (!coords.is_array())
                throw validation_error("named point \"" + name +
                                       "\" must be a coordinate array");
            p.named_points.emplace_back(name,
                                        p.space.point(parse_vector(coords)));
        }
    }
    if (j.contains("comparisons")) {
        const Json& cmp = j.at("comparisons");
        if (!cmp.is_array())
            throw validation_error("problem: \"comparisons\" must be an array");
        for (const auto& e : cmp) {
            if (!e.is_array() || e.size() != 2)
                throw validation_error(
                    "each comparison must be a [better, worse] pair");
            p.comparisons.emplace_back(
                parse_point(p.space, p.named_points, e.at(0)),
                parse_point(p.space, p.named_points, e.at(1)));
        }
    }
    for (const char* key : {"functionals", "functionals_b"}) {
        if (!j.contains(key)) continue;
        const Json& fs = j.at(key);
        if (!fs.is_array())
            throw validation_error(std::string("problem: \"") + key +
                                   "\" must be an array");
        auto& slot =
            std::string(key) == "functionals" ? p.functionals : p.functionals_b;
        for (const auto& e : fs) slot.push_back(parse_functional(p.space, e));
    }
    return p;
}

Json problem_json(const Problem& p) {
    Json out = Json::object();
    out["space"] = space_json(p.space);
    if (!p.named_points.empty()) {
        Json pts = Json::object();
        for (const auto& [name, point] : p.named_points)
            pts[name] = vector_json(point.coords());
        out["points"] = std::move(pts);
    }
    Json cmp = Json::array();
    for (const auto& [hi, lo] : p.comparisons)
        cmp.push_back(Json::array({vector_json(hi.coords()),
                                   vector_json(lo.coords())}));
    out["comparisons"] = std::move(cmp);
    if (!p.functionals.empty()) {
        Json fs = Json::array();
        for (const auto& f : p.functionals) fs.push_back(functional_json(f));
        out["functionals"] = std::move(fs);
    }
    if (!p.functionals_b.empty()) {
        Json fs = Json::array();
        for (const auto& f : p.functionals_b) fs.push_back(functional_json(f));
        out["functionals_b"] = std::move(fs);
    }
    return out;
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw validation_error(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace prefcone::jsonio
