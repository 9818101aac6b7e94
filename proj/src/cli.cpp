#include "prefcone/cli.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "prefcone/axioms.hpp"
#include "prefcone/corpus.hpp"
#include "prefcone/error.hpp"
#include "prefcone/feasibility.hpp"
#include "prefcone/json_io.hpp"
#include "prefcone/representation.hpp"

namespace prefcone::cli {

namespace {

using jsonio::Json;

// ---------------------------------------------------------------------------
// certificate objects
//
// Every conic certificate is a self-contained object: the ground set it
// indexes ("support"), the vector the claim is about ("target"), and either
// a nonnegative "combination" or a separating "farkas" vector.  check-cert
// re-validates any such object by plain arithmetic.

Json combination_cert(const RMatrix& support, const RVector& target,
                      const RVector& combination) {
    Json c = Json::object();
    c["verdict"] = true;
    c["support"] = jsonio::matrix_json(support);
    c["target"] = jsonio::vector_json(target);
    c["combination"] = jsonio::vector_json(combination);
    return c;
}

Json farkas_cert(const RMatrix& support, const RVector& target,
                 const RVector& farkas) {
    Json c = Json::object();
    c["verdict"] = false;
    c["support"] = jsonio::matrix_json(support);
    c["target"] = jsonio::vector_json(target);
    c["farkas"] = jsonio::vector_json(farkas);
    return c;
}

// x >= y with its certificate over the comparison differences (gamma rows)
Json comparison_cert(const PreorderedSpace& p, const MPoint& x,
                     const MPoint& y) {
    Comparison c = p.compare(x, y);
    RVector diff = embed_difference(x, y);
    return c.geq ? combination_cert(p.gamma(), diff, c.coefficients)
                 : farkas_cert(p.gamma(), diff, c.farkas);
}

Json point_json(const MPoint& x) { return jsonio::vector_json(x.coords()); }

// ---------------------------------------------------------------------------
// problem loading

struct LoadedProblem {
    jsonio::Problem file;
    PreorderedSpace pre;
};

LoadedProblem load_problem(const std::string& path) {
    jsonio::Problem f = jsonio::parse_problem(jsonio::load_json_file(path));
    PreorderedSpace pre = PreorderedSpace::build(f.space, f.comparisons);
    return LoadedProblem{std::move(f), std::move(pre)};
}

Json envelope(const char* command, const LoadedProblem& l) {
    Json r = Json::object();
    r["command"] = command;
    r["space"] = jsonio::space_json(l.file.space);
    r["generators"] = jsonio::matrix_json(l.pre.gamma());
    return r;
}

MPoint resolve_point(const LoadedProblem& l, const std::string& text) {
    Json ref = (!text.empty() && text.front() == '[') ? jsonio::parse_text(text)
                                                      : Json(text);
    return jsonio::parse_point(l.file.space, l.file.named_points, ref);
}

// ---------------------------------------------------------------------------
// alpha-interval support rows
//
// A defining row of the cone pins an endpoint of the alpha set
// { alpha : alpha p + (1 - alpha) q in C }: row . (alpha p + (1-alpha) q)
// >= 0 rearranges to a bound on alpha whose direction is the sign of
// row . (p - q).  The emitted object lets a checker confirm the row is
// valid on the cone and recompute the bound.

std::optional<Json> pin_row(const PreorderedSpace& p, const RVector& pv,
                            const RVector& qv, bool lower,
                            const Rational& bound) {
    const Cone& c = p.cone();
    RMatrix rows = c.defining_inequalities();
    for (const auto& e : c.defining_equalities()) {
        rows.push_back(e);
        rows.push_back(scale(e, Rational(-1)));
    }
    RVector d = sub(pv, qv);
    for (const auto& row : rows) {
        Rational den = dot(row, d);
        if (den.is_zero()) continue;
        bool pins_lower = den.sign() > 0;
        if (pins_lower != lower) continue;
        if (-dot(row, qv) / den != bound) continue;
        Json out = Json::object();
        out["row"] = jsonio::vector_json(row);
        out["support"] = jsonio::matrix_json(p.gamma());
        out["p"] = jsonio::vector_json(pv);
        out["q"] = jsonio::vector_json(qv);
        out["pins"] = lower ? "lower" : "upper";
        out["bound"] = jsonio::rational_json(bound);
        return out;
    }
    return std::nullopt;
}

Json require_pin(std::optional<Json> pin) {
    if (!pin) throw std::logic_error("no defining row pins the bound");
    return *std::move(pin);
}

// verdict + witness for "(a.x, a.y) weakly dominates (b.x, b.y)": a mixing
// weight with a membership certificate when it does, the row pinning the
// alpha set at 1 when it does not.
Json dominance_fragment(const PreorderedSpace& p, const DominancePair& a,
                        const DominancePair& b) {
    bool verdict = p.weak_dominates(a, b);
    Json f = Json::object();
    f["verdict"] = verdict;
    AlphaInterval iv = p.comparison_interval(a.x, b.y, a.y, b.x);
    if (iv.empty || (verdict && !(iv.lo < Rational(1))))
        throw std::logic_error("dominance interval inconsistent with verdict");
    RVector pv = embed_difference(a.x, a.y);
    RVector qv = embed_difference(b.y, b.x);
    if (verdict) {
        Rational alpha = (iv.lo + Rational(1)) / Rational(2);
        MPoint mx = mix(a.x, b.y, alpha);
        MPoint my = mix(a.y, b.x, alpha);
        Comparison c = p.compare(mx, my);
        if (!c.geq) throw std::logic_error("dominance witness not a member");
        Json w = Json::object();
        w["alpha"] = jsonio::rational_json(alpha);
        w["certificate"] = combination_cert(
            p.gamma(), embed_difference(mx, my), c.coefficients);
        f["witness"] = std::move(w);
    } else {
        f["pin"] = require_pin(pin_row(p, pv, qv, /*lower=*/true, Rational(1)));
    }
    return f;
}

// ---------------------------------------------------------------------------
// commands

Json run_query(const LoadedProblem& l, const std::string& xref,
               const std::string& yref) {
    MPoint x = resolve_point(l, xref), y = resolve_point(l, yref);
    Json r = envelope("query", l);
    r["x"] = point_json(x);
    r["y"] = point_json(y);
    Json fwd = comparison_cert(l.pre, x, y);
    Json bwd = comparison_cert(l.pre, y, x);
    bool geq = fwd["verdict"].get<bool>(), leq = bwd["verdict"].get<bool>();
    r["geq"] = std::move(fwd);
    r["leq"] = std::move(bwd);
    r["strictly"] = geq && !leq;
    r["indifferent"] = geq && leq;
    return r;
}

Json run_interval(const LoadedProblem& l, const std::string& xref,
                  const std::string& yref, const std::string& zref,
                  const std::string& wref) {
    MPoint x = resolve_point(l, xref), y = resolve_point(l, yref);
    MPoint z = resolve_point(l, zref), w = resolve_point(l, wref);
    AlphaInterval iv = l.pre.comparison_interval(x, y, z, w);
    RVector p = embed_difference(x, z), q = embed_difference(y, w);

    Json r = envelope("interval", l);
    r["x"] = point_json(x);
    r["y"] = point_json(y);
    r["z"] = point_json(z);
    r["w"] = point_json(w);
    r["p"] = jsonio::vector_json(p);
    r["q"] = jsonio::vector_json(q);
    r["empty"] = iv.empty;
    if (iv.empty) {
        // infeasibility of: alpha (p|1) + s (q|1) - sum mu_i (g_i|0) = (0|1)
        // with alpha, s, mu >= 0 -- exactly "some point of the segment lies
        // in the cone"
        std::size_t d = p.size();
        RMatrix lifted;
        RVector pl = p, ql = q;
        pl.push_back(Rational(1));
        ql.push_back(Rational(1));
        lifted.push_back(std::move(pl));
        lifted.push_back(std::move(ql));
        for (const auto& g : l.pre.gamma()) {
            RVector gl = scale(g, Rational(-1));
            gl.push_back(Rational(0));
            lifted.push_back(std::move(gl));
        }
        RVector target = zero_vector(d + 1);
        target[d] = Rational(1);
        ConicCertificate c = conic_express(lifted, target);
        if (c.member)
            throw std::logic_error("interval emptiness contradicted");
        r["infeasibility"] = farkas_cert(lifted, target, c.farkas);
        return r;
    }
    r["lo"] = jsonio::rational_json(iv.lo);
    r["hi"] = jsonio::rational_json(iv.hi);
    auto at = [&](const Rational& alpha) {
        RVector point = add(scale(p, alpha), scale(q, Rational(1) - alpha));
        ConicCertificate c = conic_express(l.pre.gamma(), point);
        if (!c.member)
            throw std::logic_error("interval endpoint not a member");
        Json cert = Json::object();
        cert["alpha"] = jsonio::rational_json(alpha);
        cert["verdict"] = true;
        cert["support"] = jsonio::matrix_json(l.pre.gamma());
        cert["target"] = jsonio::vector_json(point);
        cert["combination"] = jsonio::vector_json(c.coefficients);
        return cert;
    };
    r["at_lo"] = at(iv.lo);
    r["at_hi"] = at(iv.hi);
    if (iv.lo > Rational(0))
        r["lo_active"] = require_pin(pin_row(l.pre, p, q, true, iv.lo));
    if (iv.hi < Rational(1))
        r["hi_active"] = require_pin(pin_row(l.pre, p, q, false, iv.hi));
    return r;
}

Json run_dominance(const LoadedProblem& l, const std::string& xref,
                   const std::string& yref, const std::string& sref,
                   const std::string& tref) {
    MPoint x = resolve_point(l, xref), y = resolve_point(l, yref);
    MPoint s = resolve_point(l, sref), t = resolve_point(l, tref);
    DominancePair a = l.pre.related(x, y);
    DominancePair b = l.pre.related(s, t);
    Json r = envelope("dominance", l);
    r["x"] = point_json(x);
    r["y"] = point_json(y);
    r["s"] = point_json(s);
    r["t"] = point_json(t);
    r["xy"] = comparison_cert(l.pre, x, y);
    r["st"] = comparison_cert(l.pre, s, t);
    Json frag = dominance_fragment(l.pre, a, b);
    r["verdict"] = frag["verdict"];
    if (frag.contains("witness")) r["witness"] = frag["witness"];
    if (frag.contains("pin")) r["pin"] = frag["pin"];
    return r;
}

Json pair_json(const DominancePair& d) {
    Json out = Json::object();
    out["x"] = point_json(d.x);
    out["y"] = point_json(d.y);
    return out;
}

Json run_arch(const LoadedProblem& l, std::size_t budget) {
    ArchStructure s = arch_structure(l.pre, budget);
    Json r = envelope("arch", l);
    r["class_count"] = s.classes.size();
    Json classes = Json::array();
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
        const Face& f = s.classes[i];
        Json c = Json::object();
        c["index"] = i;
        c["active"] = f.active_set;
        c["ray_support"] = f.ray_support;
        const DominancePair& rep = s.representatives[i];
        Json rj = pair_json(rep);
        rj["difference"] = jsonio::vector_json(embed_difference(rep.x, rep.y));
        rj["certificate"] = comparison_cert(l.pre, rep.x, rep.y);
        c["representative"] = std::move(rj);
        classes.push_back(std::move(c));
    }
    r["classes"] = std::move(classes);
    Json leq = Json::array();
    for (const auto& row : s.leq) leq.push_back(row);
    r["leq"] = std::move(leq);
    Json hasse = Json::array();
    for (const auto& [lo, up] : s.hasse)
        hasse.push_back(Json::array({lo, up}));
    r["hasse"] = std::move(hasse);
    r["minimal"] = s.minimal_class;
    r["maximal"] = s.maximal_class;
    return r;
}

std::string arch_dot(const LoadedProblem& l, std::size_t budget) {
    ArchStructure s = arch_structure(l.pre, budget);
    std::ostringstream os;
    os << "digraph arch {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
        os << "  c" << i << " [label=\"" << i << ": {";
        const auto& active = s.classes[i].active_set;
        for (std::size_t j = 0; j < active.size(); ++j)
            os << (j ? "," : "") << active[j];
        os << "}\"];\n";
    }
    for (const auto& [lo, up] : s.hasse)
        os << "  c" << lo << " -> c" << up << ";\n";
    os << "}\n";
    return os.str();
}

Json run_axioms(const LoadedProblem& l, std::size_t budget) {
    AxiomReport a = check_axioms(l.pre, budget);
    Json r = envelope("axioms", l);
    r["si"] = a.si;
    r["mc"] = a.mc;
    r["ar"] = a.ar;
    r["sd"] = a.sd;
    r["cd"] = a.cd;
    r["cofinal_dim"] = a.cofinal_dim;
    if (a.sd_witness) {
        Json w = pair_json(*a.sd_witness);
        w["difference"] = jsonio::vector_json(
            embed_difference(a.sd_witness->x, a.sd_witness->y));
        w["certificate"] =
            comparison_cert(l.pre, a.sd_witness->x, a.sd_witness->y);
        r["sd_witness"] = std::move(w);
    }
    if (a.ar_violation) {
        const auto& [pa, pb] = *a.ar_violation;
        Json v = Json::object();
        v["a"] = pair_json(pa);
        v["b"] = pair_json(pb);
        v["a_over_b"] = dominance_fragment(l.pre, pa, pb);
        v["b_over_a"] = dominance_fragment(l.pre, pb, pa);
        r["ar_violation"] = std::move(v);
    }
    return r;
}

Json functionals_json(const std::vector<AffineFunctional>& fs) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(jsonio::functional_json(f));
    return out;
}

Json run_represent(const LoadedProblem& l) {
    MultiRep rep = synthesize(l.pre);
    Json r = envelope("represent", l);
    r["count"] = rep.functionals().size();
    r["functionals"] = functionals_json(rep.functionals());
    r["verified"] = verify(l.pre, rep).ok;
    return r;
}

const std::vector<AffineFunctional>& require_functionals(
    const LoadedProblem& l, const char* command) {
    if (l.file.functionals.empty())
        throw validation_error(std::string(command) +
                               " needs a \"functionals\" array in the problem");
    return l.file.functionals;
}

Json run_verify(const LoadedProblem& l) {
    MultiRep rep(require_functionals(l, "verify-rep"));
    VerifyResult v = verify(l.pre, rep);
    Json r = envelope("verify-rep", l);
    r["count"] = rep.functionals().size();
    r["ok"] = v.ok;
    if (v.violated) {
        const auto& [pair, index] = *v.violated;
        const RVector& linear = rep.functionals()[index].linear();
        RVector diff = embed_difference(pair.x, pair.y);
        Json w = pair_json(pair);
        w["functional_index"] = index;
        w["linear"] = jsonio::vector_json(linear);
        w["difference"] = jsonio::vector_json(diff);
        w["gap"] = jsonio::rational_json(dot(linear, diff));
        w["expect_sign"] = -1;
        r["violated"] = std::move(w);
    }
    if (v.unrelated) {
        const auto& [px, py] = *v.unrelated;
        RVector diff = embed_difference(px, py);
        Json w = Json::object();
        w["x"] = point_json(px);
        w["y"] = point_json(py);
        w["difference"] = jsonio::vector_json(diff);
        w["geq"] = comparison_cert(l.pre, px, py);
        Json gaps = Json::array();
        for (const auto& f : rep.functionals())
            gaps.push_back(jsonio::rational_json(dot(f.linear(), diff)));
        w["functional_gaps"] = std::move(gaps);
        r["unrelated"] = std::move(w);
    }
    return r;
}

Json run_minimize(const LoadedProblem& l) {
    MultiRep input(require_functionals(l, "minimize-rep"));
    MultiRep minimal = minimize(l.pre, input);
    // the kept functionals are an in-order subsequence of the input
    std::vector<std::size_t> kept;
    std::size_t pos = 0;
    const auto& in = input.functionals();
    const auto& out = minimal.functionals();
    for (std::size_t i = 0; i < in.size() && pos < out.size(); ++i)
        if (in[i].linear() == out[pos].linear() &&
            in[i].constant() == out[pos].constant()) {
            kept.push_back(i);
            ++pos;
        }
    if (pos != out.size())
        throw std::logic_error("minimized family is not a subsequence");
    RMatrix kept_linears;
    for (const auto& f : out) kept_linears.push_back(f.linear());

    Json r = envelope("minimize-rep", l);
    r["input_count"] = in.size();
    r["kept_indices"] = kept;
    r["functionals"] = functionals_json(out);
    Json dropped = Json::array();
    for (std::size_t i = 0, k = 0; i < in.size(); ++i) {
        if (k < kept.size() && kept[k] == i) {
            ++k;
            continue;
        }
        ConicCertificate c = conic_express(kept_linears, in[i].linear());
        if (!c.member)
            throw std::logic_error("dropped functional not spanned");
        Json d = combination_cert(kept_linears, in[i].linear(),
                                  c.coefficients);
        d["index"] = i;
        dropped.push_back(std::move(d));
    }
    r["dropped"] = std::move(dropped);
    return r;
}

Json run_strict(const LoadedProblem& l) {
    AffineFunctional u = strict_functional(l.pre);
    StrictFamily fam = strict_family(l.pre);
    Json r = envelope("strict", l);
    r["strict_functional"] = jsonio::functional_json(u);
    Json family = Json::object();
    family["base"] = jsonio::functional_json(fam.base_strict);
    family["amplifiers"] = functionals_json(fam.amplifiers.functionals());
    r["family"] = std::move(family);

    // the strict functional is a positive combination of every amplifier,
    // which places it in the relative interior of the dual cone; reproduce
    // the construction's weights so the combination can be re-checked
    std::size_t d = l.file.space.dimension();
    RMatrix amp_linears;
    RVector weights;
    Rational weight(1, 2);
    std::size_t index = 1;
    for (const auto& f : fam.amplifiers.functionals()) {
        const RVector& linear = f.linear();
        Rational bound(1);
        std::size_t limit = index < d ? index : d;
        for (std::size_t j = 0; j < limit; ++j)
            bound = max(bound, linear[j].abs());
        amp_linears.push_back(linear);
        weights.push_back(weight / bound);
        weight = weight / Rational(2);
        ++index;
    }
    if (!check_combination(amp_linears, u.linear(), weights))
        throw std::logic_error("strict weights do not recombine");
    Json cert = combination_cert(amp_linears, u.linear(), weights);
    cert["positive"] = true;
    r["positivity"] = std::move(cert);
    return r;
}

RMatrix lifted_rows(const MultiRep& rep, std::size_t d) {
    RMatrix rows;
    for (const auto& f : rep.functionals()) {
        RVector row = f.linear();
        row.push_back(f.constant());
        rows.push_back(std::move(row));
    }
    RVector up = zero_vector(d + 1), down = zero_vector(d + 1);
    up[d] = Rational(1);
    down[d] = Rational(-1);
    rows.push_back(std::move(up));
    rows.push_back(std::move(down));
    return rows;
}

Json run_same(const LoadedProblem& l) {
    MultiRep a(require_functionals(l, "same-rep"));
    if (l.file.functionals_b.empty())
        throw validation_error(
            "same-rep needs a \"functionals_b\" array in the problem");
    MultiRep b(l.file.functionals_b);
    bool same = same_preorder(l.file.space, a, b);

    std::size_t d = l.file.space.dimension();
    RMatrix la = lifted_rows(a, d), lb = lifted_rows(b, d);
    Json r = envelope("same-rep", l);
    r["same"] = same;
    r["lifted_a"] = jsonio::matrix_json(la);
    r["lifted_b"] = jsonio::matrix_json(lb);
    auto cross = [](const RMatrix& rows, const RMatrix& other)
        -> std::pair<Json, std::optional<Json>> {
        Json combos = Json::array();
        for (const auto& row : rows) {
            ConicCertificate c = conic_express(other, row);
            if (!c.member)
                return {std::move(combos),
                        farkas_cert(other, row, c.farkas)};
            combos.push_back(combination_cert(other, row, c.coefficients));
        }
        return {std::move(combos), std::nullopt};
    };
    auto [a_in_b, a_fail] = cross(la, lb);
    if (a_fail) {
        if (same) throw std::logic_error("equal cones with a failing row");
        Json w = Json::object();
        w["from"] = "a";
        w["certificate"] = *std::move(a_fail);
        r["witness"] = std::move(w);
        return r;
    }
    auto [b_in_a, b_fail] = cross(lb, la);
    if (b_fail) {
        if (same) throw std::logic_error("equal cones with a failing row");
        Json w = Json::object();
        w["from"] = "b";
        w["certificate"] = *std::move(b_fail);
        r["witness"] = std::move(w);
        return r;
    }
    if (!same) throw std::logic_error("distinct cones with no failing row");
    r["a_in_b"] = std::move(a_in_b);
    r["b_in_a"] = std::move(b_in_a);
    return r;
}

// ---------------------------------------------------------------------------
// fixtures

std::size_t fixture_param(const std::vector<long>& params, std::size_t i,
                          std::size_t fallback) {
    if (i >= params.size()) return fallback;
    if (params[i] < 0)
        throw validation_error("fixture parameters must be nonnegative");
    return static_cast<std::size_t>(params[i]);
}

Json problem_of(const PreorderedSpace& p) {
    jsonio::Problem file{p.space(), {}, p.comparisons(), {}, {}};
    return jsonio::problem_json(file);
}

Json run_fixture(const std::string& name, const std::vector<long>& params) {
    if (name == "fosd") return problem_of(fosd_order(fixture_param(params, 0, 3)));
    if (name == "pointwise")
        return problem_of(pointwise_order(fixture_param(params, 0, 2)));
    if (name == "norm_cone")
        return problem_of(norm_cone_order(fixture_param(params, 0, 1)));
    if (name == "product") {
        PreorderedSpace factor = fosd_order(fixture_param(params, 0, 3));
        return problem_of(product_order(factor, fixture_param(params, 1, 1),
                                        fixture_param(params, 2, 1)));
    }
    if (name == "klee") {
        std::size_t n = fixture_param(params, 0, 2);
        KleeTruncation k = klee_truncation(n);
        RVector b0 = zero_vector(n + 1);
        b0[n] = Rational(1);
        MemberResult m = member(k.cone, b0);
        if (m.member) throw std::logic_error("b0 claims membership");
        Json r = Json::object();
        r["command"] = "fixture";
        r["fixture"] = "klee";
        r["n"] = n;
        Json cone = Json::object();
        cone["dim"] = n + 1;
        cone["generators"] = jsonio::matrix_json(k.cone.support_generators());
        r["cone"] = std::move(cone);
        r["b0"] = jsonio::vector_json(b0);
        r["b0_excluded"] = farkas_cert(m.support, b0, m.farkas);
        r["margin"] = jsonio::rational_json(klee_separation_margin(k));
        if (n <= 5) r["subcone_identity"] = klee_subcone_identity(k);
        return r;
    }
    if (name == "lex") {
        std::size_t n = fixture_param(params, 0, 2);
        LexWitness w = lex_mc_witness(n);
        LexOrder lex{n};
        bool segment_ok = true;
        for (int k = 1; k <= 16; ++k) {
            Rational a(k, 16);
            if (!lex.positive(
                    add(scale(w.w, a), scale(w.v, Rational(1) - a))))
                segment_ok = false;
        }
        // strong independence on a deterministic grid of triples
        bool si_ok = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    RVector f = zero_vector(n), g = zero_vector(n),
                            h = zero_vector(n);
                    f[0] = Rational(i - 1);
                    f[1] = Rational(j - 1);
                    g[0] = Rational(j - 1);
                    g[1] = Rational(k - 1);
                    h[0] = Rational(k - 1);
                    h[1] = Rational(i - 1);
                    for (const Rational& a : {Rational(1, 4), Rational(1, 2)}) {
                        RVector mf = add(scale(f, a), scale(h, Rational(1) - a));
                        RVector mg = add(scale(g, a), scale(h, Rational(1) - a));
                        if (lex.geq(f, g) != lex.geq(mf, mg)) si_ok = false;
                    }
                }
        Json r = Json::object();
        r["command"] = "fixture";
        r["fixture"] = "lex";
        r["n"] = n;
        r["v"] = jsonio::vector_json(w.v);
        r["w"] = jsonio::vector_json(w.w);
        r["verdict"] = w.verdict;
        Json checks = Json::object();
        checks["endpoint_in_cone"] = lex.positive(w.v);
        checks["segment_grid_in_cone"] = segment_ok;
        checks["si_grid"] = si_ok;
        r["checks"] = std::move(checks);
        return r;
    }
    if (name == "herstein") {
        HersteinFixture h = herstein_fixture();
        HersteinFixture::WConWitness wc = h.wcon_witness();
        bool grid_agrees = true;
        for (int k = 0; k <= 8; ++k) {
            Rational a(k, 8);
            bool inside = (a > wc.lo && a < wc.hi) ||
                          (a == wc.lo && wc.lo_included) ||
                          (a == wc.hi && wc.hi_included);
            if (h.wcon_alpha_in_set(a) != inside) grid_agrees = false;
        }
        HersteinFixture::SIWitness si = h.si_witness();
        Rational mx = si.alpha * si.x + (Rational(1) - si.alpha) * si.z;
        Rational my = si.alpha * si.y + (Rational(1) - si.alpha) * si.z;
        Json r = Json::object();
        r["command"] = "fixture";
        r["fixture"] = "herstein";
        Json wj = Json::object();
        wj["x"] = jsonio::rational_json(wc.x);
        wj["y"] = jsonio::rational_json(wc.y);
        wj["z"] = jsonio::rational_json(wc.z);
        wj["w"] = jsonio::rational_json(wc.w);
        wj["lo"] = jsonio::rational_json(wc.lo);
        wj["hi"] = jsonio::rational_json(wc.hi);
        wj["lo_included"] = wc.lo_included;
        wj["hi_included"] = wc.hi_included;
        wj["closed"] = wc.closed;
        wj["grid_agrees"] = grid_agrees;
        r["wcon"] = std::move(wj);
        Json sj = Json::object();
        sj["x"] = jsonio::rational_json(si.x);
        sj["y"] = jsonio::rational_json(si.y);
        sj["z"] = jsonio::rational_json(si.z);
        sj["alpha"] = jsonio::rational_json(si.alpha);
        sj["mix_x"] = jsonio::rational_json(mx);
        sj["mix_y"] = jsonio::rational_json(my);
        sj["violated"] = !h.geq(si.x, si.y) && h.indifferent(mx, my);
        r["si"] = std::move(sj);
        r["ind_grid"] = h.ind_holds_on_grid();
        return r;
    }
    throw validation_error("unknown fixture \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// certificate re-validation
//
// Walks a previously emitted report and re-checks every certificate object
// by plain arithmetic: nonnegative combinations, Farkas separations,
// pinning rows, and linear gap identities.  Engine verdicts themselves are
// reproducible by re-running the original command.

struct CheckTally {
    int checked = 0;
    std::vector<std::string> failures;
};

void check_node(const Json& node, const std::string& path, CheckTally& tally) {
    if (node.is_object()) {
        auto fail = [&](bool ok) {
            ++tally.checked;
            if (!ok) tally.failures.push_back(path.empty() ? "/" : path);
        };
        try {
            if (node.contains("support") && node.contains("target") &&
                node.contains("combination")) {
                RMatrix s = jsonio::parse_matrix(node.at("support"));
                RVector t = jsonio::parse_vector(node.at("target"));
                RVector c = jsonio::parse_vector(node.at("combination"));
                bool ok = check_combination(s, t, c);
                if (ok && node.value("positive", false))
                    for (const auto& x : c)
                        if (!(x > Rational(0))) ok = false;
                fail(ok);
            } else if (node.contains("support") && node.contains("target") &&
                       node.contains("farkas")) {
                RMatrix s = jsonio::parse_matrix(node.at("support"));
                RVector t = jsonio::parse_vector(node.at("target"));
                RVector f = jsonio::parse_vector(node.at("farkas"));
                fail(check_farkas(s, t, f));
            } else if (node.contains("row") && node.contains("support") &&
                       node.contains("p") && node.contains("q") &&
                       node.contains("pins") && node.contains("bound")) {
                RVector row = jsonio::parse_vector(node.at("row"));
                RMatrix s = jsonio::parse_matrix(node.at("support"));
                RVector p = jsonio::parse_vector(node.at("p"));
                RVector q = jsonio::parse_vector(node.at("q"));
                Rational bound = jsonio::parse_rational(node.at("bound"));
                std::string pins = node.at("pins").get<std::string>();
                bool ok = true;
                for (const auto& g : s)
                    if (dot(row, g).sign() < 0) ok = false;
                Rational den = dot(row, sub(p, q));
                if (den.is_zero())
                    ok = false;
                else {
                    ok = ok && pins == (den.sign() > 0 ? "lower" : "upper");
                    ok = ok && -dot(row, q) / den == bound;
                }
                fail(ok);
            } else if (node.contains("linear") && node.contains("difference") &&
                       node.contains("gap")) {
                RVector linear = jsonio::parse_vector(node.at("linear"));
                RVector diff = jsonio::parse_vector(node.at("difference"));
                Rational gap = jsonio::parse_rational(node.at("gap"));
                bool ok = dot(linear, diff) == gap;
                if (ok && node.contains("expect_sign"))
                    ok = gap.sign() == node.at("expect_sign").get<int>();
                fail(ok);
            }
        } catch (const validation_error&) {
            tally.failures.push_back(path.empty() ? "/" : path);
        }
        for (const auto& [key, value] : node.items())
            check_node(value, path + "/" + key, tally);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& e : node)
            check_node(e, path + "/" + std::to_string(i++), tally);
    }
}

std::pair<Json, int> run_check(const std::string& path) {
    Json doc = jsonio::load_json_file(path);
    CheckTally tally;
    check_node(doc, "", tally);
    Json r = Json::object();
    r["command"] = "check-cert";
    r["checked"] = tally.checked;
    r["ok"] = tally.failures.empty();
    if (!tally.failures.empty()) r["failures"] = tally.failures;
    return {std::move(r), tally.failures.empty() ? 0 : 2};
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact analyses of finitely generated mixture preorders"};
    app.name("prefcone");
    app.require_subcommand(1);

    std::string input, xref, yref, zref, wref, sref, tref;
    std::size_t face_budget = 10000;
    bool dot_flag = false;
    std::string fixture_name;
    std::vector<long> fixture_params;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "problem file (JSON)")->required();
    };
    CLI::App* query = app.add_subcommand("query", "compare two points");
    add_input(query);
    query->add_option("--x", xref, "left point")->required();
    query->add_option("--y", yref, "right point")->required();

    CLI::App* interval = app.add_subcommand(
        "interval", "alpha set of mix(x,y,a) >= mix(z,w,a)");
    add_input(interval);
    interval->add_option("--x", xref)->required();
    interval->add_option("--y", yref)->required();
    interval->add_option("--z", zref)->required();
    interval->add_option("--w", wref)->required();

    CLI::App* dominance = app.add_subcommand(
        "dominance", "does (x,y) weakly dominate (s,t)?");
    add_input(dominance);
    dominance->add_option("--x", xref)->required();
    dominance->add_option("--y", yref)->required();
    dominance->add_option("--s", sref)->required();
    dominance->add_option("--t", tref)->required();

    CLI::App* arch = app.add_subcommand(
        "arch", "Archimedean classes and their order");
    add_input(arch);
    arch->add_option("--face-budget", face_budget, "face enumeration cap");
    arch->add_flag("--dot", dot_flag, "emit a DOT digraph instead of JSON");

    CLI::App* axioms = app.add_subcommand("axioms", "axiom battery");
    add_input(axioms);
    axioms->add_option("--face-budget", face_budget, "face enumeration cap");

    CLI::App* represent =
        app.add_subcommand("represent", "synthesize a multi-representation");
    add_input(represent);

    CLI::App* verify_rep = app.add_subcommand(
        "verify-rep", "check the problem's functionals represent the order");
    add_input(verify_rep);

    CLI::App* minimize_rep = app.add_subcommand(
        "minimize-rep", "drop redundant functionals from the problem's family");
    add_input(minimize_rep);

    CLI::App* strict = app.add_subcommand(
        "strict", "strict functional and strict family");
    add_input(strict);

    CLI::App* same_rep = app.add_subcommand(
        "same-rep", "do \"functionals\" and \"functionals_b\" represent the "
                    "same order?");
    add_input(same_rep);

    CLI::App* fixture =
        app.add_subcommand("fixture", "materialize a named fixture");
    fixture->add_option("name", fixture_name, "fixture name")->required();
    fixture->add_option("params", fixture_params, "integer parameters");

    CLI::App* check_cert =
        app.add_subcommand("check-cert", "re-validate report certificates");
    check_cert->group("");  // hidden
    add_input(check_cert);

    RunResult result;
    std::vector<std::string> argv_store;
    argv_store.push_back("prefcone");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (fixture->parsed()) {
            result.out = jsonio::dump_json(run_fixture(fixture_name,
                                                       fixture_params));
        } else if (check_cert->parsed()) {
            auto [report, code] = run_check(input);
            result.out = jsonio::dump_json(report);
            result.exit_code = code;
        } else if (arch->parsed() && dot_flag) {
            result.out = arch_dot(load_problem(input), face_budget);
        } else {
            LoadedProblem l = load_problem(input);
            Json report;
            if (query->parsed())
                report = run_query(l, xref, yref);
            else if (interval->parsed())
                report = run_interval(l, xref, yref, zref, wref);
            else if (dominance->parsed())
                report = run_dominance(l, xref, yref, sref, tref);
            else if (arch->parsed())
                report = run_arch(l, face_budget);
            else if (axioms->parsed())
                report = run_axioms(l, face_budget);
            else if (represent->parsed())
                report = run_represent(l);
            else if (verify_rep->parsed())
                report = run_verify(l);
            else if (minimize_rep->parsed())
                report = run_minimize(l);
            else if (strict->parsed())
                report = run_strict(l);
            else if (same_rep->parsed())
                report = run_same(l);
            result.out = jsonio::dump_json(report);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            result.out = app.help();
            return result;
        }
        result.err = std::string("usage: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const budget_error& e) {
        result.err = std::string("budget: ") + e.what() + "\n";
        result.exit_code = 3;
    } catch (const validation_error& e) {
        result.err = std::string("validation: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const std::exception& e) {
        result.err = std::string("internal: ") + e.what() + "\n";
        result.exit_code = 2;
    }
    return result;
}

}  // namespace prefcone::cli
