#include "prefcone/cone.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "prefcone/error.hpp"

namespace prefcone {

namespace {

// primitive rows, zero rows dropped, deduplicated, sorted; sign_free rows
// (lines, equalities) are additionally sign-fixed so first nonzero > 0.
RMatrix normalize_rows(const RMatrix& rows, std::size_t dim, bool sign_free) {
    std::set<RVector, LexLess> seen;
    for (const auto& r : rows) {
        if (r.size() != dim)
            throw validation_error("cone: row dimension mismatch");
        RVector p = sign_free ? primitive_signed(r) : primitive(r);
        if (!is_zero(p)) seen.insert(std::move(p));
    }
    return RMatrix(seen.begin(), seen.end());
}

// canonical basis of span(rows): rref rows, primitive (leading entry stays
// positive because rref normalizes it to 1 first).
RMatrix canonical_subspace_basis(const RMatrix& rows, std::size_t dim) {
    RMatrix out;
    for (const auto& r : rref(rows, dim).reduced) out.push_back(primitive(r));
    return out;
}

// canonical coset representative of v modulo span(basis); basis rows must be
// in echelon order (each with a leading nonzero "pivot" entry).
RVector reduce_mod_subspace(RVector v, const RMatrix& basis) {
    for (const auto& b : basis) {
        std::size_t p = 0;
        while (p < b.size() && b[p].is_zero()) ++p;
        if (p == b.size()) continue;
        if (!v[p].is_zero()) v = sub(v, scale(b, v[p] / b[p]));
    }
    return v;
}

// ---------------------------------------------------------------------------
// Double description: minimal generating pair (lineality basis, extreme rays)
// of { x : a.x >= 0 for each constraint row a }, constraints inserted in the
// given order. Invariants maintained per step:
//  * span(B) is exactly the common kernel of the processed constraints, so
//    every processed constraint vanishes on the current lineality space;
//  * R holds one primitive representative per extreme ray of the current
//    cone modulo span(B), each carrying the set of processed constraints
//    tight at it.
// ---------------------------------------------------------------------------

struct DDRay {
    RVector v;
    std::vector<char> tight; // indexed by constraint position
};

struct GeneratorPair {
    RMatrix lineality;
    RMatrix rays;
};

GeneratorPair double_description(std::size_t dim, const RMatrix& constraints) {
    const std::size_t K = constraints.size();
    RMatrix B;
    for (std::size_t i = 0; i < dim; ++i) {
        RVector e = zero_vector(dim);
        e[i] = Rational(1);
        B.push_back(std::move(e));
    }
    std::vector<DDRay> R;

    for (std::size_t k = 0; k < K; ++k) {
        const RVector& a = constraints[k];
        if (is_zero(a)) {
            for (auto& r : R) r.tight[k] = 1;
            continue;
        }

        // does a cut the current lineality space?
        std::size_t bi = B.size();
        for (std::size_t i = 0; i < B.size(); ++i)
            if (!dot(a, B[i]).is_zero()) { bi = i; break; }

        if (bi < B.size()) {
            // Lineality step: span(B) shrinks by one; b0 (oriented to the
            // positive side) becomes a ray, everything else is projected
            // along b0 onto the hyperplane {a.x = 0}. Projections do not
            // change tightness w.r.t. earlier constraints, because those all
            // vanish on b0.
            RVector b0 = B[bi];
            if (dot(a, b0).sign() < 0) b0 = neg(b0);
            Rational d0 = dot(a, b0);

            RMatrix nb;
            for (std::size_t i = 0; i < B.size(); ++i) {
                if (i == bi) continue;
                Rational s = dot(a, B[i]);
                RVector w = s.is_zero() ? B[i] : sub(B[i], scale(b0, s / d0));
                nb.push_back(primitive(w));
            }
            for (auto& r : R) {
                Rational s = dot(a, r.v);
                if (!s.is_zero()) r.v = primitive(sub(r.v, scale(b0, s / d0)));
                r.tight[k] = 1;
            }
            DDRay nr;
            nr.v = primitive(b0);
            nr.tight.assign(K, 0);
            for (std::size_t j = 0; j < k; ++j) nr.tight[j] = 1;
            R.push_back(std::move(nr));
            B = std::move(nb);
            continue;
        }

        // Hyperplane step: a vanishes on span(B); split the rays.
        std::vector<Rational> val(R.size());
        bool has_neg = false;
        for (std::size_t i = 0; i < R.size(); ++i) {
            val[i] = dot(a, R[i].v);
            if (val[i].sign() < 0) has_neg = true;
        }
        if (!has_neg) {
            for (std::size_t i = 0; i < R.size(); ++i)
                if (val[i].is_zero()) R[i].tight[k] = 1;
            continue;
        }

        const int needed = static_cast<int>(dim) - static_cast<int>(B.size()) - 2;
        auto adjacent = [&](const DDRay& p, const DDRay& q) {
            if (needed < 0) return false;
            RMatrix common;
            for (std::size_t j = 0; j < k; ++j)
                if (p.tight[j] && q.tight[j]) common.push_back(constraints[j]);
            if (static_cast<int>(common.size()) < needed) return false;
            return static_cast<int>(rank(common, dim)) == needed;
        };

        std::vector<DDRay> nr;
        for (std::size_t i = 0; i < R.size(); ++i) {
            if (val[i].sign() < 0) continue;
            if (val[i].is_zero()) R[i].tight[k] = 1;
            nr.push_back(R[i]);
        }
        for (std::size_t i = 0; i < R.size(); ++i) {
            if (val[i].sign() <= 0) continue;
            for (std::size_t j = 0; j < R.size(); ++j) {
                if (val[j].sign() >= 0) continue;
                if (!adjacent(R[i], R[j])) continue;
                DDRay c;
                // val[i]*q - val[j]*p: a positive combination landing on the
                // hyperplane (the coefficient of p is -val[j] > 0).
                c.v = primitive(sub(scale(R[j].v, val[i]), scale(R[i].v, val[j])));
                c.tight.assign(K, 0);
                for (std::size_t t = 0; t < k; ++t)
                    c.tight[t] = R[i].tight[t] && R[j].tight[t];
                c.tight[k] = 1;
                nr.push_back(std::move(c));
            }
        }
        R = std::move(nr);
    }

    GeneratorPair out;
    out.lineality = std::move(B);
    for (auto& r : R) out.rays.push_back(std::move(r.v));
    return out;
}

struct VRep {
    RMatrix lin;  // canonical subspace basis
    RMatrix rays; // primitive, reduced modulo lin, sorted
};

VRep canonicalize_pair(std::size_t dim, const GeneratorPair& p) {
    VRep v;
    v.lin = canonical_subspace_basis(p.lineality, dim);
    std::set<RVector, LexLess> rays;
    for (const auto& r : p.rays) {
        RVector q = primitive(reduce_mod_subspace(r, v.lin));
        if (!is_zero(q)) rays.insert(std::move(q));
    }
    v.rays.assign(rays.begin(), rays.end());
    return v;
}

RMatrix plus_minus_rows(const RMatrix& lin) {
    RMatrix out;
    for (const auto& l : lin) {
        out.push_back(l);
        out.push_back(neg(l));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

struct Cone::Impl {
    std::size_t dim = 0;
    bool gen_built = false;
    RMatrix input_gens;              // gen origin
    RMatrix input_ineqs, input_eqs;  // halfspace origin

    mutable std::once_flag h_once, v_once;
    mutable RMatrix eqs, ineqs;      // canonical H-rep
    mutable RMatrix lin, rays, canon; // canonical V-rep

    void materialize_h() const {
        // V-rep of the dual: its lineality spans the valid equalities of this
        // cone, its extreme rays are the facet inequalities.
        const RMatrix& gens = gen_built ? input_gens : canon;
        VRep d = canonicalize_pair(dim, double_description(dim, gens));
        eqs = d.lin;
        ineqs = d.rays;
    }

    void materialize_v(const RMatrix& use_ineqs, const RMatrix& use_eqs) const {
        RMatrix cs = plus_minus_rows(use_eqs);
        cs.insert(cs.end(), use_ineqs.begin(), use_ineqs.end());
        VRep v = canonicalize_pair(dim, double_description(dim, cs));
        lin = v.lin;
        rays = v.rays;
        RMatrix all = plus_minus_rows(lin);
        all.insert(all.end(), rays.begin(), rays.end());
        std::sort(all.begin(), all.end(), LexLess{});
        canon = std::move(all);
    }

    void ensure_h() const {
        if (gen_built) {
            std::call_once(h_once, [this] { materialize_h(); });
        } else {
            ensure_v();
            std::call_once(h_once, [this] { materialize_h(); });
        }
    }

    void ensure_v() const {
        if (gen_built) {
            ensure_h();
            std::call_once(v_once, [this] { materialize_v(ineqs, eqs); });
        } else {
            std::call_once(v_once, [this] { materialize_v(input_ineqs, input_eqs); });
        }
    }
};

Cone Cone::from_generators(std::size_t dim, const RMatrix& gens) {
    auto impl = std::make_shared<Impl>();
    impl->dim = dim;
    impl->gen_built = true;
    impl->input_gens = normalize_rows(gens, dim, /*sign_free=*/false);
    return Cone(std::move(impl));
}

Cone Cone::from_halfspaces(std::size_t dim, const RMatrix& inequalities,
                           const RMatrix& equalities) {
    auto impl = std::make_shared<Impl>();
    impl->dim = dim;
    impl->gen_built = false;
    impl->input_ineqs = normalize_rows(inequalities, dim, /*sign_free=*/false);
    impl->input_eqs = normalize_rows(equalities, dim, /*sign_free=*/true);
    return Cone(std::move(impl));
}

std::size_t Cone::dim() const { return impl_->dim; }
bool Cone::generator_built() const { return impl_->gen_built; }

const RMatrix& Cone::generators() const {
    impl_->ensure_v();
    return impl_->canon;
}
const RMatrix& Cone::lineality_basis() const {
    impl_->ensure_v();
    return impl_->lin;
}
const RMatrix& Cone::extreme_rays() const {
    impl_->ensure_v();
    return impl_->rays;
}
const RMatrix& Cone::inequalities() const {
    impl_->ensure_h();
    return impl_->ineqs;
}
const RMatrix& Cone::equalities() const {
    impl_->ensure_h();
    return impl_->eqs;
}

const RMatrix& Cone::support_generators() const {
    if (impl_->gen_built) return impl_->input_gens;
    impl_->ensure_v();
    return impl_->canon;
}

const RMatrix& Cone::defining_inequalities() const {
    if (!impl_->gen_built) return impl_->input_ineqs;
    impl_->ensure_h();
    return impl_->ineqs;
}

const RMatrix& Cone::defining_equalities() const {
    if (!impl_->gen_built) return impl_->input_eqs;
    impl_->ensure_h();
    return impl_->eqs;
}

// ---------------------------------------------------------------------------

MemberResult member(const Cone& c, const RVector& v) {
    if (v.size() != c.dim())
        throw validation_error("member: vector dimension mismatch");
    MemberResult res;
    if (c.generator_built()) {
        ConicCertificate cert = conic_express(c.support_generators(), v);
        res.member = cert.member;
        res.support = c.support_generators();
        res.combination = std::move(cert.coefficients);
        res.farkas = std::move(cert.farkas);
        return res;
    }
    for (const auto& e : c.defining_equalities()) {
        int s = dot(e, v).sign();
        if (s == 0) continue;
        res.member = false;
        res.support = c.support_generators();
        res.farkas = s > 0 ? neg(e) : e;
        return res;
    }
    for (const auto& a : c.defining_inequalities()) {
        if (dot(a, v).sign() >= 0) continue;
        res.member = false;
        res.support = c.support_generators();
        res.farkas = a;
        return res;
    }
    ConicCertificate cert = conic_express(c.support_generators(), v);
    if (!cert.member)
        throw validation_error("member: internal inconsistency between representations");
    res.member = true;
    res.support = c.support_generators();
    res.combination = std::move(cert.coefficients);
    return res;
}

Cone dual(const Cone& c) {
    return Cone::from_halfspaces(c.dim(), c.support_generators(), {});
}

// ---------------------------------------------------------------------------

namespace {

// tight inequality indices (over c.inequalities()) for each extreme ray
std::vector<std::vector<char>> ray_tight_table(const Cone& c) {
    const RMatrix& A = c.inequalities();
    const RMatrix& rays = c.extreme_rays();
    std::vector<std::vector<char>> t(rays.size(), std::vector<char>(A.size(), 0));
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j)
            t[i][j] = dot(A[j], rays[i]).is_zero() ? 1 : 0;
    return t;
}

Face make_face(const Cone& c, std::vector<int> ray_support,
               const std::vector<std::vector<char>>& tight) {
    const std::size_t m = c.inequalities().size();
    std::vector<int> active;
    if (ray_support.empty()) {
        for (std::size_t j = 0; j < m; ++j) active.push_back(static_cast<int>(j));
    } else {
        for (std::size_t j = 0; j < m; ++j) {
            bool all = true;
            for (int i : ray_support)
                if (!tight[static_cast<std::size_t>(i)][j]) { all = false; break; }
            if (all) active.push_back(static_cast<int>(j));
        }
    }
    RMatrix gens = plus_minus_rows(c.lineality_basis());
    for (int i : ray_support) gens.push_back(c.extreme_rays()[static_cast<std::size_t>(i)]);
    return Face{std::move(active), std::move(ray_support),
                Cone::from_generators(c.dim(), gens)};
}

} // namespace

Face smallest_face(const Cone& c, const RVector& v) {
    if (!member(c, v).member)
        throw validation_error("smallest_face: vector not in cone");
    const RMatrix& A = c.inequalities();
    std::vector<char> want(A.size(), 0);
    for (std::size_t j = 0; j < A.size(); ++j)
        want[j] = dot(A[j], v).is_zero() ? 1 : 0;
    auto tight = ray_tight_table(c);
    std::vector<int> support;
    for (std::size_t i = 0; i < tight.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < A.size(); ++j)
            if (want[j] && !tight[i][j]) { ok = false; break; }
        if (ok) support.push_back(static_cast<int>(i));
    }
    return make_face(c, std::move(support), tight);
}

std::vector<Face> enumerate_faces(const Cone& c, std::size_t budget) {
    const std::size_t m = c.inequalities().size();
    auto tight = ray_tight_table(c);
    const std::size_t nrays = tight.size();

    // closed active set for a ray subset (all indices when the subset is empty)
    auto closure_of = [&](const std::vector<int>& support) {
        std::vector<int> out;
        if (support.empty()) {
            for (std::size_t j = 0; j < m; ++j) out.push_back(static_cast<int>(j));
            return out;
        }
        for (std::size_t j = 0; j < m; ++j) {
            bool all = true;
            for (int i : support)
                if (!tight[static_cast<std::size_t>(i)][j]) { all = false; break; }
            if (all) out.push_back(static_cast<int>(j));
        }
        return out;
    };

    auto support_for = [&](const std::vector<int>& active) {
        std::vector<int> out;
        for (std::size_t i = 0; i < nrays; ++i) {
            bool ok = true;
            for (int j : active)
                if (!tight[i][static_cast<std::size_t>(j)]) { ok = false; break; }
            if (ok) out.push_back(static_cast<int>(i));
        }
        return out;
    };

    std::map<std::vector<int>, std::vector<int>> seen; // active -> support
    std::vector<std::vector<int>> queue;
    {
        std::vector<int> s0 = support_for({});
        std::vector<int> a0 = closure_of(s0);
        seen.emplace(a0, s0);
        queue.push_back(a0);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> active = queue[qi];
        const std::vector<int>& support = seen.at(active);
        std::vector<char> in_active(m, 0);
        for (int j : active) in_active[static_cast<std::size_t>(j)] = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (in_active[j]) continue;
            std::vector<int> sub_support;
            for (int i : support)
                if (tight[static_cast<std::size_t>(i)][j]) sub_support.push_back(i);
            std::vector<int> sub_active = closure_of(sub_support);
            if (seen.count(sub_active)) continue;
            if (seen.size() + 1 > budget)
                throw budget_error("enumerate_faces: budget exceeded");
            seen.emplace(sub_active, sub_support);
            queue.push_back(std::move(sub_active));
        }
    }

    std::vector<std::pair<std::vector<int>, std::vector<int>>> ordered(seen.begin(), seen.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.size() != b.first.size())
                      return a.first.size() < b.first.size();
                  return a.first < b.first;
              });
    std::vector<Face> out;
    out.reserve(ordered.size());
    for (auto& [active, support] : ordered)
        out.push_back(make_face(c, support, tight));
    return out;
}

RVector relint_point(const Cone& c) {
    RVector s = zero_vector(c.dim());
    for (const auto& r : c.extreme_rays()) s = add(s, r);
    return primitive(s);
}

bool cone_equal(const Cone& a, const Cone& b) {
    if (a.dim() != b.dim())
        throw validation_error("cone_equal: dimension mismatch");
    for (const auto& g : a.support_generators())
        if (!member(b, g).member) return false;
    for (const auto& g : b.support_generators())
        if (!member(a, g).member) return false;
    return true;
}

AlphaInterval segment_cone_interval(const Cone& c, const RVector& p, const RVector& q) {
    if (p.size() != c.dim() || q.size() != c.dim())
        throw validation_error("segment_cone_interval: dimension mismatch");
    // alpha p + (1-alpha) q against row r:  r.q + alpha (r.p - r.q)
    Rational lo(0), hi(1);
    bool empty = false;
    auto clip = [&](const Rational& c0, const Rational& c1, bool equality) {
        if (empty) return;
        if (c1.is_zero()) {
            if (equality ? !c0.is_zero() : c0.sign() < 0) empty = true;
            return;
        }
        Rational bound = -c0 / c1;
        if (equality) {
            if (bound < lo || hi < bound) empty = true;
            else { lo = bound; hi = bound; }
        } else if (c1.sign() > 0) {
            if (bound > lo) lo = bound;
        } else {
            if (bound < hi) hi = bound;
        }
        if (lo > hi) empty = true;
    };
    for (const auto& e : c.defining_equalities())
        clip(dot(e, q), dot(e, p) - dot(e, q), true);
    for (const auto& a : c.defining_inequalities())
        clip(dot(a, q), dot(a, p) - dot(a, q), false);
    AlphaInterval out;
    out.empty = empty;
    if (!empty) { out.lo = lo; out.hi = hi; }
    return out;
}

} // namespace prefcone
