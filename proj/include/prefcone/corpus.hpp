#pragma once

#include <cstddef>
#include <string>

#include "prefcone/preorder.hpp"

namespace prefcone {

// First-order stochastic dominance on n ordered outcomes d1 < ... < dn:
// the simplex over those outcomes with comparisons d_{i+1} >= d_i.
PreorderedSpace fosd_order(std::size_t n);

// Componentwise order on vectorspace(n): e_i >= 0 for every coordinate.
// Requires n >= 1.
PreorderedSpace pointwise_order(std::size_t n);

// The 1-norm cone order on vectorspace(d+1): (x, t) >= 0 iff sum|x_i| <= t,
// generated by the comparisons (+-e_i + e_{d+1}) >= 0.  Requires d >= 1.
PreorderedSpace norm_cone_order(std::size_t d);

// Product of a given preorder with an indifference factor (dim2 coordinates
// on which all points are equivalent) and an incomparability factor (dim3
// coordinates on which points relate only when equal).  Built on the vector
// space of dimension dim(p1) + dim2 + dim3 whose leading block carries p1's
// embedded comparisons; the positive cone is C1 x V2 x {0}.
PreorderedSpace product_order(const PreorderedSpace& p1, std::size_t dim2,
                              std::size_t dim3);

// The truncated Klee cone on a finite basis subset A of size n, in
// dimension n+1 (coordinates: the elements of A, then b0).  Generated by
// y_{A'} + b0 = |A'|^{-2} sum_{b in A'} e_b + e_{n+1} over the nonempty
// subsets A' of A.  b0 itself is never a member.
struct KleeTruncation {
    std::size_t n = 0;
    Cone cone;
};

// Requires n >= 1; throws budget_error past the generator budget (2^n - 1
// generators; default cap n <= 8).
KleeTruncation klee_truncation(std::size_t n, std::size_t max_n = 8);

// Verifies the coordinate-subspace identity: for every subset A'' of A,
// intersecting the cone with Span(A'' + {b0}) yields exactly the subcone
// generated by the y_{A'} + b0 with A' inside A''.
bool klee_subcone_identity(const KleeTruncation& k);

// The minimum over separating functionals f (nonnegative on the cone,
// f(b0) = -1) of max_{b in A} f(b); equals n exactly.  The constraint for
// A' = A forces the mean of f over A up to n, and f constantly n on A
// attains the bound (verified before returning).
Rational klee_separation_margin(const KleeTruncation& k);

// Lexicographic order on n coordinates: f >= g when f = g or the first
// differing coordinate of f - g is positive.  Satisfies strong independence
// but not mixture continuity for n >= 2.
struct LexOrder {
    std::size_t n = 0;

    // d = 0 or the first nonzero coordinate of d is positive
    bool positive(const RVector& d) const;
    bool geq(const RVector& f, const RVector& g) const;
    bool strictly(const RVector& f, const RVector& g) const;
};

// A half-open segment certifying the mixture-continuity failure of the
// lexicographic order: every point of (v, w] satisfies >= 0, the endpoint v
// does not.  Requires n >= 2 (the one-coordinate order is continuous).
struct LexWitness {
    std::size_t n = 0;
    RVector v;  // excluded endpoint (0, -1, 0, ...)
    RVector w;  // included endpoint (1, -1, 0, ...)
    std::string verdict;  // "not algebraically closed"
};

LexWitness lex_mc_witness(std::size_t n);

// The order on [0,1] with 1 strictly above everything else and all points
// below 1 mutually indifferent: satisfies the indifference-mixing axiom but
// neither strong independence nor the closed-alpha-set axiom.
struct HersteinFixture {
    // inputs must lie in [0,1]
    bool geq(const Rational& a, const Rational& b) const;
    bool strictly(const Rational& a, const Rational& b) const;
    bool indifferent(const Rational& a, const Rational& b) const;

    // {alpha : mix(x,y,alpha) >= mix(z,w,alpha)} at the witness inputs
    // x = y = z = 0, w = 1 is the half-open interval (0, 1].
    struct WConWitness {
        Rational x, y, z, w;
        Rational lo, hi;
        bool lo_included = false;
        bool hi_included = true;
        bool closed = false;
    };
    WConWitness wcon_witness() const;
    // membership of alpha in that alpha-set, by direct evaluation
    bool wcon_alpha_in_set(const Rational& alpha) const;

    // strong independence fails at x = 0, y = 1, z = 0, alpha = 1/2:
    // the mixtures are indifferent while x >= y is false.
    struct SIWitness {
        Rational x, y, z, alpha;
    };
    SIWitness si_witness() const;

    // indifference survives half-mixing with a common third point on the
    // grid {0, 1/4, 1/2, 3/4, 1}
    bool ind_holds_on_grid() const;
};

HersteinFixture herstein_fixture();

}  // namespace prefcone
