#pragma once

// The polytope W = sum_beta [0, beta] + R tau_d over the nonzero weights of R(d).

#include "hallsod/quiver_weights.hpp"

#include <vector>

namespace hallsod {

struct WPolytope {
    DimVector dims;
    int slots = 0;
    std::vector<Weight> segments;  // nonzero weights of R(d), with multiplicity
    Weight axis;                   // tau_d

    // Distinct segment generators and their multiplicities.
    std::vector<Weight> generators;
    std::vector<int> multiplicity;

    // Support values <l, N^{l>0}> for every antidominant class l; they give
    // the necessary conditions -<l, x> <= r * bound used as a quick reject.
    std::vector<Cocharacter> classes;
    std::vector<Rational> class_bound;

    static WPolytope of(const Quiver& q, const DimVector& d);
};

/// x in r W, decided exactly. Throws InputError for r < 0.
bool contains(const WPolytope& P, const Weight& chi, const Rational& r);

/// Smallest r >= 0 with chi in r W. Throws InputError when chi is not in the
/// span of the segments and the axis.
Rational r_invariant(const WPolytope& P, const Weight& chi);

/// max over classes of -<l, chi> / <l, N^{l>0}>: a lower bound for the
/// r-invariant, exact for one-vertex quivers and dominant chi.
Rational r_lower_bound(const WPolytope& P, const Weight& chi);

/// <l, chi> == -r <l, N^{l>0}>.
bool on_face(const WPolytope& P, const Weight& chi, const Cocharacter& l, const Rational& r);

/// Finest antidominant class cutting out the face of r W that contains chi
/// (ties: earliest composition). Throws InputError for non-dominant chi or
/// r = 0, InvariantError when no class attains the face equality.
Cocharacter face_cocharacter(const WPolytope& P, const Weight& chi);
Cocharacter face_cocharacter(const WPolytope& P, const Weight& chi, const Rational& r);

}  // namespace hallsod
