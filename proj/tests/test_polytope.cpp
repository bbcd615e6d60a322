#include "hallsod/polytope.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hallsod;

namespace {

int loops_of(const std::string& name) {
    return name == "jordan" ? 1 : name == "doubled-jordan" ? 2 : 3;
}

// sum over ordered pairs of slots of loops * max(0, lambda_l - lambda_m)
Rational face_norm(const Cocharacter& l, int loops) {
    Rational s = 0;
    for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = 0; b < l.size(); ++b)
            if (l[a] > l[b]) s += loops * (l[a] - l[b]);
    return s;
}

}  // namespace

TEST_CASE("r-invariant spot values") {
    const Quiver t = Quiver::builtin("tripled-jordan");
    const WPolytope P = WPolytope::of(t, DimVector::single(2));
    CHECK(r_invariant(P, parse_weight("5,-5")) == Rational(5, 3));
    CHECK(r_invariant(P, parse_weight("11/2,-11/2")) == Rational(11, 6));
    CHECK(r_invariant(P, parse_weight("3/2,-3/2")) == Rational(1, 2));
    CHECK(r_invariant(P, parse_weight("7,7")) == 0);
    CHECK(contains(P, parse_weight("3/2,-3/2"), Rational(1, 2)));
    CHECK_FALSE(contains(P, parse_weight("3,-3"), Rational(1, 2)));
    CHECK_THROWS_AS(contains(P, parse_weight("1,-1"), Rational(-1)), InputError);
    CHECK_THROWS_AS(r_invariant(P, parse_weight("1,-1,0")), InputError);
}

TEST_CASE("r-invariant agrees with the permutohedron facet formula") {
    for (const char* name : {"jordan", "doubled-jordan", "tripled-jordan"}) {
        const Quiver q = Quiver::builtin(name);
        for (int d = 1; d <= 4; ++d) {
            const DimVector dv = DimVector::single(d);
            const WPolytope P = WPolytope::of(q, dv);
            for (std::int64_t w = -2; w <= 2; ++w) {
                for (const Weight& chi : dominant_in_box(dv, w, -4, 4)) {
                    const Rational r = r_invariant(P, chi);
                    CHECK(r == oracle::subset_r(chi.coords(), loops_of(name)));
                    CHECK(r_lower_bound(P, chi) == r);
                    std::vector<Rational> rev(chi.coords().rbegin(), chi.coords().rend());
                    CHECK(r_invariant(P, Weight(dv, rev)) == r);
                }
            }
        }
    }
}

TEST_CASE("r-invariant: scaling, symmetry, axis invariance, monotone membership") {
    const Quiver t = Quiver::builtin("tripled-jordan");
    const Quiver two = Quiver::from_json(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"],["a","a"]]})", "two");
    std::vector<std::pair<Quiver, Weight>> cases;
    for (const char* s : {"5,-5", "3,1,-4", "2,2,0,-4", "7/2,0,-1", "1,0,0,-1"}) cases.push_back({t, parse_weight(s)});
    for (const char* s : {"3;-3", "2,-1;5", "1,1;-2,0", "0;4,-4"}) cases.push_back({two, parse_weight(s)});
    const Rational eps(1, 1000);
    for (const auto& [q, chi] : cases) {
        const WPolytope P = WPolytope::of(q, chi.dims());
        const Rational r = r_invariant(P, chi);
        for (const Rational s : {Rational(0), Rational(1, 3), Rational(2), Rational(7, 2)}) {
            CHECK(r_invariant(P, s * chi) == s * r);
        }
        CHECK(r_invariant(P, -chi) == r);
        for (const Rational c : {Rational(-5), Rational(1, 7), Rational(12)}) {
            CHECK(r_invariant(P, chi + c * tau(chi.dims())) == r);
        }
        CHECK(contains(P, chi, r));
        CHECK(contains(P, chi, r + 1));
        if (r > 0) {
            CHECK_FALSE(contains(P, chi, r - eps));
        }
    }
}

TEST_CASE("face cocharacter certificate") {
    const Quiver t = Quiver::builtin("tripled-jordan");
    CHECK(face_cocharacter(WPolytope::of(t, DimVector::single(2)), parse_weight("5,-5")) ==
          Cocharacter(DimVector::single(2), {-1, 1}));
    const WPolytope P3 = WPolytope::of(t, DimVector::single(3));
    for (std::int64_t c : {3, 10, 40}) {
        const Weight chi = Weight::from_integers(DimVector::single(3), {c, c, -2 * c});
        CHECK(equivalent(face_cocharacter(P3, chi), Cocharacter(DimVector::single(3), {-1, -1, 2})));
    }
    for (int d = 2; d <= 4; ++d) {
        const DimVector dv = DimVector::single(d);
        const WPolytope P = WPolytope::of(t, dv);
        for (const Weight& chi : dominant_in_box(dv, 0, -4, 4)) {
            const Rational r = r_invariant(P, chi);
            if (r == 0) {
                CHECK_THROWS_AS(face_cocharacter(P, chi), InputError);
                continue;
            }
            const Cocharacter l = face_cocharacter(P, chi);
            CHECK(l.is_antidominant());
            CHECK(-pair(l, chi) == r * face_norm(l, 3));
            // no tight class has more levels
            for (const Cocharacter& other : cochar_classes(dv)) {
                if (-pair(other, chi) == r * face_norm(other, 3)) {
                    CHECK(level_slots(other).size() <= level_slots(l).size());
                }
            }
        }
    }
    CHECK_THROWS_AS(face_cocharacter(P3, parse_weight("-1,0,1")), InputError);
}
