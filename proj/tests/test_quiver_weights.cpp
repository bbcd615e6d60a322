#include "hallsod/quiver_weights.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hallsod;

namespace {

const char* kTwoVertex = R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"],["a","a"],["b","b"]]})";

std::vector<oracle::Arrow> arrows_of(const Quiver& q) {
    std::vector<oracle::Arrow> out;
    for (const Edge& e : q.edges()) out.push_back({e.source, e.target});
    return out;
}

std::vector<std::vector<Rational>> sorted_coords(const std::vector<Weight>& ws) {
    std::vector<std::vector<Rational>> out;
    for (const auto& w : ws) out.push_back(w.coords());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DimVector> small_dims(const Quiver& q) {
    std::vector<DimVector> out;
    if (q.vertex_count() == 1) {
        for (int d = 1; d <= 4; ++d) out.push_back(DimVector::single(d));
    } else {
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                if (a + b > 0) out.push_back(DimVector({a, b}));
    }
    return out;
}

std::vector<Quiver> all_quivers() {
    return {Quiver::builtin("jordan"), Quiver::builtin("doubled-jordan"), Quiver::builtin("tripled-jordan"),
            Quiver::from_json(kTwoVertex, "two")};
}

}  // namespace

TEST_CASE("builtin quivers") {
    const Quiver t = Quiver::builtin("tripled-jordan");
    CHECK(t.is_tripled_jordan());
    CHECK(t.edges().size() == 3);
    CHECK(t.has_cut());
    CHECK(t.cut_only().edges().size() == 1);
    CHECK(t.without_cut().edges().size() == 2);
    CHECK_FALSE(Quiver::builtin("jordan").is_tripled_jordan());
    CHECK_THROWS_AS(Quiver::builtin("nonsense"), InputError);
    CHECK_THROWS_AS(Quiver::from_json("{", "x"), InputError);
    CHECK_THROWS_AS(Quiver::from_json(R"({"vertices":["a"],"edges":[["a","c"]]})", "x"), InputError);
    CHECK_THROWS_AS(t.check_dims(DimVector({1, 1})), InputError);
}

TEST_CASE("weight parsing") {
    const Weight w = parse_weight("5,-5");
    CHECK(w.dims() == DimVector::single(2));
    CHECK(w[0] == 5);
    CHECK(to_string(w) == "(5,-5)");
    const Weight m = parse_weight("1,2;3/2");
    CHECK(m.dims() == DimVector({2, 1}));
    CHECK(m[2] == Rational(3, 2));
    CHECK_THROWS_AS(parse_weight("1,2", DimVector::single(3)), InputError);
    CHECK_THROWS_AS(parse_weight("1,,2"), InputError);
}

TEST_CASE("rho, nu, tau") {
    for (int d = 1; d <= 5; ++d) {
        const DimVector dv = DimVector::single(d);
        CHECK(rho(dv).total() == 0);
        CHECK(tau(dv).total() == 1);
        CHECK(rho(dv)[0] == Rational(d - 1, 2));
    }
    CHECK(rho(DimVector({2, 3})).total() == 0);
    CHECK(tau(DimVector({2, 3})).total() == 1);
}

TEST_CASE("rep weights are closed under negation for symmetric quivers") {
    for (const Quiver& q : all_quivers()) {
        for (const DimVector& d : small_dims(q)) {
            auto ws = rep_weights(q, d);
            std::vector<Weight> neg;
            for (const auto& w : ws) neg.push_back(-w);
            CHECK(sorted_coords(ws) == sorted_coords(neg));
        }
    }
}

TEST_CASE("n_lambda matches the determinant of the cotangent complex") {
    const Quiver t = Quiver::builtin("tripled-jordan");
    CHECK(n_lambda(t, DimVector::single(2), Cocharacter(DimVector::single(2), {-1, 1})) == 4);
    CHECK(n_lambda(Quiver::builtin("jordan"), DimVector::single(2), Cocharacter(DimVector::single(2), {-1, 1})) == 0);
    for (const Quiver& q : all_quivers()) {
        for (const DimVector& d : small_dims(q)) {
            for (const Cocharacter& l : cochar_classes(d)) {
                const Rational a = n_lambda(q, d, l);
                CHECK(a == oracle::det_pairing(d.entries, arrows_of(q), l.coords()));
                CHECK(a == n_lambda(q, d, -l));
            }
        }
    }
}

TEST_CASE("cocharacter classes") {
    for (int d = 1; d <= 5; ++d) {
        const DimVector dv = DimVector::single(d);
        const auto classes = cochar_classes(dv);
        CHECK(classes.size() == (1u << (d - 1)));
        for (const auto& l : classes) {
            CHECK(l.is_antidominant());
            CHECK(l.is_special());
            const auto parts = level_partition(l);
            CHECK(equivalent(l, canonical_cocharacter(dv, parts)));
        }
    }
    CHECK(compositions(DimVector({1, 1})).size() == 3);
    const Cocharacter a(DimVector::single(3), {-1, -1, 2}), b(DimVector::single(3), {-5, -5, 10});
    CHECK(equivalent(a, b));
    CHECK_FALSE(equivalent(a, Cocharacter(DimVector::single(3), {-2, 1, 1})));
}

TEST_CASE("dominant pairing is minimal over block permutations") {
    for (int d = 1; d <= 4; ++d) {
        const DimVector dv = DimVector::single(d);
        for (const Weight& chi : dominant_in_box(dv, 1, -3, 3)) {
            CHECK(is_dominant(chi));
            for (const Cocharacter& l : cochar_classes(dv)) {
                const Rational base = pair(l, chi);
                std::vector<Rational> c = chi.coords();
                std::sort(c.begin(), c.end());
                do {
                    CHECK(base <= pair(l, Weight(dv, c)));
                } while (std::next_permutation(c.begin(), c.end()));
            }
        }
    }
}

TEST_CASE("dominant weights in a box match a direct scan") {
    for (int d = 1; d <= 4; ++d) {
        for (std::int64_t w = -3; w <= 3; ++w) {
            std::vector<std::vector<std::int64_t>> expected;
            oracle::dominant(d, w, -3, 3, expected);
            CHECK(dominant_in_box(DimVector::single(d), w, -3, 3).size() == expected.size());
        }
    }
}

TEST_CASE("block decomposition and embedding") {
    const DimVector d = DimVector::single(3);
    const Weight chi = parse_weight("4,1,-5");
    const Cocharacter l(d, {-1, -1, 2});
    const auto blocks = block_decompose(chi, l);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].total() == 5);
    CHECK(blocks[1].total() == -5);
    const auto slots = level_slots(l);
    Weight back(d);
    for (std::size_t i = 0; i < blocks.size(); ++i) back += embed(blocks[i], slots[i], d);
    CHECK(back == chi);
    CHECK(restrict_to(chi, slots[1], DimVector::single(1))[0] == -5);
}

TEST_CASE("N^{lambda>0} collects positive weights") {
    const Quiver t = Quiver::builtin("tripled-jordan");
    const DimVector d = DimVector::single(2);
    const Weight n = n_pos(Cocharacter(d, {-1, 1}), rep_weights(t, d));
    CHECK(n == parse_weight("-3,3"));
}
