#include "hallsod/lp.hpp"
#include "hallsod/poly.hpp"
#include "hallsod/rational.hpp"

#include <doctest.h>

using namespace hallsod;

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(to_string(parse_rational(" 0/5 ")) == "0");
    CHECK_THROWS_AS(parse_rational("1.25"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("floor and ceil") {
    CHECK(floor_of(Rational(-3, 2)) == -2);
    CHECK(ceil_of(Rational(-3, 2)) == -1);
    CHECK(floor_of(Rational(7, 2)) == 3);
    CHECK(ceil_of(Rational(4)) == 4);
    CHECK(is_integer(Rational(8, 4)));
    CHECK_FALSE(is_integer(Rational(1, 3)));
    CHECK(to_int64(Rational(-12)) == -12);
    CHECK_THROWS(to_int64(Rational(1, 2)));
}

TEST_CASE("lp: textbook problem") {
    // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
    std::vector<std::vector<Rational>> A{{1, 2, 1, 0}, {3, 1, 0, 1}};
    std::vector<Rational> b{4, 6}, c{-1, -1, 0, 0};
    const auto res = lp::minimize(A, b, c);
    REQUIRE(res.status == lp::Status::optimal);
    CHECK(res.value == Rational(-14, 5));
    CHECK(res.x[0] == Rational(8, 5));
    CHECK(res.x[1] == Rational(6, 5));
}

TEST_CASE("lp: infeasible and unbounded") {
    std::vector<std::vector<Rational>> A{{1, 1}};
    CHECK(lp::minimize(A, {-1}, {1, 1}).status == lp::Status::infeasible);
    std::vector<std::vector<Rational>> B{{1, -1}};
    CHECK(lp::minimize(B, {0}, {-1, 0}).status == lp::Status::unbounded);
}

TEST_CASE("lp: redundant equality rows and negative right-hand side") {
    std::vector<std::vector<Rational>> A{{1, 1, 0}, {2, 2, 0}, {-1, 0, -1}};
    const auto res = lp::minimize(A, {2, 4, -3}, {0, 1, 0});
    REQUIRE(res.status == lp::Status::optimal);
    CHECK(res.value == 0);
    CHECK(res.x[0] == 2);
    CHECK(res.x[2] == 1);
}

TEST_CASE("lp: degenerate vertex does not cycle") {
    // Beale's example, in equality form with slacks.
    std::vector<std::vector<Rational>> A{{Rational(1, 4), -60, Rational(-1, 25), 9, 1, 0, 0},
                                         {Rational(1, 2), -90, Rational(-1, 50), 3, 0, 1, 0},
                                         {0, 0, 1, 0, 0, 0, 1}};
    std::vector<Rational> c{Rational(-3, 4), 150, Rational(-1, 50), 6, 0, 0, 0};
    const auto res = lp::minimize(A, {0, 0, 1}, c);
    REQUIRE(res.status == lp::Status::optimal);
    CHECK(res.value == Rational(-1, 20));
}

TEST_CASE("poly arithmetic") {
    const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    const Poly one = Poly::constant(2, 1);
    const Poly p = (x + y) * (x - y);
    CHECK(p == x.pow(2) - y.pow(2));
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in(1) == 2);
    CHECK(p.eval({3, 1}) == 8);
    CHECK((x + one).pow(3).eval({Rational(1, 2), 0}) == Rational(27, 8));
    CHECK((p - p).is_zero());
    CHECK(p.to_string({"a", "b"}) == "a^2 - b^2");
    CHECK(p.renamed({1, 0}, 2) == y.pow(2) - x.pow(2));
    CHECK(p.compose({x + one, y}).eval({0, 0}) == 1);
}
