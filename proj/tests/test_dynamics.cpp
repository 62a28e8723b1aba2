#include <doctest.h>

#include "elnet/dynamics.hpp"
#include "elnet/random.hpp"

using namespace elnet;

namespace {

Lattice make(int m, int n, std::vector<Rational> v) {
    Lattice l(m, n);
    l.x = std::move(v);
    return l;
}

}  // namespace

TEST_CASE("affine matrices") {
    CHECK(affine_matrix(1, 1) == QMatrix{{1, 0}, {2, 1}});
    CHECK(affine_matrix(Rational(4), 0) == QMatrix{{4, 0}, {1, 0}});
    std::vector<Rational> xs{2, 3}, ys{5, 7};
    CHECK(q_poly(xs, ys) == affine_product(xs, ys)(1, 0));
}

TEST_CASE("stable point") {
    std::vector<Rational> xs{2, 3}, ys{1, 1};
    Rational t = stable_point(xs, ys);
    Rational u = t;
    for (int k = 0; k < 2; ++k) u = mobius(xs[k], ys[k], u);
    CHECK(u == t);
    CHECK_THROWS_AS(stable_point({2, 3}, {2, 3}), DegeneracyError);
}

TEST_CASE("P polynomial and r action") {
    auto ones = make(2, 2, {1, 1, 1, 1});
    CHECK(p_poly(ones, 1, 1) == Rational(4));
    CHECK(act_r(ones, 1) == ones);
    CHECK(act_s(ones, 1) == ones);
    auto rows = make(2, 3, {2, 3, 5, 2, 3, 5});
    CHECK(act_r(rows, 1) == rows);
    auto cols = make(3, 2, {2, 2, 3, 3, 5, 5});
    CHECK(act_s(cols, 1) == cols);
    CHECK_THROWS_AS(act_r(ones, 2), IndexError);
}

TEST_CASE("two by two") {
    auto tb = two_by_two(2, 1, 1, 1);
    CHECK(tb.mu == Rational(7, 5));
    CHECK_FALSE(tb.parabolic);
    CHECK(two_by_two(2, 3, 2, 3).mu == Rational(1));
    CHECK(two_by_two(1, 1, 1, 1).parabolic);
    auto r = act_r(make(2, 2, {2, 1, 1, 1}), 1);
    CHECK(r == make(2, 2, {Rational(7, 5), Rational(5, 7), Rational(10, 7), Rational(7, 5)}));
}

TEST_CASE("group relations on random lattices") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        Lattice l(4, 3);
        for (auto& v : l.x) v = rng.positive();
        for (int j = 1; j <= 3; ++j) CHECK(act_r(act_r(l, j), j) == l);
        CHECK(act_r(act_r(act_r(l, 1), 2), 1) == act_r(act_r(act_r(l, 2), 1), 2));
        CHECK(act_r(act_r(l, 1), 3) == act_r(act_r(l, 3), 1));
        CHECK(act_s(act_s(act_s(l, 1), 2), 1) == act_s(act_s(act_s(l, 2), 1), 2));
        CHECK(act_r(act_s(l, 2), 2) == act_s(act_r(l, 2), 2));
    }
}

TEST_CASE("lattice text and evolve") {
    auto l = parse_lattice("2 2\n2 1\n1 1\n");
    CHECK(format_lattice(l) == "2 2\n2 1\n1 1\n");
    CHECK(evolve(l, "r1 r1") == l);
    CHECK(evolve(l, "r1") == act_r(l, 1));
    CHECK(evolve(l, "s1 r1") == act_r(act_s(l, 1), 1));
    CHECK_THROWS_AS(parse_lattice("2 2\n1 1\n"), ParseError);
    CHECK_THROWS_AS(evolve(l, "q1"), ArgumentError);
}
