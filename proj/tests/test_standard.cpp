#include <doctest.h>

#include "elnet/random.hpp"
#include "elnet/standard.hpp"

using namespace elnet;

namespace {

StandardNetwork random_standard(Rng& rng, int n) {
    std::vector<Rational> g;
    for (int k = 0; k < n * (n - 1) / 2; ++k) g.push_back(rng.positive());
    return standard_network(n, g);
}

}  // namespace

TEST_CASE("mb_standard small cases") {
    Rational c(3, 2);
    auto s2 = standard_network(2, {c});
    CHECK(mb_standard(s2) == QMatrix{{-1 / c, 1 - 1 / c}, {1 + 1 / c, 1 / c}});
    auto s3 = standard_network(3, {1, 1, 1});
    CHECK(mb_standard(s3) == QMatrix{{-1, 0, 2}, {-2, -1, 0}, {4, 2, -1}});
    CHECK(mb_standard(s3) == partition_product(vertex_model(to_plane(s3))));
    CHECK_THROWS_AS(mb_standard(standard_network(3, {1, 0, 1})), ParameterError);
}

TEST_CASE("response and M_B agree through the medial pipeline") {
    Rng rng(5);
    for (int n = 2; n <= 6; ++n) {
        auto net = random_standard(rng, n);
        CHECK(partition_product(vertex_model(to_plane(net))) == mb_standard(net));
        QMatrix mb = mb_standard(net);
        for (std::size_t c = 0; c < mb.cols(); ++c) {
            Rational s;
            for (std::size_t r = 0; r < mb.rows(); ++r) s += mb(r, c);
            CHECK(s == Rational(1));
        }
    }
}

TEST_CASE("W1 at N=2") {
    Rational a(5);
    auto mr = response(to_plane(standard_network(2, {a})));
    auto w1 = build_w1(mr);
    CHECK(rank(w1) == 1);
    CHECK(row_space_equal(w1, QMatrix{{1, -1, a, -a}}));
}

TEST_CASE("conversions") {
    auto s3 = standard_network(3, {1, 1, 1});
    QMatrix mr = response(to_plane(s3));
    CHECK(mr == QMatrix{{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)},
                        {Rational(-1, 3), Rational(2, 3), Rational(-1, 3)},
                        {Rational(-1, 3), Rational(-1, 3), Rational(2, 3)}});
    CHECK(mr_from_mb(mb_standard(s3)) == mr);
    CHECK(mb_from_mr(mr) == mb_standard(s3));
    Rng rng(9);
    for (int n = 2; n <= 6; ++n) {
        auto net = random_standard(rng, n);
        QMatrix mb = mb_standard(net), mr2 = response(to_plane(net));
        CHECK(row_space_equal(build_w1(mr2), build_w2(mb)));
        CHECK(mr_from_mb(mb) == mr2);
        CHECK(mb_from_mr(mr2) == mb);
    }
}

TEST_CASE("boundary data") {
    Rng rng(2);
    auto net = random_standard(rng, 4);
    QMatrix mr = response(to_plane(net));
    std::vector<Rational> u{1, 0, 2, -1};
    auto bd = boundary_data(mr, u);
    for (int i = 0; i < 4; ++i) {
        Rational cur;
        for (int j = 0; j < 4; ++j) cur += mr(i, j) * u[j];
        CHECK(bd.I[i] == cur);
    }
    Rational run;
    for (int i = 0; i < 4; ++i) {
        run += bd.I[i];
        CHECK(bd.J[i] == run);
    }
}

TEST_CASE("inverse problem") {
    auto s3 = standard_network(3, {1, 1, 1});
    CHECK(invert_conductances(mb_standard(s3), 3) == s3);
    Rng rng(13);
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < 5; ++t) {
            auto net = random_standard(rng, n);
            CHECK(invert_conductances(mb_standard(net), n) == net);
        }
    // a matrix that is not an M_B
    QMatrix bad = QMatrix::identity(3);
    bad(0, 1) = 5;
    CHECK_THROWS(invert_conductances(bad, 3));
}

TEST_CASE("symplectic form and determinant") {
    Rng rng(4);
    for (int n = 2; n <= 6; ++n) {
        auto net = random_standard(rng, n);
        CHECK(check_symplectic(net));
        QMatrix c = cmb_standard(net), om = structured(Structured::Omega, n);
        CHECK(c.transpose() * om * c == om);
        CHECK(det(c) == Rational(1));
    }
}

TEST_CASE("Temperley-Lieb generators") {
    CHECK(tl_generator(1, 3) == QMatrix{{-1, -1, 0}, {1, 1, 0}, {0, 0, 0}});
    CHECK_THROWS_AS(tl_generator(3, 3), IndexError);
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i < n; ++i) {
            auto a = tl_generator(i, n);
            CHECK(a * a == QMatrix(n, n));
            if (i + 1 < n) {
                auto b = tl_generator(i + 1, n);
                CHECK(a * b * a == Rational(-1) * a);
                CHECK(b * a * b == Rational(-1) * b);
            }
            for (int j = i + 2; j < n; ++j) CHECK(a * tl_generator(j, n) == tl_generator(j, n) * a);
        }
}

TEST_CASE("Lusztig degeneration") {
    for (int n = 2; n <= 4; ++n) CHECK(check_lusztig_degeneration(n));
    CHECK_THROWS_AS(check_lusztig_degeneration(6), ArgumentError);
}

TEST_CASE("conductance file format") {
    auto net = standard_network(3, {Rational(1, 2), 3, Rational(-2, 7)});
    auto text = format_conductances(net);
    CHECK(parse_conductances(text) == net);
    CHECK_THROWS_AS(parse_conductances("1 2 1/0\n"), ParseError);
    CHECK_THROWS_AS(parse_conductances("1 2\n"), ParseError);
}
