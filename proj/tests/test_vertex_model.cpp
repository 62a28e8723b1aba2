#include <doctest.h>

#include "elnet/random.hpp"
#include "elnet/vertex_model.hpp"

using namespace elnet;

TEST_CASE("local operators") {
    CHECK(local_operator(OpKind::phi, Rational(1)) == QMatrix{{1, 2}, {0, -1}});
    CHECK(local_operator(OpKind::psi, Rational(1)) == QMatrix{{-1, 0}, {2, 1}});
    CHECK(local_operator(OpKind::psi, Rational(1)) == local_operator(OpKind::phi, Rational(-1)));
    CHECK(local_operator(OpKind::lusztig, Rational(5)) == QMatrix{{1, 5}, {0, 1}});
    CHECK_THROWS_AS(local_operator(OpKind::psi, Rational(0)), ParameterError);
    MPoly t = MPoly::var("t");
    CHECK(local_operator(OpKind::lusztig, t) == PMatrix{{MPoly(1), t}, {MPoly(0), MPoly(1)}});
}

TEST_CASE("local Yang-Baxter maps, pinned") {
    using A = std::array<Rational, 3>;
    CHECK(local_yb_transform(YbKind::phi, 1, 1, 1) == A{1, 1, 1});
    CHECK(local_yb_transform(YbKind::phi, 1, 2, 3) == A{-1, -2, -3});
    CHECK(local_yb_transform(YbKind::electrical, 1, 2, 3) == A{1, Rational(1, 2), Rational(1, 3)});
    CHECK(local_yb_transform(YbKind::lusztig, 1, 2, 3) == A{Rational(3, 2), 4, Rational(1, 2)});
    CHECK_THROWS_AS(local_yb_transform(YbKind::lusztig, 1, 2, -1), DegeneracyError);
    auto E = [](OpKind k, const Rational& p, int i, int j) { return embed_block(local_operator(k, p), i, j, 3); };
    CHECK(E(OpKind::phi, 1, 1, 2) * E(OpKind::phi, 2, 1, 3) * E(OpKind::phi, 3, 2, 3) ==
          E(OpKind::phi, -3, 2, 3) * E(OpKind::phi, -2, 1, 3) * E(OpKind::phi, -1, 1, 2));
    // R_j R'_j = R'_1R'_2 + R'_2R'_3 + R'_3R'_1 at (1,2,3)
    auto r = local_yb_transform(YbKind::electrical, 1, 2, 3);
    Rational s = r[0] * r[1] + r[1] * r[2] + r[2] * r[0];
    CHECK(Rational(1) * r[0] == s);
    CHECK(Rational(2) * r[1] == s);
    CHECK(Rational(3) * r[2] == s);
}

TEST_CASE("partition function of small models") {
    auto d = wiring_from_word({}, 3);
    CHECK(partition_product(vertex_model(d, {})) == QMatrix::identity(3));
    auto m = vertex_model(wiring_from_word({1, 2, 1}, 3), {1, 1, 1});
    QMatrix want{{-1, 0, 2}, {-2, -1, 0}, {4, 2, -1}};
    CHECK(partition_product(m) == want);
    CHECK(partition_pathsum(m) == want);
    CHECK(det(want) == Rational(-1));
    auto one = vertex_model(wiring_from_word({1}, 2), {Rational(5)});
    CHECK(partition_product(one) == local_operator(OpKind::psi, Rational(5)));
    CHECK(partition_pathsum(one) == local_operator(OpKind::psi, Rational(5)));
}

TEST_CASE("pathsum equals product on random diagrams") {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + trial % 3;
        std::vector<int> w;
        for (int k = 0; k < 8; ++k) {
            auto x = w;
            x.push_back(static_cast<int>(rng.uniform(1, n - 1)));
            if (is_reduced(x, n)) w = x;
        }
        auto d = wiring_from_word(w, n);
        std::vector<Rational> p;
        for (std::size_t k = 0; k < w.size(); ++k) p.push_back(rng.nonzero());
        auto m = vertex_model(d, p);
        CHECK(partition_pathsum(m) == partition_product(m));
    }
}

TEST_CASE("braid and commutation moves") {
    auto m = vertex_model(wiring_from_word({1, 2, 1}, 3), {1, 1, 1});
    auto x = yb_mutate(m, 1);
    CHECK(x.wiring->word == std::vector<int>{2, 1, 2});
    CHECK(partition_product(x) == partition_product(m));

    // phi parameters (1,1,1) are a fixed point: black 1 becomes white -1/1
    auto d = wiring_from_word({1, 2, 1}, 3);
    d.colors = {Color::black, Color::black, Color::black};
    auto fixed = yb_mutate(vertex_model(d, {1, 1, 1}), 1);
    CHECK(model_params(fixed) == std::vector<Rational>{-1, -1, -1});
    CHECK(fixed.wiring->colors == std::vector<Color>{Color::white, Color::white, Color::white});
    auto back = yb_mutate(x, 1);
    CHECK(back.wiring == m.wiring);
    CHECK(model_params(back) == model_params(m));

    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        auto g = vertex_model(wiring_from_word({1, 2, 1}, 3), {rng.positive(), rng.positive(), rng.positive()});
        try {
            auto y = yb_mutate(g, 1);
            CHECK(partition_product(y) == partition_product(g));
            CHECK(model_params(yb_mutate(y, 1)) == model_params(g));
        } catch (const DegeneracyError&) {
        }
    }
    auto c = vertex_model(wiring_from_word({1, 3, 2}, 4), {2, 3, 5});
    auto cc = commute_move(c, 1);
    CHECK(cc.wiring->word == std::vector<int>{3, 1, 2});
    CHECK(partition_product(cc) == partition_product(c));
    CHECK_THROWS(yb_mutate(c, 1));
}

TEST_CASE("model text format") {
    auto m = vertex_model(wiring_from_word({1, 2, 1}, 3), {Rational(1, 2), -3, 7});
    auto text = format_model(m);
    auto back = parse_model(text);
    CHECK(back.wiring == m.wiring);
    CHECK(model_params(back) == model_params(m));
    CHECK(format_model(back) == text);
}
