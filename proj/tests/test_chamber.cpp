#include <doctest.h>

#include "elnet/chamber.hpp"
#include "elnet/errors.hpp"
#include "elnet/random.hpp"

using namespace elnet;

TEST_CASE("chamber data") {
    auto h = reduced_word(4, {2, 1, 3, 2, 3, 1});
    auto d = chamber_data(h, 3);
    CHECK(d.i == 1);
    CHECK(d.j == 3);
    CHECK(d.L == Subset{2, 4});
    CHECK_THROWS(reduced_word(3, {1, 2}));
    CHECK_THROWS(reduced_word(3, {1, 1, 2}));
    CHECK(subset_str({}) == "{}");
    CHECK(subset_str({1, 3}) == "13");
    CHECK(parse_subset("13") == Subset{1, 3});
    CHECK(parse_subset("{}") == Subset{});
}

TEST_CASE("ansatz on constant data") {
    auto h = reduced_word(3, {1, 2, 1});
    ChamberVars ones;
    for (const auto& s : chamber_sets(h)) ones[s] = 1;
    CHECK(ansatz_forward(ones, h) == std::vector<Rational>{1, 1, 1});
    for (const auto& [s, v] : ansatz_inverse({1, 1, 1}, h)) CHECK(v == Rational(1));
}

TEST_CASE("ansatz roundtrips") {
    Rng rng(21);
    for (auto letters : {std::vector<int>{1, 2, 1}, std::vector<int>{2, 1, 2}, std::vector<int>{1, 2, 3, 1, 2, 1},
                         std::vector<int>{2, 1, 3, 2, 3, 1}}) {
        int n = letters.size() == 3 ? 3 : 4;
        auto h = reduced_word(n, letters);
        std::vector<Rational> chart;
        for (std::size_t k = 0; k < letters.size(); ++k) chart.push_back(rng.nonzero());
        CHECK(ansatz_forward(ansatz_inverse(chart, h), h) == chart);
        ChamberVars mv;
        for (const auto& s : chamber_sets(h)) mv[s] = is_normalized(s) ? Rational(1) : rng.nonzero();
        CHECK(ansatz_inverse(ansatz_forward(mv, h), h) == mv);
    }
}

TEST_CASE("exchange relations on glued charts") {
    Rng rng(8);
    auto h3 = reduced_word(3, {1, 2, 1});
    for (int t = 0; t < 20; ++t) {
        Chart c{h3, {rng.positive(), rng.positive(), rng.positive()}};
        try {
            auto mv = glued_vars(c, Gluing::phi_check);
            // M2 M13 = M3 M12 + M1 M23 + M{} M123
            CHECK(mv.at({2}) * mv.at({1, 3}) ==
                  mv.at({3}) * mv.at({1, 2}) + mv.at({1}) * mv.at({2, 3}) + mv.at({}) * mv.at({1, 2, 3}));
            CHECK(check_relation(mv, Relation::four_term, 1, 2, 3, {}));
        } catch (const DegeneracyError&) {
        }
        auto lv = glued_vars(c, Gluing::lusztig);
        CHECK(check_relation(lv, Relation::three_term, 1, 2, 3, {}));
        CHECK_FALSE(check_relation(lv, Relation::four_term, 1, 2, 3, {}));
    }
    auto h4 = reduced_word(4, {1, 2, 3, 1, 2, 1});
    Chart c4{h4, {2, 3, 5, 7, 11, 13}};
    auto lv = glued_vars(c4, Gluing::lusztig);
    CHECK(check_relation(lv, Relation::three_term, 1, 2, 3, {}));
    CHECK(check_relation(lv, Relation::three_term, 2, 3, 4, {}));
    CHECK(check_relation(lv, Relation::three_term, 2, 3, 4, {1}));
}

TEST_CASE("chart moves") {
    auto h = reduced_word(3, {1, 2, 1});
    Chart c{h, {1, 2, 3}};
    auto b = braid_chart(c, Gluing::lusztig, 1);
    CHECK(b.word.letters == std::vector<int>{2, 1, 2});
    CHECK(braid_chart(b, Gluing::lusztig, 1).values == c.values);
    auto b2 = braid_chart(c, Gluing::phi_check, 1);
    CHECK(braid_chart(b2, Gluing::phi_check, 1).values == c.values);
    Chart d{reduced_word(4, {1, 3, 2, 1, 3, 2}), {1, 2, 3, 4, 5, 6}};
    auto e = commute_chart(d, 1);
    CHECK(e.word.letters == std::vector<int>{3, 1, 2, 1, 3, 2});
    CHECK(e.values == std::vector<Rational>{2, 1, 3, 4, 5, 6});
}
