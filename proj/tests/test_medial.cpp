#include <doctest.h>

#include "elnet/medial.hpp"

#include <set>

using namespace elnet;

TEST_CASE("wiring from word") {
    auto d = wiring_from_word({1, 2, 1}, 3);
    CHECK(word_pairs(d.word, 3) == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(d.colors == std::vector<Color>{Color::white, Color::black, Color::white});
    auto one = wiring_from_word({1}, 2);
    CHECK(one.colors == std::vector<Color>{Color::white});
    auto six = word_pairs({1, 2, 3, 1, 2, 1}, 4);
    CHECK(six.size() == 6);
    CHECK(std::set<std::pair<int, int>>(six.begin(), six.end()).size() == 6);
    CHECK_FALSE(is_reduced({1, 1}, 2));
    CHECK_THROWS_AS(wiring_from_word({1, 1}, 2), ArgumentError);
    CHECK_THROWS_AS(wiring_from_word({3}, 3), ArgumentError);
}

TEST_CASE("standard words") {
    CHECK(standard_word(2) == std::vector<int>{1});
    CHECK(standard_word(3) == std::vector<int>{1, 2, 1});
    CHECK(standard_word(4) == std::vector<int>{1, 2, 3, 1, 2, 1});
    CHECK_THROWS_AS(standard_word(1), SizeError);
}

TEST_CASE("standard graphs") {
    auto s2 = standard_graph(2);
    CHECK(s2.edges.size() == 1);
    CHECK(s2.boundary.size() == 2);
    CHECK(standard_graph(3).edges.size() == 3);
    CHECK(standard_graph(4).edges.size() == 6);
    for (int n = 2; n <= 6; ++n) {
        auto m = medial_of_network(standard_graph(n));
        auto w = wiring_from_medial(m);
        CHECK(w.word == standard_word(n));
        CHECK(w == wiring_from_word(standard_word(n), n));
    }
}

TEST_CASE("medial graph of small networks") {
    PlaneNetwork e;
    e.boundary = {"1", "2"};
    e.edges = {{"1", "2", 1}};
    e.rotation = {{"1", {0}}, {"2", {0}}};
    auto m = medial_of_network(e);
    CHECK(m.diagram.crossings.size() == 1);
    CHECK(m.diagram.n_strands == 2);

    auto t = medial_of_network(triangle_network(1, 1, 1));
    CHECK(t.diagram.crossings.size() == 3);
    CHECK(t.diagram.n_strands == 3);
    std::set<std::pair<int, int>> pairs;
    for (const auto& c : t.diagram.crossings) pairs.insert({c.lo, c.hi});
    CHECK(pairs.size() == 3);
}

TEST_CASE("crossing order") {
    auto d = wiring_from_word({1, 2, 1}, 3);
    CHECK(crossing_order(d) == std::vector<int>{0, 1, 2});
    CrossingDiagram cyc;
    cyc.n_strands = 2;
    cyc.crossings = {{1, 2, Color::black}, {1, 2, Color::black}};
    cyc.strand_path = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(crossing_order(cyc), EmbeddingError);
}

TEST_CASE("wiring text format") {
    auto d = wiring_from_word({1, 2, 1}, 3);
    auto text = format_wiring(d);
    CHECK(parse_wiring(text) == d);
    CHECK_THROWS_AS(parse_wiring("strands 3\n1 x 1\nw b w\n"), ParseError);
}
