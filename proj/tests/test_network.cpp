#include <doctest.h>

#include "elnet/network.hpp"
#include "elnet/random.hpp"
#include "elnet/medial.hpp"

using namespace elnet;

namespace {

QMatrix k3() { return QMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}; }

PlaneNetwork single_edge(const Rational& c) {
    PlaneNetwork n;
    n.boundary = {"1", "2"};
    n.edges = {{"1", "2", c}};
    n.rotation = {{"1", {0}}, {"2", {0}}};
    return n;
}

}  // namespace

TEST_CASE("kirchhoff") {
    CHECK(kirchhoff(single_edge(5), {"1", "2"}) == QMatrix{{5, -5}, {-5, 5}});
    CHECK(kirchhoff(triangle_network(1, 1, 1), {"1", "2", "3"}) == k3());
    auto star = star_network(3, 3, 3);
    CHECK(kirchhoff(star, {"1", "2", "3", "c"}) == QMatrix{{3, 0, 0, -3}, {0, 3, 0, -3}, {0, 0, 3, -3}, {-3, -3, -3, 9}});
    CHECK_THROWS_AS(kirchhoff(star, {"1", "2"}), ArgumentError);
}

TEST_CASE("response") {
    CHECK(response(triangle_network(1, 1, 1)) == k3());
    CHECK(response(star_network(3, 3, 3)) == k3());
    CHECK(response(single_edge(Rational(2, 7))) == QMatrix{{Rational(2, 7), Rational(-2, 7)}, {Rational(-2, 7), Rational(2, 7)}});
}

TEST_CASE("validate") {
    CHECK(validate(triangle_network(1, 1, 1)).empty());
    auto loop = single_edge(1);
    loop.edges.push_back({"2", "2", 1});
    loop.rotation["2"].push_back(1);
    CHECK(validate(loop) == std::vector<std::string>{"self-loop at 2"});
    PlaneNetwork two;
    two.boundary = {"1", "2", "3", "4"};
    two.edges = {{"1", "2", 1}, {"3", "4", 1}};
    two.rotation = {{"1", {0}}, {"2", {0}}, {"3", {1}}, {"4", {1}}};
    CHECK(validate(two) == std::vector<std::string>{"not connected"});
}

TEST_CASE("star-triangle mutation pinned cases") {
    auto tri = triangle_network(1, 1, 1);
    auto star = triangle_to_star(tri, {0, 1, 2}, std::string("c"));
    CHECK(star == star_network(3, 3, 3));
    CHECK(star_to_triangle(star_network(3, 3, 3), "c") == tri);
    CHECK(star_to_triangle(star, "c") == tri);
    // fresh center id
    auto s2 = star_triangle_mutate(tri, MutationSite{std::nullopt, {0, 1, 2}, std::nullopt});
    CHECK(s2.rotation.count("s1") == 1);
    CHECK_THROWS(star_to_triangle(tri, "1"));
    CHECK_THROWS(triangle_to_star(tri, {0, 1, 1}));
}

TEST_CASE("star-triangle values") {
    auto tri = triangle_network(2, 3, 5);
    auto star = triangle_to_star(tri, {0, 1, 2}, std::string("c"));
    // leg i carries (ab+bc+ca)/gamma_opposite
    Rational s = 2 * 3 + 3 * 5 + 5 * 2;
    CHECK(star.edges[0].gamma == s / 2);
    CHECK(star.edges[1].gamma == s / 3);
    CHECK(star.edges[2].gamma == s / 5);
    CHECK(response(star) == response(tri));
}

TEST_CASE("mutation invariance on standard graphs") {
    Rng rng(7);
    for (int n = 3; n <= 5; ++n) {
        std::vector<Rational> g;
        for (int k = 0; k < n * (n - 1) / 2; ++k) g.push_back(rng.positive());
        auto net = standard_graph(n, g);
        CHECK(validate(net).empty());
        auto sites = mutable_sites(net);
        REQUIRE_FALSE(sites.empty());
        for (auto site : sites) {
            if (!site.vertex) site.new_center = "x";
            CHECK(response(star_triangle_mutate(net, site)) == response(net));
        }
    }
}

TEST_CASE("network json roundtrip and errors") {
    auto tri = triangle_network(Rational(1, 2), 3, -2);
    auto text = format_network(tri);
    CHECK(text.back() == '\n');
    CHECK(parse_network(text) == tri);
    CHECK(format_network(parse_network(text)) == text);
    try {
        parse_network("{\"boundary\": [1,2],\n \"edges\": [{\"u\": 1, \"v\": 2, \"gamma\": \"1/0\"}],\n \"rotation\": {}}");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "line 2, column 41: zero denominator");
    }
    try {
        parse_network("{\"boundary\": [1,2],\n  \"edges\": [}");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 2", 0) == 0);
    }
}
