// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "elnet/random.hpp"
#include "elnet/standard.hpp"
#include "elnet/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace elnet;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome suite(const std::string& name, int samples, int size = 0) {
    auto r = run_suite(name, SuiteOptions{1, samples, size});
    return {r.passed, r.passed ? std::to_string(r.checks) + " checks" : r.counterexample};
}

bool unit_column_sums(const QMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Rational s;
        for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, c);
        if (s != Rational(1)) return false;
    }
    return true;
}

// Every M_B produced by the library: the closed form, the medial pipeline on
// standard graphs and their Y-Delta mutations, and free vertex models.
Outcome column_sums() {
    Rng rng(12);
    std::size_t n_checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (int s = 0; s < 50; ++s) {
            std::vector<Rational> g;
            for (int k = 0; k < n * (n - 1) / 2; ++k) g.push_back(rng.positive());
            auto net = standard_network(n, g);
            auto plane = to_plane(net);
            QMatrix ms[] = {mb_standard(net), partition_product(vertex_model(plane))};
            for (const auto& m : ms) {
                ++n_checked;
                if (!unit_column_sums(m)) return {false, "N=" + std::to_string(n) + "\n" + format_conductances(net)};
            }
            auto sites = mutable_sites(plane);
            if (sites.empty()) continue;
            auto site = sites[rng.uniform(0, static_cast<long>(sites.size()) - 1)];
            if (!site.vertex) site.new_center = "y";
            auto mutated = star_triangle_mutate(plane, site);
            ++n_checked;
            if (!unit_column_sums(partition_product(vertex_model(mutated))))
                return {false, "after mutation of\n" + format_network(plane)};
        }
    for (int s = 0; s < 500; ++s) {
        int n = 2 + s % 5;
        std::vector<int> w;
        for (int k = 0; k < 10; ++k) {
            auto x = w;
            x.push_back(static_cast<int>(rng.uniform(1, n - 1)));
            if (is_reduced(x, n)) w = x;
        }
        auto d = wiring_from_word(w, n);
        for (auto& c : d.colors) c = rng.uniform(0, 1) ? Color::black : Color::white;
        std::vector<Rational> p;
        for (std::size_t k = 0; k < w.size(); ++k) p.push_back(rng.nonzero());
        auto model = vertex_model(d, p);
        ++n_checked;
        if (!unit_column_sums(partition_product(model))) return {false, format_model(model)};
    }
    return {true, std::to_string(n_checked) + " matrices"};
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Y-Delta invariance of the response matrix", [] { return suite("ydelta", 100); }},
        {"local Yang-Baxter identities", [] { return suite("lyb", 200); }},
        {"pathsum equals product, <= 6 crossings", [] { return suite("partition", 50, 6); }},
        {"M_B invariant under braid moves, N <= 5", [] { return suite("mutation", 50, 5); }},
        {"Grassmannian equivalence and conversions, N <= 6", [] { return suite("grassmann", 50, 6); }},
        {"inverse problem roundtrip, N = 2..6", [] { return suite("inverse", 100, 6); }},
        {"symplectic form and det 1, N <= 6", [] { return suite("symplectic", 50, 6); }},
        {"Temperley-Lieb relations, n <= 8", [] { return suite("tl", 50, 8); }},
        {"Lusztig degeneration, N = 2..5", [] { return suite("lusztig", 1, 5); }},
        {"chamber ansatz and exchange relations", [] { return suite("cluster", 50); }},
        {"lattice dynamics", [] { return suite("dynamics", 50, 4); }},
        {"unit column sums of M_B", column_sums},
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << k + 1 << ": " << criteria[k].first << " (" << o.detail
                  << ", " << ms << " ms)\n";
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
