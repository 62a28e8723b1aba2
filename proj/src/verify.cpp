#include "elnet/verify.hpp"

#include "elnet/chamber.hpp"
#include "elnet/dynamics.hpp"
#include "elnet/random.hpp"
#include "elnet/standard.hpp"

#include <deque>
#include <functional>
#include <map>
#include <set>

namespace elnet {

namespace {

struct Check {
    SuiteResult& r;
    void operator()(bool ok, const std::function<std::string()>& what) {
        ++r.checks;
        if (!ok && r.passed) {
            r.passed = false;
            r.counterexample = what();
        }
    }
};

std::string list_str(const std::vector<Rational>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.str();
    return s;
}

std::vector<Rational> positives(Rng& rng, std::size_t k) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(rng.positive());
    return v;
}

int size_or(const SuiteOptions& o, int def) { return o.size > 0 ? o.size : def; }

void suite_ydelta(Rng& rng, const SuiteOptions& o, Check& check) {
    QMatrix k3{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
    auto tri = triangle_network(1, 1, 1);
    auto star = star_to_triangle(star_network(3, 3, 3), "c");
    check(star == tri && response(tri) == k3, [] { return std::string("star(3,3,3) -> triangle(1,1,1) pinned case"); });
    int top = size_or(o, 5);
    for (int s = 0; s < o.samples; ++s) {
        int n = 3 + s % (top - 2);
        auto net = standard_graph(n, positives(rng, n * (n - 1) / 2));
        for (int step = 0; step < 4; ++step) {
            auto sites = mutable_sites(net);
            if (sites.empty()) break;
            auto site = sites[rng.uniform(0, static_cast<long>(sites.size()) - 1)];
            PlaneNetwork next, back;
            if (site.vertex) {
                auto legs = net.rotation.at(*site.vertex);
                next = star_triangle_mutate(net, site);
                back = triangle_to_star(next, legs, *site.vertex);
            } else {
                site.new_center = "y" + std::to_string(step);
                next = star_triangle_mutate(net, site);
                back = star_to_triangle(next, *site.new_center);
            }
            check(response(next) == response(net), [&] { return "response changed on " + format_network(net); });
            check(back == net, [&] { return "mutation is not undone on " + format_network(net); });
            net = next;
        }
    }
}

void suite_lyb(Rng& rng, const SuiteOptions& o, Check& check) {
    auto E = [](OpKind k, const Rational& p, int i, int j, int n) {
        return embed_block(local_operator(k, p), i, j, n);
    };
    auto pinned = local_yb_transform(YbKind::phi, 1, 2, 3);
    check(pinned == std::array<Rational, 3>{-1, -2, -3}, [] { return std::string("phi (1,2,3) pinned"); });
    auto el = local_yb_transform(YbKind::electrical, 1, 2, 3);
    check(el == std::array<Rational, 3>{1, Rational(1, 2), Rational(1, 3)}, [] { return std::string("electrical (1,2,3) pinned"); });
    auto lu = local_yb_transform(YbKind::lusztig, 1, 2, 3);
    check(lu == std::array<Rational, 3>{Rational(3, 2), 4, Rational(1, 2)}, [] { return std::string("lusztig (1,2,3) pinned"); });
    for (auto kind : {YbKind::phi, YbKind::electrical, YbKind::phi_check, YbKind::lusztig}) {
        int done = 0;
        while (done < o.samples) {
            Rational a = rng.nonzero(), b = rng.nonzero(), c = rng.nonzero();
            std::array<Rational, 3> q;
            try {
                q = local_yb_transform(kind, a, b, c);
            } catch (const DegeneracyError&) {
                continue;
            }
            ++done;
            bool ok = false;
            switch (kind) {
            case YbKind::phi:
                ok = E(OpKind::phi, a, 1, 2, 3) * E(OpKind::phi, b, 1, 3, 3) * E(OpKind::phi, c, 2, 3, 3) ==
                     E(OpKind::phi, q[2], 2, 3, 3) * E(OpKind::phi, q[1], 1, 3, 3) * E(OpKind::phi, q[0], 1, 2, 3);
                break;
            case YbKind::electrical:
                ok = E(OpKind::psi, a, 1, 2, 3) * E(OpKind::phi, b, 1, 3, 3) * E(OpKind::psi, c, 2, 3, 3) ==
                     E(OpKind::phi, q[2], 2, 3, 3) * E(OpKind::psi, q[1], 1, 3, 3) * E(OpKind::phi, q[0], 1, 2, 3);
                break;
            case YbKind::phi_check:
                ok = E(OpKind::phi_check, c, 1, 2, 3) * E(OpKind::phi_check, b, 2, 3, 3) * E(OpKind::phi_check, a, 1, 2, 3) ==
                     E(OpKind::phi_check, q[2], 2, 3, 3) * E(OpKind::phi_check, q[1], 1, 2, 3) * E(OpKind::phi_check, q[0], 2, 3, 3);
                break;
            case YbKind::lusztig:
                ok = E(OpKind::lusztig, c, 1, 2, 3) * E(OpKind::lusztig, b, 2, 3, 3) * E(OpKind::lusztig, a, 1, 2, 3) ==
                     E(OpKind::lusztig, q[2], 2, 3, 3) * E(OpKind::lusztig, q[1], 1, 2, 3) * E(OpKind::lusztig, q[0], 2, 3, 3);
                break;
            }
            check(ok, [&] { return "local YB identity fails for kind " + std::to_string(static_cast<int>(kind)) + " at " + list_str({a, b, c}); });
        }
    }
}

// All reduced words of length <= max_len on n strands.
std::vector<std::vector<int>> short_reduced_words(int n, int max_len) {
    std::vector<std::vector<int>> out{{}};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int h = 1; h < n; ++h) {
                auto x = w;
                x.push_back(h);
                if (is_reduced(x, n)) next.push_back(x);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

void suite_partition(Rng& rng, const SuiteOptions& o, Check& check) {
    int max_len = size_or(o, 6);
    // a diagram with m crossings touches at most m+1 strands. Past 4 strands only
    // words using every letter: the rest split into independent blocks.
    for (int n = 2; n <= max_len + 1; ++n)
        for (const auto& w : short_reduced_words(n, max_len)) {
            if (n > 4 && std::set<int>(w.begin(), w.end()).size() != static_cast<std::size_t>(n - 1)) continue;
            for (int s = 0; s < o.samples; ++s) {
                auto d = wiring_from_word(w, n);
                for (auto& c : d.colors) c = rng.uniform(0, 1) ? Color::black : Color::white;
                std::vector<Rational> p;
                for (std::size_t k = 0; k < w.size(); ++k) p.push_back(rng.nonzero());
                auto model = vertex_model(d, p);
                auto prod = partition_product(model);
                check(partition_pathsum(model) == prod, [&] { return "pathsum differs from product on " + format_model(model); });
                bool sums = true;
                for (int c = 0; c < n; ++c) {
                    Rational t;
                    for (int r = 0; r < n; ++r) t += prod(r, c);
                    sums = sums && t == Rational(1);
                }
                check(sums, [&] { return "column sums differ from 1 on " + format_model(model); });
                check(det(prod) == Rational(w.size() % 2 ? -1 : 1), [&] { return "det differs from (-1)^m on " + format_model(model); });
            }
        }
}

void suite_mutation(Rng& rng, const SuiteOptions& o, Check& check) {
    int top = size_or(o, 5);
    for (int n = 2; n <= top; ++n)
        for (int s = 0; s < o.samples; ++s) {
            auto net = standard_network(n, positives(rng, n * (n - 1) / 2));
            auto start = standard_model(net);
            QMatrix mb = partition_product(start);
            std::set<std::vector<int>> seen{start.wiring->word};
            std::deque<VertexModel<Rational>> todo{start};
            while (!todo.empty()) {
                auto m = todo.front();
                todo.pop_front();
                const auto& w = m.wiring->word;
                for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
                    std::vector<VertexModel<Rational>> next;
                    try {
                        if (p + 2 <= static_cast<int>(w.size()) && w[p - 1] == w[p + 1] && std::abs(w[p - 1] - w[p]) == 1) {
                            auto x = yb_mutate(m, p);
                            auto back = yb_mutate(x, p);
                            check(model_params(back) == model_params(m) && back.wiring == m.wiring,
                                  [&] { return "braid move not undone on " + format_model(m); });
                            next.push_back(x);
                        }
                    } catch (const DegeneracyError&) {
                    }
                    if (p + 1 <= static_cast<int>(w.size()) && std::abs(w[p - 1] - w[p]) >= 2)
                        next.push_back(commute_move(m, p));
                    for (auto& x : next) {
                        check(partition_product(x) == mb, [&] { return "M_B changed: " + format_model(x); });
                        if (seen.insert(x.wiring->word).second) todo.push_back(std::move(x));
                    }
                }
            }
        }
}

void suite_grassmann(Rng& rng, const SuiteOptions& o, Check& check) {
    int top = size_or(o, 6);
    for (int n = 2; n <= top; ++n)
        for (int s = 0; s < o.samples; ++s) {
            auto net = standard_network(n, positives(rng, n * (n - 1) / 2));
            QMatrix mb = mb_standard(net);
            QMatrix mr = response(to_plane(net));
            auto ctx = [&] { return "N=" + std::to_string(n) + " conductances\n" + format_conductances(net); };
            check(row_space_equal(build_w1(mr), build_w2(mb)), [&] { return "W1, W2 row spaces differ, " + ctx(); });
            check(mr_from_mb(mb) == mr, [&] { return "mr_from_mb disagrees with the response, " + ctx(); });
            check(mb_from_mr(mr) == mb, [&] { return "mb_from_mr disagrees with mb_standard, " + ctx(); });
        }
}

void suite_inverse(Rng& rng, const SuiteOptions& o, Check& check) {
    int top = size_or(o, 6);
    for (int n = 2; n <= top; ++n)
        for (int s = 0; s < o.samples; ++s) {
            auto net = standard_network(n, positives(rng, n * (n - 1) / 2));
            bool ok;
            try {
                ok = invert_conductances(mb_standard(net), n) == net;
            } catch (const InversionError&) {
                ok = false;
            }
            check(ok, [&] { return "inversion roundtrip fails for\n" + format_conductances(net); });
        }
}

void suite_symplectic(Rng& rng, const SuiteOptions& o, Check& check) {
    int top = size_or(o, 6);
    for (int n = 2; n <= top; ++n)
        for (int s = 0; s < o.samples; ++s) {
            auto net = standard_network(n, positives(rng, n * (n - 1) / 2));
            check(check_symplectic(net), [&] { return "form not preserved for\n" + format_conductances(net); });
            check(det(cmb_standard(net)) == Rational(1), [&] { return "det differs from 1 for\n" + format_conductances(net); });
        }
}

void suite_tl(Rng& rng, const SuiteOptions& o, Check& check) {
    int top = size_or(o, 8);
    for (int n = 2; n <= top; ++n) {
        QMatrix zero(n, n), id = QMatrix::identity(n);
        for (int i = 1; i < n; ++i) {
            auto ai = tl_generator(i, n);
            check(ai * ai == zero, [&] { return "a_" + std::to_string(i) + "^2 != 0 at n=" + std::to_string(n); });
            for (int j = 1; j < n; ++j) {
                auto aj = tl_generator(j, n);
                if (std::abs(i - j) == 1)
                    check(ai * aj * ai == Rational(-1) * ai, [&] { return "a_i a_j a_i != -a_i at n=" + std::to_string(n); });
                if (std::abs(i - j) >= 2)
                    check(ai * aj == aj * ai, [&] { return "distant generators do not commute at n=" + std::to_string(n); });
                if (std::abs(i - j) != 1) continue;
                int done = 0;
                while (done < o.samples) {
                    Rational r1 = rng.nonzero(), r2 = rng.nonzero(), r3 = rng.nonzero();
                    Rational d = r1 + r3 - r1 * r2 * r3;
                    if (d.is_zero()) continue;
                    ++done;
                    check((id + r1 * ai) * (id + r2 * aj) * (id + r3 * ai) ==
                              (id + (r2 * r3 / d) * aj) * (id + d * ai) * (id + (r1 * r2 / d) * aj),
                          [&] { return "factorization identity fails at " + list_str({r1, r2, r3}); });
                }
            }
        }
    }
}

void suite_lusztig(Rng&, const SuiteOptions& o, Check& check) {
    int top = std::min(size_or(o, 5), 5);
    for (int n = 2; n <= top; ++n)
        check(check_lusztig_degeneration(n), [&] { return "degeneration fails at N=" + std::to_string(n); });
}

Chart random_chart(Rng& rng, int n, bool positive) {
    auto w = reduced_word(n, standard_word(n));
    Chart c{w, {}};
    for (std::size_t k = 0; k < w.letters.size(); ++k) c.values.push_back(positive ? rng.positive() : rng.nonzero());
    // wander to a random commutation class member
    for (int step = 0; step < 6; ++step) {
        int p = rng.uniform(1, static_cast<long>(w.letters.size()) - 1);
        const auto& l = c.word.letters;
        if (std::abs(l[p - 1] - l[p]) >= 2) c = commute_chart(c, p);
    }
    return c;
}

// Every relation instance whose six or eight subsets are all present.
std::vector<std::pair<std::array<int, 3>, Subset>> relation_sites(const ChamberVars& mv, int n, bool four) {
    std::vector<std::pair<std::array<int, 3>, Subset>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int mask = 0; mask < (1 << n); ++mask) {
                    Subset L;
                    for (int b = 0; b < n; ++b)
                        if (mask >> b & 1) L.insert(b + 1);
                    if (L.count(i) || L.count(j) || L.count(k)) continue;
                    bool all = true;
                    std::vector<std::vector<int>> need{{i, k}, {j}, {i, j}, {k}, {j, k}, {i}};
                    if (four) {
                        need.push_back({});
                        need.push_back({i, j, k});
                    }
                    for (const auto& e : need) {
                        Subset s = L;
                        s.insert(e.begin(), e.end());
                        all = all && mv.count(s);
                    }
                    if (all) out.push_back({{i, j, k}, L});
                }
    return out;
}

void suite_cluster(Rng& rng, const SuiteOptions& o, Check& check) {
    auto ex = chamber_data(reduced_word(4, {2, 1, 3, 2, 3, 1}), 3);
    check(ex.i == 1 && ex.j == 3 && ex.L == Subset{2, 4}, [] { return std::string("h=213231, k=3 example"); });
    for (int n = 3; n <= 4; ++n)
        for (int s = 0; s < o.samples; ++s) {
            auto c = random_chart(rng, n, false);
            check(ansatz_forward(ansatz_inverse(c.values, c.word), c.word) == c.values,
                  [&] { return "forward(inverse(chart)) != chart at " + list_str(c.values); });
            ChamberVars mv;
            for (const auto& J : chamber_sets(c.word)) mv[J] = is_normalized(J) ? Rational(1) : rng.nonzero();
            check(ansatz_inverse(ansatz_forward(mv, c.word), c.word) == mv,
                  [&] { return "inverse(forward(M)) != M\n" + format_chamber_vars(mv); });

            for (auto g : {Gluing::phi_check, Gluing::lusztig}) {
                auto chart = random_chart(rng, n, true);
                ChamberVars glued;
                try {
                    glued = glued_vars(chart, g);
                } catch (const DegeneracyError&) {
                    continue;
                } catch (const ConsistencyError& e) {
                    check(false, [&] { return std::string(e.what()); });
                    continue;
                }
                bool four = g == Gluing::phi_check;
                auto sites = relation_sites(glued, n, four);
                check(!sites.empty(), [&] { return std::string("no relation instances found"); });
                bool other_fails = false;
                for (const auto& [ijk, L] : sites) {
                    auto rel = four ? Relation::four_term : Relation::three_term;
                    check(check_relation(glued, rel, ijk[0], ijk[1], ijk[2], L),
                          [&] { return std::string(four ? "four" : "three") + "-term relation fails\n" + format_chamber_vars(glued); });
                    auto other = four ? Relation::three_term : Relation::four_term;
                    bool have_other = glued.count(L) && glued.count([&] { Subset x = L; x.insert({ijk[0], ijk[1], ijk[2]}); return x; }());
                    if (have_other && !check_relation(glued, other, ijk[0], ijk[1], ijk[2], L)) other_fails = true;
                }
                check(other_fails, [&] { return std::string("the other relation holds too (no witness)"); });
            }
        }
    // product identities used by the gluing: a'b' = bc and b'c' = ab
    for (int s = 0; s < o.samples; ++s) {
        Rational a = rng.positive(), b = rng.positive(), c = rng.positive();
        for (auto kind : {YbKind::lusztig, YbKind::phi_check}) {
            std::array<Rational, 3> t;
            try {
                t = local_yb_transform(kind, c, b, a);
            } catch (const DegeneracyError&) {
                continue;
            }
            Rational a2 = t[2], b2 = t[1], c2 = t[0];
            check(a2 * b2 == b * c && b2 * c2 == a * b, [&] { return "product identities fail at " + list_str({a, b, c}); });
        }
    }
}

void suite_dynamics(Rng& rng, const SuiteOptions& o, Check& check) {
    for (int n = 1; n <= 6; ++n)
        for (int s = 0; s < o.samples; ++s) {
            auto xs = positives(rng, n), ys = positives(rng, n);
            check(q_poly(xs, ys) == affine_product(xs, ys)(1, 0), [&] { return "Q differs from the product entry at " + list_str(xs) + " / " + list_str(ys); });
            Rational t;
            try {
                t = stable_point(xs, ys);
            } catch (const DegeneracyError&) {
                continue;
            }
            Rational u = t;
            for (int k = 0; k < n; ++k) u = mobius(xs[k], ys[k], u);
            check(u == t, [&] { return "stable point not fixed at " + list_str(xs) + " / " + list_str(ys); });
        }
    int top = size_or(o, 4);
    for (int s = 0; s < o.samples; ++s) {
        int m = 2 + s % (top - 1), n = 2 + (s / (top - 1)) % (top - 1);
        Lattice lat(m, n);
        for (auto& v : lat.x) v = rng.positive();
        auto ctx = [&] { return format_lattice(lat); };
        try {
            for (int j = 1; j < m; ++j) {
                auto r = act_r(lat, j);
                check(act_r(r, j) == lat, [&] { return "r_j^2 != id on\n" + ctx(); });
                Rational p0(1), p1(1);
                for (int i = 1; i <= n; ++i) {
                    p0 *= r.at(j, i);
                    p1 *= lat.at(j + 1, i);
                }
                check(p0 == p1, [&] { return "row products not swapped on\n" + ctx(); });
                if (j + 1 < m)
                    check(act_r(act_r(act_r(lat, j), j + 1), j) == act_r(act_r(act_r(lat, j + 1), j), j + 1),
                          [&] { return "r braid relation fails on\n" + ctx(); });
                for (int k = j + 2; k < m; ++k)
                    check(act_r(act_r(lat, j), k) == act_r(act_r(lat, k), j), [&] { return "r far commutation fails on\n" + ctx(); });
                for (int i = 1; i < n; ++i)
                    check(act_r(act_s(lat, i), j) == act_s(act_r(lat, j), i), [&] { return "r and s do not commute on\n" + ctx(); });
            }
            for (int i = 1; i < n; ++i) {
                check(act_s(act_s(lat, i), i) == lat, [&] { return "s_i^2 != id on\n" + ctx(); });
                if (i + 1 < n)
                    check(act_s(act_s(act_s(lat, i), i + 1), i) == act_s(act_s(act_s(lat, i + 1), i), i + 1),
                          [&] { return "s braid relation fails on\n" + ctx(); });
                for (int k = i + 2; k < n; ++k)
                    check(act_s(act_s(lat, i), k) == act_s(act_s(lat, k), i), [&] { return "s far commutation fails on\n" + ctx(); });
            }
            // degeneration x -> eps * xi
            for (int j = 1; j < m; ++j)
                for (int i = 1; i <= n; ++i) {
                    auto X = [&](int r, int c) { return MPoly::var("e") * MPoly(lat.at(r, c)); };
                    auto [first, second] = p_poly_parts<MPoly>(X, n, j, i);
                    check(lowest_degree_part(first + second) == first, [&] { return "degeneration fails on\n" + ctx(); });
                }
        } catch (const DegeneracyError&) {
        }
    }
    for (int s = 0; s < o.samples; ++s) {
        Rational x1 = rng.positive(), x2 = rng.positive(), y1 = rng.positive(), y2 = rng.positive();
        auto tb = two_by_two(x1, x2, y1, y2);
        Lattice lat(2, 2);
        lat.at(1, 1) = x1;
        lat.at(1, 2) = x2;
        lat.at(2, 1) = y1;
        lat.at(2, 2) = y2;
        auto r = act_r(lat, 1);
        check(r.at(1, 1) == y1 * tb.mu && r.at(1, 2) == y2 / tb.mu && r.at(2, 1) == x1 / tb.mu && r.at(2, 2) == x2 * tb.mu,
              [&] { return "2x2 formula disagrees with r_1 on\n" + format_lattice(lat); });
        if (!tb.parabolic)
            check(tb.t == stable_point({x1, x2}, {y1, y2}), [&] { return "2x2 stable point disagrees on\n" + format_lattice(lat); });
    }
}

using SuiteFn = void (*)(Rng&, const SuiteOptions&, Check&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"ydelta", suite_ydelta},     {"lyb", suite_lyb},         {"partition", suite_partition},
        {"mutation", suite_mutation}, {"grassmann", suite_grassmann}, {"inverse", suite_inverse},
        {"symplectic", suite_symplectic}, {"tl", suite_tl},       {"lusztig", suite_lusztig},
        {"cluster", suite_cluster},   {"dynamics", suite_dynamics},
    };
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [n, _] : registry()) out.push_back(n);
    return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        SuiteResult r{name, true, 0, ""};
        Rng rng(opt.seed);
        Check check{r};
        try {
            fn(rng, opt, check);
        } catch (const Error& e) {
            r.passed = false;
            if (r.counterexample.empty()) r.counterexample = std::string("error: ") + e.what();
        }
        return r;
    }
    throw ArgumentError("unknown suite " + name);
}

}  // namespace elnet
