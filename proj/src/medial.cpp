#include "elnet/medial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace elnet {

namespace {

// Region between wire levels g and g+1, split into segments by the crossings at level g.
using Region = std::pair<int, int>;

struct RegionEdges {
    int left = -1, right = -1;
    std::vector<int> top, bottom;  // left to right
};

}  // namespace

PlaneNetwork standard_graph(int n) {
    return standard_graph(n, std::vector<Rational>(n * (n - 1) / 2, Rational(1)));
}

PlaneNetwork standard_graph(int n, const std::vector<Rational>& gamma) {
    auto word = standard_word(n);
    if (gamma.size() != word.size()) throw ArgumentError("standard graph needs N(N-1)/2 conductances");
    std::map<int, int> cur;
    std::map<Region, RegionEdges> inc;
    std::vector<std::pair<Region, Region>> ends;
    for (std::size_t k = 0; k < word.size(); ++k) {
        int h = word[k], e = static_cast<int>(k);
        if (h % 2 == 1) {
            Region a{h, cur[h]};
            Region b{h, ++cur[h]};
            ends.emplace_back(a, b);
            inc[a].right = e;
            inc[b].left = e;
        } else {
            Region a{h - 1, cur[h - 1]};
            Region b{h + 1, cur[h + 1]};
            ends.emplace_back(a, b);
            ++cur[h];
            inc[a].bottom.push_back(e);
            inc[b].top.push_back(e);
        }
    }
    std::vector<Region> nodes;
    for (int g = 1; g <= n; g += 2) nodes.push_back({g, 0});
    std::vector<Region> right;
    for (int g = 1; g <= n; g += 2)
        if (cur[g] != 0) right.push_back({g, cur[g]});
    nodes.insert(nodes.end(), right.rbegin(), right.rend());

    std::map<Region, std::string> name;
    for (std::size_t i = 0; i < nodes.size(); ++i) name[nodes[i]] = std::to_string(i + 1);
    int interior = 0;
    for (const auto& [r, _] : inc)
        if (!name.count(r)) name[r] = "i" + std::to_string(++interior);

    PlaneNetwork net;
    for (const auto& r : nodes) net.boundary.push_back(name[r]);
    for (std::size_t k = 0; k < ends.size(); ++k)
        net.edges.push_back({name[ends[k].first], name[ends[k].second], gamma[k]});
    for (const auto& [r, d] : inc) {
        std::vector<int> top(d.top.rbegin(), d.top.rend());
        std::vector<int> lst;
        auto add = [&](const std::vector<int>& v) { lst.insert(lst.end(), v.begin(), v.end()); };
        bool is_node = std::find(nodes.begin(), nodes.end(), r) != nodes.end();
        if (is_node && r.second == 0 && cur[r.first] != 0) {
            add(d.bottom);
            if (d.right >= 0) lst.push_back(d.right);
            add(top);
        } else if (is_node && r.second == 0) {
            add(top);
        } else if (is_node) {
            add(top);
            if (d.left >= 0) lst.push_back(d.left);
            add(d.bottom);
        } else {
            lst.push_back(d.left);
            add(d.bottom);
            lst.push_back(d.right);
            add(top);
        }
        net.rotation[name[r]] = lst;
    }
    return net;
}

MedialGraph medial_of_network(const PlaneNetwork& net) {
    auto problems = validate(net);
    if (!problems.empty()) throw EmbeddingError("invalid network: " + problems.front());
    const int m = static_cast<int>(net.edges.size());
    const int n = static_cast<int>(net.boundary.size());
    // Ports: slot (e, end, which) -> 4e + 2end + which (which: 0 prev, 1 next);
    // stub t_k -> 4m + k - 1.
    const int stubs = 4 * m;
    std::vector<int> conn(4 * m + 2 * n, -1);
    auto link = [&](int a, int b) {
        if (conn[a] >= 0 || conn[b] >= 0) throw EmbeddingError("medial port linked twice");
        conn[a] = b;
        conn[b] = a;
    };
    auto slot = [&](int e, const std::string& w, int which) {
        return 4 * e + 2 * (net.edges[e].u == w ? 0 : 1) + which;
    };
    for (const auto& [w, lst] : net.rotation) {
        int bi = net.boundary_index(w);
        if (bi >= 0) {
            int t_even = stubs + 2 * (bi + 1) - 1, t_odd = stubs + 2 * (bi + 1) - 2;
            if (lst.empty()) { link(t_even, t_odd); continue; }
            for (std::size_t k = 0; k + 1 < lst.size(); ++k) link(slot(lst[k], w, 1), slot(lst[k + 1], w, 0));
            link(t_even, slot(lst.front(), w, 0));
            link(t_odd, slot(lst.back(), w, 1));
        } else {
            for (std::size_t k = 0; k < lst.size(); ++k)
                link(slot(lst[k], w, 1), slot(lst[(k + 1) % lst.size()], w, 0));
        }
    }
    for (int b = 0; b < n; ++b)
        if (!net.rotation.count(net.boundary[b])) link(stubs + 2 * b + 1, stubs + 2 * b);

    MedialGraph mg;
    mg.n_boundary = n;
    auto end_of = [&](int port) {
        return port >= stubs ? MedialEnd{true, port - stubs + 1} : MedialEnd{false, port / 4};
    };
    for (int p = 0; p < static_cast<int>(conn.size()); ++p) {
        if (conn[p] < 0) throw EmbeddingError("dangling medial port");
        if (p < conn[p]) mg.edges.emplace_back(end_of(p), end_of(conn[p]));
    }

    std::vector<bool> visited(4 * m, false), seen_stub(2 * n, false);
    std::vector<std::vector<std::pair<int, bool>>> at(m);  // (strand, entered above)
    auto& d = mg.diagram;
    d.n_strands = n;
    for (int t = 0; t < 2 * n; ++t) {
        if (seen_stub[t]) continue;
        int strand = static_cast<int>(mg.strands.size()) + 1;
        std::vector<int> path;
        int s = conn[stubs + t];
        while (s < stubs) {
            if (visited[s]) throw EmbeddingError("medial strand revisits a port");
            visited[s] = true;
            int e = s / 4, end = (s / 2) % 2, which = s % 2;
            path.push_back(e);
            at[e].emplace_back(strand, (end == 0) == (which == 0));
            int o = 4 * e + 2 * (1 - end) + which;
            visited[o] = true;
            s = conn[o];
        }
        seen_stub[t] = seen_stub[s - stubs] = true;
        mg.strands.emplace_back(t + 1, s - stubs + 1);
        d.strand_path.push_back(path);
    }
    if (static_cast<int>(mg.strands.size()) != n) throw EmbeddingError("strand count differs from boundary size");
    for (int e = 0; e < m; ++e) {
        if (at[e].size() != 2) throw EmbeddingError("closed medial strand through edge " + std::to_string(e));
        auto [i, si] = at[e][0];
        auto [j, sj] = at[e][1];
        if (i == j) throw EmbeddingError("strand crosses itself at edge " + std::to_string(e));
        if (i > j) std::swap(i, j);
        d.crossings.push_back({i, j, si == sj ? Color::black : Color::white});
    }
    mg.vertex_order = crossing_order(d);
    return mg;
}

}  // namespace elnet
