#include "elnet/network.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace elnet {

std::vector<std::string> PlaneNetwork::vertices() const {
    std::vector<std::string> out = boundary;
    std::set<std::string> seen(boundary.begin(), boundary.end());
    auto add = [&](const std::string& v) {
        if (seen.insert(v).second) out.push_back(v);
    };
    for (const auto& e : edges) { add(e.u); add(e.v); }
    for (const auto& [v, _] : rotation) add(v);
    return out;
}

bool PlaneNetwork::is_boundary(const std::string& v) const { return boundary_index(v) >= 0; }

int PlaneNetwork::boundary_index(const std::string& v) const {
    auto it = std::find(boundary.begin(), boundary.end(), v);
    return it == boundary.end() ? -1 : static_cast<int>(it - boundary.begin());
}

PlaneNetwork PlaneNetwork::canonical() const {
    PlaneNetwork c = *this;
    for (auto& [v, lst] : c.rotation)
        if (!is_boundary(v) && !lst.empty())
            std::rotate(lst.begin(), std::min_element(lst.begin(), lst.end()), lst.end());
    return c;
}

bool operator==(const PlaneNetwork& a, const PlaneNetwork& b) {
    if (a.boundary != b.boundary || a.edges.size() != b.edges.size()) return false;
    for (std::size_t k = 0; k < a.edges.size(); ++k) {
        const auto &x = a.edges[k], &y = b.edges[k];
        bool same = (x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u);
        if (!same || x.gamma != y.gamma) return false;
    }
    return a.canonical().rotation == b.canonical().rotation;
}

QMatrix kirchhoff(const PlaneNetwork& net, const std::vector<std::string>& order) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (!idx.emplace(order[i], i).second) throw ArgumentError("vertex repeated in order: " + order[i]);
    auto all = net.vertices();
    if (all.size() != order.size()) throw ArgumentError("order is not a permutation of the vertices");
    for (const auto& v : all)
        if (!idx.count(v)) throw ArgumentError("order misses vertex " + v);
    QMatrix k(order.size(), order.size());
    for (const auto& e : net.edges) {
        std::size_t i = idx.at(e.u), j = idx.at(e.v);
        k(i, i) += e.gamma;
        k(j, j) += e.gamma;
        k(i, j) -= e.gamma;
        k(j, i) -= e.gamma;
    }
    return k;
}

QMatrix response(const PlaneNetwork& net) {
    auto order = net.vertices();
    std::vector<std::size_t> keep(net.boundary.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    return schur_complement(kirchhoff(net, order), keep);
}

std::vector<std::string> validate(const PlaneNetwork& net) {
    std::vector<std::string> out;
    std::set<std::string> bset;
    for (const auto& b : net.boundary)
        if (!bset.insert(b).second) out.push_back("boundary vertex " + b + " listed twice");
    auto verts = net.vertices();
    std::map<std::string, std::vector<int>> incident;
    for (std::size_t k = 0; k < net.edges.size(); ++k) {
        const auto& e = net.edges[k];
        if (e.u == e.v) out.push_back("self-loop at " + e.u);
        if (e.gamma.is_zero()) out.push_back("zero conductance on edge " + std::to_string(k));
        incident[e.u].push_back(static_cast<int>(k));
        if (e.u != e.v) incident[e.v].push_back(static_cast<int>(k));
    }
    // connectivity
    if (!verts.empty()) {
        std::map<std::string, std::vector<std::string>> adj;
        for (const auto& e : net.edges) { adj[e.u].push_back(e.v); adj[e.v].push_back(e.u); }
        std::set<std::string> seen{verts.front()};
        std::vector<std::string> stack{verts.front()};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto& w : adj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != verts.size()) out.push_back("not connected");
    }
    for (const auto& v : verts) {
        auto it = net.rotation.find(v);
        std::vector<int> have = it == net.rotation.end() ? std::vector<int>{} : it->second;
        std::vector<int> want = incident[v];
        std::sort(have.begin(), have.end());
        std::sort(want.begin(), want.end());
        if (have != want) out.push_back("rotation at " + v + " does not list its incident edges exactly once");
    }
    return out;
}

namespace {

const std::string& other_end(const Edge& e, const std::string& v) { return e.u == v ? e.v : e.u; }

std::string fresh_id(const PlaneNetwork& net) {
    auto verts = net.vertices();
    std::set<std::string> used(verts.begin(), verts.end());
    for (std::size_t k = 1;; ++k) {
        std::string id = "s" + std::to_string(k);
        if (!used.count(id)) return id;
    }
}

void replace_in_rotation(std::vector<int>& lst, int old_edge, const std::vector<int>& with) {
    auto it = std::find(lst.begin(), lst.end(), old_edge);
    if (it == lst.end()) throw EmbeddingError("edge missing from rotation");
    it = lst.erase(it);
    lst.insert(it, with.begin(), with.end());
}

// True if `first` is immediately followed by `second` in the rotation at v.
bool consecutive(const PlaneNetwork& net, const std::string& v, int first, int second) {
    const auto& lst = net.rotation.at(v);
    for (std::size_t k = 0; k < lst.size(); ++k) {
        if (lst[k] != first) continue;
        if (k + 1 < lst.size()) return lst[k + 1] == second;
        return !net.is_boundary(v) && lst.front() == second;
    }
    return false;
}

void check_response_invariance([[maybe_unused]] const PlaneNetwork& before,
                               [[maybe_unused]] const PlaneNetwork& after) {
#ifndef NDEBUG
    try {
        if (response(before) != response(after))
            throw ConsistencyError("star-triangle mutation changed the response matrix");
    } catch (const SingularError&) {
    }
#endif
}

struct TriangleFace {
    std::string a[3];
    int opposite[3];  // edge index opposite corner i
};

std::optional<TriangleFace> triangle_face(const PlaneNetwork& net, const std::vector<int>& tri) {
    if (tri.size() != 3) return std::nullopt;
    for (int k : tri)
        if (k < 0 || k >= static_cast<int>(net.edges.size())) return std::nullopt;
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) return std::nullopt;
    const Edge &e0 = net.edges[tri[0]], &e1 = net.edges[tri[1]];
    std::string shared;
    if (e0.u == e1.u || e0.u == e1.v) shared = e0.u;
    else if (e0.v == e1.u || e0.v == e1.v) shared = e0.v;
    else return std::nullopt;
    std::string x = other_end(e0, shared), y = other_end(e1, shared);
    const Edge& e2 = net.edges[tri[2]];
    if (!((e2.u == x && e2.v == y) || (e2.u == y && e2.v == x))) return std::nullopt;
    if (x == y || x == shared || y == shared) return std::nullopt;
    // corners shared, x, y; edge opposite shared is tri[2], opposite x is tri[1], opposite y is tri[0]
    std::map<std::string, int> opp{{shared, tri[2]}, {x, tri[1]}, {y, tri[0]}};
    for (const auto& order : {std::vector<std::string>{shared, x, y}, std::vector<std::string>{shared, y, x}}) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            const auto& c = order[i];
            const auto& next = order[(i + 1) % 3];
            const auto& prev = order[(i + 2) % 3];
            // edge from c to next is the one opposite prev
            ok = consecutive(net, c, opp[prev], opp[next]);
        }
        if (ok) {
            TriangleFace f;
            for (int i = 0; i < 3; ++i) {
                f.a[i] = order[i];
                f.opposite[i] = opp[order[i]];
            }
            return f;
        }
    }
    return std::nullopt;
}

}  // namespace

PlaneNetwork star_to_triangle(const PlaneNetwork& net, const std::string& center) {
    if (net.is_boundary(center)) throw ArgumentError("vertex " + center + " is on the boundary");
    auto rit = net.rotation.find(center);
    if (rit == net.rotation.end()) throw ArgumentError("unknown vertex " + center);
    const auto& legs = rit->second;
    if (legs.size() != 3) throw ArgumentError("vertex " + center + " does not have degree 3");
    std::string a[3];
    Rational g[3];
    for (int i = 0; i < 3; ++i) {
        const Edge& e = net.edges[legs[i]];
        if (e.u == e.v) throw ArgumentError("self-loop at " + center);
        a[i] = other_end(e, center);
        g[i] = e.gamma;
    }
    if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2])
        throw ArgumentError("star at " + center + " has repeated neighbours");
    Rational sum = g[0] + g[1] + g[2];
    if (sum.is_zero()) throw DegeneracyError("star-triangle: gamma1 + gamma2 + gamma3 vanishes at " + center);

    PlaneNetwork out = net;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        out.edges[legs[i]] = Edge{a[j], a[k], g[j] * g[k] / sum};
    }
    for (int i = 0; i < 3; ++i) {
        int next = legs[(i + 2) % 3];  // edge a_i -> a_{i+1} is opposite a_{i+2}
        int prev = legs[(i + 1) % 3];
        replace_in_rotation(out.rotation.at(a[i]), legs[i], {next, prev});
    }
    out.rotation.erase(center);
    check_response_invariance(net, out);
    return out;
}

PlaneNetwork triangle_to_star(const PlaneNetwork& net, const std::vector<int>& tri,
                              const std::optional<std::string>& center) {
    auto face = triangle_face(net, tri);
    if (!face) throw ArgumentError("edges do not bound a triangular face");
    std::string c = center ? *center : fresh_id(net);
    auto verts = net.vertices();
    if (std::find(verts.begin(), verts.end(), c) != verts.end())
        throw ArgumentError("center id " + c + " already in use");
    Rational g[3];
    for (int i = 0; i < 3; ++i) g[i] = net.edges[face->opposite[i]].gamma;
    Rational s = g[0] * g[1] + g[0] * g[2] + g[1] * g[2];
    if (s.is_zero())
        throw DegeneracyError("triangle-star: gamma1*gamma2 + gamma1*gamma3 + gamma2*gamma3 vanishes");

    PlaneNetwork out = net;
    std::vector<int> legs(3);
    for (int i = 0; i < 3; ++i) {
        legs[i] = face->opposite[i];
        out.edges[legs[i]] = Edge{face->a[i], c, s / g[i]};
    }
    for (int i = 0; i < 3; ++i) {
        auto& lst = out.rotation.at(face->a[i]);
        int next = face->opposite[(i + 2) % 3];
        auto it = std::find(lst.begin(), lst.end(), next);
        bool wrapped = std::next(it) == lst.end();
        *it = legs[i];
        if (wrapped) lst.erase(lst.begin());
        else lst.erase(std::next(it));
    }
    out.rotation[c] = legs;
    check_response_invariance(net, out);
    return out;
}

PlaneNetwork star_triangle_mutate(const PlaneNetwork& net, const MutationSite& site) {
    if (site.vertex) return star_to_triangle(net, *site.vertex);
    return triangle_to_star(net, site.triangle, site.new_center);
}

std::vector<MutationSite> mutable_sites(const PlaneNetwork& net) {
    std::vector<MutationSite> out;
    for (const auto& v : net.vertices()) {
        if (net.is_boundary(v)) continue;
        auto it = net.rotation.find(v);
        if (it == net.rotation.end() || it->second.size() != 3) continue;
        std::set<std::string> nb;
        for (int k : it->second) nb.insert(other_end(net.edges[k], v));
        if (nb.size() == 3 && !nb.count(v)) out.push_back({v, {}, {}});
    }
    int m = static_cast<int>(net.edges.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                if (triangle_face(net, {a, b, c})) out.push_back({std::nullopt, {a, b, c}, {}});
    return out;
}

PlaneNetwork triangle_network(const Rational& a, const Rational& b, const Rational& c) {
    PlaneNetwork n;
    n.boundary = {"1", "2", "3"};
    n.edges = {{"2", "3", a}, {"1", "3", b}, {"1", "2", c}};
    n.rotation = {{"1", {2, 1}}, {"2", {0, 2}}, {"3", {1, 0}}};
    return n;
}

PlaneNetwork star_network(const Rational& a, const Rational& b, const Rational& c) {
    PlaneNetwork n;
    n.boundary = {"1", "2", "3"};
    n.edges = {{"1", "c", a}, {"2", "c", b}, {"3", "c", c}};
    n.rotation = {{"1", {0}}, {"2", {1}}, {"3", {2}}, {"c", {0, 1, 2}}};
    return n;
}

}  // namespace elnet
