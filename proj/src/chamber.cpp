#include "elnet/chamber.hpp"

#include "elnet/errors.hpp"
#include "elnet/medial.hpp"
#include "elnet/vertex_model.hpp"

#include <cstdlib>
#include <deque>

namespace elnet {

ReducedWord reduced_word(int n, const std::vector<int>& letters) {
    if (n < 2) throw SizeError("reduced word needs n >= 2");
    if (static_cast<int>(letters.size()) != n * (n - 1) / 2 || !is_reduced(letters, n))
        throw ArgumentError("not a reduced word for the longest permutation");
    return {n, letters};
}

ChamberData chamber_data(const ReducedWord& h, int k) {
    int m = static_cast<int>(h.letters.size());
    if (k < 1 || k > m) throw IndexError("chamber position out of range");
    int hk = h.letters[k - 1];
    auto s = [](int a, int v) { return v == a ? a + 1 : (v == a + 1 ? a : v); };
    ChamberData d{{}, hk, hk + 1};
    for (int v = 1; v < hk; ++v) d.L.insert(v);
    for (int t = k; t < m; ++t) {
        int a = h.letters[t];
        Subset next;
        for (int v : d.L) next.insert(s(a, v));
        d.L = next;
        d.i = s(a, d.i);
        d.j = s(a, d.j);
    }
    return d;
}

std::set<Subset> chamber_sets(const ReducedWord& h) {
    std::set<Subset> out;
    for (int k = 1; k <= static_cast<int>(h.letters.size()); ++k) {
        auto d = chamber_data(h, k);
        Subset li = d.L, lj = d.L, lij = d.L;
        li.insert(d.i);
        lj.insert(d.j);
        lij.insert(d.i);
        lij.insert(d.j);
        out.insert({d.L, li, lj, lij});
    }
    return out;
}

bool is_normalized(const Subset& s) {
    int b = 0;
    for (int v : s)
        if (v != ++b) return false;
    return true;
}

std::vector<Rational> ansatz_forward(const ChamberVars& mv, const ReducedWord& h) {
    auto get = [&](const Subset& s) {
        auto it = mv.find(s);
        if (it == mv.end()) throw EvaluationError("missing chamber variable M_" + subset_str(s));
        return it->second;
    };
    std::vector<Rational> out;
    for (int k = 1; k <= static_cast<int>(h.letters.size()); ++k) {
        auto d = chamber_data(h, k);
        Subset li = d.L, lj = d.L, lij = d.L;
        li.insert(d.i);
        lj.insert(d.j);
        lij.insert({d.i, d.j});
        Rational den = get(li) * get(lj);
        if (den.is_zero()) throw EvaluationError("zero denominator M_" + subset_str(li) + " M_" + subset_str(lj));
        out.push_back(get(d.L) * get(lij) / den);
    }
    return out;
}

ChamberVars ansatz_inverse(const std::vector<Rational>& chart, const ReducedWord& h) {
    if (chart.size() != h.letters.size()) throw ArgumentError("chart length differs from word length");
    for (const auto& t : chart)
        if (t.is_zero()) throw ParameterError("chart values must be nonzero");
    std::vector<ChamberData> data;
    for (int k = 1; k <= static_cast<int>(chart.size()); ++k) data.push_back(chamber_data(h, k));
    ChamberVars mv;
    for (const auto& J : chamber_sets(h)) {
        Rational v(1);
        for (std::size_t k = 0; k < data.size(); ++k)
            if (J.count(data[k].j) && !J.count(data[k].i)) v /= chart[k];
        mv[J] = v;
    }
    return mv;
}

bool check_relation(const ChamberVars& mv, Relation variant, int i, int j, int k, const Subset& L) {
    if (!(i < j && j < k)) throw ArgumentError("check_relation needs i < j < k");
    if (L.count(i) || L.count(j) || L.count(k)) throw ArgumentError("L must avoid i, j, k");
    auto get = [&](std::initializer_list<int> extra) {
        Subset s = L;
        s.insert(extra);
        auto it = mv.find(s);
        if (it == mv.end()) throw EvaluationError("missing chamber variable M_" + subset_str(s));
        return it->second;
    };
    Rational lhs = get({i, k}) * get({j});
    Rational rhs = get({i, j}) * get({k}) + get({j, k}) * get({i});
    if (variant == Relation::four_term) rhs += get({}) * get({i, j, k});
    return lhs == rhs;
}

Chart braid_chart(const Chart& c, Gluing g, int position) {
    int k = position - 1;
    const auto& w = c.word.letters;
    if (k < 0 || k + 2 >= static_cast<int>(w.size()) || w[k] != w[k + 2] || std::abs(w[k] - w[k + 1]) != 1)
        throw ArgumentError("no braid pattern at position " + std::to_string(position));
    const Rational &a = c.values[k], &b = c.values[k + 1], &cc = c.values[k + 2];
    auto t = local_yb_transform(g == Gluing::lusztig ? YbKind::lusztig : YbKind::phi_check, cc, b, a);
    Chart out = c;
    out.word.letters[k] = out.word.letters[k + 2] = w[k + 1];
    out.word.letters[k + 1] = w[k];
    out.values[k] = t[2];
    out.values[k + 1] = t[1];
    out.values[k + 2] = t[0];
    return out;
}

Chart commute_chart(const Chart& c, int position) {
    int k = position - 1;
    const auto& w = c.word.letters;
    if (k < 0 || k + 1 >= static_cast<int>(w.size()) || std::abs(w[k] - w[k + 1]) < 2)
        throw ArgumentError("no commutation at position " + std::to_string(position));
    Chart out = c;
    std::swap(out.word.letters[k], out.word.letters[k + 1]);
    std::swap(out.values[k], out.values[k + 1]);
    return out;
}

std::vector<Rational> sign_gauge(const std::vector<Rational>& chart, const ReducedWord& h) {
    std::vector<Rational> out = chart;
    for (std::size_t k = 0; k < out.size(); ++k)
        if (chamber_data(h, static_cast<int>(k) + 1).L.size() % 2) out[k] = -out[k];
    return out;
}

ChamberVars chart_vars(const Chart& c, Gluing g) {
    return ansatz_inverse(g == Gluing::phi_check ? sign_gauge(c.values, c.word) : c.values, c.word);
}

ChamberVars glued_vars(const Chart& start, Gluing g) {
    std::map<std::vector<int>, bool> seen;
    std::deque<Chart> todo{start};
    seen[start.word.letters] = true;
    ChamberVars merged;
    while (!todo.empty()) {
        Chart c = todo.front();
        todo.pop_front();
        for (const auto& [s, v] : chart_vars(c, g)) {
            auto [it, fresh] = merged.emplace(s, v);
            if (!fresh && it->second != v)
                throw ConsistencyError("charts disagree on M_" + subset_str(s));
        }
        int m = static_cast<int>(c.word.letters.size());
        for (int p = 1; p <= m; ++p) {
            std::vector<Chart> next;
            const auto& w = c.word.letters;
            if (p + 2 <= m && w[p - 1] == w[p + 1] && std::abs(w[p - 1] - w[p]) == 1)
                next.push_back(braid_chart(c, g, p));
            if (p + 1 <= m && std::abs(w[p - 1] - w[p]) >= 2) next.push_back(commute_chart(c, p));
            for (auto& x : next)
                if (!seen[x.word.letters]) {
                    seen[x.word.letters] = true;
                    todo.push_back(std::move(x));
                }
        }
    }
    return merged;
}

std::string subset_str(const Subset& s) {
    if (s.empty()) return "{}";
    std::string out;
    for (int v : s) out += std::to_string(v);
    return out;
}

Subset parse_subset(const std::string& s) {
    Subset out;
    if (s == "{}") return out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < '1' || s[k] > '9') throw ParseError("subset must be digits 1-9 or {}", 1, k + 1);
        out.insert(s[k] - '0');
    }
    return out;
}

std::string format_chamber_vars(const ChamberVars& mv) {
    std::string out;
    for (const auto& [s, v] : mv) out += subset_str(s) + " " + v.str() + "\n";
    return out;
}

}  // namespace elnet
