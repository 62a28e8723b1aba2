#include "elnet/standard.hpp"

#include <mutex>

namespace elnet {

namespace {

struct Step {
    std::string var;
    StrandPair pair;
    std::size_t row, col;
};

struct Schedule {
    PMatrix mb;  // symbolic M_B in the phi parameters p_ij
    std::vector<Step> steps;
};

std::string var_name(StrandPair p) { return "p" + std::to_string(p.first) + "_" + std::to_string(p.second); }

// Greedy elimination: repeatedly pick the first entry (row-major) whose only
// unsolved variable occurs linearly. Derived once per N and cached.
Schedule derive(int n) {
    auto word = standard_word(n);
    auto pairs = word_pairs(word, n);
    VertexModel<MPoly> model;
    WiringDiagram d{n, word, std::vector<Color>(word.size(), Color::black)};
    model.diagram = to_crossings(d);
    for (auto pr : pairs) model.weights.push_back({OpKind::phi, MPoly::var(var_name(pr))});
    Schedule s{partition_product(model), {}};

    std::map<std::string, StrandPair> unsolved;
    for (auto pr : pairs) unsolved[var_name(pr)] = pr;
    std::vector<std::set<std::string>> vars(n * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) vars[r * n + c] = s.mb(r, c).variables();
    while (!unsolved.empty()) {
        bool found = false;
        for (int r = 0; r < n && !found; ++r)
            for (int c = 0; c < n && !found; ++c) {
                std::vector<std::string> open;
                for (const auto& v : vars[r * n + c])
                    if (unsolved.count(v)) open.push_back(v);
                if (open.size() != 1 || s.mb(r, c).degree_in(open[0]) != 1) continue;
                s.steps.push_back({open[0], unsolved[open[0]], static_cast<std::size_t>(r),
                                   static_cast<std::size_t>(c)});
                unsolved.erase(open[0]);
                found = true;
            }
        if (!found) throw InversionError("no triangular elimination order for N=" + std::to_string(n));
    }
    return s;
}

const Schedule& schedule(int n) {
    static std::mutex mu;
    static std::map<int, Schedule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, derive(n)).first;
    return it->second;
}

}  // namespace

StandardNetwork invert_conductances(const QMatrix& mb, int n) {
    if (n < 2) throw SizeError("inverse problem needs N >= 2");
    if (mb.rows() != static_cast<std::size_t>(n) || mb.cols() != static_cast<std::size_t>(n))
        throw ShapeError("M_B must be " + std::to_string(n) + "x" + std::to_string(n));
    const Schedule& s = schedule(n);
    std::map<std::string, Rational> known;
    StandardNetwork net{n, {}};
    for (const auto& st : s.steps) {
        const MPoly& e = s.mb(st.row, st.col);
        known[st.var] = 0;
        Rational b = e.evaluate(known);
        known[st.var] = 1;
        Rational a = e.evaluate(known) - b;
        std::string where = "entry (" + std::to_string(st.row + 1) + "," + std::to_string(st.col + 1) + ")";
        if (a.is_zero()) throw InversionError(where + " does not determine " + st.var);
        Rational p = (mb(st.row, st.col) - b) / a;
        known[st.var] = p;
        auto [i, j] = st.pair;
        if (p.is_zero()) throw InversionError(where + " forces a zero conductance");
        net.gamma[st.pair] = (i + j) % 2 == 0 ? p : -p.inverse();
    }
    QMatrix check = mb_standard(net);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (check(r, c) != mb(r, c))
                throw InversionError("no exact solution: entry (" + std::to_string(r + 1) + "," +
                                     std::to_string(c + 1) + ") is " + mb(r, c).str() + ", solution gives " +
                                     check(r, c).str());
    return net;
}

}  // namespace elnet
