#include "elnet/vertex_model.hpp"

#include <cstdlib>
#include <sstream>

namespace elnet {

std::array<Rational, 3> local_yb_transform(YbKind kind, const Rational& p1, const Rational& p2,
                                           const Rational& p3) {
    switch (kind) {
    case YbKind::phi: {
        Rational d = p1 + p3 - p1 * p2 * p3;
        if (d.is_zero()) throw DegeneracyError("phi map: D = p1 + p3 - p1*p2*p3 vanishes");
        return {p1 * p2 / d, d, p3 * p2 / d};
    }
    case YbKind::electrical: {
        Rational s = p1 + p2 + p3;
        if (s.is_zero()) throw DegeneracyError("electrical map: R1 + R2 + R3 vanishes");
        if (p1.is_zero() || p2.is_zero() || p3.is_zero()) throw DegeneracyError("electrical map: zero resistance");
        Rational p = p1 * p2 * p3 / s;
        return {p / p1, p / p2, p / p3};
    }
    case YbKind::lusztig: {
        Rational d = p1 + p3;
        if (d.is_zero()) throw DegeneracyError("lusztig map: D = t1 + t3 vanishes");
        return {p2 * p3 / d, d, p1 * p2 / d};
    }
    case YbKind::phi_check: {
        Rational d = p1 + p3 - p1 * p2 * p3;
        if (d.is_zero()) throw DegeneracyError("phi_check map: D = r1 + r3 - r1*r2*r3 vanishes");
        return {p3 * p2 / d, d, p1 * p2 / d};
    }
    }
    throw ArgumentError("unknown transform kind");
}

namespace {

LocalOperator<Rational> weight_for(Color c, const Rational& gamma) {
    if (c == Color::white && gamma.is_zero()) throw ParameterError("white crossing needs a nonzero parameter");
    return {c == Color::black ? OpKind::phi : OpKind::psi, gamma};
}

}  // namespace

VertexModel<Rational> vertex_model(const WiringDiagram& d, const std::vector<Rational>& gamma) {
    if (gamma.size() != d.word.size()) throw ArgumentError("model needs one parameter per letter");
    VertexModel<Rational> m;
    m.diagram = to_crossings(d);
    for (std::size_t k = 0; k < gamma.size(); ++k) m.weights.push_back(weight_for(d.colors[k], gamma[k]));
    m.wiring = d;
    return m;
}

VertexModel<Rational> vertex_model(const MedialGraph& mg, const std::vector<Rational>& gamma) {
    if (gamma.size() != mg.diagram.crossings.size()) throw ArgumentError("model needs one parameter per crossing");
    VertexModel<Rational> m;
    m.diagram = mg.diagram;
    for (std::size_t k = 0; k < gamma.size(); ++k)
        m.weights.push_back(weight_for(mg.diagram.crossings[k].color, gamma[k]));
    return m;
}

VertexModel<Rational> vertex_model(const PlaneNetwork& net) {
    std::vector<Rational> g;
    for (const auto& e : net.edges) g.push_back(e.gamma);
    return vertex_model(medial_of_network(net), g);
}

std::vector<Rational> model_params(const VertexModel<Rational>& model) {
    std::vector<Rational> p;
    for (const auto& w : model.weights) p.push_back(w.param);
    return p;
}

VertexModel<Rational> yb_mutate(const VertexModel<Rational>& model, int position) {
    if (!model.wiring) throw ArgumentError("braid moves need a word-based model");
    WiringDiagram d = *model.wiring;
    int k = position - 1;
    if (k < 0 || k + 2 >= static_cast<int>(d.word.size()))
        throw ArgumentError("braid position " + std::to_string(position) + " out of range");
    int h = d.word[k], g = d.word[k + 1];
    if (d.word[k + 2] != h || std::abs(h - g) != 1)
        throw ArgumentError("no braid pattern (h, h+-1, h) at position " + std::to_string(position));
    auto pairs = word_pairs(d.word, d.n_strands);
    int p = pairs[k].first, r = pairs[k].second;
    for (int t = 1; t < 3; ++t) {
        p = std::min(p, pairs[k + t].first);
        r = std::max(r, pairs[k + t].second);
    }
    // slot 0: pq, 1: pr, 2: qr
    auto slot_of = [&](std::pair<int, int> pr) { return pr.first != p ? 2 : (pr.second == r ? 1 : 0); };
    std::array<Rational, 3> x;
    std::array<Color, 3> col{};
    for (int t = 0; t < 3; ++t) {
        const auto& w = model.weights[k + t];
        int s = slot_of(pairs[k + t]);
        col[s] = d.colors[k + t];
        x[s] = w.kind == OpKind::phi ? w.param : -w.param.inverse();
    }
    auto y = local_yb_transform(YbKind::phi, x[0], x[1], x[2]);

    d.word[k] = d.word[k + 2] = g;
    d.word[k + 1] = h;
    auto new_pairs = word_pairs(d.word, d.n_strands);
    std::vector<Rational> params = model_params(model);
    for (int t = 0; t < 3; ++t) {
        int s = slot_of(new_pairs[k + t]);
        Color c = flip(col[s]);
        d.colors[k + t] = c;
        if (c == Color::black) params[k + t] = y[s];
        else {
            if (y[s].is_zero()) throw DegeneracyError("braid move produces a zero phi parameter");
            params[k + t] = -y[s].inverse();
        }
    }
    return vertex_model(d, params);
}

VertexModel<Rational> commute_move(const VertexModel<Rational>& model, int position) {
    if (!model.wiring) throw ArgumentError("commutation moves need a word-based model");
    WiringDiagram d = *model.wiring;
    int k = position - 1;
    if (k < 0 || k + 1 >= static_cast<int>(d.word.size()))
        throw ArgumentError("commutation position " + std::to_string(position) + " out of range");
    if (std::abs(d.word[k] - d.word[k + 1]) < 2)
        throw ArgumentError("letters at position " + std::to_string(position) + " do not commute");
    auto params = model_params(model);
    std::swap(d.word[k], d.word[k + 1]);
    std::swap(d.colors[k], d.colors[k + 1]);
    std::swap(params[k], params[k + 1]);
    return vertex_model(d, params);
}

VertexModel<Rational> parse_model(const std::string& text) {
    std::istringstream in(text);
    std::string line, block;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    if (lines.size() < 4) throw ParseError("model needs a wiring block and a params line", lines.size() + 1, 1);
    for (int i = 0; i < 3; ++i) block += lines[i] + "\n";
    auto d = parse_wiring(block);
    const std::string& pl = lines[3];
    if (pl.rfind("params", 0) != 0) throw ParseError("expected 'params'", 4, 1);
    std::vector<Rational> params;
    std::size_t i = 6;
    while (i < pl.size()) {
        if (pl[i] == ' ' || pl[i] == '\t' || pl[i] == '\r') { ++i; continue; }
        std::size_t j = i;
        while (j < pl.size() && pl[j] != ' ' && pl[j] != '\t' && pl[j] != '\r') ++j;
        params.push_back(parse_rational(std::string_view(pl).substr(i, j - i), 4, i + 1));
        i = j;
    }
    if (params.size() != d.word.size()) throw ParseError("parameter count differs from word length", 4, 1);
    try {
        return vertex_model(d, params);
    } catch (const ParameterError& e) {
        throw ParseError(e.what(), 4, 1);
    }
}

std::string format_model(const VertexModel<Rational>& model) {
    if (!model.wiring) throw ArgumentError("only word-based models have a text form");
    std::string s = format_wiring(*model.wiring) + "params";
    for (const auto& w : model.weights) s += " " + w.param.str();
    return s + "\n";
}

}  // namespace elnet
