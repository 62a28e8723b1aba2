#include "elnet/medial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace elnet {

char color_char(Color c) { return c == Color::black ? 'b' : 'w'; }
Color flip(Color c) { return c == Color::black ? Color::white : Color::black; }
Color parity_color(int i, int j) { return (i + j) % 2 == 0 ? Color::black : Color::white; }

std::vector<std::pair<int, int>> word_pairs(const std::vector<int>& word, int n_strands) {
    std::vector<int> lv(n_strands);
    for (int i = 0; i < n_strands; ++i) lv[i] = i + 1;
    std::vector<std::pair<int, int>> out;
    for (int h : word) {
        if (h < 1 || h >= n_strands)
            throw ArgumentError("level " + std::to_string(h) + " out of range for " +
                                std::to_string(n_strands) + " strands");
        int a = lv[h - 1], b = lv[h];
        out.emplace_back(std::min(a, b), std::max(a, b));
        std::swap(lv[h - 1], lv[h]);
    }
    return out;
}

bool is_reduced(const std::vector<int>& word, int n_strands) {
    auto ps = word_pairs(word, n_strands);
    std::set<std::pair<int, int>> seen(ps.begin(), ps.end());
    return seen.size() == ps.size();
}

WiringDiagram wiring_from_word(const std::vector<int>& word, int n_strands) {
    if (n_strands < 1) throw SizeError("wiring diagram needs at least one strand");
    auto ps = word_pairs(word, n_strands);
    std::set<std::pair<int, int>> seen;
    WiringDiagram d{n_strands, word, {}};
    for (auto [i, j] : ps) {
        if (!seen.insert({i, j}).second)
            throw ArgumentError("word is not reduced: strands " + std::to_string(i) + "," +
                                std::to_string(j) + " cross twice");
        d.colors.push_back(parity_color(i, j));
    }
    return d;
}

std::vector<int> standard_word(int n) {
    if (n < 2) throw SizeError("standard graph needs N >= 2");
    std::vector<int> w;
    for (int top = n - 1; top >= 1; --top)
        for (int h = 1; h <= top; ++h) w.push_back(h);
    return w;
}

CrossingDiagram to_crossings(const WiringDiagram& d) {
    if (d.colors.size() != d.word.size()) throw ArgumentError("colors and word differ in length");
    CrossingDiagram c;
    c.n_strands = d.n_strands;
    c.strand_path.assign(d.n_strands, {});
    auto ps = word_pairs(d.word, d.n_strands);
    for (std::size_t k = 0; k < ps.size(); ++k) {
        c.crossings.push_back({ps[k].first, ps[k].second, d.colors[k]});
        c.strand_path[ps[k].first - 1].push_back(static_cast<int>(k));
        c.strand_path[ps[k].second - 1].push_back(static_cast<int>(k));
    }
    return c;
}

std::vector<int> crossing_order(const CrossingDiagram& d) {
    std::size_t m = d.crossings.size();
    std::vector<std::vector<int>> succ(m);
    std::vector<int> indeg(m, 0);
    for (const auto& path : d.strand_path)
        for (std::size_t k = 1; k < path.size(); ++k) {
            succ[path[k - 1]].push_back(path[k]);
            ++indeg[path[k]];
        }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (std::size_t k = 0; k < m; ++k)
        if (!indeg[k]) ready.push(static_cast<int>(k));
    std::vector<int> out;
    while (!ready.empty()) {
        int k = ready.top();
        ready.pop();
        out.push_back(k);
        for (int s : succ[k])
            if (!--indeg[s]) ready.push(s);
    }
    if (out.size() != m) throw EmbeddingError("crossing diagram has a directed cycle");
    return out;
}

std::vector<int> crossing_order(const WiringDiagram& d) { return crossing_order(to_crossings(d)); }
std::vector<int> crossing_order(const MedialGraph& m) { return m.vertex_order; }

WiringDiagram wiring_from_medial(const MedialGraph& m) {
    const auto& d = m.diagram;
    std::vector<int> level_of(d.n_strands + 1);
    std::vector<int> at_level(d.n_strands + 1);
    for (int s = 1; s <= d.n_strands; ++s) level_of[s] = at_level[s] = s;
    WiringDiagram w;
    w.n_strands = d.n_strands;
    for (int k : m.vertex_order) {
        const auto& c = d.crossings[k];
        int a = level_of[c.lo], b = level_of[c.hi];
        if (std::abs(a - b) != 1)
            throw ArgumentError("medial graph is not a wiring diagram (strands " + std::to_string(c.lo) +
                                "," + std::to_string(c.hi) + " not adjacent)");
        int h = std::min(a, b);
        w.word.push_back(h);
        w.colors.push_back(c.color);
        std::swap(at_level[h], at_level[h + 1]);
        level_of[at_level[h]] = h;
        level_of[at_level[h + 1]] = h + 1;
    }
    if (!is_reduced(w.word, w.n_strands)) throw ArgumentError("medial wiring word is not reduced");
    return w;
}

WiringDiagram parse_wiring(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    if (lines.size() < 3) throw ParseError("wiring diagram needs 3 lines", lines.size() + 1, 1);
    std::istringstream head(lines[0]);
    std::string kw;
    int n = 0;
    if (!(head >> kw >> n) || kw != "strands" || n < 1) throw ParseError("expected 'strands N'", 1, 1);
    std::vector<int> word;
    std::size_t col = 0;
    while (col < lines[1].size()) {
        if (lines[1][col] == ' ' || lines[1][col] == '\t') { ++col; continue; }
        std::size_t end = col;
        while (end < lines[1].size() && std::isdigit(static_cast<unsigned char>(lines[1][end]))) ++end;
        if (end == col) throw ParseError("expected a level", 2, col + 1);
        int h = std::stoi(lines[1].substr(col, end - col));
        if (h < 1 || h >= n) throw ParseError("level out of range", 2, col + 1);
        word.push_back(h);
        col = end;
    }
    std::vector<Color> colors;
    for (std::size_t k = 0; k < lines[2].size(); ++k) {
        char ch = lines[2][k];
        if (ch == ' ' || ch == '\t') continue;
        if (ch == 'b') colors.push_back(Color::black);
        else if (ch == 'w') colors.push_back(Color::white);
        else throw ParseError("color must be b or w", 3, k + 1);
    }
    if (colors.size() != word.size()) throw ParseError("color count differs from word length", 3, 1);
    if (!is_reduced(word, n)) throw ParseError("word is not reduced", 2, 1);
    return {n, word, colors};
}

std::string format_wiring(const WiringDiagram& d) {
    std::string s = "strands " + std::to_string(d.n_strands) + "\n";
    for (std::size_t k = 0; k < d.word.size(); ++k) s += (k ? " " : "") + std::to_string(d.word[k]);
    s += "\n";
    for (std::size_t k = 0; k < d.colors.size(); ++k) {
        if (k) s += ' ';
        s += color_char(d.colors[k]);
    }
    return s + "\n";
}

}  // namespace elnet
