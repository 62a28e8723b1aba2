#include "elnet/network.hpp"

#include <json.hpp>

namespace elnet {

namespace {

using json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return {line, col};
}

// The DOM keeps no positions, so semantic errors are located by scanning for
// the nth occurrence of a quoted key, starting at byte `from`.
std::size_t value_at(const std::string& text, const std::string& key, std::size_t nth, std::size_t from = 0) {
    std::string q = "\"" + key + "\"";
    std::size_t p = from;
    for (std::size_t k = 0; k <= nth; ++k) {
        p = text.find(q, k ? p + 1 : p);
        if (p == std::string::npos) return from;
    }
    p = text.find(':', p + q.size());
    if (p == std::string::npos) return from;
    p = text.find_first_not_of(" \t\r\n", p + 1);
    return p == std::string::npos ? from : p;
}

[[noreturn]] void fail_at(const std::string& text, std::size_t byte, const std::string& what) {
    auto [l, c] = line_col(text, byte);
    throw ParseError(what, l, c);
}

std::string id_of(const json& j, const char* what, const std::string& text, std::size_t byte) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    fail_at(text, byte, std::string(what) + " must be a string or integer id");
}

}  // namespace

PlaneNetwork parse_network(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [l, c] = line_col(text, e.byte ? e.byte - 1 : 0);
        throw ParseError("malformed network file", l, c);
    }
    if (!doc.is_object() || !doc.contains("boundary") || !doc.contains("edges") || !doc.contains("rotation"))
        throw ParseError("network needs fields boundary, edges, rotation", 1, 1);
    PlaneNetwork net;
    std::size_t at_b = value_at(text, "boundary", 0), at_e = value_at(text, "edges", 0), at_r = value_at(text, "rotation", 0);
    if (!doc["boundary"].is_array()) fail_at(text, at_b, "boundary must be a list");
    for (const auto& b : doc["boundary"]) net.boundary.push_back(id_of(b, "boundary entry", text, at_b));
    if (!doc["edges"].is_array()) fail_at(text, at_e, "edges must be a list");
    std::size_t k = 0;
    for (const auto& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("gamma"))
            fail_at(text, at_e, "edge " + std::to_string(k) + " needs u, v, gamma");
        std::size_t at_g = value_at(text, "gamma", k, at_e);
        const auto& g = e["gamma"];
        std::string gs;
        if (g.is_string()) gs = g.get<std::string>();
        else if (g.is_number_integer()) gs = std::to_string(g.get<long long>());
        else fail_at(text, at_g, "gamma must be \"p/q\"");
        auto [l, c] = line_col(text, at_g);
        Rational gamma = parse_rational(gs, l, c + (g.is_string() ? 1 : 0));
        net.edges.push_back({id_of(e["u"], "u", text, value_at(text, "u", k, at_e)),
                             id_of(e["v"], "v", text, value_at(text, "v", k, at_e)), gamma});
        ++k;
    }
    if (!doc["rotation"].is_object()) fail_at(text, at_r, "rotation must map ids to edge lists");
    for (const auto& [v, lst] : doc["rotation"].items()) {
        std::size_t at_v = value_at(text, v, 0, at_r);
        if (!lst.is_array()) fail_at(text, at_v, "rotation at " + v + " must be a list");
        std::vector<int> r;
        for (const auto& x : lst) {
            if (!x.is_number_integer()) fail_at(text, at_v, "rotation entries must be edge indices");
            int idx = x.get<int>();
            if (idx < 0 || idx >= static_cast<int>(net.edges.size()))
                fail_at(text, at_v, "rotation at " + v + " names unknown edge " + std::to_string(idx));
            r.push_back(idx);
        }
        net.rotation[v] = r;
    }
    return net;
}

std::string format_network(const PlaneNetwork& net) {
    nlohmann::ordered_json doc;
    doc["boundary"] = net.boundary;
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : net.edges) {
        nlohmann::ordered_json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["gamma"] = e.gamma.str();
        doc["edges"].push_back(je);
    }
    nlohmann::ordered_json rot = nlohmann::ordered_json::object();
    for (const auto& v : net.vertices()) {
        auto it = net.rotation.find(v);
        if (it != net.rotation.end()) rot[v] = it->second;
    }
    doc["rotation"] = rot;
    return doc.dump(2) + "\n";
}

}  // namespace elnet
