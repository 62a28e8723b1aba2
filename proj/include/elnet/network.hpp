#pragma once

#include "elnet/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace elnet {

struct Edge {
    std::string u, v;
    Rational gamma;
};

// Plane network: boundary in clockwise circle order, explicit rotation system.
// Rotation at an interior vertex is a clockwise cyclic list of edge indices.
// At boundary vertex v_i it is a linear clockwise list that starts just after
// the gap facing v_{i+1} and ends just before the gap facing v_{i-1}.
struct PlaneNetwork {
    std::vector<std::string> boundary;
    std::vector<Edge> edges;
    std::map<std::string, std::vector<int>> rotation;

    // Boundary first, then interior vertices by first appearance in the edge list.
    std::vector<std::string> vertices() const;
    bool is_boundary(const std::string& v) const;
    int boundary_index(const std::string& v) const;  // 0-based, -1 if interior

    // Interior rotations rotated to start at their smallest edge index.
    PlaneNetwork canonical() const;
};

// Edges compare as unordered pairs; rotations compare after canonicalisation.
bool operator==(const PlaneNetwork& a, const PlaneNetwork& b);

QMatrix kirchhoff(const PlaneNetwork& net, const std::vector<std::string>& order);
QMatrix response(const PlaneNetwork& net);
std::vector<std::string> validate(const PlaneNetwork& net);

// Star at an interior degree-3 vertex becomes a triangle.
PlaneNetwork star_to_triangle(const PlaneNetwork& net, const std::string& center);
// Triangle given by three edge indices bounding a face becomes a star.
PlaneNetwork triangle_to_star(const PlaneNetwork& net, const std::vector<int>& tri,
                              const std::optional<std::string>& center = std::nullopt);

struct MutationSite {
    std::optional<std::string> vertex;
    std::vector<int> triangle;
    std::optional<std::string> new_center;
};
PlaneNetwork star_triangle_mutate(const PlaneNetwork& net, const MutationSite& site);

// Every mutable site of the network: interior degree-3 vertices and triangular faces.
std::vector<MutationSite> mutable_sites(const PlaneNetwork& net);

PlaneNetwork parse_network(const std::string& text);
std::string format_network(const PlaneNetwork& net);

PlaneNetwork triangle_network(const Rational& a, const Rational& b, const Rational& c);
PlaneNetwork star_network(const Rational& a, const Rational& b, const Rational& c);

}  // namespace elnet
