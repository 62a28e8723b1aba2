#pragma once

#include "elnet/network.hpp"

#include <string>
#include <utility>
#include <vector>

namespace elnet {

enum class Color { black, white };
char color_char(Color c);
Color flip(Color c);
// Parity rule for standard graphs: strands i<j cross black iff i+j is even.
Color parity_color(int i, int j);

struct Crossing {
    int lo, hi;  // strand labels, 1-based, lo < hi
    Color color;
};

// Generic acyclic crossing diagram. strand_path[s-1] lists the crossings met
// by strand s in flow order.
struct CrossingDiagram {
    int n_strands = 0;
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> strand_path;
};

struct WiringDiagram {
    int n_strands = 0;
    std::vector<int> word;  // levels in [1, n_strands-1]
    std::vector<Color> colors;

    friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;
};

// A medial endpoint is either a boundary stub t_k (1-based) or a crossing
// (indexed by the network edge it sits on).
struct MedialEnd {
    bool stub;
    int id;
};

struct MedialGraph {
    int n_boundary = 0;                         // n; stubs are t_1..t_2n
    std::vector<std::pair<int, int>> strands;   // (source stub, sink stub), by source
    std::vector<std::pair<MedialEnd, MedialEnd>> edges;
    CrossingDiagram diagram;                    // crossing k sits on network edge k
    std::vector<int> vertex_order;
};

WiringDiagram wiring_from_word(const std::vector<int>& word, int n_strands);
std::vector<int> standard_word(int n);
// Strand pair (i,j) crossing at each position of the word.
std::vector<std::pair<int, int>> word_pairs(const std::vector<int>& word, int n_strands);
bool is_reduced(const std::vector<int>& word, int n_strands);

CrossingDiagram to_crossings(const WiringDiagram& d);

// Sigma_N with conductance gamma on the edge of crossing (i,j); boundary ids "1".."N".
PlaneNetwork standard_graph(int n);
PlaneNetwork standard_graph(int n, const std::vector<Rational>& gamma_by_word_position);

MedialGraph medial_of_network(const PlaneNetwork& net);

// Linear extension of the strand-flow order, smallest index first among ties.
std::vector<int> crossing_order(const CrossingDiagram& d);
std::vector<int> crossing_order(const WiringDiagram& d);
std::vector<int> crossing_order(const MedialGraph& m);

// Sweeps the medial arrangement into a word; throws ArgumentError when the
// strands are not a wiring diagram with sources 1..n in level order.
WiringDiagram wiring_from_medial(const MedialGraph& m);

WiringDiagram parse_wiring(const std::string& text);
std::string format_wiring(const WiringDiagram& d);

}  // namespace elnet
