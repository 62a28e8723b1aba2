#pragma once

#include "elnet/matrix.hpp"
#include "elnet/medial.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace elnet {

enum class OpKind { phi, psi, phi_check, lusztig };

template <class R>
struct LocalOperator {
    OpKind kind;
    R param;
};

template <class R>
Matrix<R> local_operator(OpKind kind, const R& p) {
    const R one(1);
    switch (kind) {
    case OpKind::phi:
        return {{p, one + p}, {one - p, R(0) - p}};
    case OpKind::psi: {
        if (p == R(0)) throw ParameterError("psi(0) is undefined");
        R inv = inverse_of(p);
        return {{R(0) - inv, one - inv}, {one + inv, inv}};
    }
    case OpKind::phi_check:
        return {{one - p, R(0) - p}, {p, one + p}};
    case OpKind::lusztig:
        return {{one, p}, {R(0), one}};
    }
    throw ArgumentError("unknown operator kind");
}

template <class R>
Matrix<R> local_operator(const LocalOperator<R>& op) { return local_operator(op.kind, op.param); }

enum class YbKind { phi, electrical, lusztig, phi_check };

// phi:       X12(p1) X13(p2) X23(p3) = X23(p3') X13(p2') X12(p1')
// electrical: psi12(R1) phi13(R2) psi23(R3) = phi23(R3') psi13(R2') phi12(R1'), R_j R_j' = R1R2R3/(R1+R2+R3)
// lusztig:   L12(t3) L23(t2) L12(t1) = L23(t3') L12(t2') L23(t1')
// phi_check: C12(r3) C23(r2) C12(r1) = C23(r1r2/D) C12(D) C23(r3r2/D)
std::array<Rational, 3> local_yb_transform(YbKind kind, const Rational& p1, const Rational& p2, const Rational& p3);

// Vertex model on an acyclic crossing diagram; weights are indexed like the crossings.
// Word-based models also keep their wiring diagram so braid moves can be applied.
template <class R>
struct VertexModel {
    CrossingDiagram diagram;
    std::vector<LocalOperator<R>> weights;
    std::optional<WiringDiagram> wiring;
};

// Black crossings carry phi(gamma), white ones psi(gamma).
VertexModel<Rational> vertex_model(const WiringDiagram& d, const std::vector<Rational>& gamma);
VertexModel<Rational> vertex_model(const MedialGraph& m, const std::vector<Rational>& gamma);
VertexModel<Rational> vertex_model(const PlaneNetwork& net);

// First crossing in flow order is the rightmost factor.
template <class R>
Matrix<R> partition_product(const VertexModel<R>& model) {
    const auto& d = model.diagram;
    if (model.weights.size() != d.crossings.size()) throw ArgumentError("model needs one weight per crossing");
    auto m = Matrix<R>::identity(d.n_strands);
    for (int k : crossing_order(d)) {
        const auto& c = d.crossings[k];
        apply_block_left(m, local_operator(model.weights[k]), c.lo, c.hi);
    }
    return m;
}

// Sum over directed paths along the strands. A path entering crossing k on
// strand s and leaving on strand t picks up X[t][s] (index 0 = lower strand).
// Entry (a, b) collects paths from the source of strand b to the sink of strand a.
template <class R>
Matrix<R> partition_pathsum(const VertexModel<R>& model) {
    const auto& d = model.diagram;
    if (model.weights.size() != d.crossings.size()) throw ArgumentError("model needs one weight per crossing");
    std::vector<Matrix<R>> w;
    for (const auto& op : model.weights) w.push_back(local_operator(op));
    // position of each crossing along each of its strands
    std::vector<std::array<std::size_t, 2>> pos(d.crossings.size());
    for (int s = 1; s <= d.n_strands; ++s) {
        const auto& path = d.strand_path[s - 1];
        for (std::size_t p = 0; p < path.size(); ++p) {
            const auto& c = d.crossings[path[p]];
            pos[path[p]][c.lo == s ? 0 : 1] = p;
        }
    }
    Matrix<R> out(d.n_strands, d.n_strands);
    auto walk = [&](auto&& self, int source, int s, std::size_t p, const R& weight) -> void {
        const auto& path = d.strand_path[s - 1];
        if (p == path.size()) {
            out(s - 1, source - 1) += weight;
            return;
        }
        int k = path[p];
        const auto& c = d.crossings[k];
        int in = c.lo == s ? 0 : 1;
        for (int o = 0; o < 2; ++o) {
            const R& x = w[k](o, in);
            if (x == R(0)) continue;
            int t = o == 0 ? c.lo : c.hi;
            self(self, source, t, pos[k][o] + 1, weight * x);
        }
    };
    for (int s = 1; s <= d.n_strands; ++s) walk(walk, s, s, 0, R(1));
    return out;
}

// Braid move on the three letters starting at 1-based position `position`.
VertexModel<Rational> yb_mutate(const VertexModel<Rational>& model, int position);
// Swaps the commuting letters at positions `position`, `position`+1.
VertexModel<Rational> commute_move(const VertexModel<Rational>& model, int position);

std::vector<Rational> model_params(const VertexModel<Rational>& model);

VertexModel<Rational> parse_model(const std::string& text);
std::string format_model(const VertexModel<Rational>& model);

}  // namespace elnet
