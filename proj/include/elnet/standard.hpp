#pragma once

#include "elnet/vertex_model.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace elnet {

using StrandPair = std::pair<int, int>;

struct StandardNetwork {
    int N = 0;
    std::map<StrandPair, Rational> gamma;  // i<j, all nonzero

    friend bool operator==(const StandardNetwork&, const StandardNetwork&) = default;
};

struct BoundaryData {
    std::vector<Rational> U, I, J;
};

// Conductances in word order of the standard word.
std::vector<Rational> gamma_by_position(const StandardNetwork& net);
StandardNetwork standard_network(int n, const std::vector<Rational>& gamma_by_word_position);
PlaneNetwork to_plane(const StandardNetwork& net);
// Parity-coloured phi/psi model on the standard word.
VertexModel<Rational> standard_model(const StandardNetwork& net);

QMatrix mb_standard(const StandardNetwork& net);
// omega0^{-1} M_B, the product of the check-phi factors.
QMatrix cmb_standard(const StandardNetwork& net);

QMatrix build_w1(const QMatrix& mr);
QMatrix build_w2(const QMatrix& mb);
QMatrix mr_from_mb(const QMatrix& mb);
QMatrix mb_from_mr(const QMatrix& mr);

// Boundary data with I = M_R U and I = S_N J (J fixed by J_N = 0).
BoundaryData boundary_data(const QMatrix& mr, const std::vector<Rational>& U);

StandardNetwork invert_conductances(const QMatrix& mb, int n);

bool check_symplectic(const StandardNetwork& net);

QMatrix tl_generator(int i, int n);
// Product over the word of the level-embedded operators, first letter rightmost.
template <class R>
Matrix<R> level_product(const std::vector<int>& word, int n, OpKind kind, const std::vector<R>& params) {
    auto m = Matrix<R>::identity(n);
    for (std::size_t k = 0; k < word.size(); ++k)
        apply_block_left(m, local_operator(kind, params[k]), word[k], word[k] + 1);
    return m;
}

bool check_lusztig_degeneration(int n, int symbolic_bound = 5);

std::string format_conductances(const StandardNetwork& net);
StandardNetwork parse_conductances(const std::string& text);

}  // namespace elnet
