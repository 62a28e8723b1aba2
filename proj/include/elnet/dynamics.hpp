#pragma once

#include "elnet/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace elnet {

// m x n lattice of nonzero values, x(j, i) 1-based with cyclic column index.
struct Lattice {
    int m = 0, n = 0;
    std::vector<Rational> x;

    Lattice() = default;
    Lattice(int m, int n);
    Rational& at(int j, int i);
    const Rational& at(int j, int i) const;
    Lattice transpose() const;
    friend bool operator==(const Lattice&, const Lattice&) = default;
};

QMatrix affine_matrix(const Rational& x, const Rational& y);
// A(x_n, y_n) ... A(x_1, y_1)
QMatrix affine_product(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Rational q_poly(const std::vector<Rational>& xs, const std::vector<Rational>& ys);
Rational mobius(const Rational& x, const Rational& y, const Rational& t);
Rational stable_point(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// The two summands of P_{j,i}; X(row, col) must handle cyclic columns.
template <class R, class F>
std::pair<R, R> p_poly_parts(F X, int n, int j, int i) {
    R first(0), second(0);
    for (int a = 1; a <= n; ++a) {
        R t(1), u(1);
        for (int k = 1; k < a; ++k) {
            t = t * X(j, i + k);
            u = u * X(j, i + k + 1);
        }
        for (int k = a + 1; k <= n; ++k) {
            t = t * X(j + 1, i + k);
            u = u * X(j + 1, i + k - 1);
        }
        first += t;
        second += u;
    }
    return {first, X(j, i + 1) * X(j + 1, i) * second};
}

Rational p_poly(const Lattice& lat, int j, int i);

// r_j(x_{j,i}) = x_{j+1,i} P_{j,i-1}/P_{j,i}, r_j(x_{j+1,i}) = x_{j,i} P_{j,i}/P_{j,i-1}.
Lattice act_r(const Lattice& lat, int j);
Lattice act_s(const Lattice& lat, int i);

struct TwoByTwo {
    Rational t, mu;
    bool parabolic;  // x1 x2 = y1 y2
    Rational x1, x2, y1, y2;
};
TwoByTwo two_by_two(const Rational& x1, const Rational& x2, const Rational& y1, const Rational& y2);

// Applies generators like "r1 s2 r1" left to right.
Lattice evolve(const Lattice& lat, const std::string& word);

Lattice parse_lattice(const std::string& text);
std::string format_lattice(const Lattice& lat);

}  // namespace elnet
