#include "elnet/dynamics.hpp"

#include <sstream>

namespace elnet {

Lattice::Lattice(int m, int n) : m(m), n(n), x(static_cast<std::size_t>(m) * n, Rational(1)) {
    if (m < 1 || n < 1) throw SizeError("lattice needs positive dimensions");
}

Rational& Lattice::at(int j, int i) {
    if (j < 1 || j > m) throw IndexError("lattice row out of range");
    int c = ((i - 1) % n + n) % n;
    return x[(j - 1) * n + c];
}

const Rational& Lattice::at(int j, int i) const { return const_cast<Lattice*>(this)->at(j, i); }

Lattice Lattice::transpose() const {
    Lattice t(n, m);
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= n; ++i) t.at(i, j) = at(j, i);
    return t;
}

QMatrix affine_matrix(const Rational& x, const Rational& y) { return {{x, 0}, {Rational(1) + x * y, y}}; }

QMatrix affine_product(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw ShapeError("x and y sequences must have equal nonzero length");
    QMatrix m = QMatrix::identity(2);
    for (std::size_t k = 0; k < xs.size(); ++k) m = affine_matrix(xs[k], ys[k]) * m;
    return m;
}

Rational q_poly(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw ShapeError("x and y sequences must have equal nonzero length");
    int n = static_cast<int>(xs.size());
    auto x = [&](int k) { return xs[k - 1]; };
    auto y = [&](int k) { return ys[k - 1]; };
    Rational first, second;
    for (int a = 1; a <= n; ++a) {
        Rational t(1), u(1);
        for (int k = 1; k < a; ++k) {
            t *= x(k);
            u *= x(k + 1);
        }
        for (int k = a + 1; k <= n; ++k) {
            t *= y(k);
            u *= y(k - 1);
        }
        first += t;
        second += u;
    }
    return first + x(1) * y(n) * second;
}

Rational mobius(const Rational& x, const Rational& y, const Rational& t) {
    Rational den = t + y + t * x * y;
    if (den.is_zero()) throw DegeneracyError("Mobius map hits its pole");
    return t * x / den;
}

Rational stable_point(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Rational q = q_poly(xs, ys);
    Rational px(1), py(1);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        px *= xs[k];
        py *= ys[k];
    }
    if (px == py) throw DegeneracyError("parabolic case: product of x equals product of y");
    if (q.is_zero()) throw DegeneracyError("pole: Q vanishes");
    return (px - py) / q;
}

Rational p_poly(const Lattice& lat, int j, int i) {
    if (j < 1 || j >= lat.m) throw IndexError("P needs 1 <= j < m");
    auto [a, b] = p_poly_parts<Rational>([&](int r, int c) { return lat.at(r, c); }, lat.n, j, i);
    return a + b;
}

Lattice act_r(const Lattice& lat, int j) {
    if (j < 1 || j >= lat.m) throw IndexError("r_j needs 1 <= j <= m-1");
    std::vector<Rational> p(lat.n + 1);
    for (int i = 0; i <= lat.n; ++i) {
        p[i] = p_poly(lat, j, i);
        if (p[i].is_zero())
            throw DegeneracyError("P_{" + std::to_string(j) + "," + std::to_string(i == 0 ? lat.n : i) + "} vanishes");
    }
    Lattice out = lat;
    for (int i = 1; i <= lat.n; ++i) {
        out.at(j, i) = lat.at(j + 1, i) * p[i - 1] / p[i];
        out.at(j + 1, i) = lat.at(j, i) * p[i] / p[i - 1];
    }
    return out;
}

Lattice act_s(const Lattice& lat, int i) {
    if (i < 1 || i >= lat.n) throw IndexError("s_i needs 1 <= i <= n-1");
    return act_r(lat.transpose(), i).transpose();
}

TwoByTwo two_by_two(const Rational& x1, const Rational& x2, const Rational& y1, const Rational& y2) {
    Rational num = x1 + y2 + x1 * y2 * (x2 + y1);
    Rational den = x2 + y1 + x2 * y1 * (x1 + y2);
    if (num.is_zero() || den.is_zero()) throw DegeneracyError("mu has a zero numerator or denominator");
    Rational tden = x1 + y2 + x1 * x2 * y2 + x1 * y1 * y2;
    if (tden.is_zero()) throw DegeneracyError("stable point denominator vanishes");
    Rational mu = num / den;
    TwoByTwo r{(x1 * x2 - y1 * y2) / tden, mu, x1 * x2 == y1 * y2, x1 * mu, x2 / mu, y1 / mu, y2 * mu};
    return r;
}

Lattice evolve(const Lattice& lat, const std::string& word) {
    std::istringstream in(word);
    std::string g;
    Lattice cur = lat;
    while (in >> g) {
        if (g.size() < 2 || (g[0] != 'r' && g[0] != 's')) throw ArgumentError("generator must look like r1 or s2: " + g);
        int k;
        try {
            k = std::stoi(g.substr(1));
        } catch (const std::exception&) {
            throw ArgumentError("bad generator index: " + g);
        }
        cur = g[0] == 'r' ? act_r(cur, k) : act_s(cur, k);
    }
    return cur;
}

Lattice parse_lattice(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    int m = 0, n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (ls >> m) {
            if (!(ls >> n) || m < 1 || n < 1) throw ParseError("expected 'm n'", lineno, 1);
            break;
        }
    }
    if (m < 1) throw ParseError("missing lattice header", lineno, 1);
    Lattice lat(m, n);
    int row = 0;
    while (row < m && std::getline(in, line)) {
        ++lineno;
        std::vector<Rational> vals;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') { ++i; continue; }
            std::size_t e = i;
            while (e < line.size() && line[e] != ' ' && line[e] != '\t' && line[e] != '\r') ++e;
            vals.push_back(parse_rational(std::string_view(line).substr(i, e - i), lineno, i + 1));
            i = e;
        }
        if (vals.empty()) continue;
        if (static_cast<int>(vals.size()) != n) throw ParseError("row needs " + std::to_string(n) + " entries", lineno, 1);
        ++row;
        for (int c = 1; c <= n; ++c) {
            if (vals[c - 1].is_zero()) throw ParseError("lattice entries must be nonzero", lineno, 1);
            lat.at(row, c) = vals[c - 1];
        }
    }
    if (row != m) throw ParseError("lattice has too few rows", lineno, 1);
    return lat;
}

std::string format_lattice(const Lattice& lat) {
    std::string s = std::to_string(lat.m) + " " + std::to_string(lat.n) + "\n";
    for (int j = 1; j <= lat.m; ++j) {
        for (int i = 1; i <= lat.n; ++i) s += (i > 1 ? " " : "") + lat.at(j, i).str();
        s += "\n";
    }
    return s;
}

}  // namespace elnet
