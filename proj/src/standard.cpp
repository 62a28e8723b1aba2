#include "elnet/standard.hpp"

#include <set>
#include <sstream>

namespace elnet {

std::vector<Rational> gamma_by_position(const StandardNetwork& net) {
    std::vector<Rational> g;
    for (auto pr : word_pairs(standard_word(net.N), net.N)) {
        auto it = net.gamma.find(pr);
        if (it == net.gamma.end())
            throw ArgumentError("missing conductance for pair " + std::to_string(pr.first) + " " +
                                std::to_string(pr.second));
        g.push_back(it->second);
    }
    return g;
}

StandardNetwork standard_network(int n, const std::vector<Rational>& gamma) {
    auto pairs = word_pairs(standard_word(n), n);
    if (gamma.size() != pairs.size()) throw ArgumentError("standard network needs N(N-1)/2 conductances");
    StandardNetwork net{n, {}};
    for (std::size_t k = 0; k < pairs.size(); ++k) net.gamma[pairs[k]] = gamma[k];
    return net;
}

PlaneNetwork to_plane(const StandardNetwork& net) { return standard_graph(net.N, gamma_by_position(net)); }

VertexModel<Rational> standard_model(const StandardNetwork& net) {
    auto g = gamma_by_position(net);
    for (const auto& x : g)
        if (x.is_zero()) throw ParameterError("zero conductance in standard network");
    return vertex_model(wiring_from_word(standard_word(net.N), net.N), g);
}

QMatrix mb_standard(const StandardNetwork& net) { return partition_product(standard_model(net)); }

QMatrix cmb_standard(const StandardNetwork& net) {
    return structured(Structured::w0, net.N) * mb_standard(net);
}

namespace {

std::size_t check_square(const QMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() < 2) throw ShapeError(std::string(what) + " must be square of size >= 2");
    return m.rows();
}

void check_rank(const QMatrix& w, std::size_t n, const char* what) {
    auto r = rank(w);
    if (r != n - 1)
        throw ConsistencyError(std::string(what) + " has rank " + std::to_string(r) + ", expected " +
                               std::to_string(n - 1));
}

}  // namespace

QMatrix build_w1(const QMatrix& mr) {
    auto n = check_square(mr, "M_R");
    QMatrix w = hcat(structured(Structured::S, n), mr);
    check_rank(w, n, "W1");
    return w;
}

QMatrix build_w2(const QMatrix& mb) {
    auto n = check_square(mb, "M_B");
    QMatrix w = hcat(mb, QMatrix::identity(n)) * structured(Structured::S, 2 * n) *
                structured(Structured::T, 2 * n);
    check_rank(w, n, "W2");
    return w;
}

QMatrix mr_from_mb(const QMatrix& mb) {
    auto n = check_square(mb, "M_B");
    QMatrix x = structured(Structured::Id0, n) * build_w2(mb);
    QMatrix m0 = x.block(0, 0, n - 1, n - 1);
    QMatrix r;
    try {
        r = mat_inverse(m0) * x;
    } catch (const SingularError& e) {
        throw DegeneracyError("M0 block is singular (rank " + std::to_string(e.rank) + ")");
    }
    // r = (Id, -1 column, Id0 S~ M_R)
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (r(i, j) != Rational(i == j ? 1 : 0)) throw ConsistencyError("M0^-1 Id0 W2 lacks its identity block");
        if (r(i, n - 1) != Rational(-1)) throw ConsistencyError("M0^-1 Id0 W2 lacks its -1 column");
    }
    QMatrix c = r.block(0, n, n - 1, n);
    QMatrix mr(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational total;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            mr(i, j) = i == 0 ? c(0, j) : c(i, j) - c(i - 1, j);
            total += mr(i, j);
        }
        mr(n - 1, j) = -total;
    }
    if (mr != mr.transpose()) throw ConsistencyError("recovered response matrix is not symmetric");
    for (std::size_t i = 0; i < n; ++i) {
        Rational s;
        for (std::size_t j = 0; j < n; ++j) s += mr(i, j);
        if (!s.is_zero()) throw ConsistencyError("recovered response matrix has a nonzero row sum");
    }
    return mr;
}

QMatrix mb_from_mr(const QMatrix& mr) {
    auto n = check_square(mr, "M_R");
    // S~_{2N} with its last row dropped; T enters inverted (transposed).
    QMatrix st = structured(Structured::S_tilde, 2 * n);
    for (std::size_t j = 0; j < 2 * n; ++j) st(2 * n - 1, j) = 0;
    QMatrix x = structured(Structured::Id0, n) * build_w1(mr) * structured(Structured::T, 2 * n).transpose() * st;
    QMatrix m1 = x.block(0, n, n - 1, n - 1);
    QMatrix r;
    try {
        r = mat_inverse(m1) * x;
    } catch (const SingularError& e) {
        throw DegeneracyError("M1 block is singular (rank " + std::to_string(e.rank) + ")");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (r(i, n + j) != Rational(i == j ? 1 : 0)) throw ConsistencyError("M1^-1 X lacks its identity block");
        if (!r(i, 2 * n - 1).is_zero()) throw ConsistencyError("M1^-1 X lacks its zero column");
    }
    QMatrix mb(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational total;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            mb(i, j) = r(i, j);
            total += r(i, j);
        }
        mb(n - 1, j) = Rational(1) - total;
    }
    return mb;
}

BoundaryData boundary_data(const QMatrix& mr, const std::vector<Rational>& U) {
    auto n = check_square(mr, "M_R");
    if (U.size() != n) throw ShapeError("potential vector has wrong length");
    BoundaryData b{U, std::vector<Rational>(n), std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.I[i] += mr(i, j) * U[j];
    Rational acc;
    for (std::size_t i = 0; i < n; ++i) {
        acc += b.I[i];
        b.J[i] = acc;
    }
    if (!b.J[n - 1].is_zero()) throw ConsistencyError("boundary currents do not sum to zero");
    return b;
}

bool check_symplectic(const StandardNetwork& net) {
    QMatrix c = cmb_standard(net);
    QMatrix om = structured(Structured::Omega, net.N);
    return c.transpose() * om * c == om;
}

QMatrix tl_generator(int i, int n) {
    if (n < 2 || i < 1 || i > n - 1) throw IndexError("tl_generator needs 1 <= i <= n-1");
    QMatrix a(n, n);
    a(i - 1, i - 1) = -1;
    a(i - 1, i) = -1;
    a(i, i - 1) = 1;
    a(i, i) = 1;
    return a;
}

bool check_lusztig_degeneration(int n, int symbolic_bound) {
    if (n < 2) throw SizeError("degeneration check needs N >= 2");
    if (n > symbolic_bound) throw ArgumentError("N exceeds the symbolic bound");
    auto word = standard_word(n);
    auto pairs = word_pairs(word, n);
    std::vector<MPoly> vars;
    for (auto [i, j] : pairs) vars.push_back(MPoly::var("g" + std::to_string(i) + "_" + std::to_string(j)));
    auto m1 = level_product(word, n, OpKind::phi_check, vars);
    auto ml = level_product(word, n, OpKind::lusztig, vars);
    // Sink-order adjustment: the sign gauge diag((-1)^i) on both sides.
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            MPoly low = lowest_degree_part(m1(r, c));
            if ((r + c) % 2) low = -low;
            if (low != ml(r, c)) return false;
        }
    return true;
}

std::string format_conductances(const StandardNetwork& net) {
    std::string s;
    for (const auto& [pr, g] : net.gamma)
        s += std::to_string(pr.first) + " " + std::to_string(pr.second) + " " + g.str() + "\n";
    return s;
}

StandardNetwork parse_conductances(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    StandardNetwork net;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, g;
        if (!(ls >> a)) continue;
        if (!(ls >> b >> g)) throw ParseError("expected 'i j p/q'", lineno, 1);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing text", lineno, line.find(extra) + 1);
        int i, j;
        try {
            i = std::stoi(a);
            j = std::stoi(b);
        } catch (const std::exception&) {
            throw ParseError("strand indices must be integers", lineno, 1);
        }
        if (i < 1 || j <= i) throw ParseError("need 1 <= i < j", lineno, 1);
        Rational v = parse_rational(g, lineno, line.find(g, line.find(b) + b.size()) + 1);
        if (v.is_zero()) throw ParseError("conductance must be nonzero", lineno, 1);
        if (!net.gamma.emplace(StrandPair{i, j}, v).second) throw ParseError("pair listed twice", lineno, 1);
        net.N = std::max(net.N, j);
    }
    if (net.N < 2 || net.gamma.size() != static_cast<std::size_t>(net.N * (net.N - 1) / 2))
        throw ParseError("conductance map must list every pair i<j exactly once", lineno, 1);
    return net;
}

}  // namespace elnet
