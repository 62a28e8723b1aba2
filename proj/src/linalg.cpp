#include "elnet/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace elnet {

Rref rref(const QMatrix& a) {
    QMatrix m = a;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
        Rational inv = m(rank, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return {m, rank};
}

std::size_t rank(const QMatrix& a) { return rref(a).rank; }

Rational det(const QMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("det of non-square " + a.shape());
    QMatrix m = a;
    Rational d(1);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Rational inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

QMatrix mat_inverse(const QMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("inverse of non-square " + a.shape());
    std::size_t n = a.rows();
    auto r = rref(hcat(a, QMatrix::identity(n)));
    if (r.matrix.block(0, 0, n, n) != QMatrix::identity(n))
        throw SingularError("singular matrix", rank(a));
    return r.matrix.block(0, n, n, n);
}

QMatrix schur_complement(const QMatrix& m, const std::vector<std::size_t>& keep) {
    if (m.rows() != m.cols()) throw ShapeError("schur_complement of non-square " + m.shape());
    std::size_t n = m.rows();
    std::vector<bool> kept(n, false);
    for (auto k : keep) {
        if (k >= n) throw IndexError("schur_complement: index out of range");
        if (kept[k]) throw ArgumentError("schur_complement: repeated index");
        kept[k] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (!kept[i]) rest.push_back(i);
    auto pick = [&](const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
        QMatrix b(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) b(i, j) = m(rs[i], cs[j]);
        return b;
    };
    QMatrix A = pick(keep, keep);
    if (rest.empty()) return A;
    QMatrix D = pick(rest, rest);
    QMatrix Dinv;
    try {
        Dinv = mat_inverse(D);
    } catch (const SingularError& e) {
        throw SingularError("singular interior block", e.rank);
    }
    return A - pick(keep, rest) * Dinv * pick(rest, keep);
}

bool row_space_equal(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols()) throw ShapeError("row_space_equal: column mismatch");
    auto ra = rref(a), rb = rref(b);
    if (ra.rank != rb.rank) return false;
    return ra.matrix.block(0, 0, ra.rank, a.cols()) == rb.matrix.block(0, 0, rb.rank, b.cols());
}

QMatrix structured(Structured kind, std::size_t n) {
    if (n < 2) throw SizeError("structured matrix needs n >= 2");
    QMatrix m;
    switch (kind) {
    case Structured::S:
        m = QMatrix(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            m(k, k) = 1;
            m(k, (k + n - 1) % n) = -1;
        }
        break;
    case Structured::S_tilde:
        m = QMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) m(i, j) = 1;
        break;
    case Structured::T: {
        if (n % 2) throw SizeError("shuffle matrix needs even size");
        std::size_t h = n / 2;
        m = QMatrix(n, n);
        for (std::size_t i = 0; i < h; ++i) {
            m(2 * i, h + i) = 1;
            m(2 * i + 1, i) = 1;
        }
        break;
    }
    case Structured::Omega:
        m = QMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) m(i, j) = i < j ? 1 : -1;
        break;
    case Structured::w0:
        m = QMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
        break;
    case Structured::Id0:
        m = QMatrix::identity(n).block(0, 0, n - 1, n);
        break;
    case Structured::Id1:
        m = QMatrix::identity(n).block(0, 0, n, n - 1);
        break;
    }
    return m;
}

QMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Rational>> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Rational> row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i == line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            row.push_back(parse_rational(std::string_view(line).substr(i, j - i), lineno, i + 1));
            i = j;
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows.front().size()),
                             lineno, 1);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix", lineno, 1);
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace elnet
