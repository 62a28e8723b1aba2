#include "elnet/rational.hpp"

#include "elnet/errors.hpp"

#include <cctype>
#include <ostream>

namespace elnet {

Rational::Rational(long num, long den) {
    if (den == 0) throw ZeroDivision("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::inverse() const {
    if (is_zero()) throw ZeroDivision("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDivision("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_str(); }

Rational parse_rational(std::string_view text, std::size_t line, std::size_t col0) {
    std::size_t i = 0;
    auto digits = [&](const char* what) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError(std::string("expected ") + what, line, col0 + i);
        return text.substr(start, i - start);
    };
    bool neg = false;
    if (i < text.size() && text[i] == '-') { neg = true; ++i; }
    std::string num(digits("digits"));
    std::string den = "1";
    std::size_t slash = i;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = std::string(digits("denominator digits"));
    }
    if (i != text.size()) throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", line, col0 + i);
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator", line, col0 + slash + 1);
    mpz_class n(num);
    if (neg) n = -n;
    return Rational(mpq_class(n, d));
}

Rational pow(const Rational& base, int e) {
    Rational b = e < 0 ? base.inverse() : base;
    Rational r(1);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace elnet
