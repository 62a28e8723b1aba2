#pragma once

#include "elnet/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace elnet {

// Sparse multivariate polynomial over Rational with named variables.
class MPoly {
public:
    // Sorted by variable name, exponents strictly positive.
    using Monomial = std::vector<std::pair<std::string, unsigned>>;

    // Graded lex: total degree first, then lex with smaller names as larger variables.
    struct GrLex {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };
    using Terms = std::map<Monomial, Rational, GrLex>;

    MPoly() = default;
    template <std::integral I>
    MPoly(I c) : MPoly(Rational(c)) {}
    MPoly(const Rational& c);
    static MPoly var(const std::string& name);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    unsigned total_degree() const;
    unsigned degree_in(const std::string& name) const;
    std::set<std::string> variables() const;

    // Every variable must be bound; missing ones raise EvaluationError.
    Rational evaluate(const std::map<std::string, Rational>& values) const;
    std::string str() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    void add_term(const Monomial& m, const Rational& c);

private:
    Terms terms_;
};

unsigned degree(const MPoly::Monomial& m);
MPoly lowest_degree_part(const MPoly& p);

// Division is only defined by nonzero constants.
MPoly inverse_of(const MPoly& p);
Rational inverse_of(const Rational& r);

}  // namespace elnet
