#include "elnet/mpoly.hpp"

#include "elnet/errors.hpp"

#include <sstream>

namespace elnet {

unsigned degree(const MPoly::Monomial& m) {
    unsigned d = 0;
    for (const auto& [_, e] : m) d += e;
    return d;
}

bool MPoly::GrLex::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = degree(a), db = degree(b);
    if (da != db) return da < db;
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first > b[i].first;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

MPoly::MPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(const std::string& name) {
    MPoly p;
    p.terms_.emplace(Monomial{{name, 1u}}, Rational(1));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MPoly::total_degree() const {
    return terms_.empty() ? 0 : degree(terms_.rbegin()->first);
}

unsigned MPoly::degree_in(const std::string& name) const {
    unsigned d = 0;
    for (const auto& [m, _] : terms_)
        for (const auto& [v, e] : m)
            if (v == name && e > d) d = e;
    return d;
}

std::set<std::string> MPoly::variables() const {
    std::set<std::string> out;
    for (const auto& [m, _] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

Rational MPoly::evaluate(const std::map<std::string, Rational>& values) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) throw EvaluationError("unbound variable " + v);
            t *= pow(it->second, static_cast<int>(e));
        }
        sum += t;
    }
    return sum;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

static MPoly::Monomial mono_mul(const MPoly::Monomial& a, const MPoly::Monomial& b) {
    MPoly::Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
        else { r.emplace_back(a[i].first, a[i].second + b[j].second); ++i; ++j; }
    }
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) { if (c.sign() < 0) os << "-"; }
        else os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == Rational(1);
        if (!unit || m.empty()) os << mag;
        bool sep = !unit;
        for (const auto& [v, e] : m) {
            if (sep) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            sep = true;
        }
    }
    return os.str();
}

MPoly lowest_degree_part(const MPoly& p) {
    MPoly r;
    if (p.is_zero()) return r;
    unsigned d = degree(p.terms().begin()->first);
    for (const auto& [m, c] : p.terms()) {
        if (degree(m) != d) break;
        r.add_term(m, c);
    }
    return r;
}

MPoly inverse_of(const MPoly& p) {
    if (!p.is_constant()) throw ParameterError("cannot invert non-constant polynomial " + p.str());
    return MPoly(p.constant_term().inverse());
}

Rational inverse_of(const Rational& r) { return r.inverse(); }

}  // namespace elnet
