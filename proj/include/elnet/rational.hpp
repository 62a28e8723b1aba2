#pragma once

#include <compare>
#include <concepts>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace elnet {

// Exact rational backed by mpq_class; always canonical.
class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I v) : v_(static_cast<long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational inverse() const;
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

// Accepts -?digits(/digits)?; throws ParseError with the offending column.
Rational parse_rational(std::string_view text, std::size_t line = 1, std::size_t col0 = 1);

Rational pow(const Rational& base, int e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace elnet
