#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mnc {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// Trailing zeros are never stored; the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs)
        : Polynomial(std::vector<Rational>(coeffs)) {}

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    static Polynomial x() { return monomial(Rational(1), 1); }

    /// Parses human notation such as "x^2-3x+1", "1/2*x^3 - x", "-7".
    static Polynomial parse(std::string_view text);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    const Rational& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial operator-() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Maps x to x + shift.
    Polynomial shifted(const Rational& shift) const;

    /// "x^2-3x+1" style rendering.
    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Division with remainder; throws on zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& p);

/// Monic gcd. Throws when both inputs are zero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

struct BezoutResult {
    Polynomial g;  // monic gcd
    Polynomial s;  // s*a + t*b == g
    Polynomial t;
};
BezoutResult extended_gcd(const Polynomial& a, const Polynomial& b);

/// Product of the distinct irreducible factors of p, made monic.
Polynomial squarefree_part(const Polynomial& p);
bool is_squarefree(const Polynomial& p);

Polynomial pow(const Polynomial& p, unsigned e);

/// Coefficients as "p/q" strings, lowest degree first.
std::vector<std::string> serialize(const Polynomial& p);
Polynomial deserialize_polynomial(const std::vector<std::string>& coeffs);

}  // namespace mnc
