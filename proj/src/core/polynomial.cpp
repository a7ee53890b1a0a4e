#include "polynomial.hpp"

#include <cctype>
#include <sstream>

#include "error.hpp"

namespace mnc {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    const Rational inv = leading().inverse();
    Polynomial r = *this;
    for (auto& c : r.c_) c *= inv;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::shifted(const Rational& shift) const {
    // Horner in the shifted variable.
    Polynomial acc;
    const Polynomial lin{shift, Rational(1)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
}

std::string Polynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? '-' : '+');
        }
        first = false;
        if (k == 0) {
            os << mag.to_string();
            continue;
        }
        if (!mag.is_one()) {
            os << mag.to_string();
            if (!mag.is_integer()) os << '*';
        }
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    Polynomial run() {
        Polynomial acc;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            acc += term() * Rational(sign);
            first = false;
            skip_ws();
        }
        return acc;
    }

private:
    Polynomial term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                coeff = coeff / number();
                skip_ws();
            }
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        std::size_t exponent = 0;
        if (!at_end() && (peek() == 'x' || peek() == 'X' || peek() == 't')) {
            ++pos_;
            exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                const Rational e = number();
                exponent = static_cast<std::size_t>(e.numerator().get_ui());
                if (exponent > 4096) fail("exponent too large");
            }
        } else if (!have_coeff) {
            fail("expected coefficient or variable");
        }
        return Polynomial::monomial(coeff, exponent);
    }

    Rational number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Rational::parse(s_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw invalid("cannot parse polynomial '" + std::string(s_) + "': " + msg + " at offset " +
                      std::to_string(pos_));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).run(); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quo(rem.size() - db);
    const Rational inv_lead = b.leading().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const Rational f = rem[k] * inv_lead;
        quo[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

bool divides(const Polynomial& d, const Polynomial& p) { return (p % d).is_zero(); }

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw invalid("gcd of two zero polynomials");
    Polynomial a = p, b = q;
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

BezoutResult extended_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw invalid("gcd of two zero polynomials");
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(1), s1;
    Polynomial t0, t1 = Polynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Rational inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw invalid("square-free part of the zero polynomial");
    if (p.degree() == 0) return Polynomial::constant(1);
    return (p / gcd(p, p.derivative())).monic();
}

bool is_squarefree(const Polynomial& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial r = Polynomial::constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

std::vector<std::string> serialize(const Polynomial& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

Polynomial deserialize_polynomial(const std::vector<std::string>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(Rational::parse(s));
    return Polynomial(std::move(v));
}

}  // namespace mnc
