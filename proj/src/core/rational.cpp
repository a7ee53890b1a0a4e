#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "error.hpp"

namespace mnc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string digits(s);
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (start == digits.size()) throw invalid("malformed rational '" + std::string(whole) + "'");
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw invalid("malformed rational '" + std::string(whole) + "'");
    }
    if (digits[0] == '+') digits.erase(0, 1);
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    const auto num = parse_integer(trim(s.substr(0, slash)), text);
    const auto den = parse_integer(trim(s.substr(slash + 1)), text);
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace mnc
