#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cohomology_model.hpp"
#include "number_field.hpp"

namespace mnc {

/// Twist scalar mu = e^{-c}: either rational, or a generator of a certified
/// number field Q(mu), optionally pinned to a real root.
class TwistScalar {
public:
    static TwistScalar rational(const Rational& mu);
    /// mu must generate its field. The pin, when given, must isolate a root of
    /// the field modulus.
    static TwistScalar algebraic(const FieldElement& mu, std::optional<IsolatingInterval> pin);
    /// The root of an irreducible modulus inside pin. Degree-1 moduli collapse
    /// to a rational twist. Throws SplitError for reducible moduli.
    static TwistScalar root_of(const Polynomial& modulus, const IsolatingInterval& pin);

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational& rational_value() const { return std::get<Rational>(value_); }
    const FieldElement& field_value() const { return std::get<FieldElement>(value_); }
    const std::optional<IsolatingInterval>& pin() const { return pin_; }

    bool is_zero() const;
    bool is_one() const;
    /// Real sign; requires a pin for algebraic values.
    Sign sign() const;
    /// Double approximation certified to within `width` of the real value.
    double approx(const Rational& width = Rational(1, mpz_class("10000000000000"))) const;

    /// "2", "1/2", or "root of x^2-3x+1 in (2, 3)".
    std::string describe() const;

private:
    TwistScalar() = default;
    std::variant<Rational, FieldElement> value_;
    std::optional<IsolatingInterval> pin_;
};

enum class CohomologyKind {
    MorseNovikov,  // mu != 1
    WangBetti,     // mu == 1: ordinary Betti numbers of the mapping torus
};

const char* to_string(CohomologyKind k);

struct NovikovResult {
    CohomologyKind kind = CohomologyKind::MorseNovikov;
    std::vector<std::size_t> dim_K;  // k = 0..n
    std::vector<std::size_t> dim_C;  // k = 0..n
    std::vector<std::size_t> dim_H;  // k = 0..n+1
};

/// dim K^k = dim ker(M_k - mu I), dim C^k = dim coker(M_k - mu I), and
/// dim H^k = dim C^{k-1} + dim K^k from the short exact sequence
/// 0 -> C^{k-1} -> H^k -> K^k -> 0 (with C^{-1} = K^{n+1} = 0).
NovikovResult novikov_dims(const CohomologyModel& model, const TwistScalar& mu);

/// b_k of the mapping torus: coker(M_{k-1} - I) + ker(M_k - I).
std::vector<std::size_t> betti_mapping_torus(const CohomologyModel& model);

struct EigenFactor {
    Polynomial factor;                          // monic irreducible over Q
    std::size_t multiplicity = 0;               // in charpoly(M_k)
    std::vector<IsolatingInterval> real_roots;  // increasing
    std::vector<Sign> signs;                    // per real root
    std::vector<bool> is_one;                   // per real root
};

/// Irreducible factorization of charpoly(M_k) with the real roots of each
/// factor isolated; these are exactly the twists with dim K^k > 0.
std::vector<EigenFactor> eigenvalue_candidates(const CohomologyModel& model, std::size_t k);

/// Rank of M - mu I per degree, dispatched over Q or Q(mu).
template <class Fn>
decltype(auto) with_twist_field(const TwistScalar& mu, Fn&& fn) {
    if (mu.is_rational()) return fn(RationalField{}, mu.rational_value());
    const auto& e = mu.field_value();
    return fn(e.field(), e);
}

}  // namespace mnc
