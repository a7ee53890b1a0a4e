#include "novikov.hpp"

#include "factor.hpp"
#include "linalg.hpp"

namespace mnc {

const char* to_string(CohomologyKind k) {
    return k == CohomologyKind::MorseNovikov ? "morse_novikov" : "wang_betti";
}

TwistScalar TwistScalar::rational(const Rational& mu) {
    TwistScalar t;
    t.value_ = mu;
    return t;
}

TwistScalar TwistScalar::algebraic(const FieldElement& mu, std::optional<IsolatingInterval> pin) {
    const NumberField& f = mu.field();
    if (pin && !isolates_single_root(f.modulus(), *pin))
        throw invalid("pin does not isolate a single root of " + f.modulus().to_string());
    if (auto q = mu.as_rational(); q && f.degree() == 1) {
        TwistScalar t = rational(*q);
        return t;
    }
    // mu generates the field iff 1, mu, ..., mu^{d-1} are independent.
    const auto d = static_cast<std::size_t>(f.degree());
    RationalMatrix powers(d, d, Rational());
    FieldElement p = f.one();
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) powers(i, j) = p.residue().coeff(i);
        p *= mu;
    }
    if (rank(RationalField{}, powers) != d)
        throw invalid("twist scalar " + mu.to_string() + " does not generate Q[x]/(" + f.modulus().to_string() + ")");
    TwistScalar t;
    t.value_ = mu;
    t.pin_ = pin;
    return t;
}

TwistScalar TwistScalar::root_of(const Polynomial& modulus, const IsolatingInterval& pin) {
    const Polynomial m = modulus.monic();
    if (!isolates_single_root(m, pin))
        throw invalid("interval (" + pin.lo.to_string() + ", " + pin.hi.to_string() +
                      ") does not isolate exactly one root of " + m.to_string());
    if (m.degree() == 1) return rational(-m.coeff(0));
    const NumberField f = make_field_or_throw(m);
    return algebraic(f.generator(), pin);
}

bool TwistScalar::is_zero() const {
    return is_rational() ? rational_value().is_zero() : field_value().is_zero();
}

bool TwistScalar::is_one() const {
    return is_rational() ? rational_value().is_one() : field_value().is_one();
}

Sign TwistScalar::sign() const {
    if (is_rational()) return static_cast<Sign>(rational_value().sign());
    if (!pin_) throw invalid("the real sign of an algebraic twist needs a root pin");
    return embed_sign(field_value(), *pin_);
}

double TwistScalar::approx(const Rational& width) const {
    if (is_rational()) return rational_value().to_double();
    if (!pin_) throw invalid("approximating an algebraic twist needs a root pin");
    return embed_approx(field_value(), *pin_, width);
}

std::string TwistScalar::describe() const {
    if (is_rational()) return rational_value().to_string();
    const auto& e = field_value();
    std::string s = "root " + e.to_string() + " of " + e.field().modulus().to_string();
    if (pin_) s += " in (" + pin_->lo.to_string() + ", " + pin_->hi.to_string() + ")";
    return s;
}

NovikovResult novikov_dims(const CohomologyModel& model, const TwistScalar& mu) {
    if (mu.is_zero()) throw invalid("twist scalar mu must be nonzero");
    const std::size_t n = model.top_degree;
    NovikovResult res;
    res.kind = mu.is_one() ? CohomologyKind::WangBetti : CohomologyKind::MorseNovikov;
    with_twist_field(mu, [&](const auto& field, const auto& value) {
        using F = std::decay_t<decltype(field)>;
        for (std::size_t k = 0; k <= n; ++k) {
            const auto b = shift_diagonal<F>(lift(field, model.map(k)), value);
            const std::size_t r = rank(field, b);
            res.dim_K.push_back(b.cols() - r);
            res.dim_C.push_back(b.rows() - r);
        }
        return 0;
    });
    res.dim_H.assign(n + 2, 0);
    for (std::size_t k = 0; k <= n + 1; ++k) {
        const std::size_t c_prev = k > 0 ? res.dim_C[k - 1] : 0;
        const std::size_t kk = k <= n ? res.dim_K[k] : 0;
        res.dim_H[k] = c_prev + kk;
    }
    return res;
}

std::vector<std::size_t> betti_mapping_torus(const CohomologyModel& model) {
    return novikov_dims(model, TwistScalar::rational(Rational(1))).dim_H;
}

std::vector<EigenFactor> eigenvalue_candidates(const CohomologyModel& model, std::size_t k) {
    if (k > model.top_degree) throw invalid("degree out of range");
    const Polynomial cp = charpoly(model.map(k));
    std::vector<EigenFactor> out;
    if (cp.degree() <= 0) return out;
    for (const auto& f : irreducible_factors(squarefree_part(cp))) {
        EigenFactor ef;
        ef.factor = f;
        Polynomial rest = cp;
        while (rest.degree() >= f.degree() && divides(f, rest)) {
            rest = rest / f;
            ++ef.multiplicity;
        }
        ef.real_roots = isolate_real_roots(f);
        for (const auto& iv : ef.real_roots) {
            if (f.degree() == 1) {
                const Rational r = -f.coeff(0);
                ef.signs.push_back(static_cast<Sign>(r.sign()));
                ef.is_one.push_back(r.is_one());
            } else {
                ef.signs.push_back(embed_sign(make_field_or_throw(f).generator(), iv));
                ef.is_one.push_back(false);  // 1 is rational, not a root of an irreducible of degree > 1
            }
        }
        out.push_back(std::move(ef));
    }
    return out;
}

}  // namespace mnc
