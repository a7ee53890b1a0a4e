#include "number_field.hpp"

#include <sstream>

#include "factor.hpp"

namespace mnc {

NumberField NumberField::uncertified(const Polynomial& modulus) {
    if (modulus.degree() < 1) throw invalid("number field modulus must have degree >= 1");
    if (!modulus.is_monic()) throw invalid("number field modulus must be monic: " + modulus.to_string());
    if (!is_squarefree(modulus))
        throw invalid("number field modulus must be square-free: " + modulus.to_string());
    return NumberField(std::make_shared<const Data>(Data{modulus, false}));
}

FieldElement NumberField::zero() const { return FieldElement(*this, Polynomial()); }
FieldElement NumberField::one() const { return FieldElement(*this, Polynomial::constant(1)); }
FieldElement NumberField::generator() const { return FieldElement(*this, Polynomial::x()); }
FieldElement NumberField::embed(const Rational& q) const { return FieldElement(*this, Polynomial::constant(q)); }
FieldElement NumberField::element(const Polynomial& residue) const { return FieldElement(*this, residue); }

FieldElement::FieldElement(NumberField f, Polynomial r) : field_(std::move(f)), residue_(std::move(r)) {
    if (residue_.degree() >= field_.degree()) residue_ = residue_ % field_.modulus();
}

std::optional<Rational> FieldElement::as_rational() const {
    if (residue_.degree() <= 0) return residue_.coeff(0);
    return std::nullopt;
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw invalid("field mismatch: " + field_.modulus().to_string() + " vs " +
                      o.field_.modulus().to_string());
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
    const auto b = extended_gcd(residue_, field_.modulus());
    if (b.g.degree() > 0) {
        throw SplitError(field_.modulus(), {b.g, field_.modulus() / b.g});
    }
    return FieldElement(field_, b.s);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_field(o);
    residue_ += o.residue_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_field(o);
    residue_ -= o.residue_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_field(o);
    residue_ = (residue_ * o.residue_) % field_.modulus();
    return *this;
}

namespace {

std::string join(const std::vector<Polynomial>& fs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? ", " : "") << fs[i].to_string();
    return os.str();
}

}  // namespace

SplitError::SplitError(Polynomial modulus, std::vector<Polynomial> factors)
    : Error(ErrorCode::Split, "modulus " + modulus.to_string() + " splits: " + join(factors)),
      modulus_(std::move(modulus)),
      factors_(std::move(factors)) {}

std::string SplitReport::to_string() const {
    return "modulus " + modulus.to_string() + " splits: " + join(factors);
}

std::variant<NumberField, SplitReport> field_make(const Polynomial& modulus) {
    const NumberField ring = NumberField::uncertified(modulus);
    auto factors = irreducible_factors(modulus);
    if (factors.size() > 1) return SplitReport{modulus, std::move(factors)};
    return NumberField(std::make_shared<const NumberField::Data>(NumberField::Data{ring.modulus(), true}));
}

NumberField make_field_or_throw(const Polynomial& modulus) {
    auto r = field_make(modulus);
    if (auto* split = std::get_if<SplitReport>(&r)) throw SplitError(split->modulus, split->factors);
    return std::get<NumberField>(std::move(r));
}

namespace {

void check_root(const NumberField& f, const IsolatingInterval& root) {
    if (!isolates_single_root(f.modulus(), root))
        throw invalid("interval (" + root.lo.to_string() + ", " + root.hi.to_string() +
                      ") does not isolate a single root of " + f.modulus().to_string());
}

}  // namespace

IsolatingInterval embed_enclosure(const FieldElement& e, const IsolatingInterval& root,
                                  const Rational& width) {
    const NumberField& f = e.field();
    check_root(f, root);
    const Polynomial& m = f.modulus();
    if (m.degree() == 1) {
        const Rational x = -m.coeff(0);
        const Rational v = e.residue().eval(x);
        return {v, v};
    }
    IsolatingInterval iv = root;
    while (true) {
        auto enc = eval_enclosure(e.residue(), iv.lo, iv.hi);
        if (enc.width() < width) return enc;
        const Rational mid = iv.midpoint();
        if (m.eval(mid).is_zero()) {
            const Rational v = e.residue().eval(mid);
            return {v, v};
        }
        iv = bisect_root(m, iv);
    }
}

Sign embed_sign(const FieldElement& e, const IsolatingInterval& root) {
    check_root(e.field(), root);
    if (e.is_zero()) return Sign::Zero;
    const Polynomial& m = e.field().modulus();
    if (m.degree() == 1) {
        const int s = e.residue().eval(-m.coeff(0)).sign();
        return static_cast<Sign>(s);
    }
    IsolatingInterval iv = root;
    // A nonzero residue is nonzero at every root of an irreducible modulus, so
    // refinement eventually separates the enclosure from zero. For uncertified
    // rings the residue may vanish at this root; the exact zero test covers it.
    if (!e.field().certified()) {
        const Polynomial g = gcd(e.residue(), m);
        if (g.degree() > 0 && SturmSequence(g).count(iv.lo, iv.hi) == 1) return Sign::Zero;
    }
    while (true) {
        const auto enc = eval_enclosure(e.residue(), iv.lo, iv.hi);
        if (enc.lo.sign() > 0) return Sign::Positive;
        if (enc.hi.sign() < 0) return Sign::Negative;
        const Rational mid = iv.midpoint();
        if (m.eval(mid).is_zero()) return static_cast<Sign>(e.residue().eval(mid).sign());
        iv = bisect_root(m, iv);
    }
}

double embed_approx(const FieldElement& e, const IsolatingInterval& root, const Rational& width) {
    return embed_enclosure(e, root, width).midpoint().to_double();
}

}  // namespace mnc
