#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "real_roots.hpp"

namespace mnc {

class FieldElement;

/// Q[x]/(m) for a monic square-free modulus m. Fields produced by field_make
/// are certified irreducible; uncertified rings support dynamic evaluation,
/// where a failed inversion raises SplitError carrying the factors found.
class NumberField {
public:
    using Element = FieldElement;

    static NumberField uncertified(const Polynomial& modulus);

    const Polynomial& modulus() const { return data_->modulus; }
    int degree() const { return data_->modulus.degree(); }
    bool certified() const { return data_->certified; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;
    FieldElement embed(const Rational& q) const;
    FieldElement element(const Polynomial& residue) const;

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.data_ == b.data_ || a.data_->modulus == b.data_->modulus;
    }

private:
    struct Data {
        Polynomial modulus;
        bool certified = false;
    };
    explicit NumberField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

    std::shared_ptr<const Data> data_;

    friend class FieldElement;
    friend std::variant<NumberField, struct SplitReport> field_make(const Polynomial& modulus);
};

class FieldElement {
public:
    const NumberField& field() const { return field_; }
    const Polynomial& residue() const { return residue_; }
    bool is_zero() const { return residue_.is_zero(); }
    bool is_one() const { return residue_ == Polynomial::constant(1); }
    /// Rational value when the residue is constant.
    std::optional<Rational> as_rational() const;

    /// Throws SplitError when the residue shares a factor with the modulus.
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator-(const FieldElement& a) { return FieldElement(a.field_, -a.residue_); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.residue_ == b.residue_;
    }

    std::string to_string() const { return residue_.to_string(); }

private:
    FieldElement(NumberField f, Polynomial r);
    void check_same_field(const FieldElement& o) const;

    NumberField field_;
    Polynomial residue_;

    friend class NumberField;
};

/// Raised by dynamic evaluation when the modulus is discovered to be reducible.
class SplitError : public Error {
public:
    SplitError(Polynomial modulus, std::vector<Polynomial> factors);
    const Polynomial& modulus() const { return modulus_; }
    const std::vector<Polynomial>& factors() const { return factors_; }

private:
    Polynomial modulus_;
    std::vector<Polynomial> factors_;
};

struct SplitReport {
    Polynomial modulus;
    std::vector<Polynomial> factors;  // monic irreducible, sorted

    std::string to_string() const;
};

/// Builds a certified number field, or reports the factorization of a
/// reducible modulus. Throws Invalid for non-monic or non-square-free moduli
/// and Unsupported beyond the certified degree range.
std::variant<NumberField, SplitReport> field_make(const Polynomial& modulus);

/// field_make that throws SplitError instead of returning a report.
NumberField make_field_or_throw(const Polynomial& modulus);

/// Sign of the real number obtained by evaluating e at the root of the field
/// modulus pinned by root.
Sign embed_sign(const FieldElement& e, const IsolatingInterval& root);

/// Certified enclosure of e's value at the pinned root, narrower than width.
IsolatingInterval embed_enclosure(const FieldElement& e, const IsolatingInterval& root,
                                  const Rational& width);

/// Double approximation of e at the pinned root with |error| < 2^-52 * scale + width.
double embed_approx(const FieldElement& e, const IsolatingInterval& root,
                    const Rational& width = Rational(1, mpz_class("1000000000000000")));

/// Scalar field policy for Q, mirroring the NumberField interface.
struct RationalField {
    using Element = Rational;
    Rational zero() const { return {}; }
    Rational one() const { return Rational(1); }
    Rational embed(const Rational& q) const { return q; }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace mnc
