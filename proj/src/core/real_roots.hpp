#pragma once

#include <vector>

#include "polynomial.hpp"

namespace mnc {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

const char* to_string(Sign s);

/// Open rational interval (lo, hi). When it pins a root of a polynomial, the
/// polynomial has exactly one real root inside, certified by a Sturm count.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) * Rational(1, 2); }
    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    /// Sign variations of the sequence evaluated at x.
    int variations(const Rational& x) const;
    /// Number of distinct real roots in (lo, hi]; exact for square-free input.
    int count(const Rational& lo, const Rational& hi) const;

    const std::vector<Polynomial>& chain() const { return chain_; }

private:
    std::vector<Polynomial> chain_;
};

/// Strict bound B with |r| < B for every complex root r of p (Cauchy).
Rational cauchy_bound(const Polynomial& p);

/// Disjoint isolating intervals for the real roots of a square-free p inside
/// range, sorted increasingly. Throws when an endpoint is a root.
std::vector<IsolatingInterval> sturm_isolate(const Polynomial& p, const IsolatingInterval& range);

/// All real roots of a square-free p.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);

/// True when p has exactly one root in iv and neither endpoint is a root.
bool isolates_single_root(const Polynomial& p, const IsolatingInterval& iv);

/// One bisection step keeping the half that holds the (simple) root. When the
/// midpoint happens to be the root, the returned interval is shrunk around it.
IsolatingInterval bisect_root(const Polynomial& p, const IsolatingInterval& iv);

/// Bisects until the interval is narrower than max_width.
IsolatingInterval refine_root(const Polynomial& p, IsolatingInterval iv, const Rational& max_width);

/// Enclosure of p over the closed interval [lo, hi] via interval Horner.
IsolatingInterval eval_enclosure(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace mnc
