#include "factor.hpp"

#include <algorithm>
#include <random>

#include "error.hpp"
#include "number_field.hpp"

namespace mnc {

namespace {

// Cap on |n| for trial-division divisor enumeration.
const mpz_class kDivisorLimit("1000000000000");

mpz_class lcm_of_denominators(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class d = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

// Integer coefficients of a primitive multiple of p.
std::vector<mpz_class> integer_coefficients(const Polynomial& p) {
    const mpz_class l = lcm_of_denominators(p);
    std::vector<mpz_class> out;
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.numerator() * (l / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (g != 0)
        for (auto& v : out) v /= g;
    return out;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) throw invalid("divisors of zero");
    if (n > kDivisorLimit) throw unsupported("coefficient too large for the rational-root test");
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

bool polynomial_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto ia = a.coeff(static_cast<std::size_t>(i));
        const auto ib = b.coeff(static_cast<std::size_t>(i));
        if (ia != ib) return ia < ib;
    }
    return false;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw invalid("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    Polynomial q = p;
    if (q.coeff(0).is_zero()) {
        roots.emplace_back(0);
        while (!q.is_zero() && q.coeff(0).is_zero()) q = q / Polynomial::x();
    }
    if (q.degree() >= 1) {
        const auto z = integer_coefficients(q);
        const auto nums = positive_divisors(z.front());
        const auto dens = positive_divisors(z.back());
        for (const auto& a : nums) {
            for (const auto& b : dens) {
                for (int s : {1, -1}) {
                    const Rational cand(mpz_class(a * s), b);
                    if (q.eval(cand).is_zero()) roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<Polynomial> kronecker_factor(const Polynomial& p, int factor_degree) {
    if (!p.is_monic()) throw invalid("Kronecker search expects a monic polynomial");
    const int d = p.degree();
    if (factor_degree < 1 || factor_degree >= d) return std::nullopt;
    const auto s = static_cast<std::size_t>(factor_degree);

    // Rescale to a monic integer polynomial P(y) = L^d p(y / L).
    const mpz_class lm = lcm_of_denominators(p);
    const Rational L(lm);
    std::vector<Rational> scaled(static_cast<std::size_t>(d) + 1);
    Rational lp(1);
    for (int i = d; i >= 0; --i) {
        scaled[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i)) * lp;
        lp *= L;
    }
    const Polynomial P(std::move(scaled));

    // Interpolation nodes with the fewest divisors keep the search small.
    struct Node {
        long a;
        mpz_class value;
        std::size_t tau;
    };
    std::vector<Node> nodes;
    for (long a = -24; a <= 24; ++a) {
        const Rational v = P.eval(Rational(a));
        if (v.is_zero()) {
            // An integer root is a linear factor of P.
            if (factor_degree == 1) return Polynomial{Rational(-a) / L, Rational(1)};
            continue;
        }
        if (abs(v.numerator()) > kDivisorLimit) continue;
        nodes.push_back({a, v.numerator(), positive_divisors(v.numerator()).size()});
    }
    if (nodes.size() < s) throw unsupported("no suitable interpolation nodes for Kronecker search");
    std::stable_sort(nodes.begin(), nodes.end(), [](const Node& x, const Node& y) { return x.tau < y.tau; });
    nodes.resize(s);

    // W(y) = prod (y - a_i); Lagrange basis for the remainder part.
    Polynomial W = Polynomial::constant(1);
    std::vector<Polynomial> basis(s);
    for (const auto& n : nodes) W = W * Polynomial{Rational(-n.a), Rational(1)};
    for (std::size_t i = 0; i < s; ++i) {
        Polynomial li = Polynomial::constant(1);
        for (std::size_t j = 0; j < s; ++j) {
            if (j == i) continue;
            li = li * Polynomial{Rational(-nodes[j].a), Rational(1)};
            li *= Rational(1) / Rational(nodes[i].a - nodes[j].a);
        }
        basis[i] = std::move(li);
    }

    std::vector<std::vector<Rational>> choices(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (const auto& dv : positive_divisors(nodes[i].value)) {
            choices[i].emplace_back(dv);
            choices[i].emplace_back(mpz_class(-dv));
        }
    }

    std::vector<std::size_t> idx(s, 0);
    while (true) {
        Polynomial q = W;
        for (std::size_t i = 0; i < s; ++i) q += basis[i] * choices[i][idx[i]];
        bool integral = true;
        for (const auto& c : q.coeffs()) integral = integral && c.is_integer();
        if (integral && q.degree() == factor_degree && divides(q, P)) {
            // Undo the rescaling: q(L x) / L^s.
            std::vector<Rational> back(s + 1);
            Rational lk(1);
            for (std::size_t i = 0; i <= s; ++i) {
                back[i] = q.coeff(i) * lk;
                lk *= L;
            }
            return Polynomial(std::move(back)).monic();
        }
        std::size_t k = 0;
        while (k < s && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == s) break;
    }
    return std::nullopt;
}

namespace {

void split_into(const Polynomial& p, std::vector<Polynomial>& out);

// Dynamic evaluation pass: invert a deterministic batch of small elements of
// Q[x]/(p) and harvest any zero divisor exposed by the inversion.
std::optional<std::vector<Polynomial>> dynamic_evaluation_split(const Polynomial& p) {
    const NumberField ring = NumberField::uncertified(p);
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 96; ++trial) {
        std::vector<Rational> c(static_cast<std::size_t>(1 + trial % std::max(1, p.degree() - 1)) + 1);
        for (auto& v : c) v = Rational(coeff(rng));
        if (trial < 9) c = {Rational(trial - 4), Rational(1)};  // x - a for small a
        const FieldElement e = ring.element(Polynomial(std::move(c)));
        if (e.is_zero()) continue;
        try {
            (void)e.inverse();
        } catch (const SplitError& s) {
            return s.factors();
        }
    }
    return std::nullopt;
}

void split_into(const Polynomial& p, std::vector<Polynomial>& out) {
    const int d = p.degree();
    if (d <= 0) return;
    if (d <= 3) {
        out.push_back(p);  // caller removed rational roots
        return;
    }
    if (d > kMaxCertifiedDegree)
        throw unsupported("cannot certify irreducibility of degree-" + std::to_string(d) +
                          " factor " + p.to_string() + " (limit " +
                          std::to_string(kMaxCertifiedDegree) + ")");
    if (auto parts = dynamic_evaluation_split(p)) {
        for (const auto& f : *parts) split_into(f, out);
        return;
    }
    for (int s = 2; s <= d / 2; ++s) {
        if (auto f = kronecker_factor(p, s)) {
            split_into(*f, out);
            split_into(p / *f, out);
            return;
        }
    }
    out.push_back(p);
}

}  // namespace

std::vector<Polynomial> irreducible_factors(const Polynomial& p) {
    if (p.is_zero()) throw invalid("factorization of the zero polynomial");
    if (!is_squarefree(p)) throw invalid("factorization expects a square-free polynomial");
    Polynomial rest = p.monic();
    std::vector<Polynomial> out;
    for (const auto& r : rational_roots(rest)) {
        const Polynomial lin{-r, Rational(1)};
        out.push_back(lin);
        rest = rest / lin;
    }
    split_into(rest.monic(), out);
    std::sort(out.begin(), out.end(), polynomial_less);
    return out;
}

}  // namespace mnc
