#include "real_roots.hpp"

#include <algorithm>

#include "error.hpp"

namespace mnc {

const char* to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "negative";
        case Sign::Zero: return "zero";
        case Sign::Positive: return "positive";
    }
    return "?";
}

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw invalid("Sturm sequence of the zero polynomial");
    chain_.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero()) return;
    chain_.push_back(d);
    while (true) {
        Polynomial r = -(chain_[chain_.size() - 2] % chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(std::move(r));
    }
}

int SturmSequence::variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain_) {
        const int s = q.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
    return variations(lo) - variations(hi);
}

Rational cauchy_bound(const Polynomial& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m;
    const Rational lead = p.leading().abs();
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(static_cast<std::size_t>(i)).abs() / lead);
    return m + Rational(1);
}

namespace {

void isolate_rec(const Polynomial& p, const SturmSequence& seq, const Rational& lo,
                 const Rational& hi, int n, std::vector<IsolatingInterval>& out) {
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    // split at a point that is not a root
    Rational mid = (lo + hi) * Rational(1, 2);
    Rational step = (hi - lo) * Rational(1, 8);
    while (p.eval(mid).is_zero()) {
        mid += step;
        step *= Rational(1, 2);
    }
    const int left = seq.count(lo, mid);
    isolate_rec(p, seq, lo, mid, left, out);
    isolate_rec(p, seq, mid, hi, n - left, out);
}

}  // namespace

std::vector<IsolatingInterval> sturm_isolate(const Polynomial& p, const IsolatingInterval& range) {
    if (!(range.lo < range.hi)) throw invalid("isolation range requires lo < hi");
    if (p.is_zero()) throw invalid("cannot isolate roots of the zero polynomial");
    if (!is_squarefree(p)) throw invalid("root isolation requires a square-free polynomial");
    if (p.eval(range.lo).is_zero() || p.eval(range.hi).is_zero())
        throw invalid("isolation range endpoint is a root; perturb the endpoint");
    std::vector<IsolatingInterval> out;
    if (p.degree() == 0) return out;
    const SturmSequence seq(p);
    isolate_rec(p, seq, range.lo, range.hi, seq.count(range.lo, range.hi), out);
    return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
    const Rational b = cauchy_bound(p);
    return sturm_isolate(p, {-b, b});
}

bool isolates_single_root(const Polynomial& p, const IsolatingInterval& iv) {
    if (p.is_zero() || !(iv.lo < iv.hi)) return false;
    if (p.eval(iv.lo).is_zero() || p.eval(iv.hi).is_zero()) return false;
    return SturmSequence(p).count(iv.lo, iv.hi) == 1;
}

IsolatingInterval bisect_root(const Polynomial& p, const IsolatingInterval& iv) {
    const Rational mid = iv.midpoint();
    const int smid = p.eval(mid).sign();
    if (smid == 0) {
        const Rational q = iv.width() * Rational(1, 4);
        return {mid - q, mid + q};
    }
    const int slo = p.eval(iv.lo).sign();
    return slo == smid ? IsolatingInterval{mid, iv.hi} : IsolatingInterval{iv.lo, mid};
}

IsolatingInterval refine_root(const Polynomial& p, IsolatingInterval iv, const Rational& max_width) {
    while (iv.width() >= max_width) iv = bisect_root(p, iv);
    return iv;
}

IsolatingInterval eval_enclosure(const Polynomial& p, const Rational& lo, const Rational& hi) {
    Rational a, b;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        const Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
        a = std::min({p1, p2, p3, p4}) + *it;
        b = std::max({p1, p2, p3, p4}) + *it;
    }
    return {a, b};
}

}  // namespace mnc
