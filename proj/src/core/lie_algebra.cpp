#include "lie_algebra.hpp"

#include <algorithm>
#include <string>

namespace mnc {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

bool is_zero_vector(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw invalid("Lie algebra dimension must be positive");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::vector<Rational> coeffs) {
    if (!(i < j) || j >= dim_) throw invalid("bracket indices must satisfy 1 <= i < j <= dim");
    if (coeffs.size() != dim_) throw invalid("bracket coefficient vector has wrong length");
    if (is_zero_vector(coeffs)) {
        table_.erase({i, j});
        return;
    }
    table_[{i, j}] = std::move(coeffs);
}

std::vector<Rational> LieAlgebra::bracket(std::size_t i, std::size_t j) const {
    std::vector<Rational> out(dim_);
    if (i == j) return out;
    const bool swapped = i > j;
    const auto it = table_.find(swapped ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table_.end()) return out;
    out = it->second;
    if (swapped)
        for (auto& c : out) c = -c;
    return out;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    std::vector<Rational> out(dim_);
    for (const auto& [key, coeffs] : table_) {
        const auto [i, j] = key;
        const Rational w = x[i] * y[j] - x[j] * y[i];
        if (w.is_zero()) continue;
        for (std::size_t k = 0; k < dim_; ++k) out[k] += w * coeffs[k];
    }
    return out;
}

void LieAlgebra::check_jacobi() const {
    auto unit = [&](std::size_t i) {
        std::vector<Rational> e(dim_);
        e[i] = Rational(1);
        return e;
    };
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                auto a = bracket(bracket(i, j), unit(k));
                const auto b = bracket(bracket(j, k), unit(i));
                const auto c = bracket(bracket(k, i), unit(j));
                for (std::size_t t = 0; t < dim_; ++t) a[t] += b[t] + c[t];
                if (!is_zero_vector(a))
                    throw invalid("Jacobi identity fails for (i,j,k) = (" + idx(i) + "," + idx(j) + "," +
                                  idx(k) + ")");
            }
}

std::size_t LieAlgebra::derived_dim() const {
    std::vector<std::vector<Rational>> span;
    for (const auto& [key, coeffs] : table_) span.push_back(coeffs);
    if (span.empty()) return 0;
    return rank(RationalField{}, from_columns(RationalField{}, dim_, span));
}

bool LieAlgebra::is_nilpotent() const {
    const RationalField q;
    // Lower central series g^1 = g, g^{s+1} = [g, g^s].
    std::vector<std::vector<Rational>> current;
    for (std::size_t i = 0; i < dim_; ++i) {
        std::vector<Rational> e(dim_);
        e[i] = Rational(1);
        current.push_back(std::move(e));
    }
    std::size_t prev_dim = dim_;
    while (!current.empty()) {
        std::vector<std::vector<Rational>> next;
        for (std::size_t i = 0; i < dim_; ++i) {
            std::vector<Rational> e(dim_);
            e[i] = Rational(1);
            for (const auto& v : current) {
                auto b = bracket(e, v);
                if (!is_zero_vector(b)) next.push_back(std::move(b));
            }
        }
        if (next.empty()) return true;
        auto r = from_columns(q, dim_, next).transpose();
        const auto ef = rref_in_place(q, r);
        const std::size_t d = ef.pivots.size();
        if (d == 0) return true;
        if (d >= prev_dim) return false;
        current.clear();
        for (std::size_t row = 0; row < d; ++row) {
            std::vector<Rational> v(dim_);
            for (std::size_t c = 0; c < dim_; ++c) v[c] = r(row, c);
            current.push_back(std::move(v));
        }
        prev_dim = d;
    }
    return true;
}

void LieAlgebra::check_automorphism(const RationalMatrix& phi) const {
    if (phi.rows() != dim_ || phi.cols() != dim_)
        throw invalid("automorphism must be a " + std::to_string(dim_) + "x" + std::to_string(dim_) + " matrix");
    if (rank(RationalField{}, phi) != dim_) throw invalid("automorphism matrix is singular");
    const RationalField q;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const auto lhs = apply(q, phi, bracket(i, j));
            const auto rhs = bracket(phi.column(i), phi.column(j));
            if (lhs != rhs)
                throw invalid("automorphism does not preserve the bracket on pair (" + idx(i) + "," + idx(j) +
                              "): phi[e" + idx(i) + ",e" + idx(j) + "] != [phi e" + idx(i) + ",phi e" +
                              idx(j) + "]");
        }
}

CEComplex ce_complex(const LieAlgebra& g) {
    g.check_jacobi();
    const std::size_t m = g.dim();
    CEComplex cx;
    cx.dim = m;

    // d theta^a as a list of (u, v, coeff) with u < v.
    struct Term {
        std::size_t u, v;
        Rational c;
    };
    std::vector<std::vector<Term>> dgen(m);
    for (const auto& [key, coeffs] : g.brackets())
        for (std::size_t a = 0; a < m; ++a)
            if (!coeffs[a].is_zero()) dgen[a].push_back({key.first, key.second, -coeffs[a]});

    for (std::size_t k = 0; k <= m; ++k) {
        const auto src = k_subsets(m, k);
        const auto dst = k_subsets(m, k + 1);
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t r = 0; r < dst.size(); ++r) index[dst[r]] = r;
        RationalMatrix d(dst.size(), src.size(), Rational());
        for (std::size_t c = 0; c < src.size(); ++c) {
            const auto& I = src[c];
            for (std::size_t p = 0; p < k; ++p) {
                for (const auto& t : dgen[I[p]]) {
                    std::vector<std::size_t> seq;
                    seq.reserve(k + 1);
                    for (std::size_t q = 0; q < k; ++q) {
                        if (q == p) {
                            seq.push_back(t.u);
                            seq.push_back(t.v);
                        } else {
                            seq.push_back(I[q]);
                        }
                    }
                    int inversions = 0;
                    bool repeated = false;
                    for (std::size_t x = 0; x < seq.size(); ++x)
                        for (std::size_t y = x + 1; y < seq.size(); ++y) {
                            if (seq[x] == seq[y]) repeated = true;
                            if (seq[x] > seq[y]) ++inversions;
                        }
                    if (repeated) continue;
                    std::sort(seq.begin(), seq.end());
                    const bool negative = ((p % 2) != 0) != ((inversions % 2) != 0);
                    d(index.at(seq), c) += negative ? -t.c : t.c;
                }
            }
        }
        cx.differentials.push_back(std::move(d));
    }
    return cx;
}

CECohomology ce_cohomology(const CEComplex& cx) {
    const RationalField q;
    const std::size_t m = cx.dim;
    CECohomology out;
    for (std::size_t k = 0; k <= m; ++k) {
        const auto cocycles = kernel_basis(q, cx.differentials[k]);
        std::vector<std::vector<Rational>> bnd;
        if (k > 0) {
            // Column echelon basis of im d_{k-1}.
            auto t = cx.differentials[k - 1].transpose();
            const auto ef = rref_in_place(q, t);
            for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
                std::vector<Rational> v(t.cols());
                for (std::size_t c = 0; c < t.cols(); ++c) v[c] = t(r, c);
                bnd.push_back(std::move(v));
            }
        }
        // Extend the coboundary basis greedily by RREF cocycles.
        std::vector<std::vector<Rational>> reps;
        auto span = bnd;
        std::size_t current = span.size();
        const std::size_t ambient = cocycles.ambient_dim;
        for (const auto& z : cocycles.vectors) {
            span.push_back(z);
            const std::size_t r = rank(q, from_columns(q, ambient, span));
            if (r > current) {
                reps.push_back(z);
                current = r;
            } else {
                span.pop_back();
            }
        }
        out.betti.push_back(reps.size());
        out.representatives.push_back(std::move(reps));
        out.coboundaries.push_back(std::move(bnd));
    }
    return out;
}

CECohomology ce_cohomology(const LieAlgebra& g) { return ce_cohomology(ce_complex(g)); }

RationalMatrix induced_cohomology_map(const RationalMatrix& cochain_map,
                                      const std::vector<std::vector<Rational>>& reps,
                                      const std::vector<std::vector<Rational>>& bnd) {
    const RationalField q;
    const std::size_t b = reps.size();
    const std::size_t ambient = cochain_map.rows();
    std::vector<std::vector<Rational>> basis = reps;
    basis.insert(basis.end(), bnd.begin(), bnd.end());
    const auto sys = from_columns(q, ambient, basis);
    RationalMatrix out(b, b, Rational());
    for (std::size_t j = 0; j < b; ++j) {
        const auto image = apply(q, cochain_map, reps[j]);
        const auto x = solve(q, sys, image);
        if (!x) throw invalid("cochain map does not preserve cocycles");
        for (std::size_t i = 0; i < b; ++i) out(i, j) = (*x)[i];
    }
    return out;
}

}  // namespace mnc
