#pragma once

// Hand-rolled random generators for property tests. Every generator takes the
// engine by reference so a single seed reproduces a whole run.

#include <random>
#include <vector>

#include "cohomology_model.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "novikov.hpp"
#include "rigidity.hpp"

namespace mnc::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng, long num = 5, long den = 3) {
    return Rational(uniform(rng, -num, num), uniform(rng, 1, den));
}

inline Rational nonzero_rational(Rng& rng, long num = 5, long den = 3) {
    Rational r;
    while (r.is_zero()) r = small_rational(rng, num, den);
    return r;
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound = 4) {
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(uniform(rng, -bound, bound));
    return m;
}

/// Integer matrix of determinant +-1 from random elementary row operations.
inline RationalMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 8, long mult = 2) {
    RationalMatrix m = rational_identity(n);
    if (n < 2) {
        if (n == 1 && uniform(rng, 0, 1)) m(0, 0) = Rational(-1);
        return m;
    }
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const Rational f(uniform(rng, -mult, mult));
        for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
    }
    if (uniform(rng, 0, 3) == 0) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
    }
    return m;
}

/// Invertible rational matrix P with a known inverse-friendly structure.
inline RationalMatrix random_invertible(Rng& rng, std::size_t n) {
    RationalMatrix m = random_unimodular(rng, n, 6, 2);
    for (std::size_t c = 0; c < n; ++c) {
        const Rational d = nonzero_rational(rng, 3, 2);
        for (std::size_t r = 0; r < n; ++r) m(r, c) *= d;
    }
    return m;
}

/// Word in U = [[1,1],[0,1]] and L = [[1,0],[1,1]] with trace > 2.
inline RationalMatrix random_sl2_hyperbolic(Rng& rng) {
    const RationalMatrix u = rational_matrix({{1, 1}, {0, 1}});
    const RationalMatrix l = rational_matrix({{1, 0}, {1, 1}});
    while (true) {
        RationalMatrix a = rational_identity(2);
        const long len = uniform(rng, 2, 8);
        for (long s = 0; s < len; ++s) a = multiply(RationalField{}, a, uniform(rng, 0, 1) ? u : l);
        if (a(0, 0) + a(1, 1) > Rational(2)) return a;
    }
}

inline RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    RationalMatrix m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

inline RationalMatrix jordan_block(const Rational& lambda, std::size_t size) {
    RationalMatrix j(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        j(i, i) = lambda;
        if (i + 1 < size) j(i, i + 1) = Rational(1);
    }
    return j;
}

inline RationalMatrix conjugate(const RationalMatrix& p, const RationalMatrix& m) {
    const RationalField q;
    return multiply(q, multiply(q, p, m), inverse(q, p));
}

/// Invertible map with prescribed rational eigenvalue content: Jordan blocks
/// for a few eigenvalues from `pool`, conjugated by a random P.
inline RationalMatrix random_map_with_eigenvalues(Rng& rng, std::size_t n, const std::vector<Rational>& pool) {
    if (n == 0) return RationalMatrix(0, 0);
    std::vector<RationalMatrix> blocks;
    std::size_t used = 0;
    while (used < n) {
        const auto size = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min<std::size_t>(n - used, 2))));
        blocks.push_back(jordan_block(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))], size));
        used += size;
    }
    return conjugate(random_invertible(rng, n), block_diagonal(blocks));
}

/// Generic model of top degree 1..4 whose maps have eigenvalues drawn from pool.
inline CohomologyModel random_generic_model(Rng& rng, const std::vector<Rational>& pool) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::vector<std::size_t> betti{1};
    std::vector<RationalMatrix> maps{rational_identity(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        betti.push_back(static_cast<std::size_t>(uniform(rng, 0, 3)));
        maps.push_back(random_map_with_eigenvalues(rng, betti.back(), pool));
    }
    return generic_model(betti, maps);
}

/// Torus model for a random unimodular matrix of size 2..4.
inline CohomologyModel random_torus_model(Rng& rng) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 4));
    return torus_model(random_unimodular(rng, n, 6, 1));
}

/// Random nilpotent Lie algebra: strictly upper-triangular brackets
/// [e_i, e_j] in span{e_k : k > j}, retried until Jacobi holds.
inline LieAlgebra random_nilpotent_algebra(Rng& rng, std::size_t dim) {
    while (true) {
        LieAlgebra g(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) {
                if (uniform(rng, 0, 2) != 0) continue;
                std::vector<Rational> c(dim);
                bool any = false;
                for (std::size_t k = j + 1; k < dim; ++k)
                    if (uniform(rng, 0, 1)) {
                        c[k] = Rational(uniform(rng, -2, 2));
                        any = any || !c[k].is_zero();
                    }
                if (any) g.set_bracket(i, j, c);
            }
        try {
            g.check_jacobi();
            return g;
        } catch (const Error&) {
        }
    }
}

/// Eigen-spec fuzzing: M = P J P^-1 with J containing Jordan blocks for a
/// rational mu (sizes 1..3) next to unrelated eigenvalues, and alpha a random
/// nonzero combination of the mu-eigenvectors.
inline ModelFoliationSpec random_rational_eigen_spec(Rng& rng) {
    const Rational mu = std::vector<Rational>{Rational(2), Rational(3), Rational(1, 2), Rational(5, 3)}
        [static_cast<std::size_t>(uniform(rng, 0, 3))];
    std::vector<RationalMatrix> blocks;
    std::vector<std::size_t> heads;
    std::size_t n = 0;
    const long mu_blocks = uniform(rng, 1, 2);
    for (long b = 0; b < mu_blocks; ++b) {
        const auto size = static_cast<std::size_t>(uniform(rng, 1, 3));
        heads.push_back(n);
        blocks.push_back(jordan_block(mu, size));
        n += size;
    }
    const long others = uniform(rng, n < 2 ? 1 : 0, 2);
    for (long b = 0; b < others; ++b) {
        Rational other = mu;
        while (other == mu || other.is_zero()) other = small_rational(rng, 4, 2);
        const auto size = static_cast<std::size_t>(uniform(rng, 1, 2));
        blocks.push_back(jordan_block(other, size));
        n += size;
    }
    const RationalMatrix j = block_diagonal(blocks);
    const RationalMatrix p = random_invertible(rng, n);
    std::vector<Rational> v(n);
    bool any = false;
    while (!any)
        for (auto h : heads) {
            v[h] = Rational(uniform(rng, -2, 2));
            any = any || !v[h].is_zero();
        }
    const auto alpha_q = apply(RationalField{}, p, v);
    ModelFoliationSpec spec{conjugate(p, j), {}, TwistScalar::rational(mu), n};
    for (const auto& a : alpha_q) spec.alpha.push_back(Polynomial::constant(a));
    return spec;
}

/// Algebraic eigen-spec: copies of a hyperbolic SL2 block (possibly coupled
/// into a generalized eigenspace) plus unrelated blocks, conjugated by P. mu is
/// the largest root of the block's characteristic polynomial.
inline ModelFoliationSpec random_algebraic_eigen_spec(Rng& rng) {
    const RationalMatrix a = random_sl2_hyperbolic(rng);
    const long copies = uniform(rng, 1, 2);
    std::vector<RationalMatrix> blocks;
    for (long c = 0; c < copies; ++c) blocks.push_back(a);
    if (uniform(rng, 0, 1)) blocks.push_back(rational_matrix({{1, 0}, {0, 1}}));
    RationalMatrix j = block_diagonal(blocks);
    if (copies == 2 && uniform(rng, 0, 1)) {
        // couple the two copies: [[A, I], [0, A]] has a size-2 Jordan structure
        j(0, 2) = Rational(1);
        j(1, 3) = Rational(1);
    }
    const std::size_t n = j.rows();
    const RationalMatrix m = conjugate(random_invertible(rng, n), j);
    const Polynomial chi = charpoly(a);
    const auto roots = isolate_real_roots(chi);
    const TwistScalar mu = TwistScalar::root_of(chi, roots.back());
    const auto& field = mu.field_value().field();
    const auto shifted = shift_diagonal<NumberField>(lift(field, m), mu.field_value());
    const auto kernel = kernel_basis(field, shifted);
    std::vector<FieldElement> alpha(n, field.zero());
    for (const auto& v : kernel.vectors) {
        const auto c = field.embed(Rational(uniform(rng, 1, 3)));
        for (std::size_t i = 0; i < n; ++i) alpha[i] += c * v[i];
    }
    ModelFoliationSpec spec{m, {}, mu, n};
    for (const auto& e : alpha) spec.alpha.push_back(e.residue());
    return spec;
}

}  // namespace mnc::testing
