#pragma once

#include <algorithm>
#include <optional>
#include <type_traits>
#include <vector>

#include "matrix.hpp"
#include "number_field.hpp"
#include "polynomial.hpp"

namespace mnc {

template <class F>
using ElementOf = typename F::Element;

/// Linearly independent vectors spanning a subspace of F^ambient_dim.
template <class E>
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<E>> vectors;

    std::size_t dim() const { return vectors.size(); }
};

struct EchelonForm {
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

template <class F>
Matrix<ElementOf<F>> zero_matrix(const F& field, std::size_t r, std::size_t c) {
    return Matrix<ElementOf<F>>(r, c, field.zero());
}

template <class F>
Matrix<ElementOf<F>> identity(const F& field, std::size_t n) {
    auto m = zero_matrix(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

template <class F>
Matrix<ElementOf<F>> lift(const F& field, const RationalMatrix& m) {
    std::vector<ElementOf<F>> d;
    d.reserve(m.data().size());
    for (const auto& q : m.data()) d.push_back(field.embed(q));
    return Matrix<ElementOf<F>>(m.rows(), m.cols(), std::move(d));
}

template <class F>
Matrix<ElementOf<F>> multiply(const F& field, const Matrix<ElementOf<F>>& a, const Matrix<ElementOf<F>>& b) {
    if (a.cols() != b.rows()) throw invalid("matrix product shape mismatch");
    auto out = zero_matrix(field, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

template <class F>
std::vector<ElementOf<F>> apply(const F& field, const Matrix<ElementOf<F>>& a, const std::vector<ElementOf<F>>& v) {
    if (a.cols() != v.size()) throw invalid("matrix-vector shape mismatch");
    std::vector<ElementOf<F>> out(a.rows(), field.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
    return out;
}

template <class F>
Matrix<ElementOf<F>> subtract(const Matrix<ElementOf<F>>& a, const Matrix<ElementOf<F>>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw invalid("matrix difference shape mismatch");
    auto out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

/// M - s*I for square M.
template <class F>
Matrix<ElementOf<F>> shift_diagonal(const Matrix<ElementOf<F>>& m, const ElementOf<F>& s) {
    if (!m.is_square()) throw invalid("diagonal shift of a non-square matrix");
    auto out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= s;
    return out;
}

template <class F>
Matrix<ElementOf<F>> matrix_power(const F& field, const Matrix<ElementOf<F>>& m, unsigned e) {
    if (!m.is_square()) throw invalid("power of a non-square matrix");
    auto result = identity(field, m.rows());
    auto base = m;
    while (e) {
        if (e & 1u) result = multiply(field, result, base);
        e >>= 1u;
        if (e) base = multiply(field, base, base);
    }
    return result;
}

/// In-place reduced row echelon form by exact Gauss-Jordan elimination.
template <class F>
EchelonForm rref_in_place(const F& field, Matrix<ElementOf<F>>& m) {
    EchelonForm ef;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const auto inv = field.one() / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const auto f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        ef.pivots.push_back(col);
        ++row;
    }
    return ef;
}

/// Fraction-free (Bareiss) rank of a rational matrix: rows are scaled to a
/// common integer denominator, then eliminated over Z with exact divisions.
std::size_t bareiss_rank(const RationalMatrix& m);
/// Fraction-free determinant of a square rational matrix.
Rational bareiss_determinant(const RationalMatrix& m);

template <class F>
std::size_t rank(const F& field, const Matrix<ElementOf<F>>& m) {
    if constexpr (std::is_same_v<F, RationalField>) {
        (void)field;
        return bareiss_rank(m);
    } else {
        auto work = m;
        return rref_in_place(field, work).pivots.size();
    }
}

/// Basis of the right null space, one vector per free column of the RREF.
template <class F>
SubspaceBasis<ElementOf<F>> kernel_basis(const F& field, const Matrix<ElementOf<F>>& m) {
    auto r = m;
    const auto ef = rref_in_place(field, r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ef.pivots) is_pivot[p] = true;
    SubspaceBasis<ElementOf<F>> out{m.cols(), {}};
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<ElementOf<F>> v(m.cols(), field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -r(i, free);
        out.vectors.push_back(std::move(v));
    }
    return out;
}

template <class F>
std::size_t nullity(const F& field, const Matrix<ElementOf<F>>& m) {
    return m.cols() - rank(field, m);
}

template <class F>
std::size_t coker_dim(const F& field, const Matrix<ElementOf<F>>& m) {
    return m.rows() - rank(field, m);
}

template <class F>
Matrix<ElementOf<F>> append_column(const Matrix<ElementOf<F>>& m, const std::vector<ElementOf<F>>& v) {
    if (v.size() != m.rows()) throw invalid("vector length does not match matrix rows");
    std::vector<ElementOf<F>> d;
    d.reserve(m.rows() * (m.cols() + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) d.push_back(m(i, j));
        d.push_back(v[i]);
    }
    return Matrix<ElementOf<F>>(m.rows(), m.cols() + 1, std::move(d));
}

/// True iff v lies in the column space of m.
template <class F>
bool membership(const F& field, const Matrix<ElementOf<F>>& m, const std::vector<ElementOf<F>>& v) {
    if (v.size() != m.rows()) throw invalid("membership: vector length does not match matrix rows");
    return rank(field, append_column<F>(m, v)) == rank(field, m);
}

/// Matrix whose columns are the given vectors.
template <class F>
Matrix<ElementOf<F>> from_columns(const F& field, std::size_t rows, const std::vector<std::vector<ElementOf<F>>>& cols) {
    auto m = zero_matrix(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw invalid("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

/// Some x with m x = b, or nullopt when b is outside the column space.
template <class F>
std::optional<std::vector<ElementOf<F>>> solve(const F& field, const Matrix<ElementOf<F>>& m,
                                                const std::vector<ElementOf<F>>& b) {
    auto aug = append_column<F>(m, b);
    const auto ef = rref_in_place(field, aug);
    if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;
    std::vector<ElementOf<F>> x(m.cols(), field.zero());
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) x[ef.pivots[i]] = aug(i, m.cols());
    return x;
}

template <class F>
Matrix<ElementOf<F>> inverse(const F& field, const Matrix<ElementOf<F>>& m) {
    if (!m.is_square()) throw invalid("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    auto aug = zero_matrix(field, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = field.one();
    }
    const auto ef = rref_in_place(field, aug);
    if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) throw invalid("matrix is singular");
    auto out = zero_matrix(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

/// det(xI - M) by Faddeev-LeVerrier; exact over Q.
Polynomial charpoly(const RationalMatrix& m);

/// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);
std::size_t binomial(std::size_t n, std::size_t k);

/// k-th compound matrix: entry (I, J) is the minor on rows I, columns J, with
/// index sets in lexicographic order.
RationalMatrix exterior_power(const RationalMatrix& a, std::size_t k);

RationalMatrix rational_identity(std::size_t n);

}  // namespace mnc
