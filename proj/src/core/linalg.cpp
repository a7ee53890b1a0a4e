#include "linalg.hpp"

namespace mnc {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix integer_rows(const RationalMatrix& m) {
    IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class d = m(i, j).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    return out;
}

// Fraction-free echelonization; returns rank and the sign of row swaps.
std::size_t bareiss(IntMatrix& a, std::size_t cols, int& swap_sign) {
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    swap_sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            swap_sign = -swap_sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

std::size_t bareiss_rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = integer_rows(m);
    int s = 1;
    return bareiss(a, m.cols(), s);
}

Rational bareiss_determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw invalid("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    // Undo the per-row scaling applied by integer_rows.
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class d = m(i, j).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        scale *= Rational(l);
    }
    auto a = integer_rows(m);
    int s = 1;
    if (bareiss(a, n, s) < n) return Rational();
    return Rational(mpz_class(a[n - 1][n - 1] * s)) / scale;
}

Polynomial charpoly(const RationalMatrix& m) {
    if (!m.is_square()) throw invalid("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    const RationalField q;
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    RationalMatrix mk = zero_matrix(q, n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = shift_diagonal<RationalField>(multiply(q, m, mk), -c[n - k + 1]);
        const RationalMatrix amk = multiply(q, m, mk);
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

RationalMatrix exterior_power(const RationalMatrix& a, std::size_t k) {
    if (!a.is_square()) throw invalid("exterior power of a non-square matrix");
    if (k > a.rows()) throw invalid("exterior power degree out of range");
    const auto subsets = k_subsets(a.rows(), k);
    const std::size_t m = subsets.size();
    RationalMatrix out(m, m, Rational());
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            RationalMatrix minor(k, k, Rational());
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(subsets[r][i], subsets[c][j]);
            out(r, c) = bareiss_determinant(minor);
        }
    }
    return out;
}

RationalMatrix rational_identity(std::size_t n) { return identity(RationalField{}, n); }

}  // namespace mnc
