#pragma once

#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace mnc {

/// Largest degree of an irreducible factor this library certifies. Larger
/// non-linear remainders are reported as unsupported rather than guessed.
inline constexpr int kMaxCertifiedDegree = 6;

/// Distinct rational roots of p (p != 0), increasing.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Kronecker search for a monic factor of exact degree factor_degree of the
/// monic polynomial p. Returns the factor (monic over Q) or nullopt.
std::optional<Polynomial> kronecker_factor(const Polynomial& p, int factor_degree);

/// Irreducible monic factors of a monic square-free p, sorted by
/// (degree, coefficients). Throws Unsupported beyond kMaxCertifiedDegree.
std::vector<Polynomial> irreducible_factors(const Polynomial& p);

/// Orders polynomials by degree, then coefficients from the top down.
bool polynomial_less(const Polynomial& a, const Polynomial& b);

}  // namespace mnc
