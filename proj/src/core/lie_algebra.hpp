#pragma once

#include <map>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"

namespace mnc {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k K^k_{ij} e_k, stored for i < j only (0-based).
class LieAlgebra {
public:
    explicit LieAlgebra(std::size_t dim);

    /// Sets [e_i, e_j] for i < j (0-based); coeffs has length dim().
    void set_bracket(std::size_t i, std::size_t j, std::vector<Rational> coeffs);

    std::size_t dim() const { return dim_; }
    /// [e_i, e_j] for any i, j, using antisymmetry.
    std::vector<Rational> bracket(std::size_t i, std::size_t j) const;
    /// Bilinear extension to arbitrary vectors.
    std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    const std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>& brackets() const {
        return table_;
    }

    /// Throws Invalid naming the first (i, j, k) whose Jacobi sum is nonzero.
    void check_jacobi() const;
    bool is_nilpotent() const;
    /// dim [g, g].
    std::size_t derived_dim() const;

    /// Throws Invalid naming a basis pair on which phi fails to preserve the
    /// bracket. Column j of phi is phi(e_j).
    void check_automorphism(const RationalMatrix& phi) const;

private:
    std::size_t dim_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> table_;
};

/// Chevalley-Eilenberg cochains: differentials d_k : Lambda^k g* -> Lambda^{k+1} g*
/// in the lexicographic wedge basis, k = 0..dim.
struct CEComplex {
    std::size_t dim = 0;
    std::vector<RationalMatrix> differentials;
};

/// d theta^k = -sum_{i<j} K^k_{ij} theta^i ^ theta^j, extended as a graded
/// derivation. Verifies the Jacobi identity first.
CEComplex ce_complex(const LieAlgebra& g);

struct CECohomology {
    std::vector<std::size_t> betti;
    /// Per degree: cocycles whose classes form a basis of H^k.
    std::vector<std::vector<std::vector<Rational>>> representatives;
    /// Per degree: basis of the coboundaries B^k.
    std::vector<std::vector<std::vector<Rational>>> coboundaries;
};

CECohomology ce_cohomology(const LieAlgebra& g);
CECohomology ce_cohomology(const CEComplex& complex);

/// Matrix of the map induced on H^k by a cochain map given in the wedge basis.
RationalMatrix induced_cohomology_map(const RationalMatrix& cochain_map,
                                      const std::vector<std::vector<Rational>>& representatives,
                                      const std::vector<std::vector<Rational>>& coboundaries);

}  // namespace mnc
