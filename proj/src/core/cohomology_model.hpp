#pragma once

#include <string>
#include <vector>

#include "lie_algebra.hpp"
#include "matrix.hpp"

namespace mnc {

enum class Provenance { Torus, Nilmanifold, Generic };

const char* to_string(Provenance p);

/// Finite model of H^*(L) with the monodromy action: Betti numbers b_0..b_n
/// and invertible matrices M_k of [phi^*] on H^k(L).
struct CohomologyModel {
    std::size_t top_degree = 0;
    std::vector<std::size_t> betti;
    std::vector<RationalMatrix> maps;
    Provenance provenance = Provenance::Generic;

    const RationalMatrix& map(std::size_t k) const { return maps.at(k); }
};

/// Torus T^n with phi induced by A in GL_n(Z), |det A| = 1:
/// b_k = C(n, k), M_k = exterior_power(A^T, k).
CohomologyModel torus_model(const RationalMatrix& a);

/// Nilmanifold model via Nomizu: b_k from Chevalley-Eilenberg cohomology and
/// M_k induced by the pullback exterior_power(phi^T, k) on cocycles.
CohomologyModel nilmanifold_model(const LieAlgebra& g, const RationalMatrix& phi);

/// Direct user data. Requires b_0 = 1, M_0 = [1], square invertible maps.
CohomologyModel generic_model(const std::vector<std::size_t>& betti, const std::vector<RationalMatrix>& maps);

/// Checks every CohomologyModel invariant; throws Invalid with the first violation.
void validate(const CohomologyModel& model);

}  // namespace mnc
