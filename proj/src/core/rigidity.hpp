#pragma once

#include <string>
#include <variant>
#include <vector>

#include "matrix.hpp"
#include "novikov.hpp"

namespace mnc {

/// Model Lie affine foliation data on the mapping torus: the action M of
/// [phi^*] on H^1(L), a class alpha with M alpha = mu alpha, and mu = e^lambda.
struct ModelFoliationSpec {
    RationalMatrix h1_map;
    /// Entries in Q (rational twist) or Q(mu) (algebraic twist), as residues.
    std::vector<Polynomial> alpha;
    TwistScalar mu;
    std::size_t fiber_b1 = 0;
};

enum class Verdict { Rigid, CriterionFails };

const char* to_string(Verdict v);

struct RigidityReport {
    std::size_t dim_eig = 0;   // dim ker(M - mu I)
    std::size_t dim_gen2 = 0;  // dim ker((M - mu I)^2)
    bool alpha_in_image = false;
    std::size_t dim_H1A = 0;   // deformation cohomology dimension
    Verdict verdict = Verdict::CriterionFails;

    /// "criterion holds; rigid as a Lie foliation" or the non-vanishing notice.
    std::string message() const;
};

/// Throws Invalid when the spec is not a model foliation: alpha is zero or
/// not a mu-eigenvector, mu is not real positive, mu == 1, or b_1 < 2.
void validate(const ModelFoliationSpec& spec);

/// Squared-kernel criterion: RIGID iff dim ker((M - mu I)^2) = 1.
RigidityReport check_rigidity(const ModelFoliationSpec& spec);

/// dim H^1(A) = (dim ker(M - mu I) - 1) + [alpha in im(M - mu I)].
std::size_t deformation_h1_dim(const ModelFoliationSpec& spec);

/// [dim_eig = 1 and alpha not in image] <=> [dim_gen2 = 1].
bool criterion_crosscheck(const ModelFoliationSpec& spec);

/// Projects a cohomology model to its degree-1 data.
ModelFoliationSpec spec_from_model(const CohomologyModel& model, std::vector<Polynomial> alpha, TwistScalar mu);

}  // namespace mnc
