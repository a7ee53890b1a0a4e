#include "rigidity.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace mnc {

const char* to_string(Verdict v) { return v == Verdict::Rigid ? "RIGID" : "CRITERION_FAILS"; }

std::string RigidityReport::message() const {
    if (verdict == Verdict::Rigid) return "H^1(A) = 0; rigid when deformed as a Lie foliation";
    return "H^1(A) != 0; rigidity not established";
}

namespace {

struct Measurements {
    bool alpha_zero = true;
    bool eigen = false;
    std::size_t dim_eig = 0;
    std::size_t dim_gen2 = 0;
    bool in_image = false;
};

Measurements measure(const ModelFoliationSpec& spec) {
    if (!spec.h1_map.is_square()) throw invalid("H^1 map must be square");
    if (spec.alpha.size() != spec.h1_map.rows())
        throw invalid("alpha has length " + std::to_string(spec.alpha.size()) + ", expected " +
                      std::to_string(spec.h1_map.rows()));
    Measurements out;
    with_twist_field(spec.mu, [&](const auto& field, const auto& mu) {
        using F = std::decay_t<decltype(field)>;
        std::vector<ElementOf<F>> alpha;
        for (const auto& a : spec.alpha) {
            if constexpr (std::is_same_v<F, RationalField>) {
                if (a.degree() > 0) throw invalid("alpha entries must be rational for a rational twist");
                alpha.push_back(a.coeff(0));
            } else {
                alpha.push_back(field.element(a));
            }
        }
        for (const auto& a : alpha) out.alpha_zero = out.alpha_zero && a.is_zero();
        const auto b = shift_diagonal<F>(lift(field, spec.h1_map), mu);
        const auto image = apply(field, b, alpha);
        out.eigen = std::all_of(image.begin(), image.end(), [](const auto& e) { return e.is_zero(); });
        out.dim_eig = nullity(field, b);
        out.dim_gen2 = nullity(field, multiply(field, b, b));
        out.in_image = membership(field, b, alpha);
        return 0;
    });
    return out;
}

Measurements checked(const ModelFoliationSpec& spec) {
    if (spec.fiber_b1 < 2) throw invalid("model foliations need b_1(L) >= 2, got " + std::to_string(spec.fiber_b1));
    if (spec.fiber_b1 != spec.h1_map.rows()) throw invalid("fiber_b1 does not match the size of the H^1 map");
    if (spec.mu.sign() != Sign::Positive) throw invalid("mu = e^lambda must be real and positive");
    if (spec.mu.is_one()) throw invalid("mu = 1 (lambda = 0) is not a model foliation");
    auto m = measure(spec);
    if (m.alpha_zero) throw invalid("alpha must be nonzero");
    if (!m.eigen) throw invalid("alpha is not an eigenvector of the H^1 map for mu");
    return m;
}

}  // namespace

void validate(const ModelFoliationSpec& spec) { (void)checked(spec); }

RigidityReport check_rigidity(const ModelFoliationSpec& spec) {
    const auto m = checked(spec);
    RigidityReport r;
    r.dim_eig = m.dim_eig;
    r.dim_gen2 = m.dim_gen2;
    r.alpha_in_image = m.in_image;
    r.dim_H1A = (m.dim_eig - 1) + (m.in_image ? 1 : 0);
    r.verdict = m.dim_gen2 == 1 ? Verdict::Rigid : Verdict::CriterionFails;
    return r;
}

std::size_t deformation_h1_dim(const ModelFoliationSpec& spec) { return check_rigidity(spec).dim_H1A; }

bool criterion_crosscheck(const ModelFoliationSpec& spec) {
    const auto r = check_rigidity(spec);
    const bool cohomological = r.dim_eig == 1 && !r.alpha_in_image;
    const bool squared_kernel = r.dim_gen2 == 1;
    return cohomological == squared_kernel && (r.dim_H1A == 0) == (r.verdict == Verdict::Rigid);
}

ModelFoliationSpec spec_from_model(const CohomologyModel& model, std::vector<Polynomial> alpha, TwistScalar mu) {
    if (model.top_degree < 1) throw invalid("model has no degree-1 cohomology");
    return ModelFoliationSpec{model.map(1), std::move(alpha), std::move(mu), model.betti[1]};
}

}  // namespace mnc
