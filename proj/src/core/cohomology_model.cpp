#include "cohomology_model.hpp"

namespace mnc {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Torus: return "torus";
        case Provenance::Nilmanifold: return "nilmanifold";
        case Provenance::Generic: return "generic";
    }
    return "?";
}

void validate(const CohomologyModel& model) {
    const RationalField q;
    if (model.betti.empty()) throw invalid("model needs at least b_0");
    if (model.betti.size() != model.top_degree + 1) throw invalid("betti list length must be top_degree + 1");
    if (model.maps.size() != model.betti.size())
        throw invalid("expected " + std::to_string(model.betti.size()) + " maps, got " +
                      std::to_string(model.maps.size()));
    if (model.betti[0] != 1) throw invalid("b_0 must be 1 (connected fiber)");
    for (std::size_t k = 0; k < model.maps.size(); ++k) {
        const auto& m = model.maps[k];
        const std::size_t b = model.betti[k];
        if (m.rows() != b || m.cols() != b)
            throw invalid("map M_" + std::to_string(k) + " must be " + std::to_string(b) + "x" + std::to_string(b));
        if (rank(q, m) != b) throw invalid("map M_" + std::to_string(k) + " is singular");
    }
    if (!model.maps[0](0, 0).is_one()) throw invalid("M_0 must be [1]");
}

CohomologyModel torus_model(const RationalMatrix& a) {
    if (!a.is_square() || a.rows() == 0) throw invalid("torus matrix must be square and non-empty");
    for (const auto& e : a.data())
        if (!e.is_integer()) throw invalid("torus matrix must have integer entries");
    const Rational det = bareiss_determinant(a);
    if (!det.abs().is_one()) throw invalid("torus matrix must have det = +-1, got " + det.to_string());
    CohomologyModel m;
    m.top_degree = a.rows();
    m.provenance = Provenance::Torus;
    const auto at = a.transpose();
    for (std::size_t k = 0; k <= a.rows(); ++k) {
        m.betti.push_back(binomial(a.rows(), k));
        m.maps.push_back(exterior_power(at, k));
    }
    return m;
}

CohomologyModel nilmanifold_model(const LieAlgebra& g, const RationalMatrix& phi) {
    g.check_jacobi();
    if (!g.is_nilpotent()) throw invalid("Lie algebra is not nilpotent; the Nomizu model does not apply");
    g.check_automorphism(phi);
    const auto cx = ce_complex(g);
    const auto coh = ce_cohomology(cx);
    CohomologyModel m;
    m.top_degree = g.dim();
    m.provenance = Provenance::Nilmanifold;
    m.betti = coh.betti;
    const auto pt = phi.transpose();
    for (std::size_t k = 0; k <= g.dim(); ++k) {
        m.maps.push_back(
            induced_cohomology_map(exterior_power(pt, k), coh.representatives[k], coh.coboundaries[k]));
    }
    validate(m);
    return m;
}

CohomologyModel generic_model(const std::vector<std::size_t>& betti, const std::vector<RationalMatrix>& maps) {
    CohomologyModel m;
    if (betti.empty()) throw invalid("betti list must be non-empty");
    m.top_degree = betti.size() - 1;
    m.betti = betti;
    m.maps = maps;
    m.provenance = Provenance::Generic;
    validate(m);
    return m;
}

}  // namespace mnc
