#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cohomology_model.hpp"
#include "lie_algebra.hpp"
#include "novikov.hpp"
#include "oracle.hpp"
#include "rigidity.hpp"

namespace mnc {

using json = nlohmann::json;

/// A parsed model file: one of
///   {"type":"torus","matrix":[[...]]}
///   {"type":"nilmanifold","dim":m,"brackets":[{"i":1,"j":2,"coeffs":{"3":"1"}}],"automorphism":[[...]]}
///   {"type":"generic","betti":[...],"maps":[[[...]],...]}
/// plus optional "name", "description", "twist": {"mu": SPEC} and
/// "rigidity": {"mu": SPEC, "alpha": [...]} blocks. Unknown keys are rejected.
struct ModelDocument {
    struct Rigidity {
        std::optional<std::string> mu;
        std::vector<std::string> alpha;
    };

    std::optional<std::string> name;
    std::optional<std::string> description;
    Provenance type = Provenance::Generic;
    std::optional<RationalMatrix> matrix;        // torus
    std::optional<LieAlgebra> algebra;           // nilmanifold
    std::optional<RationalMatrix> automorphism;  // nilmanifold, optional
    std::vector<std::size_t> betti;              // generic
    std::vector<RationalMatrix> maps;            // generic
    std::optional<std::string> twist;
    std::optional<Rigidity> rigidity;

    /// False for a bare Lie algebra (nilmanifold without automorphism).
    bool has_cohomology_model() const;
    CohomologyModel build_model() const;
    /// Twist from the "twist" block; throws when absent.
    TwistScalar twist_scalar() const;
    /// Model foliation spec from the "rigidity" block (mu defaults to the twist).
    ModelFoliationSpec rigidity_spec() const;
};

/// Parses and validates a model file. Diagnostics name the offending JSON
/// field, e.g. "/matrix/1: row has 3 entries, expected 2".
ModelDocument parse_model_document(std::string_view text);
json to_json(const ModelDocument& doc);

/// "p/q" or "POLY in (lo,hi)", e.g. "x^2-3x+1 in (2,3)".
TwistScalar parse_twist_spec(std::string_view spec);

json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j, const std::string& path);

json to_json(const TwistScalar& mu);
json to_json(const NovikovResult& r, const TwistScalar& mu);
json betti_to_json(const std::vector<std::size_t>& betti);
json to_json(const std::vector<EigenFactor>& factors, std::size_t degree);
json to_json(const RigidityReport& r, const ModelFoliationSpec& spec);
json to_json(const CrosscheckReport& r);
json ce_to_json(const ModelDocument& doc);

}  // namespace mnc
