#include "model_io.hpp"

#include <cctype>
#include <set>

#include "factor.hpp"

namespace mnc {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw invalid((path.empty() ? std::string("/") : path) + ": " + msg);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key)) fail(path + "/" + key, "unknown key");
    }
}

Rational rational_from_json(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return Rational::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    } catch (const Error& e) {
        fail(path, e.what());
    }
    fail(path, "expected a rational string \"p/q\" or an integer");
}

std::string string_from_json(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::size_t count_from_json(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Rational> data;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = path + "/" + std::to_string(r);
        const auto& row = j[r];
        if (!row.is_array()) fail(rp, "expected an array of entries");
        if (r == 0) cols = row.size();
        if (row.size() != cols)
            fail(rp, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) data.push_back(rational_from_json(row[c], rp + "/" + std::to_string(c)));
    }
    return RationalMatrix(rows, cols, std::move(data));
}

bool ModelDocument::has_cohomology_model() const {
    return type != Provenance::Nilmanifold || automorphism.has_value();
}

CohomologyModel ModelDocument::build_model() const {
    switch (type) {
        case Provenance::Torus: return torus_model(*matrix);
        case Provenance::Nilmanifold:
            if (!automorphism) throw invalid("/automorphism: required to build a nilmanifold cohomology model");
            return nilmanifold_model(*algebra, *automorphism);
        case Provenance::Generic: return generic_model(betti, maps);
    }
    throw invalid("unknown model type");
}

TwistScalar ModelDocument::twist_scalar() const {
    if (!twist) throw invalid("/twist: no twist scalar given (pass --mu or add a twist block)");
    return parse_twist_spec(*twist);
}

ModelFoliationSpec ModelDocument::rigidity_spec() const {
    if (!rigidity) throw invalid("/rigidity: block is required for the rigidity analysis");
    const auto mu_spec = rigidity->mu ? rigidity->mu : twist;
    if (!mu_spec) throw invalid("/rigidity/mu: missing twist scalar");
    TwistScalar mu = parse_twist_spec(*mu_spec);
    std::vector<Polynomial> alpha;
    for (std::size_t i = 0; i < rigidity->alpha.size(); ++i) {
        try {
            alpha.push_back(Polynomial::parse(rigidity->alpha[i]));
        } catch (const Error& e) {
            fail("/rigidity/alpha/" + std::to_string(i), e.what());
        }
    }
    return spec_from_model(build_model(), std::move(alpha), std::move(mu));
}

ModelDocument parse_model_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail("", "model file must be a JSON object");
    if (!j.contains("type")) fail("/type", "missing model type");
    const std::string type = string_from_json(j["type"], "/type");

    ModelDocument doc;
    std::set<std::string> allowed{"type", "name", "description", "twist", "rigidity"};
    if (type == "torus") {
        doc.type = Provenance::Torus;
        allowed.insert("matrix");
        reject_unknown(j, allowed, "");
        if (!j.contains("matrix")) fail("/matrix", "missing torus matrix");
        doc.matrix = matrix_from_json(j["matrix"], "/matrix");
    } else if (type == "nilmanifold") {
        doc.type = Provenance::Nilmanifold;
        allowed.insert({"dim", "brackets", "automorphism"});
        reject_unknown(j, allowed, "");
        if (!j.contains("dim")) fail("/dim", "missing Lie algebra dimension");
        const std::size_t m = count_from_json(j["dim"], "/dim");
        if (m == 0) fail("/dim", "dimension must be positive");
        LieAlgebra g(m);
        if (j.contains("brackets")) {
            const auto& br = j["brackets"];
            if (!br.is_array()) fail("/brackets", "expected an array");
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (std::size_t b = 0; b < br.size(); ++b) {
                const std::string bp = "/brackets/" + std::to_string(b);
                const auto& e = br[b];
                if (!e.is_object()) fail(bp, "expected an object");
                reject_unknown(e, {"i", "j", "coeffs"}, bp);
                if (!e.contains("i") || !e.contains("j") || !e.contains("coeffs")) fail(bp, "needs i, j, coeffs");
                const std::size_t i = count_from_json(e["i"], bp + "/i");
                const std::size_t jj = count_from_json(e["j"], bp + "/j");
                if (!(1 <= i && i < jj && jj <= m)) fail(bp, "indices must satisfy 1 <= i < j <= dim");
                if (!seen.insert({i, jj}).second) fail(bp, "duplicate bracket");
                if (!e["coeffs"].is_object()) fail(bp + "/coeffs", "expected an object {\"k\": \"p/q\"}");
                std::vector<Rational> coeffs(m);
                for (const auto& [key, val] : e["coeffs"].items()) {
                    const std::string cp = bp + "/coeffs/" + key;
                    std::size_t k = 0;
                    try {
                        k = std::stoul(key);
                    } catch (...) {
                        fail(cp, "key must be a basis index");
                    }
                    if (k < 1 || k > m) fail(cp, "basis index out of range");
                    coeffs[k - 1] = rational_from_json(val, cp);
                }
                g.set_bracket(i - 1, jj - 1, std::move(coeffs));
            }
        }
        try {
            g.check_jacobi();
        } catch (const Error& e) {
            fail("/brackets", e.what());
        }
        doc.algebra = std::move(g);
        if (j.contains("automorphism")) {
            doc.automorphism = matrix_from_json(j["automorphism"], "/automorphism");
            try {
                doc.algebra->check_automorphism(*doc.automorphism);
            } catch (const Error& e) {
                fail("/automorphism", e.what());
            }
        }
    } else if (type == "generic") {
        doc.type = Provenance::Generic;
        allowed.insert({"betti", "maps"});
        reject_unknown(j, allowed, "");
        if (!j.contains("betti") || !j["betti"].is_array()) fail("/betti", "expected an array of Betti numbers");
        for (std::size_t k = 0; k < j["betti"].size(); ++k)
            doc.betti.push_back(count_from_json(j["betti"][k], "/betti/" + std::to_string(k)));
        if (!j.contains("maps") || !j["maps"].is_array()) fail("/maps", "expected an array of matrices");
        for (std::size_t k = 0; k < j["maps"].size(); ++k)
            doc.maps.push_back(matrix_from_json(j["maps"][k], "/maps/" + std::to_string(k)));
    } else {
        fail("/type", "unknown model type '" + type + "' (torus | nilmanifold | generic)");
    }

    if (j.contains("name")) doc.name = string_from_json(j["name"], "/name");
    if (j.contains("description")) doc.description = string_from_json(j["description"], "/description");
    if (j.contains("twist")) {
        const auto& t = j["twist"];
        if (!t.is_object()) fail("/twist", "expected an object");
        reject_unknown(t, {"mu"}, "/twist");
        if (!t.contains("mu")) fail("/twist/mu", "missing");
        doc.twist = string_from_json(t["mu"], "/twist/mu");
    }
    if (j.contains("rigidity")) {
        const auto& r = j["rigidity"];
        if (!r.is_object()) fail("/rigidity", "expected an object");
        reject_unknown(r, {"mu", "alpha"}, "/rigidity");
        ModelDocument::Rigidity rb;
        if (r.contains("mu")) rb.mu = string_from_json(r["mu"], "/rigidity/mu");
        if (!r.contains("alpha") || !r["alpha"].is_array()) fail("/rigidity/alpha", "expected an array");
        for (std::size_t i = 0; i < r["alpha"].size(); ++i) {
            const auto& a = r["alpha"][i];
            const std::string ap = "/rigidity/alpha/" + std::to_string(i);
            if (a.is_number_integer())
                rb.alpha.push_back(std::to_string(a.get<long long>()));
            else
                rb.alpha.push_back(string_from_json(a, ap));
        }
        doc.rigidity = std::move(rb);
    }

    // Shape-level validation of the cohomology data now, so errors carry a path.
    if (doc.has_cohomology_model()) {
        try {
            (void)doc.build_model();
        } catch (const Error& e) {
            const char* where = doc.type == Provenance::Torus ? "/matrix"
                                : doc.type == Provenance::Generic ? "/maps"
                                                                  : "/automorphism";
            fail(where, e.what());
        }
    }
    return doc;
}

json to_json(const ModelDocument& doc) {
    json j;
    j["type"] = to_string(doc.type);
    if (doc.name) j["name"] = *doc.name;
    if (doc.description) j["description"] = *doc.description;
    switch (doc.type) {
        case Provenance::Torus: j["matrix"] = matrix_to_json(*doc.matrix); break;
        case Provenance::Nilmanifold: {
            j["dim"] = doc.algebra->dim();
            json br = json::array();
            for (const auto& [key, coeffs] : doc.algebra->brackets()) {
                json c = json::object();
                for (std::size_t k = 0; k < coeffs.size(); ++k)
                    if (!coeffs[k].is_zero()) c[std::to_string(k + 1)] = coeffs[k].to_string();
                br.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"coeffs", c}});
            }
            j["brackets"] = br;
            if (doc.automorphism) j["automorphism"] = matrix_to_json(*doc.automorphism);
            break;
        }
        case Provenance::Generic: {
            j["betti"] = doc.betti;
            json maps = json::array();
            for (const auto& m : doc.maps) maps.push_back(matrix_to_json(m));
            j["maps"] = maps;
            break;
        }
    }
    if (doc.twist) j["twist"] = {{"mu", *doc.twist}};
    if (doc.rigidity) {
        json r;
        if (doc.rigidity->mu) r["mu"] = *doc.rigidity->mu;
        r["alpha"] = doc.rigidity->alpha;
        j["rigidity"] = r;
    }
    return j;
}

TwistScalar parse_twist_spec(std::string_view spec) {
    const std::string s(spec);
    const auto in = s.find(" in ");
    if (in == std::string::npos) {
        if (s.find('x') != std::string::npos)
            throw invalid("algebraic twist '" + s + "' needs an isolating interval: \"POLY in (lo,hi)\"");
        return TwistScalar::rational(Rational::parse(s));
    }
    const Polynomial p = Polynomial::parse(s.substr(0, in));
    std::string iv = s.substr(in + 4);
    const auto open = iv.find('(');
    const auto comma = iv.find(',');
    const auto close = iv.find(')');
    if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
        !(open < comma && comma < close))
        throw invalid("malformed interval in twist '" + s + "', expected (lo,hi)");
    for (std::size_t i = close + 1; i < iv.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(iv[i]))) throw invalid("trailing text in twist '" + s + "'");
    const Rational lo = Rational::parse(iv.substr(open + 1, comma - open - 1));
    const Rational hi = Rational::parse(iv.substr(comma + 1, close - comma - 1));
    if (!(lo < hi)) throw invalid("twist interval needs lo < hi");
    if (p.degree() < 1) throw invalid("twist polynomial must have degree >= 1");
    const Polynomial m = p.monic();
    if (!is_squarefree(m)) throw invalid("twist polynomial " + m.to_string() + " is not square-free");
    if (m.degree() > kMaxCertifiedDegree)
        throw unsupported("twist polynomial degree " + std::to_string(m.degree()) + " exceeds the certified limit " +
                          std::to_string(kMaxCertifiedDegree));
    return TwistScalar::root_of(m, {lo, hi});
}

json to_json(const TwistScalar& mu) {
    if (mu.is_rational()) return {{"kind", "rational"}, {"value", mu.rational_value().to_string()}};
    const auto& e = mu.field_value();
    json j{{"kind", "algebraic"},
           {"modulus", serialize(e.field().modulus())},
           {"element", serialize(e.residue())},
           {"text", mu.describe()}};
    if (mu.pin()) {
        j["interval"] = {mu.pin()->lo.to_string(), mu.pin()->hi.to_string()};
        j["approx"] = mu.approx();
    }
    return j;
}

json to_json(const NovikovResult& r, const TwistScalar& mu) {
    return {{"mu", to_json(mu)},
            {"kind", to_string(r.kind)},
            {"dim_K", r.dim_K},
            {"dim_C", r.dim_C},
            {"dim_H", r.dim_H}};
}

json betti_to_json(const std::vector<std::size_t>& betti) {
    return {{"kind", to_string(CohomologyKind::WangBetti)}, {"betti", betti}};
}

json to_json(const std::vector<EigenFactor>& factors, std::size_t degree) {
    json arr = json::array();
    for (const auto& f : factors) {
        json roots = json::array();
        for (std::size_t i = 0; i < f.real_roots.size(); ++i) {
            roots.push_back({{"interval", {f.real_roots[i].lo.to_string(), f.real_roots[i].hi.to_string()}},
                             {"sign", to_string(f.signs[i])},
                             {"is_one", static_cast<bool>(f.is_one[i])}});
        }
        arr.push_back({{"factor", serialize(f.factor)},
                       {"text", f.factor.to_string()},
                       {"multiplicity", f.multiplicity},
                       {"real_roots", roots}});
    }
    return {{"degree", degree}, {"factors", arr}};
}

json to_json(const RigidityReport& r, const ModelFoliationSpec& spec) {
    json alpha = json::array();
    for (const auto& a : spec.alpha) alpha.push_back(a.to_string());
    return {{"input",
             {{"h1_map", matrix_to_json(spec.h1_map)},
              {"alpha", alpha},
              {"mu", to_json(spec.mu)},
              {"fiber_b1", spec.fiber_b1}}},
            {"dim_eig", r.dim_eig},
            {"dim_gen2", r.dim_gen2},
            {"alpha_in_image", r.alpha_in_image},
            {"dim_H1A", r.dim_H1A},
            {"verdict", to_string(r.verdict)},
            {"message", r.message()},
            {"crosscheck", criterion_crosscheck(spec)}};
}

json to_json(const CrosscheckReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"degree", row.degree},
                        {"exact_dim_K", row.exact_dim_K},
                        {"exact_dim_C", row.exact_dim_C},
                        {"est_dim_K", row.estimate.est_dim_K},
                        {"est_dim_C", row.estimate.est_dim_C},
                        {"gap", row.estimate.singular_value_gap},
                        {"ambiguous", row.estimate.ambiguous},
                        {"match", row.match()}});
    }
    return {{"grid", r.config.grid},
            {"tolerance", r.config.tolerance},
            {"mu_float", r.config.mu_float},
            {"rows", rows},
            {"status", r.pass() ? "PASS" : "FAIL"}};
}

namespace {

std::string wedge_name(const std::vector<std::size_t>& subset) {
    std::string s;
    for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "^th" : "th") + std::to_string(subset[i] + 1);
    return s;
}

}  // namespace

json ce_to_json(const ModelDocument& doc) {
    if (doc.type != Provenance::Nilmanifold || !doc.algebra)
        throw invalid("/type: the ce command needs a nilmanifold / Lie algebra file");
    const auto& g = *doc.algebra;
    const auto cx = ce_complex(g);
    const auto coh = ce_cohomology(cx);
    json diffs = json::array();
    for (const auto& d : cx.differentials) diffs.push_back(matrix_to_json(d));
    // d theta^a in words, read off the degree-1 differential.
    json dgen = json::array();
    const auto pairs = k_subsets(g.dim(), 2);
    for (std::size_t a = 0; a < g.dim(); ++a) {
        std::string s;
        for (std::size_t r = 0; r < pairs.size(); ++r) {
            const Rational c = cx.differentials[1](r, a);
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            s += neg ? "-" : (s.empty() ? "" : "+");
            if (!c.abs().is_one()) s += c.abs().to_string() + "*";
            s += wedge_name(pairs[r]);
        }
        dgen.push_back(s.empty() ? "0" : s);
    }
    json out{{"dim", g.dim()},
             {"betti", coh.betti},
             {"nilpotent", g.is_nilpotent()},
             {"derived_dim", g.derived_dim()},
             {"d_generators", dgen},
             {"differentials", diffs}};
    if (doc.automorphism) {
        const auto model = doc.build_model();
        json maps = json::array();
        for (const auto& m : model.maps) maps.push_back(matrix_to_json(m));
        out["induced_maps"] = maps;
    }
    return out;
}

}  // namespace mnc
