#include "mnc/mnc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "../core/model_io.hpp"

struct mnc_model {
    mnc::ModelDocument doc;
};

struct mnc_twist {
    mnc::TwistScalar mu;
};

namespace {

thread_local std::string g_last_error;

mnc_status fail(mnc_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

mnc_status emit(const mnc::json& j, char** out) {
    *out = dup_string(j.dump(2));
    return *out ? MNC_OK : fail(MNC_ERR_INTERNAL, "out of memory");
}

template <class Fn>
mnc_status guarded(Fn&& fn) {
    g_last_error.clear();
    try {
        return fn();
    } catch (const mnc::Error& e) {
        switch (e.code()) {
            case mnc::ErrorCode::Invalid:
            case mnc::ErrorCode::DivisionByZero: return fail(MNC_ERR_INVALID, e.what());
            case mnc::ErrorCode::Unsupported: return fail(MNC_ERR_UNSUPPORTED, e.what());
            case mnc::ErrorCode::Split: return fail(MNC_ERR_SPLIT, e.what());
            case mnc::ErrorCode::Numeric: return fail(MNC_ERR_NUMERIC, e.what());
        }
        return fail(MNC_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(MNC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MNC_ERR_INTERNAL, "unknown error");
    }
}

}  // namespace

extern "C" {

const char* mnc_version(void) { return "1.0.0"; }

const char* mnc_last_error(void) { return g_last_error.c_str(); }

void mnc_string_free(char* s) { std::free(s); }

mnc_status mnc_model_parse(const char* json_text, mnc_model** out) {
    if (!json_text || !out) return fail(MNC_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new mnc_model{mnc::parse_model_document(json_text)};
        return MNC_OK;
    });
}

void mnc_model_free(mnc_model* model) { delete model; }

mnc_status mnc_model_serialize(const mnc_model* model, char** out_json) {
    if (!model || !out_json) return fail(MNC_ERR_ARGUMENT, "null argument");
    return guarded([&] { return emit(mnc::to_json(model->doc), out_json); });
}

int mnc_model_has_cohomology(const mnc_model* model) {
    return model && model->doc.has_cohomology_model() ? 1 : 0;
}

int mnc_model_top_degree(const mnc_model* model) {
    if (!model) return -1;
    if (model->doc.type == mnc::Provenance::Torus) return static_cast<int>(model->doc.matrix->rows());
    if (model->doc.type == mnc::Provenance::Nilmanifold) return static_cast<int>(model->doc.algebra->dim());
    return static_cast<int>(model->doc.betti.size()) - 1;
}

mnc_status mnc_twist_parse(const char* spec, mnc_twist** out) {
    if (!spec || !out) return fail(MNC_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new mnc_twist{mnc::parse_twist_spec(spec)};
        return MNC_OK;
    });
}

mnc_status mnc_model_twist(const mnc_model* model, mnc_twist** out) {
    if (!model || !out) return fail(MNC_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new mnc_twist{model->doc.twist_scalar()};
        return MNC_OK;
    });
}

void mnc_twist_free(mnc_twist* twist) { delete twist; }

mnc_status mnc_twist_describe(const mnc_twist* twist, char** out_json) {
    if (!twist || !out_json) return fail(MNC_ERR_ARGUMENT, "null argument");
    return guarded([&] { return emit(mnc::to_json(twist->mu), out_json); });
}

mnc_status mnc_betti(const mnc_model* model, char** out_json) {
    if (!model || !out_json) return fail(MNC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        return emit(mnc::betti_to_json(mnc::betti_mapping_torus(model->doc.build_model())), out_json);
    });
}

mnc_status mnc_novikov(const mnc_model* model, const mnc_twist* mu, char** out_json) {
    if (!model || !mu || !out_json) return fail(MNC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto r = mnc::novikov_dims(model->doc.build_model(), mu->mu);
        return emit(mnc::to_json(r, mu->mu), out_json);
    });
}

mnc_status mnc_eigenvalue_candidates(const mnc_model* model, int degree, char** out_json) {
    if (!model || !out_json) return fail(MNC_ERR_ARGUMENT, "null argument");
    if (degree < 0 || degree > mnc_model_top_degree(model))
        return fail(MNC_ERR_ARGUMENT, "degree out of range");
    return guarded([&] {
        const auto k = static_cast<std::size_t>(degree);
        return emit(mnc::to_json(mnc::eigenvalue_candidates(model->doc.build_model(), k), k), out_json);
    });
}

mnc_status mnc_rigidity(const mnc_model* model, char** out_json, mnc_verdict* verdict) {
    if (!model || !out_json) return fail(MNC_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto spec = model->doc.rigidity_spec();
        const auto report = mnc::check_rigidity(spec);
        if (verdict)
            *verdict = report.verdict == mnc::Verdict::Rigid ? MNC_VERDICT_RIGID : MNC_VERDICT_CRITERION_FAILS;
        return emit(mnc::to_json(report, spec), out_json);
    });
}

mnc_status mnc_ce(const mnc_model* model, char** out_json) {
    if (!model || !out_json) return fail(MNC_ERR_ARGUMENT, "null argument");
    return guarded([&] { return emit(mnc::ce_to_json(model->doc), out_json); });
}

mnc_status mnc_verify(const mnc_model* model, const mnc_twist* mu, int grid, double tolerance, char** out_json,
                      int* passed) {
    if (!model || !mu || !out_json) return fail(MNC_ERR_ARGUMENT, "null argument");
    if (grid < 0) return fail(MNC_ERR_ARGUMENT, "grid must be non-negative");
    return guarded([&] {
        const auto cfg = mnc::make_oracle_config(mu->mu, static_cast<std::size_t>(grid), tolerance);
        const auto rep = mnc::crosscheck(model->doc.build_model(), mu->mu, cfg);
        if (passed) *passed = rep.pass() ? 1 : 0;
        return emit(mnc::to_json(rep), out_json);
    });
}

}  // extern "C"
