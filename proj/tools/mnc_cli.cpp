// mnc command-line front end. Talks to the library exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mnc/mnc.h"

namespace {

using json = nlohmann::json;

struct Options {
    bool json_only = false;
    bool quiet = false;
};

struct ModelDeleter {
    void operator()(mnc_model* m) const { mnc_model_free(m); }
};
struct TwistDeleter {
    void operator()(mnc_twist* t) const { mnc_twist_free(t); }
};
using ModelPtr = std::unique_ptr<mnc_model, ModelDeleter>;
using TwistPtr = std::unique_ptr<mnc_twist, TwistDeleter>;

// Exit code for a failed call; unsupported-degree failures use code 2.
int report_error(mnc_status s, const std::string& context) {
    std::cerr << "error: " << context << ": " << mnc_last_error() << "\n";
    return s == MNC_ERR_UNSUPPORTED ? 2 : 1;
}

json take_json(char* raw) {
    json j = json::parse(raw);
    mnc_string_free(raw);
    return j;
}

std::string join(const json& arr) {
    std::string s = "(";
    for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + arr[i].dump();
    return s + ")";
}

ModelPtr load_model(const std::string& path, int& exit_code) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        exit_code = 1;
        return nullptr;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    mnc_model* raw = nullptr;
    const mnc_status s = mnc_model_parse(ss.str().c_str(), &raw);
    if (s != MNC_OK) {
        exit_code = report_error(s, path);
        return nullptr;
    }
    return ModelPtr(raw);
}

TwistPtr load_twist(const mnc_model* model, const std::string& spec, int& exit_code) {
    mnc_twist* raw = nullptr;
    const mnc_status s = spec.empty() ? mnc_model_twist(model, &raw) : mnc_twist_parse(spec.c_str(), &raw);
    if (s != MNC_OK) {
        exit_code = report_error(s, "--mu");
        return nullptr;
    }
    return TwistPtr(raw);
}

void print(const Options& opt, const json& j, const std::string& table) {
    if (opt.quiet) return;
    if (!opt.json_only) std::cout << table;
    std::cout << j.dump(2) << "\n";
}

int cmd_betti(const Options& opt, const std::string& input) {
    int code = 0;
    auto model = load_model(input, code);
    if (!model) return code;
    char* out = nullptr;
    if (auto s = mnc_betti(model.get(), &out); s != MNC_OK) return report_error(s, "betti");
    const json j = take_json(out);
    print(opt, j, "Betti numbers of the mapping torus: " + join(j["betti"]) + "\n");
    return 0;
}

int cmd_novikov(const Options& opt, const std::string& input, const std::string& mu_spec) {
    int code = 0;
    auto model = load_model(input, code);
    if (!model) return code;
    auto mu = load_twist(model.get(), mu_spec, code);
    if (!mu) return code;
    char* out = nullptr;
    if (auto s = mnc_novikov(model.get(), mu.get(), &out); s != MNC_OK) return report_error(s, "novikov");
    const json j = take_json(out);
    std::ostringstream t;
    t << "twist mu: " << (j["mu"].contains("text") ? j["mu"]["text"].get<std::string>()
                                                   : j["mu"]["value"].get<std::string>())
      << "  [" << j["kind"].get<std::string>() << "]\n";
    t << "  k  dim_K  dim_C  dim_H\n";
    const auto& H = j["dim_H"];
    for (std::size_t k = 0; k < H.size(); ++k) {
        char line[64];
        const auto K = k < j["dim_K"].size() ? std::to_string(j["dim_K"][k].get<int>()) : "-";
        const auto C = k < j["dim_C"].size() ? std::to_string(j["dim_C"][k].get<int>()) : "-";
        std::snprintf(line, sizeof line, "%3zu  %5s  %5s  %5d\n", k, K.c_str(), C.c_str(), H[k].get<int>());
        t << line;
    }
    print(opt, j, t.str());
    return 0;
}

int cmd_rigidity(const Options& opt, const std::string& input) {
    int code = 0;
    auto model = load_model(input, code);
    if (!model) return code;
    char* out = nullptr;
    mnc_verdict verdict = MNC_VERDICT_CRITERION_FAILS;
    if (auto s = mnc_rigidity(model.get(), &out, &verdict); s != MNC_OK) {
        report_error(s, "rigidity");
        return 1;
    }
    const json j = take_json(out);
    std::ostringstream t;
    t << "dim ker(M - mu I)        = " << j["dim_eig"] << "\n"
      << "dim ker((M - mu I)^2)    = " << j["dim_gen2"] << "\n"
      << "alpha in im(M - mu I)    = " << j["alpha_in_image"] << "\n"
      << "dim H^1(A)               = " << j["dim_H1A"] << "\n"
      << "verdict: " << j["verdict"].get<std::string>() << " (" << j["message"].get<std::string>() << ")\n";
    print(opt, j, t.str());
    return verdict == MNC_VERDICT_RIGID ? 0 : 3;
}

int cmd_ce(const Options& opt, const std::string& input) {
    int code = 0;
    auto model = load_model(input, code);
    if (!model) return code;
    char* out = nullptr;
    if (auto s = mnc_ce(model.get(), &out); s != MNC_OK) {
        report_error(s, "ce");
        return 1;
    }
    const json j = take_json(out);
    std::ostringstream t;
    t << "Chevalley-Eilenberg Betti numbers: " << join(j["betti"]) << "\n";
    for (std::size_t a = 0; a < j["d_generators"].size(); ++a)
        t << "  d th" << a + 1 << " = " << j["d_generators"][a].get<std::string>() << "\n";
    print(opt, j, t.str());
    return 0;
}

int cmd_verify(const Options& opt, const std::string& input, const std::string& mu_spec, int grid, double tol) {
    int code = 0;
    auto model = load_model(input, code);
    if (!model) return code;
    auto mu = load_twist(model.get(), mu_spec, code);
    if (!mu) return code;
    char* out = nullptr;
    int passed = 0;
    if (auto s = mnc_verify(model.get(), mu.get(), grid, tol, &out, &passed); s != MNC_OK) {
        const int c = report_error(s, "verify");
        return s == MNC_ERR_NUMERIC ? 2 : c;
    }
    const json j = take_json(out);
    std::ostringstream t;
    t << "grid N = " << j["grid"] << ", tolerance = " << j["tolerance"].get<double>()
      << ", mu ~ " << j["mu_float"].get<double>() << "\n";
    t << "  k  exact(K,C)  oracle(K,C)        gap  status\n";
    for (const auto& r : j["rows"]) {
        char gap[32] = "inf";
        if (r["gap"].is_number()) std::snprintf(gap, sizeof gap, "%10.3e", r["gap"].get<double>());
        char line[128];
        std::snprintf(line, sizeof line, "%3d   (%2d,%2d)      (%2d,%2d)   %10s  %s\n", r["degree"].get<int>(),
                      r["exact_dim_K"].get<int>(), r["exact_dim_C"].get<int>(), r["est_dim_K"].get<int>(),
                      r["est_dim_C"].get<int>(), gap,
                      r["ambiguous"].get<bool>() ? "AMBIGUOUS" : (r["match"].get<bool>() ? "ok" : "MISMATCH"));
        t << line;
    }
    t << j["status"].get<std::string>() << "\n";
    print(opt, j, t.str());
    return passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mnc: exact Morse-Novikov cohomology of mapping tori and Lie foliation rigidity"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_only, "Print machine-readable JSON only");
    app.add_flag("--quiet", opt.quiet, "Print nothing; report through the exit status");
    app.set_version_flag("--version", std::string(mnc_version()));

    std::string input, mu;
    int grid = 128;
    double tol = 1e-8;

    auto* betti = app.add_subcommand("betti", "Betti numbers of the mapping torus");
    betti->add_option("--input", input, "Model file")->required()->check(CLI::ExistingFile);

    auto* novikov = app.add_subcommand("novikov", "Morse-Novikov cohomology dimensions for a twist");
    novikov->add_option("--input", input, "Model file")->required()->check(CLI::ExistingFile);
    novikov->add_option("--mu", mu, "Twist: \"p/q\" or \"POLY in (lo,hi)\" (default: the file's twist)");

    auto* rigidity = app.add_subcommand("rigidity", "Rigidity criterion for a model Lie affine foliation");
    rigidity->add_option("--input", input, "Model file with a rigidity block")->required()->check(CLI::ExistingFile);

    auto* ce = app.add_subcommand("ce", "Chevalley-Eilenberg cohomology of a nilpotent Lie algebra");
    ce->add_option("--input", input, "Nilmanifold file")->required()->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "Check exact dimensions against the discretized oracle");
    verify->add_option("--input", input, "Model file")->required()->check(CLI::ExistingFile);
    verify->add_option("--mu", mu, "Twist (default: the file's twist)");
    verify->add_option("--grid", grid, "Grid size N")->capture_default_str();
    verify->add_option("--tol", tol, "Relative singular-value threshold")->capture_default_str();

    for (auto* sub : {betti, novikov, rigidity, ce, verify}) {
        sub->add_flag("--json", opt.json_only, "Print machine-readable JSON only");
        sub->add_flag("--quiet", opt.quiet, "Print nothing; report through the exit status");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (betti->parsed()) return cmd_betti(opt, input);
    if (novikov->parsed()) return cmd_novikov(opt, input, mu);
    if (rigidity->parsed()) return cmd_rigidity(opt, input);
    if (ce->parsed()) return cmd_ce(opt, input);
    if (verify->parsed()) return cmd_verify(opt, input, mu, grid, tol);
    return 1;
}
