// reeb-mec: mean Euler characteristics of contact manifolds from declarative
// orbit-space data, with index computations on symplectic paths and a
// brute-force generator-enumeration oracle.
//
// Exit codes: 0 ok, 1 internal/cross-check failure, 2 bad input, 3 undefined
// result, 4 incomplete generator data, 5 dimension-3 cylindrical guard,
// 6 degenerate path endpoint.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "reebmec/catalog.hpp"
#include "reebmec/indices.hpp"
#include "reebmec/manifest.hpp"
#include "reebmec/mec.hpp"
#include "reebmec/verify.hpp"

namespace {

using namespace reebmec;

struct ModelRef {
    std::string source;
    std::optional<AFModel> af;
    std::optional<MBModel> mb;
    std::optional<MecValue> closed_form;

    int n() const { return af ? af->n : mb->n; }
};

struct CatalogParams {
    long long n = -1;
    long long p = -1;
    long long chi_b = std::numeric_limits<long long>::min();
    long long pairing = 0;
};

void add_catalog_params(CLI::App* cmd, CatalogParams& params) {
    cmd->add_option("--n", params.n, "half-dimension for catalog models");
    cmd->add_option("--p", params.p, "exponent for the Brieskorn family");
    cmd->add_option("--chi-b", params.chi_b, "base Euler number for circle bundles");
    cmd->add_option("--pairing", params.pairing, "Chern pairing for circle bundles");
}

ModelRef load_model(const std::string& arg, const CatalogParams& params) {
    ModelRef ref;
    ref.source = arg;
    if (arg.rfind("catalog:", 0) == 0) {
        std::map<std::string, long long> kv;
        if (params.n >= 0)
            kv["n"] = params.n;
        if (params.p >= 0)
            kv["p"] = params.p;
        if (params.chi_b != std::numeric_limits<long long>::min())
            kv["chi_b"] = params.chi_b;
        if (params.pairing != 0)
            kv["pairing"] = params.pairing;
        ResolvedCatalogModel rc = resolve_catalog(arg.substr(8), kv);
        ref.af = std::move(rc.af);
        ref.mb = std::move(rc.mb);
        ref.closed_form = std::move(rc.closed_form);
        return ref;
    }
    Manifest m = parse_manifest_file(arg);
    ref.af = std::move(m.af);
    ref.mb = std::move(m.mb);
    return ref;
}

MecValue model_mec(const ModelRef& ref) {
    MecValue v = ref.af ? mec_af(*ref.af) : mec_mb(*ref.mb);
    if (ref.closed_form) {
        if (!(v.chi_plus == ref.closed_form->chi_plus) ||
            !(v.chi_minus == ref.closed_form->chi_minus))
            fail(ErrorCode::numeric, "catalog closed form disagrees with the model value");
    }
    return v;
}

std::string rat_str(const std::optional<Rational>& r, bool approx) {
    if (!r)
        return "undefined";
    std::string s = r->str();
    if (approx && !r->is_integer()) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), " (~%.6g)", r->to_double());
        s += buf;
    }
    return s;
}

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty())
                continue;
            try {
                out.push_back(std::stoll(cur));
            } catch (const std::logic_error&) {
                fail(ErrorCode::invalid_input, std::string("cannot parse ") + what + " '" + cur + "'");
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (out.empty())
        fail(ErrorCode::invalid_input, std::string("empty ") + what + " list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty())
                continue;
            try {
                out.push_back(std::stod(cur));
            } catch (const std::logic_error&) {
                fail(ErrorCode::invalid_input, std::string("cannot parse ") + what + " '" + cur + "'");
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (out.empty())
        fail(ErrorCode::invalid_input, std::string("empty ") + what + " list");
    return out;
}

// ---- subcommands -------------------------------------------------------------

int cmd_mec(const std::string& model_arg, const CatalogParams& params, bool json_out, bool approx) {
    ModelRef ref = load_model(model_arg, params);
    MecValue v = model_mec(ref);
    if (!v.chi)
        fail(ErrorCode::undefined_result, "mean Euler characteristic undefined");
    if (json_out) {
        std::cout << mec_json(v).dump() << "\n";
    } else {
        std::cout << "chi+ = " << rat_str(v.chi_plus, approx) << ", chi- = "
                  << rat_str(v.chi_minus, approx) << ", chi = " << rat_str(v.chi, approx) << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& model_arg, const CatalogParams& params,
               const std::string& degrees, bool json_out) {
    ModelRef ref = load_model(model_arg, params);
    std::vector<long long> Ns = parse_int_list(degrees, "--max-degree");
    OracleReport rep = ref.af ? oracle_convergence(*ref.af, Ns) : oracle_convergence(*ref.mb, Ns);

    if (json_out) {
        json rows = json::array();
        for (size_t i = 0; i < rep.truncations.size(); ++i)
            rows.push_back({{"N", rep.truncations[i]},
                            {"estimate", rational_json(rep.estimates[i])},
                            {"deviation", rational_json(rep.deviations[i])}});
        std::cout << json{{"rows", rows},
                          {"fitted_limit", rational_json(rep.fitted_limit)},
                          {"closed_form", rational_json(rep.closed_form)}}
                         .dump()
                  << "\n";
    } else {
        std::printf("%12s  %-14s  %s\n", "N", "chi_N/N", "|chi_N - N*chi+|");
        for (size_t i = 0; i < rep.truncations.size(); ++i)
            std::printf("%12lld  %-14s  %s\n", rep.truncations[i],
                        rep.estimates[i].str().c_str(), rep.deviations[i].str().c_str());
        std::printf("fitted limit %s, closed form %s\n", rep.fitted_limit.str().c_str(),
                    rep.closed_form.str().c_str());
    }
    // the deviation column is the O(1) constant of the truncation argument;
    // sustained growth means the closed form does not match the model
    Rational first = rep.deviations.front(), last = rep.deviations.back();
    Rational cap = Rational(2) > Rational(2) * first ? Rational(2) : Rational(2) * first;
    if (rep.deviations.size() > 1 && last > cap) {
        std::fprintf(stderr, "error: oracle deviation grows with N (%s -> %s)\n",
                     first.str().c_str(), last.str().c_str());
        return 1;
    }
    return 0;
}

int cmd_surgery(const std::string& model_arg, const CatalogParams& params, const std::string& ks,
                const std::string& mode_name, bool linearized, long long cutoff, bool json_out) {
    ModelRef ref = load_model(model_arg, params);
    std::vector<long long> k_list = parse_int_list(ks, "--k");
    SurgeryMode mode;
    if (mode_name == "generator")
        mode = SurgeryMode::generator;
    else if (mode_name == "corollary")
        mode = SurgeryMode::corollary;
    else
        fail(ErrorCode::invalid_input, "--mode must be 'generator' or 'corollary'");

    int n = ref.n();
    MecValue value = model_mec(ref);
    std::optional<AFModel> af = ref.af;

    json steps = json::array();
    if (!json_out)
        std::cout << "start: chi+ = " << rat_str(value.chi_plus, false) << ", chi- = "
                  << rat_str(value.chi_minus, false) << ", chi = " << rat_str(value.chi, false)
                  << "\n";
    for (long long k : k_list) {
        SurgeryStep step{static_cast<int>(k), n, mode, linearized};
        MecValue next = surgery_apply(value, step);
        if (af && mode == SurgeryMode::generator) {
            // model-level route must agree with the value-level shift
            AFModel after = af_surgery(*af, static_cast<int>(k), linearized);
            if (after.no_low_degree) {
                MecValue model_value = mec_af(after);
                if (!(model_value.chi_plus == next.chi_plus))
                    fail(ErrorCode::numeric, "af_surgery and surgery_apply disagree");
            }
            af = std::move(after);
        }
        value = next;
        std::vector<long long> injected = surgery_generators(n, static_cast<int>(k), cutoff);
        if (json_out) {
            steps.push_back({{"k", k}, {"mec", mec_json(value)}, {"injected_degrees", injected}});
        } else {
            std::cout << "k=" << k << ": chi+ = " << rat_str(value.chi_plus, false) << ", chi- = "
                      << rat_str(value.chi_minus, false) << ", chi = " << rat_str(value.chi, false)
                      << "\n  injected degrees <=" << cutoff << ":";
            size_t shown = 0;
            for (long long d : injected) {
                if (shown++ == 12) {
                    std::cout << " ...";
                    break;
                }
                std::cout << " " << d;
            }
            std::cout << "\n";
        }
    }
    if (json_out)
        std::cout << json{{"mode", mode_name}, {"steps", steps}}.dump() << "\n";
    return 0;
}

int cmd_index(const std::string& path_file, const std::string& rotation, double T, int samples,
              int k_max, bool want_cz, bool want_rs, bool want_mean, bool want_unitary,
              bool want_dgw, bool all, bool json_out) {
    if (all)
        want_cz = want_rs = want_mean = want_unitary = want_dgw = true;
    if (!want_cz && !want_rs && !want_mean && !want_unitary && !want_dgw)
        want_cz = want_mean = want_unitary = true;

    std::optional<SympPath> path;
    std::optional<AnalyticPath> analytic;
    std::optional<std::vector<double>> rates;
    if (!rotation.empty()) {
        rates = parse_double_list(rotation, "--rotation");
        bool constant = true;
        for (double w : *rates)
            constant = constant && w == 0.0;
        int m = samples > 0 ? samples : std::max(2 * suggested_samples(*rates, T), 16);
        path = rotation_path(*rates, T, m);
        AnalyticPath ap;
        ap.duration = T;
        for (double w : *rates)
            ap.blocks.push_back(AnalyticBlock::rotation(w));
        analytic = ap;
        (void)constant;
    } else if (!path_file.empty()) {
        path = parse_path_file(path_file);
    } else {
        fail(ErrorCode::invalid_input, "index needs --rotation or a path file");
    }

    json out = json::object();
    std::vector<std::string> lines;
    bool degenerate =
        std::fabs(det(path->endpoint() - Mat::identity(path->dim()))) < kNondegTol;

    std::optional<long long> cz_value;
    if (want_cz) {
        if (degenerate && !all)
            fail(ErrorCode::degeneracy, "degenerate endpoint; use rs");
        if (degenerate) {
            lines.push_back("cz = n/a (degenerate endpoint; use rs)");
            out["cz"] = nullptr;
        } else {
            cz_value = conley_zehnder(*path).as_int();
            lines.push_back("cz = " + std::to_string(*cz_value));
            out["cz"] = *cz_value;
        }
    }
    std::optional<Rational> rs_value;
    if (want_rs) {
        if (analytic) {
            rs_value = robbin_salamon(*analytic).as_rational();
            lines.push_back("rs = " + rs_value->str());
            out["rs"] = rational_json(*rs_value);
        } else {
            lines.push_back("rs = n/a (needs an analytic --rotation descriptor)");
            out["rs"] = nullptr;
        }
    }
    if (want_mean) {
        IndexValue m = mean_index(*path, k_max);
        char buf[96];
        std::snprintf(buf, sizeof(buf), "mean = %.9g (err <= %.3g)", m.value,
                      m.error_bar.value_or(0.0));
        lines.push_back(buf);
        out["mean"] = m.value;
        out["mean_error_bar"] = m.error_bar.value_or(0.0);
    }
    if (want_unitary) {
        double u = unitary_index(*path).value;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "unitary = %.9g", u);
        lines.push_back(buf);
        out["unitary"] = u;
    }
    if (want_dgw) {
        double d = dgw_index(SympMatrix(path->n(), path->endpoint())).value;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "dgw = %.9g", d);
        lines.push_back(buf);
        out["dgw"] = d;
    }

    // cross-check all algorithms that computed the same integer
    if (cz_value && rates && !degenerate) {
        long long closed = conley_zehnder_rot(*rates, T).as_int();
        if (closed != *cz_value || (rs_value && (!rs_value->is_integer() || rs_value->num() != closed))) {
            std::fprintf(stderr, "error: index cross-check failed (cz=%lld, cz_rot=%lld, rs=%s)\n",
                         *cz_value, closed, rs_value ? rs_value->str().c_str() : "n/a");
            return 1;
        }
        out["cross_check"] = "ok";
    }

    if (json_out) {
        std::cout << out.dump() << "\n";
    } else {
        for (const std::string& l : lines)
            std::cout << l << "\n";
    }
    return 0;
}

int cmd_catalog(const std::string& action, const std::string& name, const CatalogParams& params) {
    if (action == "list") {
        for (const CatalogEntry& e : catalog_entries()) {
            std::cout << e.name << " [" << e.kind << "]";
            for (const auto& [k, v] : e.parameters)
                std::cout << " --" << k << "=" << v;
            std::cout << "\n    " << e.provenance << "\n";
        }
        return 0;
    }
    if (action == "emit") {
        ModelRef ref = load_model("catalog:" + name, params);
        json meta = {{"source", "catalog:" + name}};
        if (ref.af)
            std::cout << manifest_json(*ref.af, meta).dump(2) << "\n";
        else
            std::cout << manifest_json(*ref.mb, meta).dump(2) << "\n";
        return 0;
    }
    fail(ErrorCode::invalid_input, "catalog action must be 'list' or 'emit'");
}

int cmd_verify(const std::string& suite, uint64_t seed) {
    std::vector<PropertyResult> results = run_verify_suite(suite, seed);
    bool all_pass = true;
    for (const PropertyResult& r : results) {
        std::cout << (r.pass ? "pass " : "FAIL ") << r.property << ": " << r.detail << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all properties passed\n" : "some properties FAILED\n");
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    // REEB_MEC_THREADS caps internal parallelism; every compute layer is
    // currently serial and deterministic, so any positive cap is honored.
    if (const char* threads = std::getenv("REEB_MEC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(threads, &end, 10);
        if (end == threads || *end != '\0' || v < 1) {
            std::fprintf(stderr, "error: REEB_MEC_THREADS must be a positive integer\n");
            return 2;
        }
    }

    CLI::App app{"mean Euler characteristics of contact manifolds"};
    app.require_subcommand(1);

    CatalogParams params;
    std::string model_arg, degrees = "100,1000,10000", ks, mode_name = "generator";
    std::string path_file, rotation, suite = "all", catalog_action, catalog_name;
    bool json_out = false, approx = false, linearized = false;
    bool want_cz = false, want_rs = false, want_mean = false, want_unitary = false,
         want_dgw = false, all_indices = false;
    double T = 1.0;
    int samples = 0, k_max = 64;
    long long cutoff = 200;
    uint64_t seed = 1;

    CLI::App* mec = app.add_subcommand("mec", "mean Euler characteristic of a model");
    mec->add_option("model", model_arg, "manifest path or catalog:NAME")->required();
    add_catalog_params(mec, params);
    mec->add_flag("--json", json_out, "machine-readable output");
    mec->add_flag("--approx", approx, "append decimal approximations");

    CLI::App* oracle = app.add_subcommand("oracle", "truncated-complex convergence table");
    oracle->add_option("model", model_arg)->required();
    add_catalog_params(oracle, params);
    oracle->add_option("--max-degree", degrees, "comma-separated truncation degrees");
    oracle->add_flag("--json", json_out);

    CLI::App* surgery = app.add_subcommand("surgery", "apply subcritical surgeries");
    surgery->add_option("model", model_arg)->required();
    add_catalog_params(surgery, params);
    surgery->add_option("--k", ks, "comma-separated surgery indices")->required();
    surgery->add_option("--mode", mode_name, "'generator' or 'corollary'");
    surgery->add_flag("--linearized", linearized, "allow the dimension-3 case");
    surgery->add_option("--cutoff", cutoff, "degree cutoff for injected generator lists");
    surgery->add_flag("--json", json_out);

    CLI::App* index = app.add_subcommand("index", "indices of a symplectic path");
    index->add_option("path", path_file, "path exchange JSON file");
    index->add_option("--rotation", rotation, "comma-separated block rotation rates");
    index->add_option("--T", T, "duration of the rotation path");
    index->add_option("--samples", samples, "sample count override");
    index->add_option("--k-max", k_max, "iterations for the mean-index fit");
    index->add_flag("--cz", want_cz);
    index->add_flag("--rs", want_rs);
    index->add_flag("--mean", want_mean);
    index->add_flag("--unitary", want_unitary);
    index->add_flag("--dgw", want_dgw);
    index->add_flag("--all", all_indices, "compute every index");
    index->add_flag("--json", json_out);

    CLI::App* catalog = app.add_subcommand("catalog", "built-in models");
    catalog->add_option("action", catalog_action, "'list' or 'emit'")->required();
    catalog->add_option("name", catalog_name, "entry name for 'emit'");
    add_catalog_params(catalog, params);

    CLI::App* verify = app.add_subcommand("verify", "seeded property suites");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
        if (mec->parsed())
            return cmd_mec(model_arg, params, json_out, approx);
        if (oracle->parsed())
            return cmd_oracle(model_arg, params, degrees, json_out);
        if (surgery->parsed())
            return cmd_surgery(model_arg, params, ks, mode_name, linearized, cutoff, json_out);
        if (index->parsed())
            return cmd_index(path_file, rotation, T, samples, k_max, want_cz, want_rs, want_mean,
                             want_unitary, want_dgw, all_indices, json_out);
        if (catalog->parsed())
            return cmd_catalog(catalog_action, catalog_name, params);
        if (verify->parsed())
            return cmd_verify(suite, seed);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const reebmec::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.exit_code();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
    return 0;
}
