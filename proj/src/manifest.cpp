#include "reebmec/manifest.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace reebmec {

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            fail(ErrorCode::invalid_input, where + ": unknown key '" + it.key() + "'");
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail(ErrorCode::invalid_input, where + ": missing key '" + key + "'");
    return *it;
}

long long as_int(const json& v, const std::string& where) {
    if (v.is_number_integer())
        return v.get<long long>();
    if (v.is_number_float()) {
        double d = v.get<double>();
        if (d == std::floor(d))
            return static_cast<long long>(d);
    }
    fail(ErrorCode::invalid_input, where + ": expected an integer");
}

// integers, "p/q" strings, or {"num": p, "den": q}
Rational as_rational(const json& v, const std::string& where) {
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    if (v.is_object()) {
        check_keys(v, {"num", "den"}, where);
        return Rational(as_int(require(v, "num", where), where + "/num"),
                        as_int(require(v, "den", where), where + "/den"));
    }
    fail(ErrorCode::invalid_input, where + ": expected an integer, \"p/q\", or {num, den}");
}

json rational_manifest_json(const Rational& r) {
    if (r.is_integer())
        return json(r.num());
    return json(r.str());
}

PrincipalOrbitFamily parse_family(const json& v, const std::string& where) {
    if (!v.is_object())
        fail(ErrorCode::invalid_input, where + ": expected an object");
    check_keys(v, {"label", "orbit_type", "sigma", "delta", "degree_rule"}, where);
    PrincipalOrbitFamily f;
    f.label = require(v, "label", where).get<std::string>();
    std::string type = require(v, "orbit_type", where).get<std::string>();
    if (type == "I")
        f.orbit_type = OrbitType::I;
    else if (type == "II")
        f.orbit_type = OrbitType::II;
    else
        fail(ErrorCode::invalid_input, where + "/orbit_type: expected \"I\" or \"II\"");
    f.sigma = static_cast<int>(as_int(require(v, "sigma", where), where + "/sigma"));
    f.delta = as_rational(require(v, "delta", where), where + "/delta");
    if (v.contains("degree_rule")) {
        const json& r = v["degree_rule"];
        check_keys(r, {"a", "b"}, where + "/degree_rule");
        f.degree_rule = DegreeRule{as_int(require(r, "a", where), where + "/degree_rule/a"),
                                   as_int(require(r, "b", where), where + "/degree_rule/b")};
    }
    return f;
}

Stratum parse_stratum(const json& v, const std::string& where) {
    if (!v.is_object())
        fail(ErrorCode::invalid_input, where + ": expected an object");
    check_keys(v, {"label", "cover_multiple", "euler_underlying", "dim", "stab_order",
                   "morse_indices", "children"},
               where);
    Stratum s;
    s.label = require(v, "label", where).get<std::string>();
    s.cover_multiple = as_int(require(v, "cover_multiple", where), where + "/cover_multiple");
    s.euler_underlying = as_int(require(v, "euler_underlying", where), where + "/euler_underlying");
    s.dim = static_cast<int>(as_int(require(v, "dim", where), where + "/dim"));
    s.stab_order = as_int(require(v, "stab_order", where), where + "/stab_order");
    if (v.contains("morse_indices")) {
        std::vector<long long> mi;
        for (const json& e : v["morse_indices"])
            mi.push_back(as_int(e, where + "/morse_indices"));
        s.morse_indices = std::move(mi);
    }
    if (v.contains("children"))
        for (const json& e : v["children"])
            s.children.push_back(e.get<std::string>());
    return s;
}

MaximalOrbifold parse_orbifold(const json& v, const std::string& where) {
    if (!v.is_object())
        fail(ErrorCode::invalid_input, where + ": expected an object");
    check_keys(v, {"label", "sigma", "mu_rs_rule", "dim", "strata"}, where);
    MaximalOrbifold s;
    s.label = require(v, "label", where).get<std::string>();
    s.sigma = static_cast<int>(as_int(require(v, "sigma", where), where + "/sigma"));
    const json& r = require(v, "mu_rs_rule", where);
    check_keys(r, {"a", "b"}, where + "/mu_rs_rule");
    s.mu_rs_rule = MuRsRule{as_rational(require(r, "a", where), where + "/mu_rs_rule/a"),
                            as_rational(require(r, "b", where), where + "/mu_rs_rule/b")};
    s.dim = static_cast<int>(as_int(require(v, "dim", where), where + "/dim"));
    const json& strata = require(v, "strata", where);
    if (!strata.is_array())
        fail(ErrorCode::invalid_input, where + "/strata: expected an array");
    for (size_t i = 0; i < strata.size(); ++i)
        s.strata.push_back(parse_stratum(strata[i], where + "/strata[" + std::to_string(i) + "]"));
    return s;
}

} // namespace

namespace {

Manifest parse_manifest_impl(const json& doc) {
    if (!doc.is_object())
        fail(ErrorCode::invalid_input, "manifest: expected a JSON object");
    std::string kind = require(doc, "kind", "manifest").get<std::string>();
    Manifest m;
    m.kind = kind;
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object())
            fail(ErrorCode::invalid_input, "manifest/metadata: expected an object");
        m.metadata = doc["metadata"];
    }
    int n = static_cast<int>(as_int(require(doc, "n", "manifest"), "manifest/n"));
    if (kind == "af") {
        check_keys(doc, {"kind", "n", "families", "no_low_degree", "metadata"}, "manifest");
        AFModel model;
        model.n = n;
        model.no_low_degree = require(doc, "no_low_degree", "manifest").get<bool>();
        const json& fams = require(doc, "families", "manifest");
        if (!fams.is_array())
            fail(ErrorCode::invalid_input, "manifest/families: expected an array");
        for (size_t i = 0; i < fams.size(); ++i)
            model.families.push_back(
                parse_family(fams[i], "families[" + std::to_string(i) + "]"));
        m.af = std::move(model);
    } else if (kind == "mb") {
        check_keys(doc, {"kind", "n", "maximal", "good_only", "metadata"}, "manifest");
        MBModel model;
        model.n = n;
        model.good_only = require(doc, "good_only", "manifest").get<bool>();
        const json& maxl = require(doc, "maximal", "manifest");
        if (!maxl.is_array())
            fail(ErrorCode::invalid_input, "manifest/maximal: expected an array");
        for (size_t i = 0; i < maxl.size(); ++i)
            model.maximal.push_back(
                parse_orbifold(maxl[i], "maximal[" + std::to_string(i) + "]"));
        m.mb = std::move(model);
    } else {
        fail(ErrorCode::invalid_input, "manifest/kind: expected \"af\" or \"mb\"");
    }
    return m;
}

} // namespace

Manifest parse_manifest(const json& doc) {
    try {
        return parse_manifest_impl(doc);
    } catch (const json::exception& e) {
        fail(ErrorCode::invalid_input, std::string("manifest: ") + e.what());
    }
}

Manifest parse_manifest_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::invalid_input, std::string("manifest parse error: ") + e.what());
    }
    return parse_manifest(doc);
}

Manifest parse_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::invalid_input, "cannot open manifest '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_manifest_text(ss.str());
}

json manifest_json(const AFModel& model, const json& metadata) {
    json fams = json::array();
    for (const PrincipalOrbitFamily& f : model.families) {
        json v = {{"label", f.label},
                  {"orbit_type", f.orbit_type == OrbitType::I ? "I" : "II"},
                  {"sigma", f.sigma},
                  {"delta", rational_manifest_json(f.delta)}};
        if (f.degree_rule)
            v["degree_rule"] = {{"a", f.degree_rule->a}, {"b", f.degree_rule->b}};
        fams.push_back(v);
    }
    json doc = {{"kind", "af"}, {"n", model.n}, {"no_low_degree", model.no_low_degree},
                {"families", fams}};
    if (!metadata.empty())
        doc["metadata"] = metadata;
    return doc;
}

json manifest_json(const MBModel& model, const json& metadata) {
    json maxl = json::array();
    for (const MaximalOrbifold& s : model.maximal) {
        json strata = json::array();
        for (const Stratum& st : s.strata) {
            json v = {{"label", st.label},
                      {"cover_multiple", st.cover_multiple},
                      {"euler_underlying", st.euler_underlying},
                      {"dim", st.dim},
                      {"stab_order", st.stab_order}};
            if (st.morse_indices)
                v["morse_indices"] = *st.morse_indices;
            if (!st.children.empty())
                v["children"] = st.children;
            strata.push_back(v);
        }
        maxl.push_back({{"label", s.label},
                        {"sigma", s.sigma},
                        {"mu_rs_rule",
                         {{"a", rational_manifest_json(s.mu_rs_rule.a)},
                          {"b", rational_manifest_json(s.mu_rs_rule.b)}}},
                        {"dim", s.dim},
                        {"strata", strata}});
    }
    json doc = {{"kind", "mb"}, {"n", model.n}, {"good_only", model.good_only},
                {"maximal", maxl}};
    if (!metadata.empty())
        doc["metadata"] = metadata;
    return doc;
}

json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

json mec_json(const MecValue& v) {
    auto field = [](const std::optional<Rational>& r) {
        return r ? rational_json(*r) : json(nullptr);
    };
    return {{"chi_plus", field(v.chi_plus)}, {"chi_minus", field(v.chi_minus)},
            {"chi", field(v.chi)}};
}

SympPath parse_path_json(const json& doc) {
    try {
        if (!doc.is_array() || doc.empty())
            fail(ErrorCode::invalid_input, "path: expected a nonempty array of samples");
        if (!doc[0].is_object())
            fail(ErrorCode::invalid_input, "path[0]: expected an object");
        size_t dim2 = require(doc[0], "A", "path[0]").size();
        int two_n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(dim2))));
        if (two_n < 2 || static_cast<size_t>(two_n) * two_n != dim2 || two_n % 2 != 0)
            fail(ErrorCode::invalid_input, "path[0]/A: length must be 4n^2");

        std::vector<double> times;
        std::vector<Mat> mats;
        for (size_t i = 0; i < doc.size(); ++i) {
            std::string where = "path[" + std::to_string(i) + "]";
            if (!doc[i].is_object())
                fail(ErrorCode::invalid_input, where + ": expected an object");
            check_keys(doc[i], {"t", "A"}, where);
            const json& t = require(doc[i], "t", where);
            if (!t.is_number())
                fail(ErrorCode::invalid_input, where + "/t: expected a number");
            times.push_back(t.get<double>());
            const json& entries = require(doc[i], "A", where);
            if (!entries.is_array() || entries.size() != dim2)
                fail(ErrorCode::invalid_input, where + "/A: inconsistent matrix size");
            Mat m(two_n, two_n);
            for (int r = 0; r < two_n; ++r)
                for (int c = 0; c < two_n; ++c) {
                    const json& e = entries[static_cast<size_t>(r) * two_n + c];
                    if (!e.is_number())
                        fail(ErrorCode::invalid_input, where + "/A: expected numbers");
                    m(r, c) = e.get<double>();
                }
            mats.push_back(std::move(m));
        }
        return SympPath(two_n / 2, std::move(times), std::move(mats));
    } catch (const json::exception& e) {
        fail(ErrorCode::invalid_input, std::string("path: ") + e.what());
    }
}

SympPath parse_path_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::invalid_input, "cannot open path file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        fail(ErrorCode::invalid_input, std::string("path parse error: ") + e.what());
    }
    return parse_path_json(doc);
}

json path_json(const SympPath& path) {
    json doc = json::array();
    for (size_t i = 0; i < path.size(); ++i) {
        const Mat& m = path.matrix(i);
        json entries = json::array();
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                entries.push_back(m(r, c));
        doc.push_back({{"t", path.time(i)}, {"A", entries}});
    }
    return doc;
}

} // namespace reebmec
