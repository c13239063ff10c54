#pragma once

#include <string>

#include "json.hpp"

#include "reebmec/mec.hpp"
#include "reebmec/orbit_model.hpp"
#include "reebmec/symplin.hpp"

namespace reebmec {

using json = nlohmann::json;

// Declarative model manifest: {"kind": "af"|"mb", "n": ..., "families"/
// "maximal": [...], "metadata": {...}}.  Unknown keys are rejected with the
// offending location.
struct Manifest {
    std::string kind;
    std::optional<AFModel> af;
    std::optional<MBModel> mb;
    json metadata = json::object();

    int n() const { return af ? af->n : mb->n; }
};

Manifest parse_manifest(const json& doc);
Manifest parse_manifest_text(const std::string& text);
Manifest parse_manifest_file(const std::string& path);

json manifest_json(const AFModel& model, const json& metadata = json::object());
json manifest_json(const MBModel& model, const json& metadata = json::object());

// {"num": p, "den": q} machine form.
json rational_json(const Rational& r);
json mec_json(const MecValue& v);

// Path exchange format: array of {"t": number, "A": row-major 4n^2 numbers};
// n is inferred and the path invariants are validated on read.
SympPath parse_path_json(const json& doc);
SympPath parse_path_file(const std::string& path);
json path_json(const SympPath& path);

} // namespace reebmec
