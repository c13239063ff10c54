#pragma once

#include <map>
#include <string>
#include <vector>

#include "reebmec/mec.hpp"
#include "reebmec/orbit_model.hpp"

namespace reebmec {

struct CatalogEntry {
    std::string name;
    std::string kind; // "af" | "mb" | "closed_form"
    std::map<std::string, std::string> parameters; // name -> default
    std::string provenance;
};

std::vector<CatalogEntry> catalog_entries();

// Round contact sphere S^{2n-1}: a single maximal orbit space CP^{n-1} with
// index rule 2nk, trivial stabilizers.
MBModel standard_sphere(int n);

// Companion model of the perturbed sphere: one principal family per Morse
// index of CP^{n-1}, each with mean index 2n and degree 2nk + ind - 2.
AFModel standard_sphere_af(int n);

// Brieskorn family (p, 2, ..., 2), n odd, p = +-1 mod 8: maximal orbit
// space CP^{n-1} with index rule 2k((n-2)p+2) containing a p-fold covered
// CP^{n-2}.
MBModel ustilovsky(int n, long long p);

// Circle bundle over a closed symplectic base with Euler number chi_B and
// first-Chern pairing u against the disk class: chi+ = chi_B / (2u) for
// u > 0; the roles of chi+ and chi- swap for u < 0.
MecValue prequantization(long long chi_b, long long c1_pairing);

// Minimal Morse-Bott encoding of the same data (single free orbit space,
// index rule slope 2u).
MBModel prequantization_mb(long long chi_b, long long c1_pairing);

// Resolves "catalog:NAME" references for the CLI.
struct ResolvedCatalogModel {
    std::string name;
    std::optional<AFModel> af;
    std::optional<MBModel> mb;
    std::optional<MecValue> closed_form;
};

ResolvedCatalogModel resolve_catalog(const std::string& name,
                                     const std::map<std::string, long long>& params);

} // namespace reebmec
