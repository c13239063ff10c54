#include "reebmec/catalog.hpp"

#include "reebmec/errors.hpp"

namespace reebmec {

namespace {

std::vector<long long> even_range(int count) {
    std::vector<long long> v;
    for (int i = 0; i < count; ++i)
        v.push_back(2 * i);
    return v;
}

long long param_or(const std::map<std::string, long long>& params, const std::string& key,
                   long long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

} // namespace

std::vector<CatalogEntry> catalog_entries() {
    return {
        {"standard_sphere", "mb", {{"n", "2"}},
         "round contact sphere; every Reeb orbit closes on the Hopf circle"},
        {"standard_sphere_af", "af", {{"n", "2"}},
         "perturbed round sphere; one principal family per Morse index of CP^{n-1}"},
        {"ustilovsky", "mb", {{"n", "5"}, {"p", "7"}},
         "Brieskorn family (p,2,...,2) diffeomorphic to a sphere; two orbit strata"},
        {"prequantization", "closed_form", {{"chi_b", "2"}, {"pairing", "2"}},
         "circle bundle over a closed symplectic base"},
    };
}

MBModel standard_sphere(int n) {
    if (n < 2)
        fail(ErrorCode::invalid_input, "standard_sphere needs n >= 2");
    Stratum top;
    top.label = "S1";
    top.cover_multiple = 1;
    top.euler_underlying = n; // CP^{n-1}
    top.dim = 2 * n - 2;
    top.stab_order = 1;
    top.morse_indices = even_range(n);

    MaximalOrbifold s;
    s.label = "S1";
    s.sigma = 1;
    s.mu_rs_rule = MuRsRule{Rational(2 * n), Rational(0)};
    s.dim = 2 * n - 2;
    s.strata = {top};

    MBModel m;
    m.n = n;
    m.maximal = {s};
    m.good_only = true;
    return m;
}

AFModel standard_sphere_af(int n) {
    if (n < 2)
        fail(ErrorCode::invalid_input, "standard_sphere_af needs n >= 2");
    AFModel m;
    m.n = n;
    m.no_low_degree = true;
    for (int i = 0; i < n; ++i) {
        long long ind = 2 * i;
        PrincipalOrbitFamily f;
        f.label = "x" + std::to_string(ind);
        f.orbit_type = OrbitType::I;
        f.sigma = 1;
        f.delta = Rational(2 * n);
        // degree of the k-th iterate: 2nk - (n-1) + ind + n - 3 = 2nk + ind - 2
        f.degree_rule = DegreeRule{2 * n, ind - 2};
        m.families.push_back(f);
    }
    return m;
}

MBModel ustilovsky(int n, long long p) {
    if (n < 3 || n % 2 == 0)
        fail(ErrorCode::invalid_input, "ustilovsky needs odd n >= 3");
    long long r = ((p % 8) + 8) % 8;
    if (p < 1 || (r != 1 && r != 7))
        fail(ErrorCode::invalid_input, "ustilovsky needs p = +-1 mod 8, p >= 1");

    Stratum top;
    top.label = "S_ppi";
    top.cover_multiple = p;
    top.euler_underlying = n; // CP^{n-1}
    top.dim = 2 * n - 2;
    top.stab_order = 1;
    top.morse_indices = even_range(n);
    top.children = {"S_pi"};

    Stratum child;
    child.label = "S_pi";
    child.cover_multiple = 1;
    child.euler_underlying = n - 1; // CP^{n-2}
    child.dim = 2 * n - 4;
    child.stab_order = p;
    child.morse_indices = even_range(n - 1);

    MaximalOrbifold s;
    s.label = "S_ppi";
    s.sigma = 1;
    s.mu_rs_rule = MuRsRule{Rational(2 * ((n - 2) * p + 2)), Rational(0)};
    s.dim = 2 * n - 2;
    s.strata = {top, child};

    MBModel m;
    m.n = n;
    m.maximal = {s};
    m.good_only = true;
    return m;
}

MecValue prequantization(long long chi_b, long long c1_pairing) {
    if (c1_pairing == 0)
        fail(ErrorCode::invalid_input, "prequantization needs a nonzero Chern pairing");
    Rational value(chi_b, 2 * c1_pairing);
    if (c1_pairing > 0)
        return MecValue::from_halves(value, Rational(0));
    return MecValue::from_halves(Rational(0), value);
}

MBModel prequantization_mb(long long chi_b, long long c1_pairing) {
    if (c1_pairing == 0)
        fail(ErrorCode::invalid_input, "prequantization needs a nonzero Chern pairing");
    Stratum base;
    base.label = "B";
    base.cover_multiple = 1;
    base.euler_underlying = chi_b;
    base.dim = 2;
    base.stab_order = 1;

    MaximalOrbifold s;
    s.label = "B";
    s.sigma = 1;
    s.mu_rs_rule = MuRsRule{Rational(2 * c1_pairing), Rational(0)};
    s.dim = 2;
    s.strata = {base};

    MBModel m;
    m.n = 2;
    m.maximal = {s};
    m.good_only = true;
    return m;
}

ResolvedCatalogModel resolve_catalog(const std::string& name,
                                     const std::map<std::string, long long>& params) {
    ResolvedCatalogModel out;
    out.name = name;
    if (name == "standard_sphere") {
        out.mb = standard_sphere(static_cast<int>(param_or(params, "n", 2)));
    } else if (name == "standard_sphere_af") {
        out.af = standard_sphere_af(static_cast<int>(param_or(params, "n", 2)));
    } else if (name == "ustilovsky") {
        out.mb = ustilovsky(static_cast<int>(param_or(params, "n", 5)), param_or(params, "p", 7));
    } else if (name == "prequantization") {
        long long chi_b = param_or(params, "chi_b", 2);
        long long pairing = param_or(params, "pairing", 2);
        out.closed_form = prequantization(chi_b, pairing);
        out.mb = prequantization_mb(chi_b, pairing);
    } else {
        fail(ErrorCode::invalid_input, "unknown catalog entry '" + name + "'");
    }
    return out;
}

} // namespace reebmec
