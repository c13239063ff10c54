#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reebmec/rational.hpp"

namespace reebmec {

// ---- asymptotically finite models -------------------------------------------

enum class OrbitType { I, II };

// |gamma^k| = a*k + b for the good iterates of a principal family
// (odd k only for type II, whose even iterates are bad).
struct DegreeRule {
    long long a = 0;
    long long b = 0;

    long long at(long long k) const { return a * k + b; }
};

struct PrincipalOrbitFamily {
    std::string label;
    OrbitType orbit_type = OrbitType::I;
    int sigma = 1;                         // +1 or -1
    Rational delta;                        // asymptotic mean index, nonzero
    std::optional<DegreeRule> degree_rule; // required for generator enumeration
};

struct AFModel {
    int n = 0;
    std::vector<PrincipalOrbitFamily> families;
    bool no_low_degree = false; // asserts no orbits of degree -1, 0, 1
};

// ---- Morse-Bott models --------------------------------------------------------

// One stratum of the containment DAG of a maximal Reeb orbifold.  The
// euler_underlying and morse_indices data refer to the closed stratum
// (substrata included); fresh contributions are recovered by the CHI
// recursion.
struct Stratum {
    std::string label;
    long long cover_multiple = 1;  // period ratio to the minimal period of the spectrum
    long long euler_underlying = 0;
    int dim = 0;
    long long stab_order = 1;
    std::optional<std::vector<long long>> morse_indices;
    std::vector<std::string> children;
};

// mu_RS(S_{kT}) = a*k + b
struct MuRsRule {
    Rational a;
    Rational b;

    Rational at(long long k) const { return a * Rational(k) + b; }
};

struct MaximalOrbifold {
    std::string label;
    int sigma = 1;
    MuRsRule mu_rs_rule;
    int dim = 0; // constant over the iterates of one record
    std::vector<Stratum> strata;
};

struct MBModel {
    int n = 0;
    std::vector<MaximalOrbifold> maximal;
    bool good_only = false;
};

// ---- validation ---------------------------------------------------------------

// Violations are data, not exceptions; an empty list means the model is
// well-formed for the MEC formulas.
std::vector<std::string> validate_af(const AFModel& model);
std::vector<std::string> validate_mb(const MBModel& model);

// ---- orbifold invariants --------------------------------------------------------

// mu_RS(S_{kT}) - dim/2 + n - 3 for the k-th cover.
long long orbifold_degree(const MaximalOrbifold& s, long long k, int n);

// (-1)^degree at k = 1; diagnoses parity that alternates with k (a bad
// orbifold) as an error.
int orbifold_sign(const MaximalOrbifold& s, int n);

// Inclusion-exclusion Euler numbers: CHI(minimal) = chi(minimal) and
// CHI(X) = chi(X) - sum of CHI over all strictly contained strata.
std::map<std::string, long long> chi_hat(const std::vector<Stratum>& strata);

// Stabilizer-weighted orbifold Euler invariant sum CHI(X) |Stab(X)|.  When
// Morse data is present on every stratum the cell-based signed count is
// computed too and must agree exactly.
long long e_invariant(const std::vector<Stratum>& strata);

// ---- generator enumeration -------------------------------------------------------

// degree -> generator count, over all degrees d with |d| <= max_degree.
using GeneratorCounts = std::map<long long, long long>;

GeneratorCounts enumerate_generators(const AFModel& model, long long max_degree);
GeneratorCounts enumerate_generators(const MBModel& model, long long max_degree);

} // namespace reebmec
