#pragma once

#include <optional>
#include <vector>

#include "reebmec/orbit_model.hpp"
#include "reebmec/rational.hpp"

namespace reebmec {

// Exact-rational mean Euler characteristic triple.  chi is (chi+ + chi-)/2
// whenever both halves are known; a corollary-mode surgery shift determines
// chi alone, leaving the halves undefined.
struct MecValue {
    std::optional<Rational> chi_plus;
    std::optional<Rational> chi_minus;
    std::optional<Rational> chi;

    static MecValue from_halves(const Rational& plus, const Rational& minus);
    static MecValue chi_only(const Rational& c);

    bool halves_defined() const { return chi_plus && chi_minus; }
};

// Truncation bounds of the brute-force complex; the negative side mirrors
// the positive one.
inline constexpr long long kLPlusOffset = -4; // l+ = 2n - 4
inline constexpr long long kLMinus = -2;

// chi+- = sum sigma_x / Delta_x + 1/2 sum sigma_y / Delta_y over type I (x)
// and type II (y) families, split by the sign of Delta.
MecValue mec_af(const AFModel& model);

// chi+- = sum sigma(S) e(S) / Delta(S) over maximal orbifolds, split by the
// sign of Delta(S).
MecValue mec_mb(const MBModel& model);

// Alternating generator count sum_{l = l+}^{N} (-1)^l dim C_l of the
// truncated complex; the oracle behind every closed-form MEC value.
Rational truncated_euler(const AFModel& model, long long N,
                         std::optional<long long> l_plus = std::nullopt);
Rational truncated_euler(const MBModel& model, long long N,
                         std::optional<long long> l_plus = std::nullopt);

// Mirror window [-N, l-] for the negative half.
Rational truncated_euler_minus(const AFModel& model, long long N);
Rational truncated_euler_minus(const MBModel& model, long long N);

struct OracleReport {
    std::vector<long long> truncations;
    std::vector<Rational> estimates;  // chi_N / N
    std::vector<Rational> deviations; // |chi_N - N * chi+|, the O(1) constants
    Rational fitted_limit;            // intercept of chi_N/N = L + c/N
    Rational closed_form;             // chi+ of the model
    Rational max_dev;
};

OracleReport oracle_convergence(const AFModel& model, const std::vector<long long>& truncations);
OracleReport oracle_convergence(const MBModel& model, const std::vector<long long>& truncations);

// ---- subcritical surgery calculus ---------------------------------------------

enum class SurgeryMode { corollary, generator };

struct SurgeryStep {
    int k = 1; // handle index, subcritical: k < n
    int n = 2; // ambient half-dimension
    SurgeryMode mode = SurgeryMode::generator;
    bool linearized = false; // lifts the dimension-3 cylindrical refusal
};

// Degrees 2n - k - 4 + 2m, m >= 1, up to the cutoff r.
std::vector<long long> surgery_generators(int n, int k, long long r);

// Injects the handle's principal orbit family: type I, Delta = 2,
// sigma = (-1)^k, degrees 2n - k - 4 + 2m.
AFModel af_surgery(const AFModel& model, int k, bool linearized = false);

PrincipalOrbitFamily handle_family(int n, int k);

// corollary mode shifts chi by (-1)^k / 2 as stated; generator mode shifts
// chi+ by the handle family's sigma/Delta contribution and recomputes chi.
// The two readings disagree by construction; both are exposed.
MecValue surgery_apply(const MecValue& v, const SurgeryStep& step);

struct Reachability {
    bool reachable = false;         // necessary condition only
    Rational difference;            // target - source in the mode coordinate
    long long net_half_units = 0;   // (# even-index) - (# odd-index) surgeries
    long long min_surgeries = 0;
};

Reachability reachability_necessary(const MecValue& source, const MecValue& target,
                                    SurgeryMode mode);

} // namespace reebmec
