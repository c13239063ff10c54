#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reebmec/orbit_model.hpp"
#include "reebmec/symplin.hpp"

namespace reebmec {

// Deterministic splitmix64 stream; identical across platforms so that
// seeded reports are byte-identical.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    uint64_t state_;
};

// Random element of Sp(2n) as a product of plane rotations, symmetric
// shears and stretches.
Mat random_symplectic(int n, Rng& rng, int factors = 6);

// Block-rotation rates whose multiples k*rate*T stay clear of 2 pi Z for
// every k in `protect`, so the iterated endpoints remain nondegenerate.
std::vector<double> random_rates(int n, Rng& rng, double T, const std::vector<int>& protect);

// Synthetic stratification with known fresh Morse data; used to exercise
// the two orbifold Euler computations against each other.
struct SyntheticStratification {
    std::vector<Stratum> strata;
    long long expected_e;      // built from the generating fresh multisets
    long long expected_chi_top;
};
SyntheticStratification random_stratification(Rng& rng);

struct PropertyResult {
    std::string property;
    bool pass = false;
    std::string detail;
};

std::vector<std::string> verify_suite_names();

// Runs one named suite (or "all") with its default corpus sizes.
std::vector<PropertyResult> run_verify_suite(const std::string& name, uint64_t seed);

// ---- parameterized property drivers (shared with the acceptance tests) ------

namespace props {

PropertyResult polar_roundtrip(uint64_t seed, int samples, int n_max);
PropertyResult lift_refinement(uint64_t seed, int paths, int n_max);
PropertyResult lift_additivity(uint64_t seed, int paths, int n_max);
PropertyResult iterate_semigroup(uint64_t seed, int paths, int n_max);
PropertyResult homogeneity(uint64_t seed, int paths_per_n, int n_max);
PropertyResult index_gap(uint64_t seed, int paths_per_n, int n_max);
PropertyResult iterate_convergence(uint64_t seed, int paths_per_n, int n_max);
PropertyResult quasimorphism_defect(uint64_t seed, int pairs_per_n, int n_max);
PropertyResult dgw_mean_gap(uint64_t seed, int paths_per_n, int n_max);
PropertyResult catenation_bound(uint64_t seed, int pairs_per_n, int n_max);
PropertyResult index_cross_check(uint64_t seed, int paths_per_n, int n_max);
PropertyResult frame_invariance(uint64_t seed, int paths, int n_max);
PropertyResult anti_symmetry(uint64_t seed, int paths, int n_max);
PropertyResult euler_lemma(uint64_t seed, int cases);
PropertyResult chi_telescope(uint64_t seed, int cases);
PropertyResult sign_stability(uint64_t seed, int k_max);
PropertyResult af_window(int k_max);
PropertyResult oracle_agreement(long long n_top, int n_max);
PropertyResult surgery_coherence(long long degree_cutoff);
PropertyResult sign_structure(uint64_t seed, int cases);
PropertyResult wip_recovery(uint64_t seed);

} // namespace props

} // namespace reebmec
