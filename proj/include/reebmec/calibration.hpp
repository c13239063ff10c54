#pragma once

namespace reebmec::calib {

// Empirically calibrated quasimorphism bounds, indexed by half-dimension n
// (entry 0 unused).  Measured over the seeded corpora of the verification
// suites (1000 samples per n, seeds 1..5) and frozen with headroom; the
// suites assert the observed defects stay below these values and report the
// maxima seen.

// |dgw(AB) - dgw(A) - dgw(B)| over random symplectic pairs.  Observed
// maxima over 13 seeds of 1000 pairs: 2.21 / 4.07 / 4.21 / 6.13; the tail
// tracks the 2n branch-wrap budget, so the bounds are frozen at 2n + 1/2.
inline constexpr double dgw_qm_defect_bound[] = {0.0, 2.5, 4.5, 6.5, 8.5};

// |mu(p1 * p2) - mu(p1) - mu(p2)| over conjugated-rotation path pairs.
// Observed maxima: 0.26 / 0.36 / 0.29 / 0.45.
inline constexpr double catenation_defect_bound[] = {0.0, 0.6, 0.7, 0.8, 0.9};

// max_k |dgw(endpoint^k)/k - mean| over block-rotation paths, k <= 32, with
// rates below 3 pi.  Observed maxima: 3.0 / 6.0 / 8.0 / 9.0.
inline constexpr double dgw_mean_gap_bound[] = {0.0, 4.5, 8.0, 10.0, 12.0};

inline constexpr int max_calibrated_n = 4;

} // namespace reebmec::calib
