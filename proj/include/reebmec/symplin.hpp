#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "reebmec/linalg.hpp"

namespace reebmec {

// Tolerances used throughout the symplectic layer.  kSymTol guards
// symplecticity/unitarity residuals, kThetaTol guards angle-lift
// comparisons; both leave ample double-precision headroom at 2n <= 20.
inline constexpr double kSymTol = 1e-9;
inline constexpr double kThetaTol = 1e-7;
inline constexpr double kNondegTol = 1e-8;
inline constexpr int kPolarMaxIter = 30;
inline constexpr double kPolarResidual = 1e-12;

// Element of Sp(2n) in the basis (q_1..q_n, p_1..p_n), so the standard
// structure matrix is J0 = [0 -I; I 0].
struct SympMatrix {
    int n = 0;
    Mat a;

    SympMatrix() = default;
    SympMatrix(int half_dim, Mat m);

    int dim() const { return 2 * n; }
};

// Symmetric positive-definite and orthogonal-symplectic polar factors,
// A = P * U.
struct PolarParts {
    Mat p;
    Mat u;
};

// Continuous lift theta(t) with det^2_C(U(t)) = e^{2 i theta(t)}, theta(0) = 0.
struct AngleTrack {
    std::vector<double> t;
    std::vector<double> theta;

    double total() const { return theta.back(); }
};

// Sampled path of symplectic matrices starting at the identity; immutable.
// The sampling must be dense enough that successive unitary-part angle
// increments stay below pi/2; lift_angle refuses otherwise rather than
// guessing a branch.
class SympPath {
public:
    SympPath(int n, std::vector<double> times, std::vector<Mat> mats);

    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    size_t size() const { return times_.size(); }
    double duration() const { return times_.back(); }
    double time(size_t i) const { return times_[i]; }
    const Mat& matrix(size_t i) const { return mats_[i]; }
    const Mat& endpoint() const { return mats_.back(); }
    const std::vector<double>& times() const { return times_; }

private:
    int n_;
    std::vector<double> times_;
    std::vector<Mat> mats_;
};

// ---- construction helpers -------------------------------------------------

Mat standard_J(int n);

// Block-diagonal rotation ⊕_j R(phi_j) acting on the standard symplectic
// planes (q_j, p_j).
Mat block_rotation(const std::vector<double>& angles);

// Path t -> ⊕_j R(omega_j t) over [0, T] at m+1 uniform samples.  Requires
// max_j |omega_j| T / m < pi/4 so the lift guard cannot trip per block.
SympPath rotation_path(const std::vector<double>& rates, double T, int m);

// Uniformly sampled path from an explicit matrix-valued function; the
// function must satisfy fn(0) = I.
SympPath sampled_path(int n, double T, int m, const std::function<Mat(double)>& fn);

// Suggested sample count for a rotation path: keeps the summed angle rate
// per step comfortably inside the lift guard.
int suggested_samples(const std::vector<double>& rates, double T);

// ---- operations -----------------------------------------------------------

bool is_symplectic(const Mat& a, double tol);

// Newton iteration on the orthogonal factor (averaging with the inverse
// transpose); quadratic convergence, no external decomposition dependency.
PolarParts polar_decompose(const SympMatrix& a);

// (det_C(X + iY))^2 for an orthogonal-symplectic U = [X -Y; Y X].
std::complex<double> det_complex_sq(const SympMatrix& u);

AngleTrack lift_angle(const SympPath& path);

// Continuous-lift total over a bare matrix sequence (times immaterial);
// shared by lift_angle and the index computations.
double lift_theta(const std::vector<Mat>& mats, int n);

// Extension of a path to duration k*T by Psi(jT + t) = Psi(t) Psi(T)^j.
SympPath iterate_path(const SympPath& path, int k);

// path1 on [0, T1], then path2(t - T1) * path1(T1).
SympPath catenate(const SympPath& path1, const SympPath& path2);

// Time-reversed inverse path t -> Psi(T - t) Psi(T)^{-1}; starts at the
// identity and ends at Psi(T)^{-1}.
SympPath reverse_inverse_path(const SympPath& path);

} // namespace reebmec
