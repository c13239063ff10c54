#pragma once

#include <optional>
#include <vector>

#include "reebmec/rational.hpp"
#include "reebmec/symplin.hpp"

namespace reebmec {

enum class IndexKind { cz, rs, mean, unitary, dgw };

// Carrier for all index computations.  Conley-Zehnder values are integers,
// Robbin-Salamon values half-integers (both carried exactly); mean, unitary
// and DGW values are reals.
struct IndexValue {
    IndexKind kind;
    double value = 0.0;
    std::optional<Rational> exact;
    std::optional<double> error_bar;

    long long as_int() const;
    Rational as_rational() const;

    static IndexValue cz(long long v);
    static IndexValue rs(const Rational& r);
    static IndexValue real_valued(IndexKind kind, double v);
};

// theta(T)/pi of the continuous angle lift, in the standard unitary frame.
IndexValue unitary_index(const SympPath& path);

// (1/pi) * sum of the principal eigen-angles of the unitary polar part.
// The branch (-pi, pi] is a documented convention; only defect-bounded
// properties of this index are asserted anywhere.
IndexValue dgw_index(const SympMatrix& a);

// Closed form for block-rotation paths t -> ⊕ R(omega_j t) on [0, T]:
// sum_j (2 floor(omega_j T / 2pi) + 1) for positive rates, with the
// sign-symmetric value for negative rates.  Degenerate endpoints are
// refused.
IndexValue conley_zehnder_rot(const std::vector<double>& rates, double T);

// Normalized-determinant algorithm on a sampled path: angle lift along the
// path plus the lift along an eigenvalue-monotone continuation of the
// endpoint to a normal form (-I, or diag(2,1/2) factors) inside its
// nondegenerate component.  The endpoint must decompose over the standard
// symplectic planes; anything else is refused rather than risking a wrong
// integer.
IndexValue conley_zehnder(const SympPath& path);

// Analytic path descriptor: direct sum over the standard symplectic planes
// of rotation blocks R(rate * t) and stretch blocks diag(e^{rate t}, e^{-rate t}).
struct AnalyticBlock {
    enum class Kind { rotation, stretch };
    Kind kind;
    double rate;

    static AnalyticBlock rotation(double rate) { return {Kind::rotation, rate}; }
    static AnalyticBlock stretch(double rate) { return {Kind::stretch, rate}; }
};

struct AnalyticPath {
    std::vector<AnalyticBlock> blocks;
    double duration = 0.0;

    int n() const { return static_cast<int>(blocks.size()); }
    Mat at(double t) const;
    SympPath sample(int m) const;
};

// Half-integer index from crossing-form signatures:
//   1/2 sign(G_0) + sum over interior crossings sign(G_t) + 1/2 sign(G_T).
// Coincides with conley_zehnder on nondegenerate paths.
IndexValue robbin_salamon(const AnalyticPath& path);

// Mean index: exact theta(T)/pi for loops; otherwise the slope of a linear
// fit of theta(kT) against k*pi over k = 1..k_max, with the max fit residual
// reported as the error bar.
IndexValue mean_index(const SympPath& path, int k_max = 64);

long long degree(long long mu_cz, int n);

// |mu(p1 * p2) - mu(p1) - mu(p2)| for the unitary index.
double catenation_defect(const SympPath& p1, const SympPath& p2);

// ---- weak index-positivity fitting -----------------------------------------

struct WipSample {
    double action; // > 0
    double index;
};

// Certificate index >= kappa1 * action + kappa2 over every supplied sample.
struct WipCertificate {
    double kappa1;
    double kappa2;
    double witness_margin;
};

// Finite certificate for sample sets that impose no slope constraint.
inline constexpr double kKappa1Cap = 1e6;

// Maximizes kappa1 subject to the binding sample sitting at the smallest
// action, with kappa2 = min_i(index_i - kappa1 * action_i).  Returns nothing
// when no positive slope is feasible.
std::optional<WipCertificate> wip_fit(const std::vector<WipSample>& samples);

} // namespace reebmec
