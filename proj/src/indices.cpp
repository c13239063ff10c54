#include "reebmec/indices.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace reebmec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIntSnapTol = 1e-5; // total/pi must land this close to an integer

Mat rot2(double phi) {
    Mat m(2, 2);
    m(0, 0) = std::cos(phi);
    m(0, 1) = -std::sin(phi);
    m(1, 0) = std::sin(phi);
    m(1, 1) = std::cos(phi);
    return m;
}

} // namespace

long long IndexValue::as_int() const {
    if (!exact || !exact->is_integer())
        fail(ErrorCode::numeric, "index value is not an exact integer");
    return exact->num();
}

Rational IndexValue::as_rational() const {
    if (!exact)
        fail(ErrorCode::numeric, "index value has no exact representation");
    return *exact;
}

IndexValue IndexValue::cz(long long v) {
    IndexValue iv;
    iv.kind = IndexKind::cz;
    iv.value = static_cast<double>(v);
    iv.exact = Rational(v);
    return iv;
}

IndexValue IndexValue::rs(const Rational& r) {
    IndexValue iv;
    iv.kind = IndexKind::rs;
    iv.value = r.to_double();
    iv.exact = r;
    return iv;
}

IndexValue IndexValue::real_valued(IndexKind kind, double v) {
    IndexValue iv;
    iv.kind = kind;
    iv.value = v;
    return iv;
}

IndexValue unitary_index(const SympPath& path) {
    return IndexValue::real_valued(IndexKind::unitary, lift_angle(path).total() / kPi);
}

IndexValue dgw_index(const SympMatrix& a) {
    PolarParts pu = polar_decompose(a);
    int n = a.n;
    CMat uc(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            uc(r, c) = cplx(pu.u(r, c), pu.u(n + r, c));
    std::vector<double> angles = unitary_eigen_angles(uc);
    double sum = 0.0;
    for (double phi : angles)
        sum += phi;
    return IndexValue::real_valued(IndexKind::dgw, sum / kPi);
}

IndexValue conley_zehnder_rot(const std::vector<double>& rates, double T) {
    if (rates.empty() || T <= 0.0)
        fail(ErrorCode::invalid_input, "conley_zehnder_rot needs rates and T > 0");
    long long total = 0;
    for (double w : rates) {
        double x = std::fabs(w) * T / (2.0 * kPi);
        if (w == 0.0 || std::fabs(x - std::round(x)) * 2.0 * kPi < kNondegTol)
            fail(ErrorCode::degeneracy,
                 "degenerate block-rotation endpoint; use robbin_salamon instead");
        long long block = 2 * static_cast<long long>(std::floor(x)) + 1;
        total += (w > 0.0) ? block : -block;
    }
    return IndexValue::cz(total);
}

// ---- normalized-determinant continuation ------------------------------------

namespace {

struct Plane2 {
    double m00, m01, m10, m11;
    double tr() const { return m00 + m11; }
};

Plane2 extract_plane(const Mat& a, int n, int i) {
    return Plane2{a(i, i), a(i, n + i), a(n + i, i), a(n + i, n + i)};
}

void write_plane(Mat& a, int n, int i, const Mat& block) {
    a(i, i) = block(0, 0);
    a(i, n + i) = block(0, 1);
    a(n + i, i) = block(1, 0);
    a(n + i, n + i) = block(1, 1);
}

Mat to_mat(const Plane2& p) {
    Mat m(2, 2);
    m(0, 0) = p.m00;
    m(0, 1) = p.m01;
    m(1, 0) = p.m10;
    m(1, 1) = p.m11;
    return m;
}

// Unit null vector of a (numerically) rank-one 2x2 matrix.
void null_vector(const Mat& a, double& x, double& y) {
    double n0 = std::hypot(a(0, 0), a(0, 1));
    double n1 = std::hypot(a(1, 0), a(1, 1));
    if (std::max(n0, n1) < 1e-12)
        fail(ErrorCode::numeric, "null_vector of (near) zero matrix");
    if (n0 >= n1) {
        x = -a(0, 1) / n0;
        y = a(0, 0) / n0;
    } else {
        x = -a(1, 1) / n1;
        y = a(1, 0) / n1;
    }
}

// SL(2) basis change taking diag(1,-1) to Y, i.e. Y = S diag(1,-1) S^{-1}.
Mat straightening_basis(const Mat& y) {
    Mat id2 = Mat::identity(2);
    double px, py, mx, my;
    null_vector(y - id2, px, py);
    null_vector(y + id2, mx, my);
    Mat s(2, 2);
    s(0, 0) = px;
    s(1, 0) = py;
    s(0, 1) = mx;
    s(1, 1) = my;
    double d = px * my - py * mx;
    if (std::fabs(d) < 1e-10)
        fail(ErrorCode::numeric, "hyperbolic eigenbasis is numerically singular");
    if (d < 0.0) {
        s(0, 1) = -s(0, 1);
        s(1, 1) = -s(1, 1);
        d = -d;
    }
    double scale = std::sqrt(d);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            s(r, c) /= scale;
    return s;
}

Mat inverse2(const Mat& s) {
    double d = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
    Mat inv(2, 2);
    inv(0, 0) = s(1, 1) / d;
    inv(0, 1) = -s(0, 1) / d;
    inv(1, 0) = -s(1, 0) / d;
    inv(1, 1) = s(0, 0) / d;
    return inv;
}

Mat sym_power(const Mat& p, double t) {
    Sym2Eigen e = sym2_eigen(p(0, 0), 0.5 * (p(0, 1) + p(1, 0)), p(1, 1));
    if (e.l1 <= 0.0 || e.l2 <= 0.0)
        fail(ErrorCode::numeric, "positive factor is not positive definite");
    double a = std::pow(e.l1, t), b = std::pow(e.l2, t);
    Mat q(2, 2);
    q(0, 0) = e.c * e.c * a + e.s * e.s * b;
    q(0, 1) = e.c * e.s * (a - b);
    q(1, 0) = q(0, 1);
    q(1, 1) = e.s * e.s * a + e.c * e.c * b;
    return q;
}

Mat diag2(double a, double b) {
    Mat m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

// Appends the continuation of one plane block to the working matrix,
// recording every intermediate full matrix.  The eigenvalues of the moving
// block never touch 1, so the whole matrix stays inside its nondegenerate
// component.
void continue_plane(Mat& work, int n, int plane, std::vector<Mat>& out) {
    Plane2 p = extract_plane(work, n, plane);
    Mat m = to_mat(p);
    double tr = p.tr();
    Mat id2 = Mat::identity(2);

    auto emit = [&](const Mat& block) {
        write_plane(work, n, plane, block);
        out.push_back(work);
    };

    if (std::fabs(tr + 2.0) < 1e-7) {
        // at or near -I: contract the unipotent part, trace pinned at -2
        Mat nil = (-1.0 * m) - id2;
        int steps = 16;
        for (int s = 1; s <= steps; ++s) {
            double u = 1.0 - static_cast<double>(s) / steps;
            emit(-1.0 * (id2 + u * nil));
        }
        return;
    }
    if (tr < -2.0) {
        // negative hyperbolic: contract the stretch, target -I
        double a0 = std::acosh(-tr / 2.0);
        Mat y = (1.0 / std::sinh(a0)) * ((-1.0 * m) - std::cosh(a0) * id2);
        int steps = std::max(8, static_cast<int>(std::ceil(a0 / 0.1)));
        for (int s = 1; s <= steps; ++s) {
            double a = a0 * (1.0 - static_cast<double>(s) / steps);
            emit(-1.0 * (std::cosh(a) * id2 + std::sinh(a) * y));
        }
        return;
    }
    if (tr > 2.0) {
        // positive hyperbolic: align the axes with an SL(2) conjugation,
        // then pin the stretch at diag(2, 1/2)
        double a0 = std::acosh(tr / 2.0);
        Mat y = (1.0 / std::sinh(a0)) * (m - std::cosh(a0) * id2);
        Mat s = straightening_basis(y);
        double alpha = std::atan2(s(1, 0) - s(0, 1), s(0, 0) + s(1, 1));
        Mat psym = s * rot2(alpha).transposed();
        Mat d0 = diag2(std::exp(a0), std::exp(-a0));
        int steps = 24;
        for (int k = 1; k <= steps; ++k) {
            double u = static_cast<double>(k) / steps;
            Mat su = sym_power(psym, 1.0 - u) * rot2((1.0 - u) * alpha);
            emit(su * d0 * inverse2(su));
        }
        double target = std::log(2.0);
        for (int k = 1; k <= steps; ++k) {
            double a = a0 + (target - a0) * k / steps;
            emit(diag2(std::exp(a), std::exp(-a)));
        }
        return;
    }

    // elliptic: rotate the eigenvalue pair out to -1 along the circle
    double eta0 = std::acos(std::clamp(tr / 2.0, -1.0, 1.0));
    double sn = std::sin(eta0);
    if (sn < 1e-12)
        fail(ErrorCode::degeneracy, "endpoint block too close to the identity");
    Mat x = (1.0 / sn) * (m - std::cos(eta0) * id2);
    int steps = std::max(8, static_cast<int>(std::ceil((kPi - eta0) / 0.05)));
    for (int s = 1; s <= steps; ++s) {
        double eta = eta0 + (kPi - eta0) * s / steps;
        emit(std::cos(eta) * id2 + std::sin(eta) * x);
    }
}

double continuation_theta(const Mat& endpoint, int n) {
    // the construction is blockwise; refuse anything that is not a direct
    // sum over the standard symplectic planes
    double scale = std::max(1.0, max_abs(endpoint));
    for (int r = 0; r < 2 * n; ++r)
        for (int c = 0; c < 2 * n; ++c) {
            int pr = r % n, pc = c % n;
            if (pr != pc && std::fabs(endpoint(r, c)) > 1e-8 * scale)
                fail(ErrorCode::invalid_input,
                     "endpoint does not split over the standard symplectic planes; "
                     "use robbin_salamon on an analytic descriptor");
        }

    std::vector<Mat> mats;
    mats.push_back(endpoint);
    Mat work = endpoint;
    for (int i = 0; i < n; ++i)
        continue_plane(work, n, i, mats);
    return lift_theta(mats, n);
}

} // namespace

IndexValue conley_zehnder(const SympPath& path) {
    int n = path.n();
    const Mat& endpoint = path.endpoint();
    double dd = det(endpoint - Mat::identity(2 * n));
    if (std::fabs(dd) < kNondegTol)
        fail(ErrorCode::degeneracy,
             "path endpoint is degenerate within tolerance; use robbin_salamon");

    double total = lift_angle(path).total() + continuation_theta(endpoint, n);
    double mu = total / kPi;
    long long r = static_cast<long long>(std::llround(mu));
    if (std::fabs(mu - static_cast<double>(r)) > kIntSnapTol)
        fail(ErrorCode::numeric, "normalized determinant total is not an integer multiple of pi");

    // parity of the index is pinned by the nondegenerate component
    int comp = dd > 0.0 ? 1 : -1;
    int parity = (n % 2 == 0 ? 1 : -1) * comp;
    if ((r % 2 == 0 ? 1 : -1) != parity)
        fail(ErrorCode::numeric, "index parity disagrees with the endpoint component");
    return IndexValue::cz(r);
}

// ---- Robbin-Salamon on analytic descriptors ---------------------------------

Mat AnalyticPath::at(double t) const {
    int nn = n();
    Mat m = Mat::identity(2 * nn);
    for (int j = 0; j < nn; ++j) {
        const AnalyticBlock& b = blocks[j];
        if (b.kind == AnalyticBlock::Kind::rotation) {
            double c = std::cos(b.rate * t), s = std::sin(b.rate * t);
            m(j, j) = c;
            m(j, nn + j) = -s;
            m(nn + j, j) = s;
            m(nn + j, nn + j) = c;
        } else {
            m(j, j) = std::exp(b.rate * t);
            m(nn + j, nn + j) = std::exp(-b.rate * t);
        }
    }
    return m;
}

SympPath AnalyticPath::sample(int m) const {
    return sampled_path(n(), duration, m, [this](double t) { return at(t); });
}

IndexValue robbin_salamon(const AnalyticPath& path) {
    if (path.blocks.empty() || path.duration <= 0.0)
        fail(ErrorCode::invalid_input, "robbin_salamon needs blocks and a positive duration");
    double T = path.duration;
    double tol = 1e-9 * std::max(1.0, T);

    // crossing time -> signature of the crossing form on the local kernel
    std::map<long long, int> crossings; // key = round(t / tol), avoids float keys
    auto add_crossing = [&](double t, int sig) {
        long long key = static_cast<long long>(std::llround(t / tol));
        crossings[key] += sig;
    };

    add_crossing(0.0, 0); // t = 0 is always a crossing (whole space kernel)
    for (const AnalyticBlock& b : path.blocks) {
        if (b.kind == AnalyticBlock::Kind::rotation && b.rate != 0.0) {
            // R(wt) = I at wt in 2 pi Z; the form w * |v|^2 has signature 2 sign(w)
            double period = 2.0 * kPi / std::fabs(b.rate);
            for (int k = 0;; ++k) {
                double t = k * period;
                if (t > T + tol)
                    break;
                add_crossing(std::min(t, T), b.rate > 0.0 ? 2 : -2);
            }
        }
        // stretch blocks cross only at t = 0 with an indefinite form
        // (signature 0); zero-rate blocks contribute a vanishing form
    }

    Rational rs(0);
    for (const auto& [key, sig] : crossings) {
        double t = static_cast<double>(key) * tol;
        bool boundary = key == 0 || std::fabs(t - T) <= 2.0 * tol;
        rs += boundary ? Rational(sig, 2) : Rational(sig);
    }
    IndexValue iv = IndexValue::rs(rs);
    return iv;
}

// ---- mean index --------------------------------------------------------------

IndexValue mean_index(const SympPath& path, int k_max) {
    if (k_max < 1)
        fail(ErrorCode::invalid_input, "mean_index needs k_max >= 1");

    // loop case: Psi(T) = I makes theta(kT) = k theta(T), no fit required
    if (max_abs_diff(path.endpoint(), Mat::identity(path.dim())) <= kSymTol) {
        IndexValue iv = IndexValue::real_valued(IndexKind::mean, lift_angle(path).total() / kPi);
        iv.error_bar = 0.0;
        return iv;
    }

    SympPath iter = iterate_path(path, k_max);
    AngleTrack track = lift_angle(iter);
    size_t base = path.size() - 1;

    // least-squares line through (k pi, theta(kT)), k = 1..k_max
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::vector<double> xs(k_max), ys(k_max);
    for (int k = 1; k <= k_max; ++k) {
        double x = k * kPi;
        double y = track.theta[static_cast<size_t>(k) * base];
        xs[k - 1] = x;
        ys[k - 1] = y;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double slope, intercept;
    if (k_max == 1) {
        slope = ys[0] / xs[0];
        intercept = 0.0;
    } else {
        double denom = k_max * sxx - sx * sx;
        slope = (k_max * sxy - sx * sy) / denom;
        intercept = (sy - slope * sx) / k_max;
    }
    double max_resid = 0.0;
    for (int k = 0; k < k_max; ++k)
        max_resid = std::max(max_resid, std::fabs(ys[k] - slope * xs[k] - intercept));

    IndexValue iv = IndexValue::real_valued(IndexKind::mean, slope);
    iv.error_bar = max_resid / kPi;
    return iv;
}

long long degree(long long mu_cz, int n) { return mu_cz + n - 3; }

double catenation_defect(const SympPath& p1, const SympPath& p2) {
    return std::fabs(unitary_index(catenate(p1, p2)).value - unitary_index(p1).value -
                     unitary_index(p2).value);
}

// ---- weak index-positivity ----------------------------------------------------

std::optional<WipCertificate> wip_fit(const std::vector<WipSample>& samples) {
    if (samples.empty())
        fail(ErrorCode::invalid_input, "wip_fit needs at least one sample");
    for (const WipSample& s : samples)
        if (!(s.action > 0.0))
            fail(ErrorCode::invalid_input, "wip_fit actions must be positive");

    // anchor at the lowest point of the smallest action
    size_t anchor = 0;
    for (size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].action < samples[anchor].action ||
            (samples[i].action == samples[anchor].action && samples[i].index < samples[anchor].index))
            anchor = i;
    }

    double kappa1 = kKappa1Cap;
    bool constrained = false;
    for (size_t i = 0; i < samples.size(); ++i) {
        double da = samples[i].action - samples[anchor].action;
        if (da <= 0.0)
            continue;
        kappa1 = std::min(kappa1, (samples[i].index - samples[anchor].index) / da);
        constrained = true;
    }
    if (constrained && kappa1 <= 0.0)
        return std::nullopt;

    double kappa2 = samples[0].index - kappa1 * samples[0].action;
    for (const WipSample& s : samples)
        kappa2 = std::min(kappa2, s.index - kappa1 * s.action);
    double margin = samples[0].index - kappa1 * samples[0].action - kappa2;
    for (const WipSample& s : samples)
        margin = std::min(margin, s.index - kappa1 * s.action - kappa2);
    return WipCertificate{kappa1, kappa2, margin};
}

} // namespace reebmec
