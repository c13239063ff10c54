#include "reebmec/symplin.hpp"

#include <cmath>
#include <numbers>

namespace reebmec {

namespace {

constexpr double kPi = std::numbers::pi;

void check_even_square(const Mat& a) {
    if (a.rows() != a.cols() || a.rows() % 2 != 0 || a.rows() == 0)
        fail(ErrorCode::invalid_input, "symplectic matrix must be square of even dimension");
}

} // namespace

SympMatrix::SympMatrix(int half_dim, Mat m) : n(half_dim), a(std::move(m)) {
    if (n < 1)
        fail(ErrorCode::invalid_input, "half-dimension must be positive");
    if (a.rows() != 2 * n || a.cols() != 2 * n)
        fail(ErrorCode::invalid_input, "matrix size does not match half-dimension");
}

SympPath::SympPath(int n, std::vector<double> times, std::vector<Mat> mats)
    : n_(n), times_(std::move(times)), mats_(std::move(mats)) {
    if (n_ < 1)
        fail(ErrorCode::invalid_input, "path half-dimension must be positive");
    if (times_.empty() || times_.size() != mats_.size())
        fail(ErrorCode::invalid_input, "path needs matching, nonempty time and matrix lists");
    if (times_.front() != 0.0 || max_abs_diff(mats_.front(), Mat::identity(2 * n_)) > kSymTol)
        fail(ErrorCode::invalid_input, "path must start at (0, identity)");
    for (size_t i = 0; i + 1 < times_.size(); ++i)
        if (!(times_[i] < times_[i + 1]))
            fail(ErrorCode::invalid_input, "path times must be strictly increasing");
    for (const Mat& m : mats_)
        if (!is_symplectic(m, kSymTol * 100))
            fail(ErrorCode::invalid_input, "path sample is not symplectic");
}

Mat standard_J(int n) {
    if (n < 1)
        fail(ErrorCode::invalid_input, "standard_J needs n >= 1");
    Mat j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(i, n + i) = -1.0;
        j(n + i, i) = 1.0;
    }
    return j;
}

Mat block_rotation(const std::vector<double>& angles) {
    int n = static_cast<int>(angles.size());
    Mat m = Mat::identity(2 * n);
    for (int jdx = 0; jdx < n; ++jdx) {
        double c = std::cos(angles[jdx]);
        double s = std::sin(angles[jdx]);
        m(jdx, jdx) = c;
        m(jdx, n + jdx) = -s;
        m(n + jdx, jdx) = s;
        m(n + jdx, n + jdx) = c;
    }
    return m;
}

SympPath rotation_path(const std::vector<double>& rates, double T, int m) {
    if (rates.empty())
        fail(ErrorCode::invalid_input, "rotation_path needs at least one rate");
    if (T <= 0.0 || m < 1)
        fail(ErrorCode::invalid_input, "rotation_path needs T > 0 and m >= 1");
    double max_rate = 0.0;
    for (double w : rates)
        max_rate = std::max(max_rate, std::fabs(w));
    if (max_rate * T / m >= kPi / 4.0)
        fail(ErrorCode::invalid_input, "rotation_path sampling too coarse for the lift guard");

    int n = static_cast<int>(rates.size());
    std::vector<double> times(m + 1);
    std::vector<Mat> mats;
    mats.reserve(m + 1);
    std::vector<double> angles(n);
    for (int i = 0; i <= m; ++i) {
        double t = T * i / m;
        times[i] = t;
        for (int j = 0; j < n; ++j)
            angles[j] = rates[j] * t;
        mats.push_back(block_rotation(angles));
    }
    times.back() = T;
    return SympPath(n, std::move(times), std::move(mats));
}

SympPath sampled_path(int n, double T, int m, const std::function<Mat(double)>& fn) {
    if (T <= 0.0 || m < 1)
        fail(ErrorCode::invalid_input, "sampled_path needs T > 0 and m >= 1");
    std::vector<double> times(m + 1);
    std::vector<Mat> mats;
    mats.reserve(m + 1);
    for (int i = 0; i <= m; ++i) {
        times[i] = T * i / m;
        mats.push_back(fn(times[i]));
    }
    times.back() = T;
    return SympPath(n, std::move(times), std::move(mats));
}

int suggested_samples(const std::vector<double>& rates, double T) {
    double sum = 0.0;
    for (double w : rates)
        sum += std::fabs(w);
    return static_cast<int>(std::ceil(sum * T / 1.0)) + 8;
}

bool is_symplectic(const Mat& a, double tol) {
    if (tol <= 0.0)
        fail(ErrorCode::invalid_input, "is_symplectic needs tol > 0");
    check_even_square(a);
    Mat j = standard_J(a.rows() / 2);
    return max_abs_diff(a.transposed() * j * a, j) <= tol;
}

PolarParts polar_decompose(const SympMatrix& sm) {
    if (!is_symplectic(sm.a, kSymTol * std::max(1.0, max_abs(sm.a)) * 100))
        fail(ErrorCode::invalid_input, "polar_decompose needs a symplectic matrix");

    Mat u = sm.a;
    bool converged = false;
    for (int it = 0; it < kPolarMaxIter; ++it) {
        Mat next = 0.5 * (u + inverse(u).transposed());
        double step = max_abs_diff(next, u);
        u = next;
        if (step < kPolarResidual) {
            converged = true;
            break;
        }
    }
    if (!converged && max_abs_diff(u.transposed() * u, Mat::identity(sm.dim())) > 1e-10)
        fail(ErrorCode::numeric, "polar iteration did not converge");

    Mat p = sm.a * u.transposed();
    p = 0.5 * (p + p.transposed()); // clean symmetric part

    double scale = std::max(1.0, max_abs(sm.a));
    if (max_abs_diff(p * u, sm.a) > kSymTol * scale)
        fail(ErrorCode::numeric, "polar factors do not reproduce the input");
    return PolarParts{std::move(p), std::move(u)};
}

std::complex<double> det_complex_sq(const SympMatrix& sm) {
    const Mat& u = sm.a;
    int n = sm.n;
    if (max_abs_diff(u.transposed() * u, Mat::identity(2 * n)) > kSymTol * 100 || !is_symplectic(u, kSymTol * 100))
        fail(ErrorCode::invalid_input, "det_complex_sq needs an orthogonal-symplectic matrix");
    CMat uc(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            uc(r, c) = cplx(u(r, c), u(n + r, c));
    cplx d = det(uc);
    cplx d2 = d * d;
    if (std::fabs(std::abs(d2) - 1.0) > kSymTol * 100)
        fail(ErrorCode::numeric, "squared complex determinant is off the unit circle");
    return d2 / std::abs(d2);
}

namespace {

// Unit-circle value of det^2_C of the unitary polar part.
cplx unitary_det_sq(const Mat& a, int n) {
    SympMatrix sm(n, a);
    PolarParts pu = polar_decompose(sm);
    return det_complex_sq(SympMatrix(n, pu.u));
}

} // namespace

double lift_theta(const std::vector<Mat>& mats, int n) {
    if (mats.empty())
        fail(ErrorCode::invalid_input, "lift over empty matrix sequence");
    double two_theta = 0.0;
    cplx prev = unitary_det_sq(mats.front(), n);
    for (size_t i = 1; i < mats.size(); ++i) {
        cplx cur = unitary_det_sq(mats[i], n);
        double inc = std::arg(cur / prev);
        // |d theta| < pi/2 is the branch-safety guard; refuse anywhere near
        // the wrap boundary instead of guessing.
        if (std::fabs(inc) >= 0.9 * kPi)
            fail(ErrorCode::invalid_input, "angle lift guard violated; refine the sampling");
        two_theta += inc;
        prev = cur;
    }
    return 0.5 * two_theta;
}

AngleTrack lift_angle(const SympPath& path) {
    AngleTrack track;
    track.t.reserve(path.size());
    track.theta.reserve(path.size());

    double two_theta = 0.0;
    cplx prev = unitary_det_sq(path.matrix(0), path.n());
    if (std::fabs(std::arg(prev)) > kSymTol * 100)
        fail(ErrorCode::invalid_input, "angle lift must start at the identity");
    track.t.push_back(path.time(0));
    track.theta.push_back(0.0);
    for (size_t i = 1; i < path.size(); ++i) {
        cplx cur = unitary_det_sq(path.matrix(i), path.n());
        double inc = std::arg(cur / prev);
        // |d theta| < pi/2 means |increment of arg det^2| < pi; stay clear
        // of the wrap boundary.
        if (std::fabs(inc) >= 0.9 * kPi)
            fail(ErrorCode::invalid_input, "angle lift guard violated; refine the sampling");
        two_theta += inc;
        prev = cur;
        track.t.push_back(path.time(i));
        track.theta.push_back(0.5 * two_theta);
    }
    return track;
}

SympPath iterate_path(const SympPath& path, int k) {
    if (k < 1)
        fail(ErrorCode::invalid_input, "iterate_path needs k >= 1");
    if (k == 1)
        return path;
    double T = path.duration();
    const Mat& end = path.endpoint();

    std::vector<double> times;
    std::vector<Mat> mats;
    times.reserve(path.size() + (k - 1) * (path.size() - 1));
    mats.reserve(times.capacity());
    for (size_t i = 0; i < path.size(); ++i) {
        times.push_back(path.time(i));
        mats.push_back(path.matrix(i));
    }
    Mat power = end;
    for (int j = 1; j < k; ++j) {
        for (size_t i = 1; i < path.size(); ++i) {
            times.push_back(j * T + path.time(i));
            mats.push_back(path.matrix(i) * power);
        }
        if (j + 1 < k)
            power = power * end;
    }
    return SympPath(path.n(), std::move(times), std::move(mats));
}

SympPath catenate(const SympPath& path1, const SympPath& path2) {
    if (path1.n() != path2.n())
        fail(ErrorCode::invalid_input, "catenate needs equal half-dimensions");
    double T1 = path1.duration();
    const Mat& end1 = path1.endpoint();

    std::vector<double> times;
    std::vector<Mat> mats;
    times.reserve(path1.size() + path2.size() - 1);
    mats.reserve(times.capacity());
    for (size_t i = 0; i < path1.size(); ++i) {
        times.push_back(path1.time(i));
        mats.push_back(path1.matrix(i));
    }
    for (size_t i = 1; i < path2.size(); ++i) {
        times.push_back(T1 + path2.time(i));
        mats.push_back(path2.matrix(i) * end1);
    }
    return SympPath(path1.n(), std::move(times), std::move(mats));
}

SympPath reverse_inverse_path(const SympPath& path) {
    double T = path.duration();
    Mat end_inv = inverse(path.endpoint());
    std::vector<double> times;
    std::vector<Mat> mats;
    times.reserve(path.size());
    mats.reserve(path.size());
    for (size_t i = 0; i < path.size(); ++i) {
        size_t j = path.size() - 1 - i;
        times.push_back(T - path.time(j));
        mats.push_back(path.matrix(j) * end_inv);
    }
    return SympPath(path.n(), std::move(times), std::move(mats));
}

} // namespace reebmec
