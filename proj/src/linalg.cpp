#include "reebmec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace reebmec {

Mat::Mat(std::initializer_list<std::initializer_list<double>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ > 0 ? static_cast<int>(init.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_)
            fail(ErrorCode::invalid_input, "ragged matrix initializer");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
        fail(ErrorCode::invalid_input, "matrix product dimension mismatch");
    Mat out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (int j = 0; j < b.cols_; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        fail(ErrorCode::invalid_input, "matrix sum dimension mismatch");
    Mat out = a;
    for (size_t i = 0; i < out.a_.size(); ++i)
        out.a_[i] += b.a_[i];
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        fail(ErrorCode::invalid_input, "matrix difference dimension mismatch");
    Mat out = a;
    for (size_t i = 0; i < out.a_.size(); ++i)
        out.a_[i] -= b.a_[i];
    return out;
}

Mat operator*(double s, const Mat& a) {
    Mat out = a;
    for (double& v : out.a_)
        v *= s;
    return out;
}

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMat CMat::adjoint() const {
    CMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t(c, r) = std::conj((*this)(r, c));
    return t;
}

CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols_ != b.rows_)
        fail(ErrorCode::invalid_input, "matrix product dimension mismatch");
    CMat out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0))
                continue;
            for (int j = 0; j < b.cols_; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

double max_abs(const Mat& m) {
    double v = 0.0;
    for (double x : m.data())
        v = std::max(v, std::fabs(x));
    return v;
}

double max_abs_diff(const Mat& a, const Mat& b) { return max_abs(a - b); }

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols())
        fail(ErrorCode::invalid_input, "inverse of non-square matrix");
    int n = m.rows();
    Mat a = m;
    Mat inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(pivot, col)))
                pivot = r;
        if (std::fabs(a(pivot, col)) < 1e-300)
            fail(ErrorCode::numeric, "singular matrix in inverse");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        double d = a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            double f = a(r, col);
            if (f == 0.0)
                continue;
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

cplx det(const CMat& m) {
    if (m.rows() != m.cols())
        fail(ErrorCode::invalid_input, "determinant of non-square matrix");
    int n = m.rows();
    CMat a = m;
    cplx d(1.0, 0.0);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col)))
                pivot = r;
        if (std::abs(a(pivot, col)) < 1e-300)
            return cplx(0.0, 0.0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(a(pivot, c), a(col, c));
            d = -d;
        }
        d *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            cplx f = a(r, col) / a(col, col);
            if (f == cplx(0.0, 0.0))
                continue;
            for (int c = col; c < n; ++c)
                a(r, c) -= f * a(col, c);
        }
    }
    return d;
}

double det(const Mat& m) {
    if (m.rows() != m.cols())
        fail(ErrorCode::invalid_input, "determinant of non-square matrix");
    int n = m.rows();
    Mat a = m;
    double d = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(pivot, col)))
                pivot = r;
        if (std::fabs(a(pivot, col)) < 1e-300)
            return 0.0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(a(pivot, c), a(col, c));
            d = -d;
        }
        d *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            double f = a(r, col) / a(col, col);
            if (f == 0.0)
                continue;
            for (int c = col; c < n; ++c)
                a(r, c) -= f * a(col, c);
        }
    }
    return d;
}

namespace {

double off_diag_norm(const CMat& h) {
    double s = 0.0;
    for (int r = 0; r < h.rows(); ++r)
        for (int c = 0; c < h.cols(); ++c)
            if (r != c)
                s += std::norm(h(r, c));
    return std::sqrt(s);
}

} // namespace

HermitianEigen hermitian_eigen(const CMat& h) {
    if (h.rows() != h.cols())
        fail(ErrorCode::invalid_input, "hermitian_eigen needs a square matrix");
    int n = h.rows();
    CMat a = h;
    CMat v = CMat::identity(n);

    // Cyclic Jacobi with complex plane rotations annihilating a(p,q).
    for (int sweep = 0; sweep < 60 && off_diag_norm(a) > 1e-13; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                cplx apq = a(p, q);
                if (std::abs(apq) < 1e-300)
                    continue;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                cplx phase = apq / std::abs(apq);
                double tau = (aqq - app) / (2.0 * std::abs(apq));
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                cplx s = t * c * phase;
                for (int k = 0; k < n; ++k) {
                    cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = CMat(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (int i = 0; i < n; ++i)
            out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

std::vector<double> unitary_eigen_angles(const CMat& u, double tol) {
    int n = u.rows();
    CMat uh = u.adjoint();
    // Hermitian real/imaginary parts: U = H + iK with [H, K] = 0.
    CMat hm(n, n), km(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            hm(r, c) = 0.5 * (u(r, c) + uh(r, c));
            km(r, c) = cplx(0.0, -0.5) * (u(r, c) - uh(r, c));
        }

    HermitianEigen he = hermitian_eigen(hm);

    std::vector<double> angles;
    angles.reserve(n);
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && std::fabs(he.values[end] - he.values[start]) < tol)
            ++end;
        int m = end - start;
        if (m == 1) {
            // sin from the Rayleigh quotient of K on the eigenvector
            cplx s(0.0, 0.0);
            for (int r = 0; r < n; ++r) {
                cplx kr(0.0, 0.0);
                for (int c = 0; c < n; ++c)
                    kr += km(r, c) * he.vectors(c, start);
                s += std::conj(he.vectors(r, start)) * kr;
            }
            angles.push_back(std::atan2(s.real(), he.values[start]));
        } else {
            // cos is degenerate on this cluster; diagonalize K restricted to it
            CMat basis(n, m);
            for (int r = 0; r < n; ++r)
                for (int j = 0; j < m; ++j)
                    basis(r, j) = he.vectors(r, start + j);
            CMat kk = basis.adjoint() * (km * basis);
            HermitianEigen ke = hermitian_eigen(kk);
            for (int j = 0; j < m; ++j)
                angles.push_back(std::atan2(ke.values[j], he.values[start]));
        }
        start = end;
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

Sym2Eigen sym2_eigen(double a, double b, double d) {
    Sym2Eigen e;
    if (std::fabs(b) < 1e-300) {
        e.l1 = a;
        e.l2 = d;
        e.c = 1.0;
        e.s = 0.0;
        return e;
    }
    double tr = a + d;
    double disc = std::sqrt((a - d) * (a - d) + 4.0 * b * b);
    e.l1 = 0.5 * (tr + disc);
    e.l2 = 0.5 * (tr - disc);
    double vx = e.l1 - d, vy = b;
    double norm = std::hypot(vx, vy);
    e.c = vx / norm;
    e.s = vy / norm;
    return e;
}

} // namespace reebmec
