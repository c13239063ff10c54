#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "reebmec/errors.hpp"

namespace reebmec {

using cplx = std::complex<double>;

// Dense row-major matrix, sized for 2n <= 64.  This project never needs
// sparse or large-scale linear algebra, so everything is kept simple and
// allocation-friendly.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}
    Mat(std::initializer_list<std::initializer_list<double>> init);

    static Mat identity(int n);
    static Mat zero(int n) { return Mat(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    Mat transposed() const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(double s, const Mat& a);

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<double> a_;
};

class CMat {
public:
    CMat() : rows_(0), cols_(0) {}
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    cplx operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    CMat adjoint() const;

    friend CMat operator*(const CMat& a, const CMat& b);

private:
    int rows_, cols_;
    std::vector<cplx> a_;
};

double max_abs(const Mat& m);
double max_abs_diff(const Mat& a, const Mat& b);

// Gauss-Jordan with partial pivoting; throws on singular input.
Mat inverse(const Mat& m);

// Determinants by LU with partial pivoting.
cplx det(const CMat& m);
double det(const Mat& m);

// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi.
// Returns eigenvalues in ascending order; the columns of `vectors` are the
// corresponding orthonormal eigenvectors.
struct HermitianEigen {
    std::vector<double> values;
    CMat vectors;
};
HermitianEigen hermitian_eigen(const CMat& h);

// Eigen-angles phi_j in (-pi, pi] of a unitary matrix, i.e. its eigenvalues
// are e^{i phi_j}.  Handles repeated and near-coincident angles by a second
// diagonalization pass inside eigenspaces of the Hermitian part.
std::vector<double> unitary_eigen_angles(const CMat& u, double tol = 1e-8);

// Closed-form spectral decomposition of a symmetric 2x2 matrix.
struct Sym2Eigen {
    double l1, l2;   // eigenvalues
    double c, s;     // first eigenvector (c, s), second is (-s, c)
};
Sym2Eigen sym2_eigen(double a, double b, double d); // [[a, b], [b, d]]

} // namespace reebmec
