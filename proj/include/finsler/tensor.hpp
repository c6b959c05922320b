#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "finsler/errors.hpp"

namespace finsler {

/// Dense n x n matrix of scalars S (S is double or a Jet type).
template <class S>
class Matrix {
public:
    Matrix() : n_(0) {}
    explicit Matrix(int n, const S& fill = S{}) : n_(n), v_(std::size_t(n) * n, fill) {}

    int size() const { return n_; }
    S& operator()(int i, int j) { return v_[std::size_t(i) * n_ + j]; }
    const S& operator()(int i, int j) const { return v_[std::size_t(i) * n_ + j]; }

    const std::vector<S>& data() const { return v_; }

private:
    int n_;
    std::vector<S> v_;
};

/// Dense rank-3 array, indexed (k, i, j); the layout each module uses is
/// documented at the field that holds it.
template <class S>
class Tensor3 {
public:
    Tensor3() : n_(0) {}
    explicit Tensor3(int n, const S& fill = S{}) : n_(n), v_(std::size_t(n) * n * n, fill) {}

    int size() const { return n_; }
    S& operator()(int k, int i, int j) { return v_[(std::size_t(k) * n_ + i) * n_ + j]; }
    const S& operator()(int k, int i, int j) const { return v_[(std::size_t(k) * n_ + i) * n_ + j]; }

    const std::vector<S>& data() const { return v_; }

private:
    int n_;
    std::vector<S> v_;
};

inline double magnitude(double x) { return std::fabs(x); }

inline double max_abs(const Matrix<double>& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::fabs(x));
    return m;
}

inline double max_abs(const Tensor3<double>& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::fabs(x));
    return m;
}

/// Inverse by Gauss-Jordan elimination with partial pivoting. Works for any
/// scalar with field arithmetic and a magnitude() (doubles and jets); pivots
/// are chosen by the magnitude of the value part. Throws DomainError when
/// the matrix is singular relative to its own scale.
template <class S>
Matrix<S> inverse(const Matrix<S>& in, const char* what = "matrix") {
    const int n = in.size();
    Matrix<S> a = in;
    Matrix<S> inv(n);
    for (int i = 0; i < n; ++i) inv(i, i) = inv(i, i) + 1.0;

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, magnitude(a(i, j)));
    if (scale == 0.0) throw DomainError(std::string("degenerate ") + what);

    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (magnitude(a(r, col)) > magnitude(a(piv, col))) piv = r;
        if (magnitude(a(piv, col)) < 1e-12 * scale)
            throw DomainError(std::string("degenerate ") + what);
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        S d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / d;
            inv(col, j) = inv(col, j) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            S f = a(r, col);
            if (magnitude(f) == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(col, j);
                inv(r, j) = inv(r, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(const Matrix<double>& in) {
    const int n = in.size();
    Matrix<double> a = in;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a(i, i);
    return ev;
}

} // namespace finsler
