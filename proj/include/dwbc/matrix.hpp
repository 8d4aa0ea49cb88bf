#ifndef DWBC_MATRIX_HPP
#define DWBC_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <vector>

#include "dwbc/errors.hpp"
#include "dwbc/scalar.hpp"

namespace dwbc {

// Dense row-major complex matrix.
template <class C>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, C(0, 0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    C& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const C& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = C(1, 0);
        return m;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const C v = (*this)(i, k);
                if (v == C(0, 0)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Mat scaled(const C& s) const {
        Mat r = *this;
        for (auto& v : r.a_) v *= s;
        return r;
    }

    double norm_max() const {
        double m = 0;
        for (const auto& v : a_) m = std::max(m, abs_d(v));
        return m;
    }

    std::vector<C> apply(const std::vector<C>& v) const {
        assert(int(v.size()) == cols_);
        std::vector<C> r(rows_, C(0, 0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

  private:
    int rows_, cols_;
    std::vector<C> a_;
};

template <class C>
Mat<C> kron(const Mat<C>& x, const Mat<C>& y) {
    Mat<C> r(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            for (int k = 0; k < y.rows(); ++k)
                for (int l = 0; l < y.cols(); ++l)
                    r(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    return r;
}

// Embeds a two-site operator m (acting on sites p, q in that order; p is the
// first tensor factor of m) into a chain of n_sites qudits of dimension d.
// Site 0 is the most significant position of the row/column index.
template <class C>
Mat<C> op_on_sites(const Mat<C>& m, int d, int n_sites, int p, int q) {
    assert(p != q && p < n_sites && q < n_sites);
    assert(m.rows() == d * d && m.cols() == d * d);
    int dim = 1;
    for (int i = 0; i < n_sites; ++i) dim *= d;
    std::vector<int> stride(n_sites);
    int s = 1;
    for (int i = n_sites - 1; i >= 0; --i) {
        stride[i] = s;
        s *= d;
    }
    Mat<C> r(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const int sp = (col / stride[p]) % d;
        const int sq = (col / stride[q]) % d;
        const int base = col - sp * stride[p] - sq * stride[q];
        for (int tp = 0; tp < d; ++tp)
            for (int tq = 0; tq < d; ++tq) {
                const C v = m(tp * d + tq, sp * d + sq);
                if (v == C(0, 0)) continue;
                r(base + tp * stride[p] + tq * stride[q], col) += v;
            }
    }
    return r;
}

// Determinant by elimination with deterministic partial pivoting (largest
// modulus). Returns 0 for an exactly singular pivot column.
template <class C>
C det_lu(Mat<C> m) {
    assert(m.rows() == m.cols());
    const int n = m.rows();
    C det(1, 0);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = abs_d(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = abs_d(m(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) return C(0, 0);
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            det = -det;
        }
        det *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            const C f = m(i, k) / m(k, k);
            if (f == C(0, 0)) continue;
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

}  // namespace dwbc

#endif
