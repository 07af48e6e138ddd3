#pragma once

#include <vector>

#include "qda/qf2.hpp"
#include "qda/rational.hpp"

namespace qda {

inline bool entry_zero(const Rat& x) { return sgn(x) == 0; }
inline bool entry_zero(const qf2& x) { return x.is_zero(); }
inline bool entry_zero(const Int& x) { return x == 0; }

/// Small dense matrix, row-major. Exact scalars only.
template <class T>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    T& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    const T& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const Mat& o) const = default;
};

template <class T>
Mat<T> transpose(const Mat<T>& m) {
    Mat<T> t(m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) throw std::domain_error("matrix product: dimension mismatch");
    Mat<T> z(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            if (entry_zero(x(i, k))) continue;
            for (size_t j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

template <class T>
std::vector<T> operator*(const Mat<T>& m, const std::vector<T>& v) {
    if (m.cols != v.size()) throw std::domain_error("matrix-vector: dimension mismatch");
    std::vector<T> out(m.rows, T(0));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j)
            if (!entry_zero(m(i, j))) out[i] += m(i, j) * v[j];
    return out;
}

template <class T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size()) throw std::domain_error("dot: dimension mismatch");
    T s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

/// x^T G y.
template <class T>
T bilinear(const Mat<T>& G, const std::vector<T>& x, const std::vector<T>& y) {
    return dot(x, G * y);
}

/// Field determinant by Gaussian elimination with column pivot search.
template <class T>
T det_field(Mat<T> m) {
    if (m.rows != m.cols) throw std::domain_error("det of non-square matrix");
    size_t n = m.rows;
    T det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && entry_zero(m(piv, c))) ++piv;
        if (piv == n) return T(0);
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        T inv_piv = T(1) / m(c, c);
        for (size_t r = c + 1; r < n; ++r) {
            if (entry_zero(m(r, c))) continue;
            T f = m(r, c) * inv_piv;
            for (size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Fraction-free (Bareiss) determinant for rational matrices: clear
/// denominators, run integer Bareiss, divide back.
Rat det_bareiss(const Mat<Rat>& m);

template <class T>
Mat<T> mat_inverse(Mat<T> m) {
    if (m.rows != m.cols) throw std::domain_error("inverse of non-square matrix");
    size_t n = m.rows;
    Mat<T> inv = Mat<T>::identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && entry_zero(m(piv, c))) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != c)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        T ip = T(1) / m(c, c);
        for (size_t j = 0; j < n; ++j) {
            m(c, j) *= ip;
            inv(c, j) *= ip;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || entry_zero(m(r, c))) continue;
            T f = m(r, c);
            for (size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier; coefficient i
/// multiplies x^i, leading coefficient 1.
template <class T>
std::vector<T> char_poly(const Mat<T>& M) {
    if (M.rows != M.cols) throw std::domain_error("char_poly of non-square matrix");
    size_t n = M.rows;
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Mat<T> Mk = Mat<T>::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        Mk = M * Mk;
        T tr(0);
        for (size_t i = 0; i < n; ++i) tr += Mk(i, i);
        c[n - k] = -(tr / T(static_cast<long>(k)));
        for (size_t i = 0; i < n; ++i) Mk(i, i) += c[n - k];
    }
    return c;
}

template <class T>
size_t mat_rank(Mat<T> m) {
    size_t n = m.rows, c = 0;
    for (size_t col = 0; col < m.cols && c < n; ++col) {
        size_t piv = c;
        while (piv < n && entry_zero(m(piv, col))) ++piv;
        if (piv == n) continue;
        if (piv != c)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(c, j));
        T ip = T(1) / m(c, col);
        for (size_t r = c + 1; r < n; ++r) {
            if (entry_zero(m(r, col))) continue;
            T f = m(r, col) * ip;
            for (size_t j = col; j < m.cols; ++j) m(r, j) -= f * m(c, j);
        }
        ++c;
    }
    return c;
}

/// Basis of the right kernel of m (columns of the result span {x : m x = 0}).
template <class T>
Mat<T> kernel_basis(Mat<T> m) {
    size_t nc = m.cols, nr = m.rows;
    std::vector<long> pivot_of_col(nc, -1);
    size_t r = 0;
    for (size_t col = 0; col < nc && r < nr; ++col) {
        size_t piv = r;
        while (piv < nr && entry_zero(m(piv, col))) ++piv;
        if (piv == nr) continue;
        if (piv != r)
            for (size_t j = 0; j < nc; ++j) std::swap(m(piv, j), m(r, j));
        T ip = T(1) / m(r, col);
        for (size_t j = 0; j < nc; ++j) m(r, j) *= ip;
        for (size_t rr = 0; rr < nr; ++rr) {
            if (rr == r || entry_zero(m(rr, col))) continue;
            T f = m(rr, col);
            for (size_t j = 0; j < nc; ++j) m(rr, j) -= f * m(r, j);
        }
        pivot_of_col[col] = static_cast<long>(r);
        ++r;
    }
    std::vector<size_t> free_cols;
    for (size_t col = 0; col < nc; ++col)
        if (pivot_of_col[col] < 0) free_cols.push_back(col);
    Mat<T> K(nc, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        K(fc, k) = T(1);
        for (size_t col = 0; col < nc; ++col)
            if (pivot_of_col[col] >= 0) K(col, k) = -m(static_cast<size_t>(pivot_of_col[col]), fc);
    }
    return K;
}

Mat<qf2> to_qf2(const Mat<Rat>& m);
std::vector<qf2> to_qf2(const std::vector<Rat>& v);

}  // namespace qda
