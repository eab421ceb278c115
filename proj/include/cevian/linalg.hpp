#pragma once

#include "cevian/scalar.hpp"

#include <vector>

namespace cevian {

template <ExactField S>
S det3(const Mat3<S>& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Classical adjoint: adj(m) * m = det(m) * I. Defined for singular m too.
template <ExactField S>
Mat3<S> adjugate(const Mat3<S>& m) {
    Mat3<S> a;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    }
    return a;
}

template <ExactField S>
Vec3<S> cross(const Vec3<S>& u, const Vec3<S>& v) {
    return Vec3<S>(u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0));
}

template <ExactField S>
S dot(const Vec3<S>& u, const Vec3<S>& v) {
    return u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

template <ExactField S>
bool is_zero_vector(const Vec3<S>& v) {
    return v(0).is_zero() && v(1).is_zero() && v(2).is_zero();
}

/// u and v span the same 1-dimensional subspace (both nonzero).
template <ExactField S>
bool proportional(const Vec3<S>& u, const Vec3<S>& v) {
    return is_zero_vector(cross(u, v));
}

/// Reduced row echelon form, in place. Returns the pivot column of each
/// pivot row.
template <ExactField S>
std::vector<int> row_reduce(MatX<S>& m) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const S inv = S(1) / m(r, c);
        for (int j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const S f = m(i, c);
            for (int j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <ExactField S>
int rank(MatX<S> m) {
    return static_cast<int>(row_reduce(m).size());
}

/// Basis of the right null space {x : m x = 0}.
template <ExactField S>
std::vector<Eigen::Matrix<S, Eigen::Dynamic, 1>> nullspace(MatX<S> m) {
    const auto pivots = row_reduce(m);
    const int cols = static_cast<int>(m.cols());
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Eigen::Matrix<S, Eigen::Dynamic, 1>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Eigen::Matrix<S, Eigen::Dynamic, 1> v(cols);
        for (int j = 0; j < cols; ++j) v(j) = S(0);
        v(free) = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace cevian
