#pragma once

#include "cevian/projective.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace cevian {

/// Affine map of the plane as a 3x3 matrix acting on barycentric columns.
///
/// Every column sums to the same nonzero scalar, so the line at infinity is
/// preserved; the stored matrix is rescaled so that the common sum is 1.
/// A map whose matrix is singular is representable (flagged by
/// is_invertible) because T_P of a degenerate cevian triangle still exists.
template <ExactField S>
class AffineMap {
public:
    AffineMap() : m_(Mat3<S>::Identity()) {}
    explicit AffineMap(const Mat3<S>& m) : m_(m) {
        const S s = m(0, 0) + m(1, 0) + m(2, 0);
        for (int j = 0; j < 3; ++j) {
            if (!(m(0, j) + m(1, j) + m(2, j) == s))
                throw Error(ErrorCode::DegenerateMap, "column sums differ: map does not fix the line at infinity");
        }
        if (s.is_zero()) throw Error(ErrorCode::DegenerateMap, "column sums vanish");
        if (!(s == S(1))) {
            const S inv = S(1) / s;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m_(i, j) = m_(i, j) * inv;
        }
    }

    static AffineMap identity() { return AffineMap(); }

    [[nodiscard]] const Mat3<S>& matrix() const { return m_; }
    [[nodiscard]] S determinant() const { return det3(m_); }
    [[nodiscard]] bool is_invertible() const { return !determinant().is_zero(); }

    [[nodiscard]] ProjPoint<S> operator()(const ProjPoint<S>& p) const {
        const Vec3<S> image = m_ * p.coords();
        if (is_zero_vector(image)) throw Error(ErrorCode::DegenerateMap, "point collapses under a singular map");
        return ProjPoint<S>(image);
    }

    /// Image of a line (push-forward by the inverse transpose).
    [[nodiscard]] ProjLine<S> operator()(const ProjLine<S>& l) const {
        require_invertible();
        return ProjLine<S>(Vec3<S>(adjugate(m_).transpose() * l.coeffs()));
    }

    [[nodiscard]] AffineMap inverse() const {
        require_invertible();
        return AffineMap(adjugate(m_));
    }

    /// Composition: (f * g)(X) = f(g(X)).
    friend AffineMap operator*(const AffineMap& f, const AffineMap& g) { return AffineMap(Mat3<S>(f.m_ * g.m_)); }

    friend bool operator==(const AffineMap& f, const AffineMap& g) { return f.m_ == g.m_; }

    [[nodiscard]] std::string str() const {
        std::string s = "[";
        for (int i = 0; i < 3; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < 3; ++j) s += (j ? " " : "") + m_(i, j).str();
        }
        return s + "]";
    }

    void require_invertible() const {
        if (!is_invertible()) throw Error(ErrorCode::DegenerateMap, "singular affine map");
    }

private:
    Mat3<S> m_;
};

/// The unique affine map sending each ordinary source to its target.
template <ExactField S>
AffineMap<S> affine_map_from_pairs(const std::array<std::pair<ProjPoint<S>, ProjPoint<S>>, 3>& pairs) {
    Mat3<S> src, dst;
    for (int j = 0; j < 3; ++j) {
        const auto& [s, t] = pairs[static_cast<std::size_t>(j)];
        if (s.is_infinite() || t.is_infinite())
            throw Error(ErrorCode::InfinitePoint, "affine map pair with a point at infinity");
        src.col(j) = s.normalized();
        dst.col(j) = t.normalized();
    }
    const S d = det3(src);
    if (d.is_zero()) throw Error(ErrorCode::DependentSources, "source points are collinear");
    // dst * src^-1 with src^-1 = adj(src) / det(src); the scale cancels.
    return AffineMap<S>(Mat3<S>(dst * adjugate(src)));
}

/// The complement map K: A, B, C -> D0, E0, F0 (built from its pairs).
template <ExactField S>
AffineMap<S> complement_map() {
    return affine_map_from_pairs<S>({{{vertex_a<S>(), midpoint_bc<S>()},
                                      {vertex_b<S>(), midpoint_ca<S>()},
                                      {vertex_c<S>(), midpoint_ab<S>()}}});
}

template <ExactField S>
AffineMap<S> anticomplement_map() {
    return complement_map<S>().inverse();
}

/// Homothety X -> c + k (X - c) about an ordinary center.
template <ExactField S>
AffineMap<S> homothety(const ProjPoint<S>& center, const S& ratio) {
    const Vec3<S> c = center.normalized();
    Mat3<S> m = Mat3<S>::Identity() * ratio;
    const S shift = S(1) - ratio;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = m(i, j) + c(i) * shift;
    return AffineMap<S>(m);
}

/// Half-turn about an ordinary point.
template <ExactField S>
AffineMap<S> point_reflection(const ProjPoint<S>& center) {
    return homothety(center, S(-1));
}

template <ExactField S>
ProjPoint<S> reflect_through(const ProjPoint<S>& center, const ProjPoint<S>& p) {
    return point_reflection(center)(p);
}

// ---------------------------------------------------------------------------
// Classification

struct IdentityMap {};
template <ExactField S>
struct Translation {
    ProjPoint<S> direction;
};
template <ExactField S>
struct Homothety {
    ProjPoint<S> center;
    S ratio;
};
template <ExactField S>
struct AffineReflection {
    ProjLine<S> axis;
    ProjPoint<S> direction;
};
struct GeneralMap {};

template <ExactField S>
using MapClass = std::variant<IdentityMap, Translation<S>, Homothety<S>, AffineReflection<S>, GeneralMap>;

namespace detail {

/// Coordinates of an infinite vector w in the basis u1 = (1,-1,0), u2 = (0,1,-1).
template <ExactField S>
std::array<S, 2> infinite_coords(const Vec3<S>& w) {
    return {w(0), w(0) + w(1)};
}

template <ExactField S>
std::vector<Vec3<S>> fixed_space(const Mat3<S>& m, const S& eigenvalue) {
    MatX<S> a(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = m(i, j) - (i == j ? eigenvalue : S(0));
    std::vector<Vec3<S>> out;
    for (const auto& v : nullspace(a)) out.emplace_back(v(0), v(1), v(2));
    return out;
}

}  // namespace detail

/// Exact classification of an invertible affine map.
template <ExactField S>
MapClass<S> classify(const AffineMap<S>& map) {
    if (!map.is_invertible()) throw Error(ErrorCode::DegenerateMap, "cannot classify a singular map");
    const Mat3<S>& m = map.matrix();
    const Vec3<S> u1(S(1), S(-1), S(0));
    const Vec3<S> u2(S(0), S(1), S(-1));
    const auto c1 = detail::infinite_coords<S>(m * u1);
    const auto c2 = detail::infinite_coords<S>(m * u2);
    // linear part on the line at infinity is [[c1[0], c2[0]], [c1[1], c2[1]]]
    if (c1[1].is_zero() && c2[0].is_zero() && c1[0] == c2[1]) {
        const S k = c1[0];
        if (k == S(1)) {
            if (m == Mat3<S>(Mat3<S>::Identity())) return IdentityMap{};
            const Vec3<S> g(S(1), S(1), S(1));
            return Translation<S>{ProjPoint<S>(Vec3<S>(m * g - g))};
        }
        const auto fixed = detail::fixed_space<S>(m, S(1));
        if (fixed.size() != 1) throw Error(ErrorCode::DegenerateMap, "homothety without a unique fixed point");
        return Homothety<S>{ProjPoint<S>(fixed.front()), k};
    }
    if (Mat3<S>(m * m) == Mat3<S>(Mat3<S>::Identity())) {
        const auto axis = detail::fixed_space<S>(m, S(1));
        const auto dir = detail::fixed_space<S>(m, S(-1));
        if (axis.size() == 2 && dir.size() == 1) {
            ProjLine<S> line(cross(axis[0], axis[1]));
            if (!line.is_infinity()) return AffineReflection<S>{line, ProjPoint<S>(dir.front())};
        }
    }
    return GeneralMap{};
}

template <ExactField S>
std::string class_name(const MapClass<S>& c) {
    switch (c.index()) {
        case 0: return "Identity";
        case 1: return "Translation";
        case 2: return "Homothety";
        case 3: return "AffineReflection";
        default: return "General";
    }
}

}  // namespace cevian
