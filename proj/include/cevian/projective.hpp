#pragma once

#include "cevian/error.hpp"
#include "cevian/linalg.hpp"
#include "cevian/scalar.hpp"

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace cevian {

namespace detail {

/// Canonical representative of a nonzero homogeneous vector: first nonzero
/// entry made positive, rational parts reduced to coprime integers. With
/// `prefer_positive_sum`, the whole vector is negated when its coordinate
/// sum is negative (ordinary points then read as positive weights).
template <ExactField S, int N>
Eigen::Matrix<S, N, 1> canonical(Eigen::Matrix<S, N, 1> v, bool prefer_positive_sum) {
    int lead = -1;
    for (int i = 0; i < N; ++i) {
        if (!v(i).is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead < 0) throw Error(ErrorCode::AllZero, "zero homogeneous vector");
    if (!(v(lead) == S(1))) {
        const S inv = S(1) / v(lead);
        for (int i = 0; i < N; ++i) v(i) = v(i) * inv;
    }
    std::vector<Rational> parts;
    for (int i = 0; i < N; ++i) append_rational_parts(v(i), parts);
    mpz_class den_lcm = 1;
    for (const auto& p : parts) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), p.raw().get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& p : parts) {
        const mpz_class n = p.raw().get_num() * (den_lcm / p.raw().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    const Rational k(den_lcm, num_gcd);
    if (!(k == Rational(1)))
        for (int i = 0; i < N; ++i) v(i) = scale(v(i), k);
    if (prefer_positive_sum) {
        S sum = S(0);
        for (int i = 0; i < N; ++i) sum = sum + v(i);
        if (sum.sign() < 0)
            for (int i = 0; i < N; ++i) v(i) = -v(i);
    }
    return v;
}

template <ExactField S>
std::string triple_str(const Vec3<S>& v) {
    return "(" + v(0).str() + ":" + v(1).str() + ":" + v(2).str() + ")";
}

}  // namespace detail

/// A point of the projective plane in homogeneous barycentric coordinates
/// (x:y:z) with respect to the reference triangle A=(1:0:0), B=(0:1:0),
/// C=(0:0:1). Stored in canonical form, so == is projective equality.
template <ExactField S>
class ProjPoint {
public:
    ProjPoint(const S& x, const S& y, const S& z) : ProjPoint(Vec3<S>(x, y, z)) {}
    explicit ProjPoint(const Vec3<S>& coords) : v_(detail::canonical<S, 3>(coords, true)) {}

    [[nodiscard]] const Vec3<S>& coords() const { return v_; }
    [[nodiscard]] const S& x() const { return v_(0); }
    [[nodiscard]] const S& y() const { return v_(1); }
    [[nodiscard]] const S& z() const { return v_(2); }
    [[nodiscard]] S weight() const { return v_(0) + v_(1) + v_(2); }
    [[nodiscard]] bool is_infinite() const { return weight().is_zero(); }
    [[nodiscard]] bool is_ordinary() const { return !is_infinite(); }

    /// Coordinates scaled to sum 1. Throws InfiniteInput at infinity.
    [[nodiscard]] Vec3<S> normalized() const {
        const S w = weight();
        if (w.is_zero()) throw Error(ErrorCode::InfiniteInput, "point at infinity " + str());
        return Vec3<S>(v_(0) / w, v_(1) / w, v_(2) / w);
    }

    [[nodiscard]] std::string str() const { return detail::triple_str(v_); }

    /// Explicit cross-product test; agrees with == by construction.
    [[nodiscard]] bool same_as(const ProjPoint& o) const { return proportional(v_, o.v_); }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    Vec3<S> v_;
};

/// A line l x + m y + n z = 0, stored canonically like ProjPoint.
template <ExactField S>
class ProjLine {
public:
    ProjLine(const S& l, const S& m, const S& n) : ProjLine(Vec3<S>(l, m, n)) {}
    explicit ProjLine(const Vec3<S>& coeffs) : v_(detail::canonical<S, 3>(coeffs, false)) {}

    [[nodiscard]] const Vec3<S>& coeffs() const { return v_; }
    [[nodiscard]] bool contains(const ProjPoint<S>& p) const { return dot(v_, p.coords()).is_zero(); }
    [[nodiscard]] bool is_infinity() const { return v_(0) == v_(1) && v_(1) == v_(2); }
    [[nodiscard]] std::string str() const { return "[" + v_(0).str() + ":" + v_(1).str() + ":" + v_(2).str() + "]"; }

    friend bool operator==(const ProjLine&, const ProjLine&) = default;

private:
    Vec3<S> v_;
};

// ---------------------------------------------------------------------------
// Reference objects

template <ExactField S> ProjPoint<S> vertex_a() { return {S(1), S(0), S(0)}; }
template <ExactField S> ProjPoint<S> vertex_b() { return {S(0), S(1), S(0)}; }
template <ExactField S> ProjPoint<S> vertex_c() { return {S(0), S(0), S(1)}; }
template <ExactField S> ProjPoint<S> centroid() { return {S(1), S(1), S(1)}; }
/// Midpoints D0, E0, F0 of BC, CA, AB.
template <ExactField S> ProjPoint<S> midpoint_bc() { return {S(0), S(1), S(1)}; }
template <ExactField S> ProjPoint<S> midpoint_ca() { return {S(1), S(0), S(1)}; }
template <ExactField S> ProjPoint<S> midpoint_ab() { return {S(1), S(1), S(0)}; }
template <ExactField S> ProjLine<S> line_at_infinity() { return {S(1), S(1), S(1)}; }
template <ExactField S> ProjLine<S> sideline_bc() { return {S(1), S(0), S(0)}; }
template <ExactField S> ProjLine<S> sideline_ca() { return {S(0), S(1), S(0)}; }
template <ExactField S> ProjLine<S> sideline_ab() { return {S(0), S(0), S(1)}; }

template <ExactField S>
std::array<ProjPoint<S>, 3> vertices() {
    return {vertex_a<S>(), vertex_b<S>(), vertex_c<S>()};
}
template <ExactField S>
std::array<ProjPoint<S>, 3> medial_points() {
    return {midpoint_bc<S>(), midpoint_ca<S>(), midpoint_ab<S>()};
}

// ---------------------------------------------------------------------------
// Incidence

template <ExactField S>
ProjLine<S> join(const ProjPoint<S>& p, const ProjPoint<S>& q) {
    const Vec3<S> l = cross(p.coords(), q.coords());
    if (is_zero_vector(l)) throw Error(ErrorCode::CoincidentArguments, "join of coincident points " + p.str());
    return ProjLine<S>(l);
}

template <ExactField S>
ProjPoint<S> meet(const ProjLine<S>& l, const ProjLine<S>& m) {
    const Vec3<S> p = cross(l.coeffs(), m.coeffs());
    if (is_zero_vector(p)) throw Error(ErrorCode::CoincidentArguments, "meet of coincident lines " + l.str());
    return ProjPoint<S>(p);
}

template <ExactField S>
bool collinear(const ProjPoint<S>& p, const ProjPoint<S>& q, const ProjPoint<S>& r) {
    Mat3<S> m;
    m << p.coords(), q.coords(), r.coords();
    return det3(m).is_zero();
}

template <ExactField S>
bool concurrent(const ProjLine<S>& l, const ProjLine<S>& m, const ProjLine<S>& n) {
    Mat3<S> a;
    a << l.coeffs(), m.coeffs(), n.coeffs();
    return det3(a).is_zero();
}

/// Point at infinity of a line.
template <ExactField S>
ProjPoint<S> direction_of(const ProjLine<S>& l) {
    return meet(l, line_at_infinity<S>());
}

/// Line through p with the direction of l (p may lie on l).
template <ExactField S>
ProjLine<S> parallel_through(const ProjPoint<S>& p, const ProjLine<S>& l) {
    return join(p, direction_of(l));
}

/// Two ordinary lines are parallel iff they meet at infinity. A line is
/// parallel to itself.
template <ExactField S>
bool parallel(const ProjLine<S>& l, const ProjLine<S>& m) {
    if (l.is_infinity() || m.is_infinity())
        throw Error(ErrorCode::InfiniteInput, "parallelism with the line at infinity");
    if (l == m) return true;
    return meet(l, m).is_infinite();
}

template <ExactField S>
ProjPoint<S> midpoint(const ProjPoint<S>& p, const ProjPoint<S>& q) {
    return ProjPoint<S>(p.normalized() + q.normalized());
}

/// Signed ratio r with Y - X = r (Z - X) for collinear ordinary X, Y, Z, X != Z.
template <ExactField S>
S collinear_ratio(const ProjPoint<S>& x, const ProjPoint<S>& y, const ProjPoint<S>& z) {
    if (x == z) throw Error(ErrorCode::CoincidentArguments, "collinear_ratio with X = Z");
    const Vec3<S> xn = x.normalized();
    const Vec3<S> u = y.normalized() - xn;
    const Vec3<S> w = z.normalized() - xn;
    if (!is_zero_vector(cross(u, w))) throw Error(ErrorCode::NotCollinear, "points are not collinear");
    for (int i = 0; i < 3; ++i)
        if (!w(i).is_zero()) return u(i) / w(i);
    throw Error(ErrorCode::CoincidentArguments, "collinear_ratio with X = Z");
}

/// Isotomic conjugate (x:y:z) -> (yz:zx:xy).
template <ExactField S>
ProjPoint<S> isotomic(const ProjPoint<S>& p) {
    if (p.x().is_zero() || p.y().is_zero() || p.z().is_zero())
        throw Error(ErrorCode::OnSideline, "isotomic conjugate of a point on a sideline " + p.str());
    return {p.y() * p.z(), p.z() * p.x(), p.x() * p.y()};
}

/// Cevian traces AP.BC, BP.CA, CP.AB of a point off the sidelines.
template <ExactField S>
std::array<ProjPoint<S>, 3> cevian_traces(const ProjPoint<S>& p) {
    if (p.x().is_zero() || p.y().is_zero() || p.z().is_zero())
        throw Error(ErrorCode::OnSideline, "cevian traces of a point on a sideline " + p.str());
    return {ProjPoint<S>(S(0), p.y(), p.z()), ProjPoint<S>(p.x(), S(0), p.z()),
            ProjPoint<S>(p.x(), p.y(), S(0))};
}

}  // namespace cevian
