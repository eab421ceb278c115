#pragma once

#include "cevian/affine_map.hpp"
#include "cevian/quadratic.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cevian {

/// Conic x^T C x = 0 for a symmetric 3x3 matrix C, kept in canonical scale.
/// Degenerate conics (det C = 0) are representable; most operations reject
/// them.
template <ExactField S>
class Conic {
public:
    explicit Conic(const Mat3<S>& m) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!(m(i, j) == m(j, i))) throw Error(ErrorCode::DegenerateConic, "conic matrix is not symmetric");
        Eigen::Matrix<S, 6, 1> packed;
        packed << m(0, 0), m(1, 1), m(2, 2), m(1, 2), m(2, 0), m(0, 1);
        packed = detail::canonical<S, 6>(packed, false);
        m_ << packed(0), packed(5), packed(4), packed(5), packed(1), packed(3), packed(4), packed(3), packed(2);
    }

    /// From the coefficients of a x^2 + b y^2 + c z^2 + d yz + e zx + f xy.
    static Conic from_equation(const S& a, const S& b, const S& c, const S& d, const S& e, const S& f) {
        const S two(2);
        Mat3<S> m;
        m << a * two, f, e, f, b * two, d, e, d, c * two;
        return Conic(m);
    }

    /// Circumconic u yz + v zx + w xy = 0.
    static Conic circumconic(const S& u, const S& v, const S& w) { return from_equation(S(0), S(0), S(0), u, v, w); }

    [[nodiscard]] const Mat3<S>& matrix() const { return m_; }
    [[nodiscard]] S determinant() const { return det3(m_); }
    [[nodiscard]] bool is_degenerate() const { return determinant().is_zero(); }

    /// Value of the quadratic form (up to the stored scale).
    [[nodiscard]] S value(const Vec3<S>& x) const { return dot(x, Vec3<S>(m_ * x)); }
    [[nodiscard]] S bilinear(const Vec3<S>& x, const Vec3<S>& y) const { return dot(x, Vec3<S>(m_ * y)); }
    [[nodiscard]] bool contains(const ProjPoint<S>& p) const { return value(p.coords()).is_zero(); }

    [[nodiscard]] std::string str() const {
        std::string s = "[";
        for (int i = 0; i < 3; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < 3; ++j) s += (j ? " " : "") + m_(i, j).str();
        }
        return s + "]";
    }

    void require_nondegenerate() const {
        if (is_degenerate()) throw Error(ErrorCode::DegenerateConic, "degenerate conic " + str());
    }

    friend bool operator==(const Conic&, const Conic&) = default;

private:
    Mat3<S> m_;
};

// ---------------------------------------------------------------------------
// Pole / polar / center

template <ExactField S>
ProjLine<S> polar(const ProjPoint<S>& p, const Conic<S>& c) {
    c.require_nondegenerate();
    return ProjLine<S>(Vec3<S>(c.matrix() * p.coords()));
}

template <ExactField S>
ProjPoint<S> pole(const ProjLine<S>& l, const Conic<S>& c) {
    c.require_nondegenerate();
    return ProjPoint<S>(Vec3<S>(adjugate(c.matrix()) * l.coeffs()));
}

/// Pole of the line at infinity; infinite for a parabola.
template <ExactField S>
ProjPoint<S> center_of(const Conic<S>& c) {
    return pole(line_at_infinity<S>(), c);
}

/// Image of a conic under an affine map (congruence by the inverse).
template <ExactField S>
Conic<S> transform(const AffineMap<S>& map, const Conic<S>& c) {
    map.require_invertible();
    const Mat3<S> inv = adjugate(map.matrix());
    return Conic<S>(Mat3<S>(inv.transpose() * c.matrix() * inv));
}

/// Number of points on the line at infinity: 0 ellipse, 1 parabola, 2 hyperbola.
template <ExactField S>
int infinite_point_count(const Conic<S>& c) {
    // restrict to (t, 1 - t... ) via basis u1, u2 of the infinite line
    const Vec3<S> u1(S(1), S(-1), S(0));
    const Vec3<S> u2(S(0), S(1), S(-1));
    const S a = c.value(u1);
    const S b = c.bilinear(u1, u2);
    const S d = c.value(u2);
    const S disc = b * b - a * d;
    if (a.is_zero() && b.is_zero() && d.is_zero()) return -1;  // contains l_inf
    return disc.is_zero() ? 1 : (disc.sign() > 0 ? 2 : 0);
}

// ---------------------------------------------------------------------------
// Constructions

namespace detail {

template <ExactField S>
Eigen::Matrix<S, 1, 6> incidence_row(const ProjPoint<S>& p) {
    const auto& v = p.coords();
    Eigen::Matrix<S, 1, 6> row;
    row << v(0) * v(0), v(1) * v(1), v(2) * v(2), v(1) * v(2), v(2) * v(0), v(0) * v(1);
    return row;
}

template <ExactField S>
Conic<S> conic_from_nullvector(const Eigen::Matrix<S, Eigen::Dynamic, 1>& n) {
    return Conic<S>::from_equation(n(0), n(1), n(2), n(3), n(4), n(5));
}

template <ExactField S>
std::optional<Conic<S>> unique_conic_through(std::span<const ProjPoint<S>> points) {
    MatX<S> sys(static_cast<Eigen::Index>(points.size()), 6);
    for (std::size_t i = 0; i < points.size(); ++i) sys.row(static_cast<Eigen::Index>(i)) = incidence_row(points[i]);
    auto basis = nullspace(sys);
    if (basis.size() != 1) return std::nullopt;
    return conic_from_nullvector<S>(basis.front());
}

}  // namespace detail

/// The unique conic through five points. Three collinear points give a
/// degenerate (line-pair) conic; four collinear or repeated points leave a
/// pencil and throw RankDeficient.
template <ExactField S>
Conic<S> conic_through_five(const std::array<ProjPoint<S>, 5>& pts) {
    auto c = detail::unique_conic_through<S>(std::span<const ProjPoint<S>>(pts));
    if (!c) throw Error(ErrorCode::RankDeficient, "five points do not determine a unique conic");
    return *c;
}

/// Circumconic of ABC with the given center. When the center is the midpoint
/// of a side the circumconics with that center form a pencil; `through`
/// picks the member containing that extra point.
template <ExactField S>
Conic<S> circumconic_with_center(const ProjPoint<S>& center,
                                 const std::optional<ProjPoint<S>>& through = std::nullopt) {
    if (center.is_infinite()) throw Error(ErrorCode::NoSuchConic, "center at infinity");
    for (const auto& v : vertices<S>())
        if (center == v) throw Error(ErrorCode::NoSuchConic, "center at a vertex");
    const S& u = center.x();
    const S& v = center.y();
    const S& w = center.z();
    // matrix [[0,c,b],[c,0,a],[b,a,0]] times (u,v,w) must be proportional to (1,1,1)
    MatX<S> sys(through ? 3 : 2, 3);
    sys << -w, w, v - u,
           w - v, -u, u;
    if (through) {
        const auto& t = through->coords();
        sys.row(2) << t(1) * t(2), t(2) * t(0), t(0) * t(1);
    }
    const auto basis = nullspace(sys);
    if (basis.size() != 1)
        throw Error(ErrorCode::NoSuchConic, "circumconics centered at " + center.str() + " are not unique");
    const auto& n = basis.front();
    Conic<S> c = Conic<S>::circumconic(n(0), n(1), n(2));
    if (c.is_degenerate() || !(center_of(c) == center))
        throw Error(ErrorCode::NoSuchConic, "no nondegenerate circumconic centered at " + center.str());
    return c;
}

/// Conic touching BC, CA, AB at D, E, F. The contacts must be the cevian
/// traces of one point.
template <ExactField S>
Conic<S> inconic_with_contacts(const ProjPoint<S>& d, const ProjPoint<S>& e, const ProjPoint<S>& f) {
    if (!d.x().is_zero() || !e.y().is_zero() || !f.z().is_zero())
        throw Error(ErrorCode::NotPerspective, "contact points are not on their sidelines");
    for (const auto& p : {d, e, f})
        for (const auto& v : vertices<S>())
            if (p == v) throw Error(ErrorCode::NotPerspective, "contact point at a vertex");
    // polar(D) = BC etc.: the two off-side components of C*contact vanish.
    MatX<S> sys(6, 6);
    const std::array<std::pair<const ProjPoint<S>*, int>, 3> contacts{{{&d, 0}, {&e, 1}, {&f, 2}}};
    int row = 0;
    for (const auto& [p, side] : contacts) {
        const auto& x = p->coords();
        for (int k = 0; k < 3; ++k) {
            if (k == side) continue;
            // row k of the symmetric matrix with unknowns (a,b,c,d,e,f) as in from_equation
            // (2a f e; f 2b d; e d 2c) * x
            std::array<S, 6> coeff{S(0), S(0), S(0), S(0), S(0), S(0)};
            if (k == 0) { coeff[0] = S(2) * x(0); coeff[5] = x(1); coeff[4] = x(2); }
            if (k == 1) { coeff[5] = x(0); coeff[1] = S(2) * x(1); coeff[3] = x(2); }
            if (k == 2) { coeff[4] = x(0); coeff[3] = x(1); coeff[2] = S(2) * x(2); }
            for (int j = 0; j < 6; ++j) sys(row, j) = coeff[static_cast<std::size_t>(j)];
            ++row;
        }
    }
    const auto basis = nullspace(sys);
    if (basis.size() != 1) throw Error(ErrorCode::NotPerspective, "contacts admit no unique inconic");
    Conic<S> c = detail::conic_from_nullvector<S>(basis.front());
    if (c.is_degenerate()) throw Error(ErrorCode::NotPerspective, "contacts are not cevian traces of one point");
    return c;
}

/// Nine-point conic (with respect to the line at infinity) of a quadrangle:
/// through the three diagonal points and the six side midpoints. With one
/// vertex at infinity the three midpoints on its sides collapse to that
/// vertex.
template <ExactField S>
Conic<S> nine_point_conic(const std::array<ProjPoint<S>, 4>& q) {
    int infinite = 0;
    for (const auto& p : q) infinite += p.is_infinite() ? 1 : 0;
    if (infinite > 1) throw Error(ErrorCode::DegenerateQuadrangle, "more than one vertex at infinity");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (collinear(q[i], q[j], q[k]))
                    throw Error(ErrorCode::DegenerateQuadrangle, "three collinear vertices");
    std::vector<ProjPoint<S>> pts;
    const auto add = [&](const ProjPoint<S>& p) {
        for (const auto& o : pts)
            if (o == p) return;
        pts.push_back(p);
    };
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (q[i].is_infinite()) add(q[i]);
            else if (q[j].is_infinite()) add(q[j]);
            else add(midpoint(q[i], q[j]));
        }
    }
    add(meet(join(q[0], q[1]), join(q[2], q[3])));
    add(meet(join(q[0], q[2]), join(q[1], q[3])));
    add(meet(join(q[0], q[3]), join(q[1], q[2])));
    // first five that pin down a unique conic, then every remaining incidence
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    for (std::size_t e = d + 1; e < n; ++e) {
                        const std::array<ProjPoint<S>, 5> five{pts[a], pts[b], pts[c], pts[d], pts[e]};
                        auto conic = detail::unique_conic_through<S>(std::span<const ProjPoint<S>>(five));
                        if (!conic) continue;
                        bool all = true;
                        for (const auto& p : pts) all = all && conic->contains(p);
                        if (all) return *conic;
                    }
    throw Error(ErrorCode::DegenerateQuadrangle, "the nine points do not lie on one unique conic");
}

// ---------------------------------------------------------------------------
// Intersections and tangency

/// The other intersection of l with C, given one known common point.
/// Returns `known` itself when l is tangent there.
template <ExactField S>
ProjPoint<S> second_intersection(const ProjLine<S>& l, const Conic<S>& c, const ProjPoint<S>& known) {
    c.require_nondegenerate();
    if (!l.contains(known) || !c.contains(known))
        throw Error(ErrorCode::NotIncident, "known point is not on both line and conic");
    // another point W on l: intersect with a coordinate line not through `known`
    std::optional<ProjPoint<S>> w;
    for (const auto& side : {sideline_bc<S>(), sideline_ca<S>(), sideline_ab<S>(), line_at_infinity<S>()}) {
        if (side == l || side.contains(known)) continue;
        w = meet(l, side);
        break;
    }
    const Vec3<S>& k = known.coords();
    const Vec3<S>& x = w->coords();
    // Q(k + t x) = 2 t B(k,x) + t^2 Q(x); other root t = -2B/Q  =>  point Q(x) k - 2 B(k,x) x
    const S qx = c.value(x);
    const S b = c.bilinear(k, x);
    const Vec3<S> r = k * qx - x * (S(2) * b);
    if (is_zero_vector(r)) throw Error(ErrorCode::NotIncident, "line lies on the conic");
    return ProjPoint<S>(r);
}

template <ExactField S>
struct TwoPoints {
    ProjPoint<S> first, second;
};
template <ExactField S>
struct TangentPoint {
    ProjPoint<S> point;
};
struct NoIntersection {};

template <ExactField S>
using LineConicMeet = std::variant<TwoPoints<S>, TangentPoint<S>, NoIntersection, NeedsExtension>;

/// Intersections of a line with a nondegenerate conic, exact in the working
/// field Q(sqrt(field)) joined with the field of the data.
template <ExactField S>
LineConicMeet<S> line_conic_intersections(const ProjLine<S>& l, const Conic<S>& c, long field = 1) {
    c.require_nondegenerate();
    std::vector<ProjPoint<S>> on_line;
    for (const auto& side : {sideline_bc<S>(), sideline_ca<S>(), sideline_ab<S>(), line_at_infinity<S>()}) {
        if (side == l) continue;
        const ProjPoint<S> p = meet(l, side);
        bool fresh = true;
        for (const auto& o : on_line) fresh = fresh && !(o == p);
        if (fresh) on_line.push_back(p);
        if (on_line.size() == 2) break;
    }
    const Vec3<S>& u = on_line[0].coords();
    const Vec3<S>& w = on_line[1].coords();
    // Q(u + t w) = Q(u) + 2 t B(u,w) + t^2 Q(w)
    const S qa = c.value(w);
    const S qb = S(2) * c.bilinear(u, w);
    const S qc = c.value(u);
    const auto at = [&](const S& t) { return ProjPoint<S>(Vec3<S>(u + w * t)); };
    if (qa.is_zero()) {
        // w itself is on the conic (the root t = infinity)
        if (qb.is_zero()) return TangentPoint<S>{on_line[1]};
        return TwoPoints<S>{on_line[1], at(-qc / qb)};
    }
    const auto roots = solve_quadratic(qa, qb, qc, field);
    if (const auto* two = std::get_if<TwoRoots<S>>(&roots)) return TwoPoints<S>{at(two->r1), at(two->r2)};
    if (const auto* one = std::get_if<DoubleRoot<S>>(&roots)) return TangentPoint<S>{at(one->r)};
    if (const auto* ext = std::get_if<NeedsExtension>(&roots)) return *ext;
    return NoIntersection{};
}

/// Z is on both conics and they share the tangent line there.
template <ExactField S>
bool tangent_conics_at(const Conic<S>& c1, const Conic<S>& c2, const ProjPoint<S>& z) {
    if (!c1.contains(z) || !c2.contains(z)) return false;
    return polar(z, c1) == polar(z, c2);
}

/// Conjugate point of an infinite point with respect to a conic, on the
/// line at infinity.
template <ExactField S>
ProjPoint<S> conjugate_involution(const Conic<S>& c, const ProjPoint<S>& x) {
    c.require_nondegenerate();
    if (!x.is_infinite()) throw Error(ErrorCode::InfiniteInput, "involution input must be at infinity");
    if (center_of(c).is_infinite()) throw Error(ErrorCode::DegenerateConic, "conic has no ordinary center");
    if (c.contains(x)) throw Error(ErrorCode::SelfConjugate, "asymptotic direction " + x.str());
    return meet(polar(x, c), line_at_infinity<S>());
}

}  // namespace cevian
