#pragma once

#include "cevian/conic.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cevian {

/// Exact degeneracy flags of a point P with respect to the reference
/// triangle. Hard degeneracies (sideline, anticomplementary sideline) make
/// construct() throw; the others switch off the members that need them.
struct DegeneracyReport {
    bool at_infinity = false;
    bool on_sideline = false;
    bool on_anticomplementary_sideline = false;
    bool on_median = false;
    bool on_steiner_circumellipse = false;
    /// 0, 1, 2 when the generalized orthocenter is A, B, C.
    std::optional<int> h_vertex;
    /// V = PQ.P'Q' missing, infinite or equal to G, or P on GV.
    bool eta_undefined = false;

    [[nodiscard]] bool hard() const { return at_infinity || on_sideline || on_anticomplementary_sideline; }
    [[nodiscard]] bool any() const {
        return hard() || on_median || on_steiner_circumellipse || h_vertex.has_value() || eta_undefined;
    }
};

/// Every named point, map and conic derived from one point P.
///
/// Members that depend on a hypothesis P violates are left empty and the
/// reason is recorded in `absent` under the member's name.
template <ExactField S>
struct ConstructionSet {
    ProjPoint<S> p, p_prime, q, q_prime;
    std::array<ProjPoint<S>, 3> traces;        // D, E, F
    std::array<ProjPoint<S>, 3> traces_prime;  // D3, E3, F3
    std::array<ProjPoint<S>, 3> medial;        // D0, E0, F0

    AffineMap<S> k, k_inv;
    AffineMap<S> t_p, t_pp;  // T_P, T_P'
    AffineMap<S> lambda;     // T_P' T_P^-1
    AffineMap<S> s1, s2;     // T_P T_P', T_P' T_P
    AffineMap<S> m;          // T_P K^-1 T_P'
    AffineMap<S> phi;        // M K^-1

    ProjPoint<S> o, h, n;
    std::optional<ProjPoint<S>> o_direct, h_direct;
    bool o_direct_concurrent = false, h_direct_concurrent = false;
    std::optional<ProjPoint<S>> o_prime, h_prime;
    ProjPoint<S> h_tilde;  // T_P^-1(H)

    std::optional<ProjPoint<S>> v, z, s, z_tilde;
    std::optional<AffineMap<S>> eta;

    std::array<ProjPoint<S>, 3> anticevian;  // Q_a, Q_b, Q_c
    std::array<std::optional<ProjPoint<S>>, 3> family;  // P_a, P_b, P_c

    std::optional<Conic<S>> cevian_conic;   // C_P = ABCPQ
    Conic<S> circum_o;                      // circumconic with center O
    Conic<S> nine_point_pp;                 // N_P'
    Conic<S> nine_point_h;                  // N_H (K(circum_o) when H is a vertex)
    std::optional<Conic<S>> nine_point_hp;  // N_H'
    Conic<S> inconic;                       // contacts D, E, F
    Conic<S> inconic_prime;                 // contacts D3, E3, F3

    DegeneracyReport flags;
    std::map<std::string, std::string> absent;
};

/// Flags of P computed from the defining polynomial conditions.
template <ExactField S>
DegeneracyReport degeneracy_report(const ProjPoint<S>& p);

template <ExactField S>
ConstructionSet<S> construct(const ProjPoint<S>& p);

namespace detail {

/// The common point of three lines, or nothing when they are not concurrent.
template <ExactField S>
std::optional<ProjPoint<S>> common_point(const std::array<ProjLine<S>, 3>& lines) {
    if (!concurrent(lines[0], lines[1], lines[2])) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(lines[i] == lines[j])) return meet(lines[i], lines[j]);
    return std::nullopt;
}

/// Point X with X V_i parallel to dir_i for the three vertices `through`.
template <ExactField S>
std::pair<std::optional<ProjPoint<S>>, bool> parallels_point(const std::array<ProjPoint<S>, 3>& through,
                                                             const std::array<ProjPoint<S>, 3>& directions) {
    std::array<ProjLine<S>, 3> lines{join(through[0], directions[0]), join(through[1], directions[1]),
                                     join(through[2], directions[2])};
    auto pt = common_point(lines);
    if (pt) return {pt, true};
    // not concurrent: still report the meet of the first two
    if (!(lines[0] == lines[1])) return {meet(lines[0], lines[1]), false};
    return {std::nullopt, false};
}

template <ExactField S>
AffineMap<S> cevian_map(const ProjPoint<S>& p) {
    const auto t = cevian_traces(p);
    return affine_map_from_pairs<S>({{{vertex_a<S>(), t[0]}, {vertex_b<S>(), t[1]}, {vertex_c<S>(), t[2]}}});
}

/// Generalized circumcenter T_X'^-1 K(Q_X) for a point X = P or P'.
template <ExactField S>
ProjPoint<S> circumcenter_formula(const AffineMap<S>& t_of_isotomic, const ProjPoint<S>& isotomcomplement) {
    return t_of_isotomic.inverse()(complement_map<S>()(isotomcomplement));
}

}  // namespace detail

template <ExactField S>
DegeneracyReport degeneracy_report(const ProjPoint<S>& p) {
    DegeneracyReport r;
    const S &x = p.x(), &y = p.y(), &z = p.z();
    r.at_infinity = p.is_infinite();
    r.on_sideline = x.is_zero() || y.is_zero() || z.is_zero();
    r.on_anticomplementary_sideline = (y + z).is_zero() || (z + x).is_zero() || (x + y).is_zero();
    r.on_median = x == y || y == z || z == x;
    r.on_steiner_circumellipse = (x * y + y * z + z * x).is_zero();
    if (r.hard()) return r;
    if (!r.on_steiner_circumellipse) {
        const ProjPoint<S> pp = isotomic(p);
        const ProjPoint<S> o = detail::circumcenter_formula(detail::cevian_map(pp), complement_map<S>()(pp));
        const auto medial = medial_points<S>();
        for (int i = 0; i < 3; ++i)
            if (o == medial[static_cast<std::size_t>(i)]) r.h_vertex = i;
    }
    if (r.on_median || r.on_steiner_circumellipse) {
        r.eta_undefined = true;
        return r;
    }
    const ProjPoint<S> pp = isotomic(p);
    const auto k = complement_map<S>();
    const ProjPoint<S> q = k(pp), qp = k(p);
    const ProjLine<S> l1 = join(p, q), l2 = join(pp, qp);
    if (l1 == l2) {
        r.eta_undefined = true;
        return r;
    }
    const ProjPoint<S> v = meet(l1, l2);
    r.eta_undefined = v.is_infinite() || v == centroid<S>() || collinear(centroid<S>(), v, p);
    return r;
}

template <ExactField S>
ConstructionSet<S> construct(const ProjPoint<S>& p) {
    const DegeneracyReport flags = degeneracy_report(p);
    if (flags.at_infinity) throw Error(ErrorCode::InfiniteInput, "P must be ordinary: " + p.str());
    if (flags.on_sideline) throw Error(ErrorCode::OnSideline, "P lies on a sideline: " + p.str());
    if (flags.on_anticomplementary_sideline)
        throw Error(ErrorCode::OnAnticomplementarySideline, "P lies on a side of the anticomplementary triangle: " + p.str());

    const auto a = vertices<S>();
    const ProjPoint<S> g = centroid<S>();
    const AffineMap<S> k = complement_map<S>();
    const AffineMap<S> k_inv = k.inverse();

    const ProjPoint<S> pp = isotomic(p);
    const ProjPoint<S> q = k(pp);
    const ProjPoint<S> qp = k(p);
    const AffineMap<S> t_p = detail::cevian_map(p);
    const AffineMap<S> t_pp = detail::cevian_map(pp);
    const AffineMap<S> t_p_inv = t_p.inverse();
    const AffineMap<S> t_pp_inv = t_pp.inverse();
    const AffineMap<S> m = t_p * k_inv * t_pp;

    ProjPoint<S> o = flags.on_steiner_circumellipse ? q : t_pp_inv(k(q));
    ProjPoint<S> h = flags.on_steiner_circumellipse ? q : k_inv(o);

    const AffineMap<S> lambda = t_pp * t_p_inv;
    const Conic<S> nine_pp = nine_point_conic<S>({a[0], a[1], a[2], pp});
    const Conic<S> circum_o = transform(t_pp_inv, nine_pp);
    const bool h_at_vertex = flags.h_vertex.has_value();
    const Conic<S> nine_h = h_at_vertex ? transform(k, circum_o) : nine_point_conic<S>({a[0], a[1], a[2], h});
    const auto traces = cevian_traces(p);
    const auto traces_prime = cevian_traces(pp);

    ConstructionSet<S> cs{
        .p = p, .p_prime = pp, .q = q, .q_prime = qp,
        .traces = traces, .traces_prime = traces_prime, .medial = medial_points<S>(),
        .k = k, .k_inv = k_inv, .t_p = t_p, .t_pp = t_pp, .lambda = lambda,
        .s1 = t_p * t_pp, .s2 = t_pp * t_p, .m = m, .phi = m * k_inv,
        .o = o, .h = h, .n = k(o),
        .o_direct = std::nullopt, .h_direct = std::nullopt,
        .o_prime = std::nullopt, .h_prime = std::nullopt,
        .h_tilde = t_p_inv(h),
        .v = std::nullopt, .z = std::nullopt, .s = std::nullopt, .z_tilde = std::nullopt, .eta = std::nullopt,
        .anticevian = {t_pp_inv(a[0]), t_pp_inv(a[1]), t_pp_inv(a[2])},
        .family = {},
        .cevian_conic = std::nullopt,
        .circum_o = circum_o, .nine_point_pp = nine_pp, .nine_point_h = nine_h, .nine_point_hp = std::nullopt,
        .inconic = inconic_with_contacts(traces[0], traces[1], traces[2]),
        .inconic_prime = inconic_with_contacts(traces_prime[0], traces_prime[1], traces_prime[2]),
        .flags = flags, .absent = {},
    };

    if (flags.on_steiner_circumellipse) {
        for (const char* name : {"o_direct", "h_direct", "o_prime", "h_prime", "nine_point_hp"})
            cs.absent[name] = "on_steiner_circumellipse";
    } else {
        // the defining parallels: HA || QD, OD0 || QE ... from the traces of P
        std::array<ProjPoint<S>, 3> dirs{direction_of(join(q, traces[0])), direction_of(join(q, traces[1])),
                                         direction_of(join(q, traces[2]))};
        std::tie(cs.h_direct, cs.h_direct_concurrent) = detail::parallels_point<S>(a, dirs);
        std::tie(cs.o_direct, cs.o_direct_concurrent) = detail::parallels_point<S>(cs.medial, dirs);
        cs.o_prime = t_p_inv(k(qp));
        cs.h_prime = k_inv(*cs.o_prime);
        const bool hp_vertex = [&] {
            for (const auto& v : a)
                if (*cs.h_prime == v) return true;
            return false;
        }();
        if (hp_vertex || cs.h_prime->is_infinite()) {
            cs.absent["nine_point_hp"] = "h_prime_at_vertex";
        } else {
            cs.nine_point_hp = nine_point_conic<S>({a[0], a[1], a[2], *cs.h_prime});
        }
    }

    for (int i = 0; i < 3; ++i) {
        const ProjPoint<S> anti = k_inv(cs.anticevian[static_cast<std::size_t>(i)]);
        if (anti.x().is_zero() || anti.y().is_zero() || anti.z().is_zero()) {
            cs.absent[std::string("family_") + "abc"[i]] = "anticevian_vertex_on_anticomplementary_side";
        } else {
            cs.family[static_cast<std::size_t>(i)] = isotomic(anti);
        }
    }

    if (p == q) {
        cs.absent["cevian_conic"] = "p_equals_q";
    } else {
        cs.cevian_conic = conic_through_five<S>({a[0], a[1], a[2], p, q});
    }

    if (flags.on_median) {
        for (const char* name : {"v", "eta", "z", "s", "z_tilde"}) cs.absent[name] = "on_median";
        return cs;
    }
    if (cs.cevian_conic && !cs.cevian_conic->is_degenerate()) {
        cs.z = center_of(*cs.cevian_conic);
        if (o.is_infinite()) cs.absent["z_tilde"] = "o_at_infinity";
        else cs.z_tilde = point_reflection(o)(k_inv(*cs.z));
    } else {
        cs.absent["z"] = "degenerate_cevian_conic";
    }
    const ProjLine<S> pq = join(p, q), ppqp = join(pp, qp);
    if (!(pq == ppqp)) cs.v = meet(pq, ppqp);
    if (!cs.v) cs.absent["v"] = "pq_equals_ppqp";
    if (flags.eta_undefined || !cs.v) {
        cs.absent["eta"] = "v_degenerate";
    } else {
        cs.eta = affine_map_from_pairs<S>({{{g, g}, {*cs.v, *cs.v}, {p, pp}}});
    }
    if (cs.v && !(*cs.v == g) && !(o == q)) {
        const ProjLine<S> oq = join(o, q), gv = join(g, *cs.v);
        if (oq == gv) cs.absent["s"] = "oq_equals_gv";
        else cs.s = meet(oq, gv);
    } else {
        cs.absent["s"] = "v_degenerate";
    }
    return cs;
}

// ---------------------------------------------------------------------------
// Locus of P with H at a vertex

/// The conic through the other two vertices and the midpoints of the two
/// sides at `vertex` (0, 1, 2 for A, B, C), tangent at the other vertices
/// to the anticomplements of the opposite sides. Its points other than those
/// four are exactly the P whose generalized orthocenter is `vertex`.
template <ExactField S>
Conic<S> locus_conic(int vertex) {
    const auto a = vertices<S>();
    const auto i = static_cast<std::size_t>(vertex);
    const auto j = (i + 1) % 3, kk = (i + 2) % 3;
    const AffineMap<S> k_inv = anticomplement_map<S>();
    const std::array<ProjPoint<S>, 4> pts{a[j], a[kk], midpoint(a[i], a[j]), midpoint(a[i], a[kk])};
    const ProjLine<S> tangent_j = k_inv(join(a[i], a[kk]));
    MatX<S> sys(7, 6);
    for (int r = 0; r < 4; ++r) sys.row(r) = detail::incidence_row(pts[static_cast<std::size_t>(r)]);
    // tangent at a[j]: C a[j] proportional to tangent_j, i.e. cross(C a[j], t) = 0,
    // where C a[j] is column j of the matrix built from the unknowns.
    const Vec3<S>& t = tangent_j.coeffs();
    // column j of (2a f e; f 2b d; e d 2c) in terms of unknown indices
    const std::array<std::array<int, 3>, 3> col_index{{{0, 5, 4}, {5, 1, 3}, {4, 3, 2}}};
    const std::array<std::array<S, 3>, 3> col_factor{
        {{S(2), S(1), S(1)}, {S(1), S(2), S(1)}, {S(1), S(1), S(2)}}};
    for (int r = 0; r < 3; ++r) {
        // component r of cross(col, t) = col[r+1] t[r+2] - col[r+2] t[r+1]
        const int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
        for (int c = 0; c < 6; ++c) sys(4 + r, c) = S(0);
        const auto& ci = col_index[j];
        const auto& cf = col_factor[j];
        sys(4 + r, ci[static_cast<std::size_t>(r1)]) =
            sys(4 + r, ci[static_cast<std::size_t>(r1)]) + cf[static_cast<std::size_t>(r1)] * t(r2);
        sys(4 + r, ci[static_cast<std::size_t>(r2)]) =
            sys(4 + r, ci[static_cast<std::size_t>(r2)]) - cf[static_cast<std::size_t>(r2)] * t(r1);
    }
    const auto basis = nullspace(sys);
    if (basis.size() != 1) throw Error(ErrorCode::RankDeficient, "locus conic conditions are not independent");
    Conic<S> c = detail::conic_from_nullvector<S>(basis.front());
    const ProjLine<S> tangent_k = k_inv(join(a[i], a[j]));
    if (!(polar(a[kk], c) == tangent_k))
        throw Error(ErrorCode::NotIncident, "locus conic is not tangent at the third vertex");
    return c;
}

// ---------------------------------------------------------------------------
// Randomized sampling

/// `count` points with small integer coordinates (|n| <= 50) that raise no
/// degeneracy flag; deterministic in `seed`.
template <ExactField S>
std::vector<ProjPoint<S>> sample_nondegenerate(std::uint64_t seed, int count) {
    if (count < 1) throw Error(ErrorCode::Degenerate, "count must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-50, 50);
    std::vector<ProjPoint<S>> out;
    int rejected = 0;
    while (static_cast<int>(out.size()) < count) {
        const S x(coord(rng)), y(coord(rng)), z(coord(rng));
        if ((x + y + z).is_zero() || (x.is_zero() && y.is_zero() && z.is_zero())) {
            if (++rejected > 10000) throw Error(ErrorCode::ExhaustedRejections, "sampler retry budget exhausted");
            continue;
        }
        ProjPoint<S> p(x, y, z);
        if (degeneracy_report(p).any()) {
            if (++rejected > 10000) throw Error(ErrorCode::ExhaustedRejections, "sampler retry budget exhausted");
            continue;
        }
        out.push_back(p);
    }
    return out;
}

/// The configuration with H = A, O = D0 and D3 the midpoint of AP', over
/// Q(sqrt 2). P = (x : y : z) must satisfy xy + xz + yz = x^2 (H = A) and
/// y + z = 2x (D3 halfway from A to P'), so with x = 1 the cevian traces
/// solve t^2 - 2t - 1 = 0.
ConstructionSet<QuadExt> special_configuration_ha();

/// The point P of special_configuration_ha() (larger root for y).
ProjPoint<QuadExt> special_point_ha();

}  // namespace cevian
