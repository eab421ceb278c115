#include "support.hpp"

#include "cevian/triangle.hpp"

using namespace cevian;
using cevian::testing::Gen;
using cevian::testing::kTrials;
using cevian::testing::rp;

using R = Rational;
using Q2 = QuadExt;

namespace {

// H straight from its definition: parallels through A, B, C to QD, QE, QF.
template <ExactField S>
ProjPoint<S> orthocenter_by_parallels(const ProjPoint<S>& p) {
    const auto q = complement_map<S>()(isotomic(p));
    const auto t = cevian_traces(p);
    const auto v = vertices<S>();
    std::array<ProjLine<S>, 3> l{parallel_through(v[0], join(q, t[0])), parallel_through(v[1], join(q, t[1])),
                                 parallel_through(v[2], join(q, t[2]))};
    EXPECT_TRUE(concurrent(l[0], l[1], l[2]));
    return meet(l[0], l[1]);
}

// Barycentrics of a Cartesian point by signed areas, computed here from scratch.
ProjPoint<R> bary(const std::array<Point2, 3>& v, const Point2& p) {
    auto area = [](const Point2& a, const Point2& b, const Point2& c) {
        return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
    };
    return {area(p, v[1], v[2]), area(v[0], p, v[2]), area(v[0], v[1], p)};
}

// Classical orthocenter by intersecting two altitudes in Cartesian coordinates.
Point2 cartesian_orthocenter(const std::array<Point2, 3>& v) {
    // (X - A).(C - B) = 0 and (X - B).(C - A) = 0
    const R a1 = v[2][0] - v[1][0], b1 = v[2][1] - v[1][1];
    const R c1 = a1 * v[0][0] + b1 * v[0][1];
    const R a2 = v[2][0] - v[0][0], b2 = v[2][1] - v[0][1];
    const R c2 = a2 * v[1][0] + b2 * v[1][1];
    const R det = a1 * b2 - a2 * b1;
    return {(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

R side(const Point2& a, const Point2& b) {
    const R sq = (a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]);
    R root;
    EXPECT_TRUE(rational_sqrt(sq, root));
    return root;
}

ProjPoint<Q2> special_point() {
    return {Q2(1), Q2(Rational(1), Rational(1), 2), Q2(Rational(1), Rational(-1), 2)};
}

}  // namespace

TEST(Construct, ExamplePointGivesIncenterAndVertexOrthocenter) {
    const auto cs = construct(rp(2, 3, 6));
    EXPECT_EQ(cs.q, rp(3, 4, 5));
    EXPECT_EQ(cs.p_prime, rp(3, 2, 1));
    EXPECT_EQ(cs.h, vertex_c<R>());
    EXPECT_EQ(cs.h, orthocenter_by_parallels(rp(2, 3, 6)));
    EXPECT_EQ(cs.t_p(cs.q), cs.q);
}

TEST(Construct, RightTriangleGergonneMatchesCartesianOrthocenter) {
    // BC = 3, CA = 4, AB = 5; right angle at C
    const std::array<Point2, 3> v{Point2{0, 4}, Point2{3, 0}, Point2{0, 0}};
    const R a = side(v[1], v[2]), b = side(v[2], v[0]), c = side(v[0], v[1]);
    ASSERT_EQ(a, R(3));
    ASSERT_EQ(b, R(4));
    ASSERT_EQ(c, R(5));
    const R s = (a + b + c) / R(2);
    const ProjPoint<R> ge(R(1) / (s - a), R(1) / (s - b), R(1) / (s - c));
    EXPECT_EQ(ge, rp(2, 3, 6));
    const auto cs = construct(ge);
    EXPECT_EQ(cs.q, ProjPoint<R>(a, b, c));
    EXPECT_EQ(cs.h, bary(v, cartesian_orthocenter(v)));
    EXPECT_EQ(cs.h, vertex_c<R>());
}

TEST(Construct, GergonneOf13_14_15) {
    // BC = 13, CA = 14, AB = 15
    const std::array<Point2, 3> v{Point2{R(99) / R(13), R(168) / R(13)}, Point2{0, 0}, Point2{13, 0}};
    const R a = side(v[1], v[2]), b = side(v[2], v[0]), c = side(v[0], v[1]);
    ASSERT_EQ(a, R(13));
    ASSERT_EQ(b, R(14));
    ASSERT_EQ(c, R(15));
    const R s = (a + b + c) / R(2);
    const ProjPoint<R> ge(R(1) / (s - a), R(1) / (s - b), R(1) / (s - c));
    EXPECT_EQ(ge, rp(21, 24, 28));
    const ProjPoint<R> incenter(a, b, c);
    const ProjPoint<R> nagel(s - a, s - b, s - c);
    const ProjPoint<R> mittenpunkt(a * (s - a), b * (s - b), c * (s - c));
    const auto ortho = bary(v, cartesian_orthocenter(v));

    const auto cs = construct(ge);
    ASSERT_TRUE(cs.cevian_conic.has_value());
    for (const auto& x : {incenter, nagel, mittenpunkt, ortho}) EXPECT_TRUE(cs.cevian_conic->contains(x)) << x.str();
    EXPECT_EQ(cs.q, incenter);
    EXPECT_EQ(cs.p_prime, nagel);
    EXPECT_EQ(cs.q_prime, mittenpunkt);
    EXPECT_EQ(cs.h, ortho);
}

TEST(Construct, CentroidKeepsHOButDropsMedianMembers) {
    const auto cs = construct(centroid<R>());
    EXPECT_TRUE(cs.flags.on_median);
    EXPECT_EQ(cs.h, orthocenter_by_parallels(centroid<R>()));
    for (const char* member : {"v", "z", "eta"}) {
        ASSERT_TRUE(cs.absent.count(member)) << member;
        EXPECT_EQ(cs.absent.at(member), "on_median");
    }
    EXPECT_FALSE(cs.z.has_value());
    EXPECT_FALSE(cs.eta.has_value());
}

TEST(Construct, HardDegeneraciesThrow) {
    const auto code_of = [](const ProjPoint<R>& p) {
        try {
            (void)construct(p);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    EXPECT_EQ(code_of(rp(0, 1, 2)), ErrorCode::OnSideline);
    EXPECT_EQ(code_of(rp(1, 2, -3)), ErrorCode::InfiniteInput);
    EXPECT_EQ(code_of(rp(1, 1, -1)), ErrorCode::OnAnticomplementarySideline);
    EXPECT_TRUE(degeneracy_report(rp(0, 1, 2)).on_sideline);
    EXPECT_TRUE(degeneracy_report(rp(1, 1, -1)).on_anticomplementary_sideline);
}

TEST(Construct, SteinerPointCollapses) {
    // 2*2 + 2*(-1) + (-1)*2 = 0
    const auto cs = construct(rp(2, 2, -1));
    EXPECT_TRUE(cs.flags.on_steiner_circumellipse);
    EXPECT_TRUE(cs.q.is_infinite());
    EXPECT_EQ(cs.o, cs.q);
    EXPECT_EQ(cs.h, cs.q);
}

TEST(Construct, NinePointCenterAndComplement) {
    const auto cs = construct(rp(2, 3, 6));
    EXPECT_EQ(center_of(cs.nine_point_pp), cs.k(cs.q));
    // H = C is a vertex, so N_H is K(C_O)
    EXPECT_EQ(cs.nine_point_h, transform(cs.k, cs.circum_o));
    ASSERT_TRUE(cs.z.has_value());
    EXPECT_TRUE(tangent_conics_at(cs.nine_point_h, cs.inconic, *cs.z));
}

TEST(Construct, HomothetyAboutHWithRatioHalf) {
    const auto cs = construct(rp(5, 7, 11));
    const auto c = classify(cs.k * point_reflection(cs.o));
    ASSERT_TRUE(std::holds_alternative<Homothety<R>>(c));
    EXPECT_EQ(std::get<Homothety<R>>(c).center, cs.h);
    EXPECT_EQ(std::get<Homothety<R>>(c).ratio, R(1, 2));
}

TEST(Construct, EtaSwapsPrimedPoints) {
    const auto cs = construct(rp(5, 7, 11));
    ASSERT_TRUE(cs.eta.has_value());
    const auto& eta = *cs.eta;
    EXPECT_EQ(eta(cs.p), cs.p_prime);
    EXPECT_EQ(eta(cs.q), cs.q_prime);
    EXPECT_EQ(eta * cs.k, cs.k * eta);
    const auto c = classify(eta);
    ASSERT_TRUE(std::holds_alternative<AffineReflection<R>>(c));
    EXPECT_EQ(std::get<AffineReflection<R>>(c).axis, join(centroid<R>(), *cs.v));
    EXPECT_EQ(std::get<AffineReflection<R>>(c).direction, direction_of(join(cs.p, cs.p_prime)));
}

TEST(Construct, AnticevianFamily) {
    const auto cs = construct(rp(2, 3, 6));
    const auto& qa = cs.anticevian;
    EXPECT_EQ(meet(join(qa[1], qa[2]), join(cs.q, qa[0])), vertex_a<R>());
    EXPECT_EQ(meet(join(qa[2], qa[0]), join(cs.q, qa[1])), vertex_b<R>());
    EXPECT_EQ(meet(join(qa[0], qa[1]), join(cs.q, qa[2])), vertex_c<R>());
    for (const auto& member : cs.family) {
        ASSERT_TRUE(member.has_value());
        const auto other = construct(*member);
        EXPECT_EQ(other.o, cs.o);
        EXPECT_EQ(other.h, cs.h);
    }
}

TEST(Locus, IntegerMembershipAndVertexOrthocenter) {
    for (const auto& [x, y, z] : {std::array<long, 3>{6, 3, 2}, std::array<long, 3>{-1, 3, 2}}) {
        EXPECT_EQ(x * y + x * z + y * z, x * x);
        const auto cs = construct(rp(x, y, z));
        EXPECT_EQ(cs.h, vertex_a<R>());
        EXPECT_EQ(cs.flags.h_vertex, 0);
        EXPECT_EQ(cs.o, midpoint_bc<R>());
    }
}

TEST(Locus, ConicForVertexA) {
    const auto c = locus_conic<R>(0);
    EXPECT_EQ(c, Conic<R>::from_equation(R(1), R(0), R(0), R(-1), R(-1), R(-1)));
    // 6/7 of the way from A to D0
    const Vec3<R> a = vertex_a<R>().normalized(), d0 = midpoint_bc<R>().normalized();
    EXPECT_EQ(center_of(c), ProjPoint<R>(Vec3<R>(a + (d0 - a) * R(6, 7))));
    EXPECT_EQ(center_of(c), rp(1, 3, 3));
    EXPECT_EQ(polar(vertex_a<R>(), c), ProjLine<R>(R(-2), R(1), R(1)));
    for (const auto& p : {vertex_b<R>(), vertex_c<R>(), midpoint_ca<R>(), midpoint_ab<R>()}) EXPECT_TRUE(c.contains(p));
    const auto k_inv = anticomplement_map<R>();
    EXPECT_EQ(polar(vertex_b<R>(), c), k_inv(sideline_ca<R>()));
    EXPECT_EQ(polar(vertex_c<R>(), c), k_inv(sideline_ab<R>()));
}

TEST(Locus, OtherVerticesArePermutations) {
    EXPECT_EQ(locus_conic<R>(1), Conic<R>::from_equation(R(0), R(1), R(0), R(-1), R(-1), R(-1)));
    EXPECT_EQ(locus_conic<R>(2), Conic<R>::from_equation(R(0), R(0), R(1), R(-1), R(-1), R(-1)));
}

TEST(LocusProperty, RationalPointsOnTheConicHaveHAtA) {
    // rational points of the locus: second intersections of lines through B
    const auto c = locus_conic<R>(0);
    Gen g(31);
    int tested = 0;
    for (int i = 0; i < kTrials && tested < 15; ++i) {
        const auto d = g.point(12);
        if (d == vertex_b<R>()) continue;
        const auto x = second_intersection(join(vertex_b<R>(), d), c, vertex_b<R>());
        if (degeneracy_report(x).hard()) continue;
        bool excluded = false;
        for (const auto& e : {vertex_b<R>(), vertex_c<R>(), midpoint_ca<R>(), midpoint_ab<R>()}) excluded |= x == e;
        if (excluded) continue;
        const auto cs = construct(x);
        if (cs.flags.on_steiner_circumellipse) continue;
        EXPECT_EQ(cs.h, vertex_a<R>()) << x.str();
        ++tested;
    }
    EXPECT_GE(tested, 10);
}

TEST(Special, RootTwoConfiguration) {
    const auto p = special_point();
    EXPECT_EQ(special_point_ha(), p);
    const auto cs = construct(p);
    EXPECT_EQ(cs.h, vertex_a<Q2>());
    EXPECT_EQ(cs.o, midpoint_bc<Q2>());
    EXPECT_EQ(class_name<Q2>(classify(cs.m)), "Translation");
    ASSERT_TRUE(cs.o_prime.has_value());
    EXPECT_TRUE(collinear(cs.o, *cs.o_prime, cs.p));
    EXPECT_TRUE(collinear(cs.o, cs.p, cs.p_prime));
    const Q2 r = collinear_ratio(cs.o, cs.p_prime, cs.p);
    EXPECT_EQ(r * r, Q2(9));
    const Q2 od = collinear_ratio(cs.o, cs.traces[0], vertex_c<Q2>());
    EXPECT_EQ(od * od, Q2(2));
    EXPECT_FALSE(od.is_rational());
    EXPECT_EQ(cs.t_p(cs.traces_prime[0]), midpoint(cs.o, cs.traces[0]));
    EXPECT_EQ(cs.p, ProjPoint<Q2>(Vec3<Q2>(cs.o.normalized() + cs.traces[0].normalized() + cs.q.normalized())));
    ASSERT_TRUE(cs.family[0].has_value());
    EXPECT_EQ(*cs.family[0], second_intersection(join(cs.p, centroid<Q2>()), cs.circum_o, cs.p));
    EXPECT_EQ(special_configuration_ha().p, p);
}

TEST(Sampler, SeedOneCountThree) {
    const auto pts = sample_nondegenerate<R>(1, 3);
    ASSERT_EQ(pts.size(), 3U);
    for (const auto& p : pts) EXPECT_FALSE(degeneracy_report(p).any()) << p.str();
    EXPECT_EQ(pts, sample_nondegenerate<R>(1, 3));
    EXPECT_NE(pts, sample_nondegenerate<R>(2, 3));
}

// ---------------------------------------------------------------------------
// Properties over independently generated generic points

class GenericPoints : public ::testing::Test {
protected:
    static std::vector<ProjPoint<R>> points() {
        Gen g(4242);
        std::vector<ProjPoint<R>> out;
        while (out.size() < 25) out.push_back(g.generic_point(30));
        return out;
    }
};

TEST_F(GenericPoints, OrthocenterMatchesParallelsAndFormula) {
    for (const auto& p : points()) {
        const auto cs = construct(p);
        EXPECT_EQ(cs.h, orthocenter_by_parallels(p)) << p.str();
        // O = T_P'^-1 K(Q), H = K^-1(O)
        EXPECT_EQ(cs.o, cs.t_pp.inverse()(cs.k(cs.q)));
        EXPECT_EQ(cs.h, cs.k_inv(cs.o));
        EXPECT_EQ(cs.o, complement_map<R>()(cs.h));
        EXPECT_EQ(cs.n, midpoint(cs.h, cs.o));
    }
}

TEST_F(GenericPoints, NinePointsOnTheCevianConic) {
    for (const auto& p : points()) {
        const auto cs = construct(p);
        ASSERT_TRUE(cs.cevian_conic.has_value());
        const auto& c = *cs.cevian_conic;
        for (const auto& x : {vertex_a<R>(), vertex_b<R>(), vertex_c<R>(), cs.p, cs.q, cs.p_prime, cs.q_prime, cs.h})
            EXPECT_TRUE(c.contains(x)) << p.str() << " " << x.str();
        ASSERT_TRUE(cs.h_prime.has_value());
        EXPECT_TRUE(c.contains(*cs.h_prime));
    }
}

TEST_F(GenericPoints, FeuerbachTangencyAtCevianConicCenter) {
    for (const auto& p : points()) {
        const auto cs = construct(p);
        ASSERT_TRUE(cs.z.has_value());
        EXPECT_EQ(*cs.z, center_of(*cs.cevian_conic));
        EXPECT_TRUE(tangent_conics_at(cs.nine_point_h, cs.inconic, *cs.z)) << p.str();
        EXPECT_EQ(center_of(cs.nine_point_pp), cs.k(cs.q));
        EXPECT_EQ(cs.nine_point_h, transform(cs.k, cs.circum_o));
        EXPECT_EQ(center_of(cs.inconic), cs.q);
        EXPECT_EQ(center_of(cs.circum_o), cs.o);
    }
}

TEST_F(GenericPoints, MapIdentities) {
    for (const auto& p : points()) {
        const auto cs = construct(p);
        EXPECT_EQ(cs.lambda(cs.p), cs.q_prime);
        EXPECT_EQ(cs.lambda(cs.h), cs.q);
        EXPECT_EQ(cs.phi(cs.n), cs.q);
        const auto pp = construct(cs.p_prime);
        EXPECT_EQ(cs.phi, pp.phi);
        ASSERT_TRUE(cs.eta.has_value());
        ASSERT_TRUE(cs.h_prime.has_value());
        EXPECT_EQ((*cs.eta)(cs.h), *cs.h_prime);
        const auto cls = class_name<R>(classify(cs.m));
        EXPECT_TRUE(cls == "Homothety" || cls == "Translation") << cls;
        if (cs.s) {
            EXPECT_EQ(cs.m(*cs.s), *cs.s);
        }
    }
}

TEST_F(GenericPoints, FourPointsShareOAndH) {
    const auto pts = points();
    for (std::size_t i = 0; i < 5; ++i) {
        const auto cs = construct(pts[i]);
        std::vector<Conic<R>> conics{*cs.cevian_conic};
        for (const auto& member : cs.family) {
            ASSERT_TRUE(member.has_value());
            const auto other = construct(*member);
            EXPECT_EQ(other.o, cs.o);
            EXPECT_EQ(other.h, cs.h);
            ASSERT_TRUE(other.cevian_conic.has_value());
            for (const auto& x : {vertex_a<R>(), vertex_b<R>(), vertex_c<R>(), cs.h})
                EXPECT_TRUE(other.cevian_conic->contains(x));
            conics.push_back(*other.cevian_conic);
        }
        for (std::size_t a = 0; a < conics.size(); ++a)
            for (std::size_t b = a + 1; b < conics.size(); ++b) EXPECT_NE(conics[a], conics[b]);
    }
}

TEST(GenericPointsOverRootThree, DualPathAndTangency) {
    Gen g(77);
    for (int i = 0; i < 4; ++i) {
        const auto p = g.generic_quad_point(3);
        const auto cs = construct(p);
        EXPECT_EQ(cs.h, orthocenter_by_parallels(p));
        ASSERT_TRUE(cs.z.has_value());
        EXPECT_TRUE(tangent_conics_at(cs.nine_point_h, cs.inconic, *cs.z));
    }
}
