#include "support.hpp"

#include "cevian/quadratic.hpp"

#include <cmath>
#include <numeric>

using namespace cevian;
using cevian::testing::Gen;
using cevian::testing::kTrials;

namespace {

// Independent reference fraction on machine integers; inputs are kept small
// enough that nothing overflows.
struct Frac {
    long long n, d;
    Frac(long long num, long long den) : n(num), d(den) {
        if (d < 0) n = -n, d = -d;
        const long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) n /= g, d /= g;
    }
    Frac operator+(Frac o) const { return {n * o.d + o.n * d, d * o.d}; }
    Frac operator-(Frac o) const { return {n * o.d - o.n * d, d * o.d}; }
    Frac operator*(Frac o) const { return {n * o.n, d * o.d}; }
    Frac operator/(Frac o) const { return {n * o.d, d * o.n}; }
};

bool same(const Rational& r, Frac f) { return r == Rational(mpz_class(static_cast<long>(f.n)), mpz_class(static_cast<long>(f.d))); }

Frac frac_of(const Rational& r) { return {r.numerator().get_si(), r.denominator().get_si()}; }

}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
    EXPECT_EQ(Rational::parse("6/8").str(), "3/4");
    EXPECT_EQ(Rational::parse("-10/5").str(), "-2");
    EXPECT_EQ(Rational::parse("0/7").str(), "0");
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("x"), Error);
    EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, ThreeQuartersPlusOneQuarter) { EXPECT_EQ(Rational::parse("3/4") + Rational::parse("1/4"), Rational(1)); }

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), Error); }

TEST(RationalProperty, FieldOperationsAgreeWithMachineFractions) {
    Gen g(101);
    for (int i = 0; i < 500; ++i) {
        const Rational a = g.rational(), b = g.nonzero_rational();
        const Frac fa = frac_of(a), fb = frac_of(b);
        EXPECT_TRUE(same(a + b, fa + fb)) << a.str() << " + " << b.str();
        EXPECT_TRUE(same(a - b, fa - fb)) << a.str() << " - " << b.str();
        EXPECT_TRUE(same(a * b, fa * fb)) << a.str() << " * " << b.str();
        EXPECT_TRUE(same(a / b, fa / fb)) << a.str() << " / " << b.str();
    }
}

TEST(RationalProperty, StringRoundTrip) {
    Gen g(102);
    for (int i = 0; i < 300; ++i) {
        const Rational a = g.rational(1000);
        EXPECT_EQ(Rational::parse(a.str()), a);
    }
}

TEST(RationalProperty, OrderMatchesCrossMultiplication) {
    Gen g(103);
    for (int i = 0; i < 300; ++i) {
        const Rational a = g.rational(), b = g.rational();
        const Frac fa = frac_of(a), fb = frac_of(b);
        EXPECT_EQ(a < b, fa.n * fb.d < fb.n * fa.d);
    }
}

TEST(QuadExt, ConjugateProduct) {
    const QuadExt x(Rational(1), Rational(1), 2);
    EXPECT_EQ(x * x.conjugate(), QuadExt(-1));
    EXPECT_TRUE((x * x.conjugate()).is_rational());
}

TEST(QuadExt, InverseOfOnePlusRootTwo) {
    const QuadExt x(Rational(1), Rational(1), 2);
    const QuadExt inv = QuadExt(1) / x;
    EXPECT_EQ(inv, QuadExt(Rational(-1), Rational(1), 2));
    EXPECT_EQ(inv * x, QuadExt(1));
}

TEST(QuadExt, MixingRadicandsThrows) {
    const QuadExt r2 = QuadExt::sqrt_of(2), r3 = QuadExt::sqrt_of(3);
    EXPECT_THROW(r2 + r3, Error);
    EXPECT_THROW(r2 * r3, Error);
    try {
        (void)(r2 - r3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IncompatibleExtensions);
    }
}

TEST(QuadExt, RationalsMixWithAnyRadicand) {
    EXPECT_EQ(QuadExt::sqrt_of(2) + QuadExt(3), QuadExt(Rational(3), Rational(1), 2));
    EXPECT_EQ(QuadExt::sqrt_of(5) * QuadExt::sqrt_of(5), QuadExt(5));
    EXPECT_EQ((QuadExt::sqrt_of(5) * QuadExt::sqrt_of(5)).field(), 1);
}

TEST(QuadExt, RejectsNonSquareFreeRadicand) { EXPECT_THROW(QuadExt(Rational(0), Rational(1), 8), Error); }

TEST(QuadExt, ToFloat) {
    EXPECT_NEAR(to_float(QuadExt(Rational(1, 3))), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(to_float(QuadExt(Rational(1), Rational(1), 2)), 2.41421356237, 1e-10);
    EXPECT_EQ(to_float(QuadExt(0)), 0.0);
}

TEST(QuadExt, ParseRoundTrip) {
    for (const char* text : {"0", "-7/3", "1+sqrt(2)", "1-sqrt(2)", "-1/2+3/4*sqrt(5)"}) {
        const QuadExt x = QuadExt::parse(text);
        EXPECT_EQ(QuadExt::parse(x.str()), x) << text;
    }
    EXPECT_EQ(QuadExt::parse("1+sqrt(2)"), QuadExt(Rational(1), Rational(1), 2));
    EXPECT_THROW(QuadExt::parse("1+sqrt(4)"), Error);
}

TEST(QuadExt, SignIsExact) {
    // 99/70 is just above sqrt 2, 140/99 just below
    EXPECT_EQ((QuadExt(Rational(99, 70)) - QuadExt::sqrt_of(2)).sign(), 1);
    EXPECT_EQ((QuadExt(Rational(140, 99)) - QuadExt::sqrt_of(2)).sign(), -1);
    EXPECT_LT(QuadExt(Rational(1), Rational(-1), 2), QuadExt(0));
}

TEST(QuadExtProperty, FieldAxioms) {
    for (long d : {2L, 3L, 5L, 7L}) {
        Gen g(200 + static_cast<std::uint64_t>(d));
        for (int i = 0; i < 100; ++i) {
            const QuadExt a = g.quad(d), b = g.quad(d), c = g.nonzero_quad(d);
            EXPECT_EQ((a + b) * c, a * c + b * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * c / c, a);
            EXPECT_EQ(c * (QuadExt(1) / c), QuadExt(1));
            EXPECT_EQ(a - a, QuadExt(0));
        }
    }
}

TEST(QuadExtProperty, NormIsMultiplicative) {
    Gen g(210);
    for (int i = 0; i < 200; ++i) {
        const QuadExt a = g.quad(3), b = g.quad(3);
        EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    }
}

TEST(QuadExtProperty, FloatImageMatchesRealValue) {
    Gen g(211);
    for (int i = 0; i < 200; ++i) {
        const long d = g.integer(0, 1) ? 2 : 7;
        const QuadExt a = g.quad(d);
        const double expect =
            a.rational_part().to_double() + a.radical_part().to_double() * std::sqrt(static_cast<double>(a.field()));
        EXPECT_NEAR(a.to_double(), expect, 1e-9 * (1 + std::abs(expect)));
    }
}

TEST(QuadExtProperty, SignAgreesWithFloatAwayFromZero) {
    Gen g(212);
    for (int i = 0; i < 300; ++i) {
        const QuadExt a = g.quad(2);
        if (std::abs(a.to_double()) < 1e-6) continue;
        EXPECT_EQ(a.sign(), a.to_double() > 0 ? 1 : -1) << a.str();
    }
}

TEST(Quadratic, Factorable) {
    const auto r = solve_quadratic(Rational(1), Rational(-5), Rational(6));
    ASSERT_TRUE(std::holds_alternative<TwoRoots<Rational>>(r));
    EXPECT_EQ(std::get<TwoRoots<Rational>>(r).r1, Rational(3));
    EXPECT_EQ(std::get<TwoRoots<Rational>>(r).r2, Rational(2));
}

TEST(Quadratic, LiftsToRootTwo) {
    const auto r = solve_quadratic(Rational(1), Rational(-2), Rational(-1));
    ASSERT_TRUE(std::holds_alternative<NeedsExtension>(r));
    EXPECT_EQ(std::get<NeedsExtension>(r).d, 2);

    const auto lifted = solve_quadratic(QuadExt(1), QuadExt(-2), QuadExt(-1), 2);
    ASSERT_TRUE(std::holds_alternative<TwoRoots<QuadExt>>(lifted));
    const auto [r1, r2] = std::get<TwoRoots<QuadExt>>(lifted);
    EXPECT_EQ(r1, QuadExt(Rational(1), Rational(1), 2));
    EXPECT_EQ(r2, QuadExt(Rational(1), Rational(-1), 2));
    for (const QuadExt& x : {r1, r2}) EXPECT_EQ(x * x - QuadExt(2) * x - QuadExt(1), QuadExt(0));
}

TEST(Quadratic, LinearWhenLeadingVanishes) {
    const auto r = solve_quadratic(Rational(0), Rational(2), Rational(-4));
    ASSERT_TRUE(std::holds_alternative<LinearRoot<Rational>>(r));
    EXPECT_EQ(std::get<LinearRoot<Rational>>(r).r, Rational(2));
}

TEST(Quadratic, DoubleNoneAndDegenerate) {
    EXPECT_TRUE(std::holds_alternative<DoubleRoot<Rational>>(solve_quadratic(Rational(1), Rational(-2), Rational(1))));
    EXPECT_TRUE(std::holds_alternative<NoRealRoots>(solve_quadratic(Rational(1), Rational(0), Rational(1))));
    EXPECT_THROW(solve_quadratic(Rational(0), Rational(0), Rational(1)), Error);
    EXPECT_THROW(solve_quadratic(Rational(0), Rational(0), Rational(0)), Error);
}

TEST(QuadraticProperty, RecoversIntegerRoots) {
    Gen g(300);
    for (int i = 0; i < 300; ++i) {
        const long a = g.nonzero(-9, 9), r = g.integer(-20, 20), s = g.integer(-20, 20);
        // a (x - r)(x - s)
        const auto out = solve_quadratic(Rational(a), Rational(-a * (r + s)), Rational(a * r * s));
        if (r == s) {
            ASSERT_TRUE(std::holds_alternative<DoubleRoot<Rational>>(out));
            EXPECT_EQ(std::get<DoubleRoot<Rational>>(out).r, Rational(r));
        } else {
            ASSERT_TRUE(std::holds_alternative<TwoRoots<Rational>>(out));
            EXPECT_EQ(std::get<TwoRoots<Rational>>(out).r1, Rational(std::max(r, s)));
            EXPECT_EQ(std::get<TwoRoots<Rational>>(out).r2, Rational(std::min(r, s)));
        }
    }
}

TEST(QuadraticProperty, LiftedRootsSatisfyTheEquation) {
    Gen g(301);
    int lifted = 0;
    for (int i = 0; i < 300; ++i) {
        const Rational a = g.nonzero_rational(9), b = g.rational(9), c = g.rational(9);
        const auto out = solve_quadratic(a, b, c);
        if (!std::holds_alternative<NeedsExtension>(out)) continue;
        const long d = std::get<NeedsExtension>(out).d;
        const auto roots = solve_quadratic(QuadExt(a), QuadExt(b), QuadExt(c), d);
        ASSERT_TRUE(std::holds_alternative<TwoRoots<QuadExt>>(roots));
        for (const QuadExt& x : {std::get<TwoRoots<QuadExt>>(roots).r1, std::get<TwoRoots<QuadExt>>(roots).r2}) {
            EXPECT_EQ(QuadExt(a) * x * x + QuadExt(b) * x + QuadExt(c), QuadExt(0));
            EXPECT_EQ(x.field(), d);
        }
        ++lifted;
    }
    EXPECT_GT(lifted, 50);
}

TEST(ExactSqrt, SquaresAndNonSquares) {
    EXPECT_EQ(*exact_sqrt(Rational(9, 4)), Rational(3, 2));
    EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
    EXPECT_EQ(*exact_sqrt(QuadExt(2), 2), QuadExt::sqrt_of(2));
    // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
    const auto r = exact_sqrt(QuadExt(Rational(3), Rational(2), 2), 2);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, QuadExt(Rational(3), Rational(2), 2));
}
