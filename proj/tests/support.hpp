#pragma once

#include "cevian/constructions.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cevian::testing {

/// Hand-rolled generators over a seeded mt19937_64; every property test
/// names its seed so a failure reproduces.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    long nonzero(long lo, long hi) {
        for (;;)
            if (const long n = integer(lo, hi); n != 0) return n;
    }

    Rational rational(long bound = 30) { return {mpz_class(integer(-bound, bound)), mpz_class(integer(1, bound))}; }

    Rational nonzero_rational(long bound = 30) {
        return {mpz_class(nonzero(-bound, bound)), mpz_class(integer(1, bound))};
    }

    QuadExt quad(long d, long bound = 20) { return {rational(bound), rational(bound), d}; }

    QuadExt nonzero_quad(long d, long bound = 20) {
        for (;;)
            if (QuadExt x = quad(d, bound); !x.is_zero()) return x;
    }

    ProjPoint<Rational> point(long bound = 40) {
        for (;;) {
            const long x = integer(-bound, bound), y = integer(-bound, bound), z = integer(-bound, bound);
            if (x != 0 || y != 0 || z != 0) return {Rational(x), Rational(y), Rational(z)};
        }
    }

    ProjPoint<Rational> ordinary_point(long bound = 40) {
        for (;;)
            if (auto p = point(bound); p.is_ordinary()) return p;
    }

    /// A point with every degeneracy flag clear (rejection sampling).
    ProjPoint<Rational> generic_point(long bound = 40) {
        for (;;)
            if (auto p = point(bound); !degeneracy_report(p).any()) return p;
    }

    ProjPoint<QuadExt> generic_quad_point(long d, long bound = 12) {
        for (;;) {
            ProjPoint<QuadExt> p(QuadExt(Rational(integer(-bound, bound)), Rational(integer(-bound, bound)), d),
                                 QuadExt(Rational(integer(-bound, bound)), Rational(integer(-bound, bound)), d),
                                 QuadExt(Rational(integer(-bound, bound)), Rational(integer(-bound, bound)), d));
            if (!degeneracy_report(p).any()) return p;
        }
    }

    /// Infinite point (u : v : -u-v) with small integer entries.
    ProjPoint<Rational> direction(long bound = 20) {
        for (;;) {
            const long u = integer(-bound, bound), v = integer(-bound, bound);
            if (u != 0 || v != 0) return {Rational(u), Rational(v), Rational(-u - v)};
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

template <ExactField S>
ProjPoint<S> pt(long x, long y, long z) {
    return {S(x), S(y), S(z)};
}

inline ProjPoint<Rational> rp(long x, long y, long z) { return pt<Rational>(x, y, z); }

constexpr int kTrials = 60;

}  // namespace cevian::testing
