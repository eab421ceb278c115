#pragma once

#include "cevian/error.hpp"
#include "cevian/scalar.hpp"

#include <variant>

namespace cevian {

template <ExactField S>
struct TwoRoots {
    S r1, r2;
};
template <ExactField S>
struct DoubleRoot {
    S r;
};
template <ExactField S>
struct LinearRoot {
    S r;
};
/// The discriminant is not a square in the current field; lifting to
/// Q(sqrt(d)) makes it one. `d` is square-free and > 1.
struct NeedsExtension {
    long d;
};
/// Negative discriminant: no real roots in any real extension.
struct NoRealRoots {};

template <ExactField S>
using QuadraticRoots = std::variant<TwoRoots<S>, DoubleRoot<S>, NeedsExtension, LinearRoot<S>, NoRealRoots>;

/// Roots of a x^2 + b x + c = 0.
///
/// The working field is Q(sqrt(field)) joined with the field of the
/// coefficients; roots are exact in it when the discriminant is a square
/// there, otherwise NeedsExtension names the square-free radicand to lift
/// to. TwoRoots are ordered r1 > r2. Throws Degenerate when a = b = 0 != c
/// and AllZero when every coefficient vanishes.
template <ExactField S>
QuadraticRoots<S> solve_quadratic(const S& a, const S& b, const S& c, long field = 1) {
    if (a.is_zero()) {
        if (b.is_zero()) {
            if (c.is_zero()) throw Error(ErrorCode::AllZero, "all quadratic coefficients are zero");
            throw Error(ErrorCode::Degenerate, "nonzero constant has no roots");
        }
        return LinearRoot<S>{-c / b};
    }
    for (const S* coeff : {&a, &b, &c}) {
        const long f = field_of(*coeff);
        if (f == 1) continue;
        if (field != 1 && field != f)
            throw Error(ErrorCode::IncompatibleExtensions, "coefficients span two extensions");
        field = f;
    }
    const S disc = b * b - S(4) * a * c;
    const S two_a = S(2) * a;
    if (disc.is_zero()) return DoubleRoot<S>{-b / two_a};
    if (disc.sign() < 0) return NoRealRoots{};
    if (auto root = exact_sqrt(disc, field)) {
        S r1 = (-b + *root) / two_a;
        S r2 = (-b - *root) / two_a;
        if (r1 < r2) std::swap(r1, r2);
        return TwoRoots<S>{r1, r2};
    }
    if (field != 1)
        throw Error(ErrorCode::IncompatibleExtensions,
                    "discriminant " + disc.str() + " is not a square in Q(sqrt " + std::to_string(field) + ")");
    std::vector<Rational> parts;
    append_rational_parts(disc, parts);
    Rational cofactor;
    const mpz_class k = squarefree_decompose(parts[0], cofactor);
    if (!k.fits_slong_p())
        throw Error(ErrorCode::IncompatibleExtensions, "discriminant square-free part too large");
    return NeedsExtension{k.get_si()};
}

}  // namespace cevian
