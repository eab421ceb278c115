#pragma once

#include "cevian/quad_ext.hpp"
#include "cevian/rational.hpp"

#include <Eigen/Core>

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cevian {

/// An exact ordered field usable as the scalar of every geometric type.
template <class S>
concept ExactField = std::regular<S> && requires(const S& x, const S& y, std::string_view text) {
    { x + y } -> std::convertible_to<S>;
    { x - y } -> std::convertible_to<S>;
    { x * y } -> std::convertible_to<S>;
    { x / y } -> std::convertible_to<S>;
    { -x } -> std::convertible_to<S>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x.sign() } -> std::convertible_to<int>;
    { x.str() } -> std::convertible_to<std::string>;
    { S::parse(text) } -> std::convertible_to<S>;
    S(1);
};

// Free helpers so that generic code reads the same for both scalars.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

/// The field discriminant of a scalar (1 for rationals).
inline long field_of(const Rational&) { return 1; }
inline long field_of(const QuadExt& x) { return x.field(); }

/// Multiplies a scalar by a rational.
inline Rational scale(const Rational& x, const Rational& k) { return x * k; }
inline QuadExt scale(const QuadExt& x, const Rational& k) { return x * QuadExt(k); }

/// Rational coordinates of x over the basis {1, sqrt d}.
inline void append_rational_parts(const Rational& x, std::vector<Rational>& out) { out.push_back(x); }
inline void append_rational_parts(const QuadExt& x, std::vector<Rational>& out) {
    out.push_back(x.rational_part());
    out.push_back(x.radical_part());
}

/// Lossy conversion, for rendering only.
inline double to_float(const Rational& x) { return x.to_double(); }
inline double to_float(const QuadExt& x) { return x.to_double(); }

/// Exact square root inside Q(sqrt(field)) joined with the field of x, if
/// one exists. For Rational the field hint is ignored.
std::optional<Rational> exact_sqrt(const Rational& x, long field = 1);
std::optional<QuadExt> exact_sqrt(const QuadExt& x, long field = 1);

// Eigen occasionally routes through these for real scalars.
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational abs2(const Rational& x) { return x * x; }
inline const QuadExt& conj(const QuadExt& x) { return x; }
inline const QuadExt& real(const QuadExt& x) { return x; }
inline QuadExt imag(const QuadExt&) { return QuadExt(0); }
inline QuadExt abs2(const QuadExt& x) { return x * x; }

}  // namespace cevian

namespace Eigen {

template <>
struct NumTraits<cevian::Rational> : GenericNumTraits<cevian::Rational> {
    using Real = cevian::Rational;
    using NonInteger = cevian::Rational;
    using Nested = cevian::Rational;
    using Literal = cevian::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<cevian::QuadExt> : GenericNumTraits<cevian::QuadExt> {
    using Real = cevian::QuadExt;
    using NonInteger = cevian::QuadExt;
    using Nested = cevian::QuadExt;
    using Literal = cevian::QuadExt;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace cevian {

template <class S>
using Vec3 = Eigen::Matrix<S, 3, 1>;
template <class S>
using Mat3 = Eigen::Matrix<S, 3, 3>;
template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace cevian
