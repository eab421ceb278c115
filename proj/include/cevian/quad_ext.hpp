#pragma once

#include "cevian/rational.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cevian {

/// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)).
///
/// `d` is a square-free integer > 1 whenever b != 0; values with b == 0 are
/// stored with d == 1, so plain rationals mix freely with any extension.
/// Combining two values whose irrational parts live in different fields
/// throws IncompatibleExtensions (no towers).
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
    QuadExt(int n) : a_(n) {}   // NOLINT(google-explicit-constructor)
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b, long d);

    /// sqrt(d) itself; d must be square-free and > 1.
    static QuadExt sqrt_of(long d) { return {Rational(0), Rational(1), d}; }

    /// Parses "p/q", "p/q+r/s*sqrt(d)", "sqrt(d)", "1-sqrt(d)" and the like.
    static QuadExt parse(std::string_view text);

    [[nodiscard]] const Rational& rational_part() const { return a_; }
    [[nodiscard]] const Rational& radical_part() const { return b_; }
    [[nodiscard]] long field() const { return d_; }
    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }

    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// Exact sign of the real number a + b*sqrt(d).
    [[nodiscard]] int sign() const;
    [[nodiscard]] QuadExt conjugate() const { return {a_, -b_, d_}; }
    /// a^2 - d b^2, the field norm.
    [[nodiscard]] Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    [[nodiscard]] std::string str() const;
    /// Nearest double. Lossy; meant for rendering only.
    [[nodiscard]] double to_double() const;

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend QuadExt operator-(const QuadExt& x) { return {-x.a_, -x.b_, x.d_}; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x);

private:
    long join_field(const QuadExt& o) const;
    void canonicalize();

    Rational a_;
    Rational b_;
    long d_ = 1;
};

}  // namespace cevian
