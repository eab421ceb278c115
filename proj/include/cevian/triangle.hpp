#pragma once

#include "cevian/projective.hpp"

#include <array>
#include <optional>
#include <string>

namespace cevian {

using Point2 = std::array<Rational, 2>;

/// A reference triangle placed in the Cartesian plane with exact rational
/// vertices. Used for rendering and for metric specializations (Gergonne
/// point, classical orthocenter); the kernel itself is purely affine.
class CartesianTriangle {
public:
    explicit CartesianTriangle(std::array<Point2, 3> v);

    /// A=(0,0), B=(1,0), C=(0,1).
    static CartesianTriangle reference();
    /// "x,y;x,y;x,y" with rational entries.
    static CartesianTriangle parse(const std::string& text);

    [[nodiscard]] const std::array<Point2, 3>& vertices() const { return v_; }
    [[nodiscard]] Rational twice_signed_area() const;

    [[nodiscard]] ProjPoint<Rational> to_barycentric(const Point2& p) const;
    /// Throws InfiniteInput at infinity.
    [[nodiscard]] Point2 to_cartesian(const ProjPoint<Rational>& p) const;
    /// Float image of an ordinary point over any exact field.
    template <ExactField S>
    [[nodiscard]] std::array<double, 2> to_float(const ProjPoint<S>& p) const {
        const Vec3<S> n = p.normalized();
        std::array<double, 2> out{0.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            const double w = cevian::to_float(n(i));
            out[0] += w * v_[static_cast<std::size_t>(i)][0].to_double();
            out[1] += w * v_[static_cast<std::size_t>(i)][1].to_double();
        }
        return out;
    }
    /// Float direction of a point at infinity.
    template <ExactField S>
    [[nodiscard]] std::array<double, 2> direction_float(const ProjPoint<S>& p) const {
        std::array<double, 2> out{0.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            const double w = cevian::to_float(p.coords()(i));
            out[0] += w * v_[static_cast<std::size_t>(i)][0].to_double();
            out[1] += w * v_[static_cast<std::size_t>(i)][1].to_double();
        }
        return out;
    }

    /// Squared side lengths a^2 = |BC|^2, b^2 = |CA|^2, c^2 = |AB|^2.
    [[nodiscard]] std::array<Rational, 3> squared_sides() const;
    /// Side lengths when all three are rational.
    [[nodiscard]] std::optional<std::array<Rational, 3>> rational_sides() const;

    [[nodiscard]] Point2 orthocenter() const;
    /// Gergonne point (1/(s-a) : 1/(s-b) : 1/(s-c)); needs rational sides.
    [[nodiscard]] ProjPoint<Rational> gergonne() const;
    [[nodiscard]] ProjPoint<Rational> incenter() const;
    [[nodiscard]] ProjPoint<Rational> nagel() const;
    [[nodiscard]] ProjPoint<Rational> mittenpunkt() const;

    [[nodiscard]] std::string str() const;

private:
    [[nodiscard]] std::array<Rational, 3> require_rational_sides() const;
    std::array<Point2, 3> v_;
};

}  // namespace cevian
