#include "cevian/triangle.hpp"

#include <sstream>

namespace cevian {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Rational sq(const Rational& r) { return r * r; }

}  // namespace

CartesianTriangle::CartesianTriangle(std::array<Point2, 3> v) : v_(std::move(v)) {
    if (twice_signed_area().is_zero()) throw Error(ErrorCode::Degenerate, "triangle has zero area");
}

CartesianTriangle CartesianTriangle::reference() {
    return CartesianTriangle({Point2{0, 0}, Point2{1, 0}, Point2{0, 1}});
}

CartesianTriangle CartesianTriangle::parse(const std::string& text) {
    std::array<Point2, 3> v;
    std::stringstream ss(text);
    std::string vertex;
    int i = 0;
    while (std::getline(ss, vertex, ';')) {
        if (i == 3) throw Error(ErrorCode::ParseError, "triangle needs exactly three vertices: " + text);
        const auto comma = vertex.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "vertex needs x,y: " + vertex);
        v[static_cast<std::size_t>(i)] = {Rational::parse(trim(vertex.substr(0, comma))),
                                          Rational::parse(trim(vertex.substr(comma + 1)))};
        ++i;
    }
    if (i != 3) throw Error(ErrorCode::ParseError, "triangle needs exactly three vertices: " + text);
    return CartesianTriangle(v);
}

Rational CartesianTriangle::twice_signed_area() const {
    const auto& [a, b, c] = v_;
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
}

ProjPoint<Rational> CartesianTriangle::to_barycentric(const Point2& p) const {
    const auto& [a, b, c] = v_;
    auto area = [](const Point2& u, const Point2& v, const Point2& w) {
        return (v[0] - u[0]) * (w[1] - u[1]) - (w[0] - u[0]) * (v[1] - u[1]);
    };
    return {area(p, b, c), area(a, p, c), area(a, b, p)};
}

Point2 CartesianTriangle::to_cartesian(const ProjPoint<Rational>& p) const {
    const Vec3<Rational> n = p.normalized();
    Point2 out{0, 0};
    for (std::size_t i = 0; i < 3; ++i) {
        out[0] = out[0] + n(static_cast<int>(i)) * v_[i][0];
        out[1] = out[1] + n(static_cast<int>(i)) * v_[i][1];
    }
    return out;
}

std::array<Rational, 3> CartesianTriangle::squared_sides() const {
    auto d2 = [](const Point2& u, const Point2& v) { return sq(u[0] - v[0]) + sq(u[1] - v[1]); };
    return {d2(v_[1], v_[2]), d2(v_[2], v_[0]), d2(v_[0], v_[1])};
}

std::optional<std::array<Rational, 3>> CartesianTriangle::rational_sides() const {
    std::array<Rational, 3> out;
    const auto sq2 = squared_sides();
    for (std::size_t i = 0; i < 3; ++i)
        if (!rational_sqrt(sq2[i], out[i])) return std::nullopt;
    return out;
}

std::array<Rational, 3> CartesianTriangle::require_rational_sides() const {
    auto s = rational_sides();
    if (!s) throw Error(ErrorCode::NeedsRationalSides, "side lengths are not rational for " + str());
    return *s;
}

Point2 CartesianTriangle::orthocenter() const {
    // (X - A).(B - C) = 0 and (X - B).(C - A) = 0
    const auto& [a, b, c] = v_;
    const Rational a11 = b[0] - c[0], a12 = b[1] - c[1];
    const Rational a21 = c[0] - a[0], a22 = c[1] - a[1];
    const Rational r1 = a[0] * a11 + a[1] * a12;
    const Rational r2 = b[0] * a21 + b[1] * a22;
    const Rational det = a11 * a22 - a12 * a21;
    return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - a21 * r1) / det};
}

ProjPoint<Rational> CartesianTriangle::gergonne() const {
    const auto [a, b, c] = require_rational_sides();
    const Rational s = (a + b + c) / Rational(2);
    return {Rational(1) / (s - a), Rational(1) / (s - b), Rational(1) / (s - c)};
}

ProjPoint<Rational> CartesianTriangle::incenter() const {
    const auto [a, b, c] = require_rational_sides();
    return {a, b, c};
}

ProjPoint<Rational> CartesianTriangle::nagel() const {
    const auto [a, b, c] = require_rational_sides();
    const Rational s = (a + b + c) / Rational(2);
    return {s - a, s - b, s - c};
}

ProjPoint<Rational> CartesianTriangle::mittenpunkt() const {
    const auto [a, b, c] = require_rational_sides();
    const Rational s = (a + b + c) / Rational(2);
    return {a * (s - a), b * (s - b), c * (s - c)};
}

std::string CartesianTriangle::str() const {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) out += (i ? ";" : "") + v_[i][0].str() + "," + v_[i][1].str();
    return out;
}

}  // namespace cevian
