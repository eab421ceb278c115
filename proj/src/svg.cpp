#include "cevian/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

namespace cevian {

namespace {

using V2 = std::array<double, 2>;

struct Frame {
    double x0, y0, x1, y1;  // world bounds
    double scale;
    static constexpr double kSize = 800.0, kPad = 24.0;

    [[nodiscard]] V2 to_screen(const V2& p) const {
        return {kPad + (p[0] - x0) * scale, kSize - kPad - (p[1] - y0) * scale};
    }
    [[nodiscard]] bool contains(const V2& p) const { return p[0] >= x0 && p[0] <= x1 && p[1] >= y0 && p[1] <= y1; }
    [[nodiscard]] V2 center() const { return {(x0 + x1) / 2, (y0 + y1) / 2}; }
    [[nodiscard]] double span() const { return std::max(x1 - x0, y1 - y0); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

/// Liang-Barsky clip of p + t d, t in [t0, t1], to the frame.
std::optional<std::pair<V2, V2>> clip(const Frame& f, const V2& p, const V2& d, double t0, double t1) {
    const double lo[2] = {f.x0, f.y0}, hi[2] = {f.x1, f.y1};
    for (int k = 0; k < 2; ++k) {
        if (std::abs(d[k]) < 1e-300) {
            if (p[k] < lo[k] || p[k] > hi[k]) return std::nullopt;
            continue;
        }
        double a = (lo[k] - p[k]) / d[k], b = (hi[k] - p[k]) / d[k];
        if (a > b) std::swap(a, b);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b);
    }
    if (t0 > t1) return std::nullopt;
    return std::pair{V2{p[0] + t0 * d[0], p[1] + t0 * d[1]}, V2{p[0] + t1 * d[0], p[1] + t1 * d[1]}};
}

std::string display_name(const std::string& n) {
    static const std::map<std::string, std::string> names{
        {"P'", "P′"}, {"Q'", "Q′"}, {"H'", "H′"}, {"O'", "O′"}, {"N_P'", "𝒩_P′"}, {"C_O", "𝒞̃_O"},
        {"N_H", "𝒩_H"}, {"I", "ℐ"}, {"C_P", "𝒞_P"}, {"H_tilde", "H̃"}, {"Z_tilde", "Z̃"},
    };
    const auto it = names.find(n);
    return it == names.end() ? n : it->second;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\'') out += "&apos;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

struct ConicLayer {
    std::string name;
    Mat3<double> m;
    V2 known;  // a point of the conic (Cartesian)
    std::string color;
};

struct LineLayer {
    std::string name;
    V2 p;
    V2 d;
    std::string color;
};

struct PointLayer {
    std::string name;
    std::optional<V2> at;   // ordinary point
    std::optional<V2> dir;  // point at infinity
    std::string absent;     // reason when the member is missing
};

class Canvas {
public:
    explicit Canvas(const Frame& f) : f_(f) {}

    void conic(const ConicLayer& c, const std::array<V2, 3>& verts) {
        // world -> barycentric affine: X = A + u (B - A) + v (C - A)
        const V2 e1{verts[1][0] - verts[0][0], verts[1][1] - verts[0][1]};
        const V2 e2{verts[2][0] - verts[0][0], verts[2][1] - verts[0][1]};
        const double det = e1[0] * e2[1] - e1[1] * e2[0];
        auto bary_dir = [&](const V2& d) {
            const double u = (d[0] * e2[1] - d[1] * e2[0]) / det;
            const double v = (e1[0] * d[1] - e1[1] * d[0]) / det;
            return Eigen::Vector3d(-u - v, u, v);
        };
        const V2 rel{c.known[0] - verts[0][0], c.known[1] - verts[0][1]};
        const Eigen::Vector3d kd = bary_dir(rel);
        const Eigen::Vector3d x0(1.0 + kd(0), kd(1), kd(2));
        const double norm = c.m.cwiseAbs().maxCoeff();
        std::vector<std::vector<V2>> runs(1);
        const double limit = f_.span() * 4;
        constexpr int kSteps = 1440;
        for (int s = 0; s < kSteps; ++s) {
            const double th = std::numbers::pi * s / kSteps;
            const V2 d{std::cos(th), std::sin(th)};
            const Eigen::Vector3d w = bary_dir(d);
            const double q = w.dot(c.m * w);
            const double b = x0.dot(c.m * w);
            const double t = std::abs(q) <= 1e-12 * norm * w.squaredNorm() ? NAN : -2.0 * b / q;
            const V2 pt{c.known[0] + t * d[0], c.known[1] + t * d[1]};
            const bool ok = std::isfinite(pt[0]) && std::isfinite(pt[1]) &&
                            std::abs(pt[0] - f_.center()[0]) < limit && std::abs(pt[1] - f_.center()[1]) < limit;
            if (!ok) {
                if (!runs.back().empty()) runs.emplace_back();
                continue;
            }
            if (!runs.back().empty()) {
                const V2& prev = runs.back().back();
                if (std::hypot(pt[0] - prev[0], pt[1] - prev[1]) > f_.span() / 2) runs.emplace_back();
            }
            runs.back().push_back(pt);
        }
        // the traversal is periodic: join the last run to the first when they meet
        if (runs.size() > 1 && !runs.front().empty() && !runs.back().empty()) {
            const V2 &a = runs.back().back(), &b = runs.front().front();
            if (std::hypot(a[0] - b[0], a[1] - b[1]) <= f_.span() / 2) {
                runs.back().insert(runs.back().end(), runs.front().begin(), runs.front().end());
                runs.erase(runs.begin());
            }
        } else if (runs.size() == 1 && runs.front().size() > 2) {
            runs.front().push_back(runs.front().front());
        }
        std::string d;
        for (const auto& run : runs) {
            if (run.size() < 2) continue;
            for (std::size_t i = 0; i < run.size(); ++i) {
                const V2 s = f_.to_screen(run[i]);
                d += (i ? " L" : "M") + num(s[0]) + " " + num(s[1]);
            }
        }
        out_ << "<g class=\"conic\" data-name=\"" << xml_escape(c.name) << "\">";
        out_ << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.6\"/>";
        const V2 s = f_.to_screen(c.known);
        if (f_.contains(c.known))
            out_ << "<text x=\"" << num(s[0] + 6) << "\" y=\"" << num(s[1] + 14) << "\" fill=\"" << c.color
                 << "\" font-size=\"13\">" << xml_escape(display_name(c.name)) << "</text>";
        else
            out_ << "<title>" << xml_escape(display_name(c.name)) << "</title>";
        out_ << "</g>\n";
    }

    void line(const LineLayer& l) {
        out_ << "<g class=\"line\" data-name=\"" << xml_escape(l.name) << "\">";
        if (auto seg = clip(f_, l.p, l.d, -1e9, 1e9)) {
            const V2 a = f_.to_screen(seg->first), b = f_.to_screen(seg->second);
            out_ << "<line x1=\"" << num(a[0]) << "\" y1=\"" << num(a[1]) << "\" x2=\"" << num(b[0]) << "\" y2=\""
                 << num(b[1]) << "\" stroke=\"" << l.color << "\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\"/>";
        }
        out_ << "<title>" << xml_escape(l.name) << "</title></g>\n";
    }

    void point(const PointLayer& p) {
        out_ << "<g class=\"point\" data-name=\"" << xml_escape(p.name) << "\"";
        if (!p.absent.empty()) {
            out_ << " data-absent=\"" << xml_escape(p.absent) << "\"><title>" << xml_escape(p.name)
                 << " absent</title></g>\n";
            return;
        }
        std::optional<V2> dir = p.dir;
        if (p.at && !f_.contains(*p.at)) dir = V2{(*p.at)[0] - f_.center()[0], (*p.at)[1] - f_.center()[1]};
        if (dir) {
            // arrow at the frame edge pointing toward the point
            const double len = std::hypot((*dir)[0], (*dir)[1]);
            const V2 u{(*dir)[0] / len, (*dir)[1] / len};
            const auto seg = clip(f_, f_.center(), u, 0.0, 1e9);
            const V2 tip = f_.to_screen(seg->second);
            const V2 su{u[0], -u[1]};
            const V2 tail{tip[0] - 36 * su[0], tip[1] - 36 * su[1]};
            const V2 l{tip[0] - 10 * su[0] - 5 * su[1], tip[1] - 10 * su[1] + 5 * su[0]};
            const V2 r{tip[0] - 10 * su[0] + 5 * su[1], tip[1] - 10 * su[1] - 5 * su[0]};
            out_ << " data-at-infinity=\"" << (p.dir ? "true" : "false") << "\">";
            out_ << "<line x1=\"" << num(tail[0]) << "\" y1=\"" << num(tail[1]) << "\" x2=\"" << num(tip[0])
                 << "\" y2=\"" << num(tip[1]) << "\" stroke=\"#333\" stroke-width=\"1.4\"/>";
            out_ << "<polygon points=\"" << num(tip[0]) << "," << num(tip[1]) << " " << num(l[0]) << "," << num(l[1])
                 << " " << num(r[0]) << "," << num(r[1]) << "\" fill=\"#333\"/>";
            out_ << "<text x=\"" << num(tail[0] - 14 * su[0]) << "\" y=\"" << num(tail[1] - 14 * su[1])
                 << "\" font-size=\"13\">" << xml_escape(display_name(p.name)) << "</text></g>\n";
            return;
        }
        const V2 s = f_.to_screen(*p.at);
        out_ << "><circle cx=\"" << num(s[0]) << "\" cy=\"" << num(s[1]) << "\" r=\"3\" fill=\"#111\"/>";
        out_ << "<text x=\"" << num(s[0] + 5) << "\" y=\"" << num(s[1] - 5) << "\" font-size=\"13\">"
             << xml_escape(display_name(p.name)) << "</text></g>\n";
    }

    void triangle(const std::array<V2, 3>& v) {
        out_ << "<g class=\"triangle\" data-name=\"ABC\"><polygon points=\"";
        for (std::size_t i = 0; i < 3; ++i) {
            const V2 s = f_.to_screen(v[i]);
            out_ << (i ? " " : "") << num(s[0]) << "," << num(s[1]);
        }
        out_ << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/></g>\n";
    }

    [[nodiscard]] std::string str() const { return out_.str(); }

private:
    Frame f_;
    std::ostringstream out_;
};

template <ExactField S>
Mat3<double> float_matrix(const Conic<S>& c) {
    Mat3<double> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = to_float(c.matrix()(i, j));
    return m;
}

}  // namespace

std::vector<std::string> preset_layers(const std::string& preset) {
    if (preset == "fig1")
        return {"line:QD", "line:QE", "line:QF", "line:AH", "line:BH", "line:CH", "A", "B", "C", "P", "Q", "D", "E",
                "F", "D0", "E0", "F0", "H", "O"};
    if (preset == "fig2")
        return {"conic:N_P'", "conic:C_O", "conic:N_H", "conic:I", "A", "B", "C", "P", "P'", "Q", "H", "O", "N", "Z"};
    if (preset == "fig3")
        return {"conic:C_P", "conic:N_H", "conic:I", "line:GV", "line:QN", "A", "B", "C", "P", "P'", "Q", "Q'", "G",
                "V", "N", "Z"};
    throw Error(ErrorCode::ParseError, "unknown preset " + preset + " (expected fig1, fig2 or fig3)");
}

template <ExactField S>
std::string render_svg(const ConstructionSet<S>& cs, const CartesianTriangle& tri, const std::string& preset) {
    const auto layers = preset_layers(preset);

    std::map<std::string, std::optional<ProjPoint<S>>> pts{
        {"A", vertex_a<S>()}, {"B", vertex_b<S>()}, {"C", vertex_c<S>()}, {"G", centroid<S>()},
        {"P", cs.p},          {"P'", cs.p_prime},   {"Q", cs.q},          {"Q'", cs.q_prime},
        {"D", cs.traces[0]},  {"E", cs.traces[1]},  {"F", cs.traces[2]},  {"D0", cs.medial[0]},
        {"E0", cs.medial[1]}, {"F0", cs.medial[2]}, {"H", cs.h},          {"O", cs.o},
        {"N", cs.n},          {"Z", cs.z},          {"V", cs.v},
    };
    const std::map<std::string, std::string> absent_key{{"Z", "z"}, {"V", "v"}};

    std::array<V2, 3> verts;
    for (std::size_t i = 0; i < 3; ++i) verts[i] = {tri.vertices()[i][0].to_double(), tri.vertices()[i][1].to_double()};

    // frame: the triangle, grown to hold the named ordinary points that are not too far out
    double x0 = std::min({verts[0][0], verts[1][0], verts[2][0]}), x1 = std::max({verts[0][0], verts[1][0], verts[2][0]});
    double y0 = std::min({verts[0][1], verts[1][1], verts[2][1]}), y1 = std::max({verts[0][1], verts[1][1], verts[2][1]});
    const double size = std::max(x1 - x0, y1 - y0);
    const V2 mid{(x0 + x1) / 2, (y0 + y1) / 2};
    for (const auto& name : layers) {
        const auto it = pts.find(name);
        if (it == pts.end() || !it->second || it->second->is_infinite()) continue;
        const V2 p = tri.to_float(*it->second);
        if (std::abs(p[0] - mid[0]) > 2.5 * size || std::abs(p[1] - mid[1]) > 2.5 * size) continue;
        x0 = std::min(x0, p[0]);
        x1 = std::max(x1, p[0]);
        y0 = std::min(y0, p[1]);
        y1 = std::max(y1, p[1]);
    }
    const double margin = 0.12 * std::max(x1 - x0, y1 - y0);
    x0 -= margin, x1 += margin, y0 -= margin, y1 += margin;
    const double span = std::max(x1 - x0, y1 - y0);
    const V2 c{(x0 + x1) / 2, (y0 + y1) / 2};
    const Frame frame{c[0] - span / 2, c[1] - span / 2, c[0] + span / 2, c[1] + span / 2,
                      (Frame::kSize - 2 * Frame::kPad) / span};

    Canvas canvas(frame);
    canvas.triangle(verts);

    auto world = [&](const ProjPoint<S>& p) { return tri.to_float(p); };
    auto line_through = [&](const std::string& name, ProjPoint<S> p, ProjPoint<S> q, const std::string& color) {
        // at most one of p, q at infinity
        if (p.is_infinite()) std::swap(p, q);
        const V2 a = world(p);
        const V2 d = q.is_infinite() ? tri.direction_float(q) : V2{world(q)[0] - a[0], world(q)[1] - a[1]};
        canvas.line({name, a, d, color});
    };
    const std::map<std::string, std::string> conic_color{
        {"N_P'", "#2a7ab9"}, {"C_O", "#3a9d3a"}, {"N_H", "#a0522d"}, {"I", "#d63d8f"}, {"C_P", "#5b3a1a"}};

    for (const auto& layer : layers) {
        if (layer.rfind("conic:", 0) == 0) {
            const std::string name = layer.substr(6);
            std::optional<Conic<S>> conic;
            ProjPoint<S> known = vertex_a<S>();
            if (name == "N_P'") conic = cs.nine_point_pp, known = cs.medial[0];
            if (name == "C_O") conic = cs.circum_o;
            if (name == "N_H") conic = cs.nine_point_h, known = cs.medial[0];
            if (name == "I") conic = cs.inconic, known = cs.traces[0];
            if (name == "C_P") conic = cs.cevian_conic;
            if (!conic || conic->is_degenerate()) {
                canvas.point({name, std::nullopt, std::nullopt, conic ? "degenerate" : "absent"});
                continue;
            }
            canvas.conic({name, float_matrix(*conic), world(known), conic_color.at(name)}, verts);
        } else if (layer.rfind("line:", 0) == 0) {
            const std::string name = layer.substr(5);
            const auto vs = vertices<S>();
            if (name == "QD" || name == "QE" || name == "QF") {
                line_through(name, cs.q, cs.traces[static_cast<std::size_t>(name[1] - 'D')], "#999");
            } else if (name == "AH" || name == "BH" || name == "CH") {
                // the parallel to QD through A defining H
                const auto i = static_cast<std::size_t>(name[0] - 'A');
                line_through(name, vs[i], direction_of(join(cs.q, cs.traces[i])), "#c33");
            } else if (name == "GV") {
                if (cs.v && !(*cs.v == centroid<S>())) line_through(name, centroid<S>(), *cs.v, "#777");
                else canvas.point({name, std::nullopt, std::nullopt, "v_absent"});
            } else if (name == "QN") {
                if (!(cs.q == cs.n) && cs.q.is_ordinary()) line_through(name, cs.q, cs.n, "#777");
                else canvas.point({name, std::nullopt, std::nullopt, "q_equals_n"});
            }
        } else {
            const auto& p = pts.at(layer);
            if (!p) {
                const auto k = absent_key.find(layer);
                const auto reason = k == absent_key.end() ? "absent" : cs.absent.at(k->second);
                canvas.point({layer, std::nullopt, std::nullopt, reason});
            } else if (p->is_infinite()) {
                canvas.point({layer, std::nullopt, tri.direction_float(*p), ""});
            } else {
                canvas.point({layer, world(*p), std::nullopt, ""});
            }
        }
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\" "
        << "data-preset=\"" << preset << "\" data-p=\"" << xml_escape(cs.p.str()) << "\">\n";
    svg << "<rect width=\"800\" height=\"800\" fill=\"#fff\"/>\n";
    svg << canvas.str();
    svg << "</svg>\n";
    return svg.str();
}

template std::string render_svg(const ConstructionSet<Rational>&, const CartesianTriangle&, const std::string&);
template std::string render_svg(const ConstructionSet<QuadExt>&, const CartesianTriangle&, const std::string&);

}  // namespace cevian
