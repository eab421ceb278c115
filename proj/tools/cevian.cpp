// cevian: construct, verify, locus and svg front end.

#include "cevian/report.hpp"
#include "cevian/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace {

using namespace cevian;

constexpr int kExitOk = 0, kExitCheckFailed = 1, kExitInput = 2;

struct RunConfig {
    std::string p;
    std::string triangle;
    long field = 0;
    std::uint64_t seed = 42;
    int count = 25;
    std::vector<std::string> checks;
    std::vector<std::string> negate;
    std::string vertex = "A";
    std::string preset = "fig1";
    std::string out;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
    f << text;
}

CartesianTriangle triangle_of(const RunConfig& cfg) {
    return cfg.triangle.empty() ? CartesianTriangle::reference() : CartesianTriangle::parse(cfg.triangle);
}

AnyPoint point_of(const RunConfig& cfg, const CartesianTriangle& tri) {
    if (cfg.p.empty()) throw Error(ErrorCode::ParseError, "--p is required");
    AnyPoint p = cfg.p == "gergonne" ? AnyPoint(tri.gergonne()) : parse_any_point(cfg.p);
    const long d = point_field(p);
    if (cfg.field != 0 && d != 1 && d != cfg.field)
        throw Error(ErrorCode::IncompatibleExtensions,
                    "point needs sqrt(" + std::to_string(d) + ") but --field is " + std::to_string(cfg.field));
    return p;
}

/// Name of the first hard degeneracy flag raised by p, if any.
template <ExactField S>
std::string hard_flag(const ProjPoint<S>& p) {
    const auto r = degeneracy_report(p);
    if (r.at_infinity) return "at_infinity";
    if (r.on_sideline) return "on_sideline";
    if (r.on_anticomplementary_sideline) return "on_anticomplementary_sideline";
    return {};
}

int cmd_construct(const RunConfig& cfg) {
    const auto tri = triangle_of(cfg);
    return std::visit(
        [&](const auto& p) {
            if (const auto flag = hard_flag(p); !flag.empty()) {
                std::cerr << "cevian: degenerate input P=" << p.str() << ": " << flag << "\n";
                return kExitInput;
            }
            emit(construction_report(construct(p), tri).dump(2) + "\n", cfg.out);
            return kExitOk;
        },
        point_of(cfg, tri));
}

int cmd_verify(const RunConfig& cfg) {
    Registry registry = default_registry();
    for (const auto& id : cfg.negate) {
        auto it = std::find_if(registry.begin(), registry.end(), [&](const CheckDef& d) { return d.id == id; });
        if (it == registry.end()) throw Error(ErrorCode::UnknownCheck, "unknown check id " + id);
        *it = negated(*it);
    }
    const auto report = run_suite(cfg.seed, cfg.count, cfg.checks, registry);
    emit(suite_report_json(report).dump(2) + "\n", cfg.out);
    std::cerr << "cevian verify: " << report.results.size() << " results, " << report.failures() << " failures\n";
    return report.failures() == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_locus(const RunConfig& cfg) {
    if (cfg.vertex.size() != 1 || cfg.vertex[0] < 'A' || cfg.vertex[0] > 'C')
        throw Error(ErrorCode::ParseError, "--vertex must be A, B or C");
    emit(locus_report(cfg.vertex[0] - 'A').dump(2) + "\n", cfg.out);
    return kExitOk;
}

int cmd_svg(const RunConfig& cfg) {
    const auto tri = triangle_of(cfg);
    preset_layers(cfg.preset);  // validate before constructing
    return std::visit(
        [&](const auto& p) {
            if (const auto flag = hard_flag(p); !flag.empty()) {
                std::cerr << "cevian: degenerate input P=" << p.str() << ": " << flag << "\n";
                return kExitInput;
            }
            emit(render_svg(construct(p), tri, cfg.preset), cfg.out);
            return kExitOk;
        },
        point_of(cfg, tri));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cevian geometry: generalized orthocenter constructions and theorem checks", "cevian"};
    app.set_config("--config", "", "key = value configuration file; flags override it");
    // values such as triangles contain commas; repeat a key to give several values
    app.get_config_formatter_base()->arrayDelimiter('\n');
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--p", cfg.p, "barycentric point x:y:z (entries like 3/2 or 1+2*sqrt(2)), or 'gergonne'");
    app.add_option("--triangle", cfg.triangle, "Cartesian vertices x,y;x,y;x,y (default 0,0;1,0;0,1)");
    app.add_option("--field", cfg.field, "square-free radicand d of Q(sqrt d) expected for --p");
    app.add_option("--seed", cfg.seed, "verify: sampler seed")->capture_default_str();
    app.add_option("--count", cfg.count, "verify: number of sampled points")->capture_default_str();
    app.add_option("--check", cfg.checks, "verify: restrict to these check ids (repeatable)");
    app.add_option("--negate", cfg.negate, "verify: invert these checks (harness self-test)")->group("");
    app.add_option("--vertex", cfg.vertex, "locus: vertex A, B or C")->capture_default_str();
    app.add_option("--preset", cfg.preset, "svg: fig1, fig2 or fig3")->capture_default_str();
    app.add_option("--out", cfg.out, "output file (default stdout)");

    auto* construct = app.add_subcommand("construct", "every point, map and conic derived from P, as JSON");
    auto* verify = app.add_subcommand("verify", "run the check suite on fixed and sampled configurations");
    auto* locus = app.add_subcommand("locus", "the conic of points P with H at a vertex");
    auto* svg = app.add_subcommand("svg", "draw a figure preset");
    for (auto* sub : {construct, verify, locus, svg}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*construct) return cmd_construct(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*locus) return cmd_locus(cfg);
        return cmd_svg(cfg);
    } catch (const Error& e) {
        std::cerr << "cevian: " << e.what() << "\n";
        return kExitInput;
    }
}
