// Acceptance suite: one PASS/FAIL line per criterion; exit status is the number of failures.

#include "cevian/verify.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cevian;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kSample = 25;

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

// every listed check must pass (not skip) on every configuration
void require_all_pass(Verdict& v, const std::vector<Configuration>& configs, const std::vector<std::string>& ids) {
    const auto report = run_suite(configs, ids, default_registry());
    for (const auto& r : report.results)
        v.require(r.status == Status::Pass, r.check_id + " " + std::string(to_string(r.status)) + " at " + r.p + ": " +
                                                r.reason);
    if (v.ok) {
        std::ostringstream s;
        s << report.results.size() << " results over " << configs.size() << " configurations";
        v.detail = s.str();
    }
}

Configuration fixed(const std::string& label) {
    for (auto& c : fixed_configurations())
        if (c.label == label) return c;
    throw Error(ErrorCode::ParseError, "no fixed configuration " + label);
}

bool same_results(const SuiteReport& a, const SuiteReport& b) {
    if (a.results.size() != b.results.size()) return false;
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        const auto &x = a.results[i], &y = b.results[i];
        if (x.check_id != y.check_id || x.status != y.status || x.reason != y.reason || x.witness != y.witness ||
            x.p != y.p)
            return false;
    }
    return true;
}

Verdict dual_path() {
    Verdict v;
    require_all_pass(v, sampled_configurations(kSeed, kSample), {"thm_HO_formula"});
    return v;
}

Verdict feuerbach() {
    Verdict v;
    require_all_pass(v, sampled_configurations(kSeed, kSample), {"gen_feuerbach_tangency"});
    return v;
}

Verdict nine_point() {
    Verdict v;
    require_all_pass(v, sampled_configurations(kSeed, kSample),
                     {"nine_point_pp_center", "nine_point_H_structure", "Z_tilde_fourth_point"});
    return v;
}

Verdict map_algebra() {
    Verdict v;
    require_all_pass(v, sampled_configurations(kSeed, kSample),
                     {"lambda_images", "eta_reflection", "phi_map", "map_M"});
    return v;
}

Verdict gergonne() {
    Verdict v;
    require_all_pass(v, {fixed("gergonne_13_14_15")}, {"gergonne_13_14_15"});
    if (v.ok) require_all_pass(v, {fixed("gergonne_3_4_5")}, {"gergonne_3_4_5"});
    if (v.ok) v.detail = "Ge(13-14-15) = (21:24:28), Ge(3-4-5) = (2:3:6)";
    return v;
}

Verdict locus() {
    using R = Rational;
    Verdict v;
    for (const auto& p : {ProjPoint<R>(R(6), R(3), R(2)), ProjPoint<R>(R(-1), R(3), R(2))})
        v.require(construct(p).h == vertex_a<R>(), "H != A at " + p.str());
    // x^2 = xy + xz + yz
    v.require(locus_conic<R>(0) == Conic<R>::from_equation(R(1), R(0), R(0), R(-1), R(-1), R(-1)),
              "locus conic equation");
    if (!v.ok) return v;
    require_all_pass(v, {fixed("locus_A_6_3_2"), fixed("locus_A_-1_3_2")}, {"locus_conic_CA"});
    return v;
}

Verdict special() {
    Verdict v;
    const auto cs = construct(special_point_ha());
    v.require(cs.h == vertex_a<QuadExt>(), "H != A");
    v.require(cs.o == midpoint_bc<QuadExt>(), "O != D0");
    if (!v.ok) return v;
    require_all_pass(v, {fixed("special_HA_sqrt2")}, {"special_configuration"});
    return v;
}

Verdict four_points() {
    Verdict v;
    require_all_pass(v, sampled_configurations(kSeed, 5), {"four_points"});
    return v;
}

Verdict involution() {
    Verdict v;
    require_all_pass(v, sampled_configurations(kSeed, kSample), {"psi_agreement"});
    return v;
}

Verdict harness() {
    Verdict v;
    const auto a = run_suite(kSeed, kSample), b = run_suite(kSeed, kSample);
    v.require(same_results(a, b), "run_suite differs between identical runs");

    std::ifstream f(std::string(CEVIAN_SOURCE_DIR) + "/docs/checks.md");
    std::set<std::string> documented;
    const std::regex row(R"(^\| `([A-Za-z0-9_]+)` \|)");
    std::smatch m;
    for (std::string line; std::getline(f, line);)
        if (std::regex_search(line, m, row)) documented.insert(m[1]);
    const auto ids = check_ids();
    v.require(std::set<std::string>(ids.begin(), ids.end()) == documented && ids.size() == documented.size(),
              "registry (" + std::to_string(ids.size()) + ") != documented list (" + std::to_string(documented.size()) +
                  ")");

    Registry reg;
    for (const auto& def : default_registry())
        if (def.id == "thm_HO_formula") reg.push_back(negated(def));
    const auto configs = sampled_configurations(kSeed, kSample);
    const auto n1 = run_suite(configs, {}, reg), n2 = run_suite(configs, {}, reg);
    v.require(n1.failures() == kSample, "negated check failed " + std::to_string(n1.failures()) + " times");
    for (const auto& r : n1.results) v.require(!r.witness.empty(), "failure without witness at " + r.p);
    v.require(same_results(n1, n2), "negated witnesses not reproducible");
    if (v.ok)
        v.detail = std::to_string(ids.size()) + " checks; negated check failed " + std::to_string(n1.failures()) +
                   "/" + std::to_string(kSample) + " with witnesses";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"dual-path H and O agreement", dual_path},
        {"generalized Feuerbach tangency at Z", feuerbach},
        {"nine-point conic structure", nine_point},
        {"map algebra (lambda, eta, Phi, M)", map_algebra},
        {"Gergonne specialization (13-14-15, 3-4-5)", gergonne},
        {"locus conic for H = A", locus},
        {"special configuration over Q(sqrt 2)", special},
        {"four-points theorem", four_points},
        {"involution agreement", involution},
        {"harness integrity", harness},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += v.ok ? 0 : 1;
        std::printf("%s criterion %zu: %s (%.2fs) %s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    v.detail.c_str());
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
    return failed;
}
