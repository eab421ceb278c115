#include "cevian/report.hpp"

namespace cevian {

using nlohmann::json;

namespace {

template <ExactField S>
json render_point(const ProjPoint<S>& p, const CartesianTriangle& tri) {
    if (p.is_infinite()) {
        const auto d = tri.direction_float(p);
        return {{"direction", {d[0], d[1]}}};
    }
    const auto xy = tri.to_float(p);
    return {{"xy", {xy[0], xy[1]}}};
}

template <ExactField S>
json map_json(const AffineMap<S>& m) {
    json j{{"matrix", m.str()}, {"determinant", m.determinant().str()}};
    if (m.is_invertible()) j["class"] = class_name<S>(classify(m));
    return j;
}

template <ExactField S>
json conic_json(const Conic<S>& c) {
    json j{{"matrix", c.str()}, {"degenerate", c.is_degenerate()}};
    if (!c.is_degenerate()) {
        j["center"] = point_json(center_of(c));
        j["infinite_points"] = infinite_point_count(c);
    }
    return j;
}

json absent_json(const std::map<std::string, std::string>& absent, const std::string& member) {
    const auto it = absent.find(member);
    return {{"absent", it == absent.end() ? "unspecified" : it->second}};
}

}  // namespace

template <ExactField S>
json point_json(const ProjPoint<S>& p) {
    json j{{"coords", p.str()}, {"at_infinity", p.is_infinite()}};
    return j;
}

json degeneracy_json(const DegeneracyReport& flags) {
    json j{
        {"at_infinity", flags.at_infinity},
        {"on_sideline", flags.on_sideline},
        {"on_anticomplementary_sideline", flags.on_anticomplementary_sideline},
        {"on_median", flags.on_median},
        {"on_steiner_circumellipse", flags.on_steiner_circumellipse},
        {"eta_undefined", flags.eta_undefined},
    };
    j["h_is_vertex"] = flags.h_vertex ? json(std::string(1, "ABC"[*flags.h_vertex])) : json(nullptr);
    return j;
}

template <ExactField S>
json construction_report(const ConstructionSet<S>& cs, const CartesianTriangle& tri) {
    json points = json::object(), render = json::object();
    auto put = [&](const std::string& name, const ProjPoint<S>& p) {
        points[name] = point_json(p);
        render[name] = render_point(p, tri);
    };
    auto put_opt = [&](const std::string& name, const std::optional<ProjPoint<S>>& p, const std::string& member) {
        if (p) put(name, *p);
        else points[name] = absent_json(cs.absent, member);
    };
    put("A", vertex_a<S>());
    put("B", vertex_b<S>());
    put("C", vertex_c<S>());
    put("G", centroid<S>());
    put("P", cs.p);
    put("P'", cs.p_prime);
    put("Q", cs.q);
    put("Q'", cs.q_prime);
    const char* trace_names[3][3] = {{"D", "E", "F"}, {"D3", "E3", "F3"}, {"D0", "E0", "F0"}};
    for (std::size_t i = 0; i < 3; ++i) {
        put(trace_names[0][i], cs.traces[i]);
        put(trace_names[1][i], cs.traces_prime[i]);
        put(trace_names[2][i], cs.medial[i]);
    }
    put("H", cs.h);
    put("O", cs.o);
    put("N", cs.n);
    put_opt("H_direct", cs.h_direct, "h_direct");
    put_opt("O_direct", cs.o_direct, "o_direct");
    put_opt("H'", cs.h_prime, "h_prime");
    put_opt("O'", cs.o_prime, "o_prime");
    put("H_tilde", cs.h_tilde);
    put_opt("V", cs.v, "v");
    put_opt("Z", cs.z, "z");
    put_opt("S", cs.s, "s");
    put_opt("Z_tilde", cs.z_tilde, "z_tilde");
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string suffix(1, "abc"[i]);
        put("Q_" + suffix, cs.anticevian[i]);
        put_opt("P_" + suffix, cs.family[i], "family_" + suffix);
    }

    json maps{
        {"K", map_json(cs.k)},       {"K^-1", map_json(cs.k_inv)}, {"T_P", map_json(cs.t_p)},
        {"T_P'", map_json(cs.t_pp)}, {"lambda", map_json(cs.lambda)}, {"S1", map_json(cs.s1)},
        {"S2", map_json(cs.s2)},     {"M", map_json(cs.m)},        {"Phi_P", map_json(cs.phi)},
    };
    maps["eta"] = cs.eta ? map_json(*cs.eta) : absent_json(cs.absent, "eta");

    json conics{
        {"C_O", conic_json(cs.circum_o)},
        {"N_P'", conic_json(cs.nine_point_pp)},
        {"N_H", conic_json(cs.nine_point_h)},
        {"I", conic_json(cs.inconic)},
        {"I'", conic_json(cs.inconic_prime)},
    };
    conics["C_P"] = cs.cevian_conic ? conic_json(*cs.cevian_conic) : absent_json(cs.absent, "cevian_conic");
    conics["N_H'"] = cs.nine_point_hp ? conic_json(*cs.nine_point_hp) : absent_json(cs.absent, "nine_point_hp");

    long field = 1;
    for (int i = 0; i < 3; ++i) field = std::max(field, field_of(cs.p.coords()(i)));
    return {
        {"schema_version", kReportSchemaVersion},
        {"command", "construct"},
        {"input", {{"P", cs.p.str()}, {"field", field}, {"triangle", tri.str()}}},
        {"flags", degeneracy_json(cs.flags)},
        {"checks", {{"H_direct_concurrent", cs.h_direct_concurrent}, {"O_direct_concurrent", cs.o_direct_concurrent}}},
        {"points", points},
        {"maps", maps},
        {"conics", conics},
        {"render", {{"points", render}}},
    };
}

json check_result_json(const CheckResult& r) {
    json witness = json::object();
    for (const auto& [k, v] : r.witness) witness[k] = v;
    return {
        {"check_id", r.check_id}, {"status", std::string(to_string(r.status))},
        {"reason", r.reason},     {"config", {{"label", r.config_label}, {"P", r.p}, {"field", r.field}}},
        {"witness", witness},
    };
}

json suite_report_json(const SuiteReport& r) {
    json tallies = json::object();
    for (const auto& [id, t] : r.tallies) tallies[id] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
    json configs = json::array();
    for (const auto& c : r.configurations)
        configs.push_back({{"label", c.label}, {"P", point_str(c.p)}, {"field", point_field(c.p)}});
    json results = json::array();
    for (const auto& res : r.results) results.push_back(check_result_json(res));
    return {
        {"schema_version", kReportSchemaVersion},
        {"command", "verify"},
        {"seed", r.seed},
        {"count", r.count},
        {"checks", r.checks},
        {"configurations", configs},
        {"tallies", tallies},
        {"failures", r.failures()},
        {"results", results},
        {"elapsed_seconds", r.elapsed_seconds},
    };
}

json locus_report(int vertex) {
    using R = Rational;
    if (vertex < 0 || vertex > 2) throw Error(ErrorCode::ParseError, "vertex must be A, B or C");
    const auto i = static_cast<std::size_t>(vertex);
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    const auto a = vertices<R>();
    const auto c = locus_conic<R>(vertex);
    const auto k_inv = anticomplement_map<R>();
    json excluded = json::array();
    for (const auto& p : {a[j], a[k], midpoint(a[i], a[j]), midpoint(a[i], a[k])}) excluded.push_back(p.str());
    return {
        {"schema_version", kReportSchemaVersion},
        {"command", "locus"},
        {"vertex", std::string(1, "ABC"[i])},
        {"conic", conic_json(c)},
        {"polar_of_vertex", polar(a[i], c).str()},
        {"tangents", {{std::string(1, "ABC"[j]), k_inv(join(a[i], a[k])).str()},
                      {std::string(1, "ABC"[k]), k_inv(join(a[i], a[j])).str()}}},
        {"excluded_points", excluded},
    };
}

template json point_json(const ProjPoint<Rational>&);
template json point_json(const ProjPoint<QuadExt>&);
template json construction_report(const ConstructionSet<Rational>&, const CartesianTriangle&);
template json construction_report(const ConstructionSet<QuadExt>&, const CartesianTriangle&);

}  // namespace cevian
