#include "cevian/verify.hpp"

#include "cevian/triangle.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <type_traits>

namespace cevian {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

std::string point_str(const AnyPoint& p) {
    return std::visit([](const auto& q) { return q.str(); }, p);
}

long point_field(const AnyPoint& p) {
    return std::visit(
        [](const auto& q) {
            long f = 1;
            for (int i = 0; i < 3; ++i) f = std::max(f, field_of(q.coords()(i)));
            return f;
        },
        p);
}

AnyPoint parse_any_point(const std::string& text) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::array<QuadExt, 3> c;
    std::size_t start = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto colon = body.find(':', start);
        if ((i < 2) != (colon != std::string::npos))
            throw Error(ErrorCode::ParseError, "expected x:y:z, got " + text);
        c[i] = QuadExt::parse(body.substr(start, i < 2 ? colon - start : std::string::npos));
        start = colon + 1;
    }
    if (c[0].is_rational() && c[1].is_rational() && c[2].is_rational())
        return ProjPoint<Rational>(c[0].rational_part(), c[1].rational_part(), c[2].rational_part());
    return ProjPoint<QuadExt>(c[0], c[1], c[2]);
}

AnyPrepared prepare(const AnyPoint& p) {
    return std::visit(
        [](const auto& q) -> AnyPrepared {
            using S = std::decay_t<decltype(q.x())>;
            Prepared<S> pr{q, std::nullopt, {}};
            try {
                pr.cs = construct(q);
            } catch (const Error& e) {
                pr.construct_error = e.what();
            }
            return pr;
        },
        p);
}

int SuiteReport::failures() const {
    int n = 0;
    for (const auto& [id, t] : tallies) n += t.fail;
    return n;
}

namespace {

// ---------------------------------------------------------------------------
// Evaluation helpers

Outcome skip(std::string reason) { return {Status::Skipped, std::move(reason), {}}; }

template <class T>
std::string str_of(const T& v) {
    if constexpr (std::is_same_v<T, std::string>) return v;
    else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
    else return v.str();
}

class Ev {
public:
    template <class T>
    Ev& note(const std::string& key, const T& value) {
        w_.emplace_back(key, str_of(value));
        return *this;
    }
    void expect(bool ok, const std::string& claim) {
        if (!ok) failed_.push_back(claim);
    }
    Outcome done() {
        if (failed_.empty()) return {Status::Pass, {}, std::move(w_)};
        std::string reason;
        for (const auto& f : failed_) reason += (reason.empty() ? "" : "; ") + f;
        return {Status::Fail, reason, std::move(w_)};
    }

private:
    Witness w_;
    std::vector<std::string> failed_;
};

template <ExactField S>
bool same_direction(const ProjLine<S>& l, const ProjLine<S>& m) {
    return direction_of(l) == direction_of(m);
}

template <ExactField S>
ProjLine<S> side_opposite(std::size_t i) {
    return std::array<ProjLine<S>, 3>{sideline_bc<S>(), sideline_ca<S>(), sideline_ab<S>()}[i];
}

/// Every line X_i Y_i passes through p (a coincident pair imposes nothing).
template <ExactField S>
bool perspective_from(const std::array<ProjPoint<S>, 3>& xs, const std::array<ProjPoint<S>, 3>& ys,
                      const ProjPoint<S>& p) {
    for (std::size_t i = 0; i < 3; ++i)
        if (!collinear(xs[i], ys[i], p)) return false;
    return true;
}

template <ExactField S>
std::array<ProjPoint<S>, 3> image(const AffineMap<S>& f, const std::array<ProjPoint<S>, 3>& pts) {
    return {f(pts[0]), f(pts[1]), f(pts[2])};
}

template <ExactField S>
std::array<ProjPoint<S>, 3> medial_of(const std::array<ProjPoint<S>, 3>& t) {
    return {midpoint(t[1], t[2]), midpoint(t[2], t[0]), midpoint(t[0], t[1])};
}

template <ExactField S>
bool is_vertex(const ProjPoint<S>& p) {
    for (const auto& v : vertices<S>())
        if (p == v) return true;
    return false;
}

template <ExactField S>
Vec3<S> vec(const ProjPoint<S>& from, const ProjPoint<S>& to) {
    return to.normalized() - from.normalized();
}

template <ExactField S>
std::string class_of(const AffineMap<S>& m) {
    return class_name<S>(classify(m));
}

template <ExactField S>
ProjPoint<S> point_of(std::initializer_list<int> c) {
    auto it = c.begin();
    return {S(*it), S(*(it + 1)), S(*(it + 2))};
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Checks

template <ExactField S>
Outcome thm_ho_formula(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    Ev ev;
    ev.note("H", c.h).note("O", c.o);
    if (c.h_direct) ev.note("H_direct", *c.h_direct);
    if (c.o_direct) ev.note("O_direct", *c.o_direct);
    ev.expect(c.h_direct && *c.h_direct == c.h, "H from parallels equals K^-1 T_P'^-1 K(Q)");
    ev.expect(c.h_direct_concurrent, "third parallel through C is concurrent");
    ev.expect(c.o_direct && *c.o_direct == c.o, "O from parallels equals T_P'^-1 K(Q)");
    ev.expect(c.o_direct_concurrent, "third parallel through F0 is concurrent");
    ev.expect(c.k(c.h) == c.o, "K(H) = O");
    return ev.done();
}

template <ExactField S>
Outcome lambda_images(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    Ev ev;
    const auto lp = c.lambda(c.p), lh = c.lambda(c.h), ht = c.t_pp.inverse()(c.q);
    ev.note("lambda(P)", lp).note("Q'", c.q_prime).note("lambda(H)", lh).note("Q", c.q);
    ev.note("H_tilde", c.h_tilde).note("T_P'^-1(Q)", ht);
    ev.expect(lp == c.q_prime, "lambda(P) = Q'");
    ev.expect(lh == c.q, "lambda(H) = Q");
    ev.expect(c.h_tilde == ht, "T_P^-1(H) = T_P'^-1(Q)");
    return ev.done();
}

template <ExactField S>
Outcome eta_reflection(const ConstructionSet<S>& c) {
    if (!c.eta) return skip(c.absent.at("eta"));
    if (!c.o_prime) return skip(c.absent.at("o_prime"));
    const auto& eta = *c.eta;
    Ev ev;
    ev.note("eta", eta).note("eta(O)", eta(c.o)).note("O'", *c.o_prime).note("eta(H)", eta(c.h)).note("H'", *c.h_prime);
    ev.expect(class_of(eta) == "AffineReflection", "eta is an affine reflection");
    ev.expect(eta(c.o) == *c.o_prime, "eta(O) = O'");
    ev.expect(eta(c.h) == *c.h_prime, "eta(H) = H'");
    const auto pp = join(c.p, c.p_prime);
    if (!(c.o == *c.o_prime)) ev.expect(same_direction(join(c.o, *c.o_prime), pp), "OO' parallel to PP'");
    if (!(c.h == *c.h_prime)) ev.expect(same_direction(join(c.h, *c.h_prime), pp), "HH' parallel to PP'");
    return ev.done();
}

template <ExactField S>
Outcome h_on_cevian_conic(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    if (!c.cevian_conic) return skip(c.absent.at("cevian_conic"));
    const auto& cp = *c.cevian_conic;
    Ev ev;
    ev.note("C_P", cp).note("H", c.h).note("H'", *c.h_prime);
    ev.expect(cp.contains(c.h), "H on C_P");
    ev.expect(cp.contains(*c.h_prime), "H' on C_P");
    ev.expect(cp.contains(c.p_prime) && cp.contains(c.q_prime), "C_P = C_P' (contains P' and Q')");
    return ev.done();
}

template <ExactField S>
Outcome nine_point_pp_center(const ConstructionSet<S>& c) {
    Ev ev;
    const auto center_n = center_of(c.nine_point_pp);
    ev.note("N_P'", c.nine_point_pp).note("center(N_P')", center_n).note("K(Q)", c.k(c.q));
    ev.note("C_O", c.circum_o).note("center(C_O)", center_of(c.circum_o)).note("O", c.o);
    ev.expect(center_n == c.k(c.q), "center of N_P' is K(Q)");
    for (const auto& v : vertices<S>()) ev.expect(c.circum_o.contains(v), "C_O passes through " + v.str());
    ev.expect(center_of(c.circum_o) == c.o, "center of C_O is O");
    if (!c.flags.on_steiner_circumellipse && !c.flags.h_vertex) {
        const auto direct = circumconic_with_center(c.o);
        ev.note("circumconic_with_center(O)", direct);
        ev.expect(direct == c.circum_o, "T_P'^-1(N_P') is the circumconic centered at O");
    }
    return ev.done();
}

template <ExactField S>
Outcome nine_point_h_structure(const ConstructionSet<S>& c) {
    if (c.h.is_infinite()) return skip("h_at_infinity");
    Ev ev;
    const auto kc = transform(c.k, c.circum_o);
    const auto hc = transform(homothety(c.h, S(1) / S(2)), c.circum_o);
    ev.note("N_H", c.nine_point_h).note("K(C_O)", kc).note("Hom(H,1/2)(C_O)", hc).note("N", c.n);
    ev.expect(c.nine_point_h == kc, "N_H = K(C_O)");
    ev.expect(c.nine_point_h == hc, "N_H = Hom(H, 1/2)(C_O)");
    ev.expect(c.n == midpoint(c.h, c.o), "N = midpoint(H, O)");
    ev.expect(center_of(c.nine_point_h) == c.n, "N is the center of N_H");
    return ev.done();
}

template <ExactField S>
Outcome map_m(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    if (c.flags.on_median) return skip("on_median");
    if (!c.s) return skip(c.absent.at("s"));
    Ev ev;
    const std::string cls = class_of(c.m);
    const auto s2 = meet(join(c.o, c.q), join(*c.o_prime, c.q_prime));
    ev.note("M", c.m).note("class", cls).note("S", *c.s).note("OQ.O'Q'", s2).note("M(S)", c.m(*c.s));
    ev.expect(cls == "Homothety" || cls == "Translation", "M is a homothety or translation");
    ev.expect(transform(c.m, c.circum_o) == c.inconic, "M(C_O) = I");
    ev.expect(c.m(c.o) == c.q, "M(O) = Q");
    ev.expect(*c.s == s2, "OQ.GV = OQ.O'Q'");
    ev.expect(c.m(*c.s) == *c.s, "M fixes S");
    return ev.done();
}

template <ExactField S>
Outcome phi_map(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    if (!c.z) return skip(c.absent.at("z"));
    if (!c.s) return skip(c.absent.at("s"));
    const auto& z = *c.z;
    const auto phi_pp = c.t_pp * c.k_inv * c.t_p * c.k_inv;
    Ev ev;
    ev.note("Z", z).note("Phi_P", c.phi).note("Phi_P'", phi_pp);
    ev.expect((c.t_p * c.k_inv)(z) == z, "T_P K^-1 fixes Z");
    ev.expect(c.nine_point_h.contains(z), "Z on N_H");
    ev.expect(c.circum_o.contains(c.k_inv(z)), "K^-1(Z) on C_O");
    ev.expect(c.phi(c.n) == c.q, "Phi_P(N) = Q");
    ev.expect(c.phi(c.k(*c.s)) == *c.s, "Phi_P(K(S)) = S");
    ev.expect(c.phi(c.k(c.q_prime)) == c.t_p(c.p), "Phi_P(K(Q')) = T_P(P)");
    ev.expect(c.phi == phi_pp, "Phi_P = Phi_P'");
    ev.expect(join(c.o, c.q).contains(c.t_pp(c.p_prime)), "T_P'(P') on OQ");
    ev.expect(join(*c.o_prime, c.q_prime).contains(c.t_p(c.p)), "T_P(P) on O'Q'");
    return ev.done();
}

template <ExactField S>
Outcome gen_feuerbach_tangency(const ConstructionSet<S>& c) {
    if (!c.z) return skip(c.absent.at("z"));
    const auto& z = *c.z;
    Ev ev;
    ev.note("Z", z).note("N_H", c.nine_point_h).note("I", c.inconic);
    ev.expect(c.nine_point_h.contains(z), "Z on N_H");
    ev.expect(c.inconic.contains(z), "Z on I");
    ev.expect(tangent_conics_at(c.nine_point_h, c.inconic, z), "N_H and I share the tangent at Z");
    if (c.nine_point_hp) {
        const auto img = transform(c.phi, *c.nine_point_hp);
        ev.note("Phi_P(N_H')", img).note("I'", c.inconic_prime);
        ev.expect(img == c.inconic_prime, "Phi_P(N_H') = I'");
    } else {
        ev.note("N_H'", std::string("absent: ") + c.absent.at("nine_point_hp"));
    }
    return ev.done();
}

template <ExactField S>
Outcome z_intersections(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    if (!c.z || !c.v) return skip(c.absent.count("v") ? c.absent.at("v") : c.absent.at("z"));
    const auto gv = join(centroid<S>(), *c.v);
    Ev ev;
    ev.note("Z", *c.z).note("V", *c.v).note("N", c.n);
    ev.expect(gv.contains(*c.z), "Z on GV");
    ev.expect(!(c.q == c.n) && *c.z == meet(gv, join(c.q, c.n)), "Z = GV.QN");
    const auto kz = c.k_inv(*c.z);
    ev.note("K^-1(Z)", kz);
    ev.expect(!(c.o == c.p_prime) && kz == meet(gv, join(c.o, c.p_prime)), "K^-1(Z) = GV.OP'");
    return ev.done();
}

template <ExactField S>
Outcome z_tilde_fourth_point(const ConstructionSet<S>& c) {
    if (!c.z_tilde) return skip(c.absent.at("z_tilde"));
    if (!c.cevian_conic) return skip(c.absent.at("cevian_conic"));
    Ev ev;
    ev.note("Z_tilde", *c.z_tilde).note("C_P", *c.cevian_conic).note("C_O", c.circum_o);
    ev.expect(c.cevian_conic->contains(*c.z_tilde), "Z_tilde on C_P");
    ev.expect(c.circum_o.contains(*c.z_tilde), "Z_tilde on C_O");
    return ev.done();
}

template <ExactField S>
Outcome s1t1_parallel(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    const auto a = vertices<S>();
    Ev ev;
    int evaluated = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string tag = std::string(1, "ABC"[i]);
        std::optional<ProjPoint<S>> s1;
        if (c.flags.h_vertex) {
            if (static_cast<std::size_t>(*c.flags.h_vertex) != i) continue;
            // H = vertex, O = opposite midpoint: S1 on the parallel to QD through the vertex
            const auto t = join(a[i], direction_of(join(c.q, c.traces[i])));
            s1 = second_intersection(t, c.circum_o, a[i]);
        } else {
            if (collinear(a[i], c.h, c.o)) continue;
            s1 = second_intersection(join(a[i], c.h), c.circum_o, a[i]);
        }
        const auto t1 = second_intersection(join(a[i], c.o), c.circum_o, a[i]);
        ev.note("S1_" + tag, *s1).note("T1_" + tag, t1);
        ++evaluated;
        // a double point S1 = T1 makes the chord the tangent there
        const auto chord = *s1 == t1 ? polar(t1, c.circum_o) : join(*s1, t1);
        ev.expect(same_direction(chord, side_opposite<S>(i)), "S1T1 parallel to the side opposite " + tag);
        ev.expect(t1 == point_reflection(c.o)(a[i]), "T1 is the reflection of " + tag + " in O");
    }
    if (evaluated == 0) return skip("o_on_vertex_h_line");
    return ev.done();
}

template <ExactField S>
Outcome lemma_equivalences(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    const auto a = vertices<S>();
    Ev ev;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        const std::string tag(1, "ABC"[i]);
        const auto &e = c.traces[j], &f = c.traces[k];
        const auto &e3 = c.traces_prime[j], &f3 = c.traces_prime[k];
        const auto &e0 = c.medial[j], &f0 = c.medial[k];
        const bool sa = c.h == a[i];
        const bool sb = vec(a[i], f) == vec(e, c.q) && vec(a[i], e) == vec(f, c.q);
        const auto l_c = join(c.q, e0);
        const bool sc = l_c.contains(c.k(e3)) && l_c.contains(f3);
        const auto l_d = join(c.q, f0);
        const bool sd = l_d.contains(c.k(f3)) && l_d.contains(e3);
        ev.note("H=" + tag, sa).note("parallelogram_" + tag, sb).note("c_" + tag, sc).note("d_" + tag, sd);
        ev.expect(sa == sb && sb == sc && sc == sd, "statements (a)-(d) agree at vertex " + tag);
    }
    return ev.done();
}

template <ExactField S>
Outcome four_points(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    if (c.flags.on_median) return skip("on_median");
    if (!c.cevian_conic) return skip(c.absent.at("cevian_conic"));
    for (std::size_t i = 0; i < 3; ++i)
        if (!c.family[i]) return skip(c.absent.at(std::string("family_") + "abc"[i]));
    const auto a = vertices<S>();
    Ev ev;
    std::vector<Conic<S>> conics{*c.cevian_conic};
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string tag = std::string("P_") + "abc"[i];
        const auto& y = *c.family[i];
        const auto cy = construct(y);
        ev.note(tag, y).note("O(" + tag + ")", cy.o).note("H(" + tag + ")", cy.h);
        ev.expect(cy.o == c.o, "O(" + tag + ") = O");
        ev.expect(cy.h == c.h, "H(" + tag + ") = H");
        ev.expect(cy.cevian_conic.has_value(), "C_" + tag + " exists");
        if (cy.cevian_conic) conics.push_back(*cy.cevian_conic);
        const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        ev.expect(a[i] == meet(join(c.anticevian[j], c.anticevian[k]), join(c.q, c.anticevian[i])),
                  std::string(1, "ABC"[i]) + " = Q_jQ_k . QQ_i");
    }
    for (std::size_t i = 0; i < conics.size(); ++i) {
        for (const auto& v : a) ev.expect(conics[i].contains(v), "conic " + std::to_string(i) + " contains " + v.str());
        ev.expect(conics[i].contains(c.h), "conic " + std::to_string(i) + " contains H");
        // a family member on a median has a line-pair cevian conic; distinctness is claimed for proper conics
        if (conics[i].is_degenerate()) {
            ev.note("conic " + std::to_string(i), std::string("degenerate ") + conics[i].str());
            continue;
        }
        for (std::size_t j = i + 1; j < conics.size(); ++j)
            if (!conics[j].is_degenerate())
                ev.expect(!(conics[i] == conics[j]),
                          "conics " + std::to_string(i) + " and " + std::to_string(j) + " differ");
    }
    return ev.done();
}

template <ExactField S>
Outcome perspector_a(const ConstructionSet<S>& c) {
    const auto lam = image(c.lambda, vertices<S>());
    Ev ev;
    ev.note("Q", c.q).note("lambda(A)", lam[0]).note("lambda(B)", lam[1]).note("lambda(C)", lam[2]);
    ev.expect(perspective_from(c.medial, lam, c.q), "Q is the perspector of D0E0F0 and lambda(ABC)");
    return ev.done();
}

template <ExactField S>
Outcome perspector_b(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    const auto anti_qp = image(c.t_p.inverse(), vertices<S>());
    const auto med = image(c.t_pp.inverse(), c.medial);
    Ev ev;
    ev.note("H_tilde", c.h_tilde);
    ev.expect(med == medial_of(c.anticevian), "T_P'^-1(D0E0F0) is the medial triangle of Q_aQ_bQ_c");
    ev.expect(perspective_from(anti_qp, med, c.h_tilde),
              "H_tilde is the perspector of T_P^-1(ABC) and the medial triangle of Q_aQ_bQ_c");
    return ev.done();
}

template <ExactField S>
Outcome perspector_c(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    const auto med = medial_of(image(c.lambda.inverse(), vertices<S>()));
    Ev ev;
    ev.note("H", c.h).note("medial(lambda^-1(ABC))[0]", med[0]);
    ev.expect(perspective_from(vertices<S>(), med, c.h), "H is the perspector of ABC and medial(lambda^-1(ABC))");
    return ev.done();
}

template <ExactField S>
Outcome perspector_d(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    Ev ev;
    ev.note("H_tilde", c.h_tilde);
    ev.expect(perspective_from(c.anticevian, c.traces_prime, c.h_tilde),
              "H_tilde is the perspector of Q_aQ_bQ_c and D3E3F3");
    return ev.done();
}

template <ExactField S>
Outcome perspector_e(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    const auto li = image(c.lambda.inverse(), vertices<S>());
    const auto a3 = image(c.t_p, c.traces_prime);
    Ev ev;
    ev.note("H", c.h).note("A3", a3[0]).note("B3", a3[1]).note("C3", a3[2]);
    ev.expect(a3 == image(c.s1, vertices<S>()), "A3B3C3 = S1(ABC)");
    ev.expect(perspective_from(li, a3, c.h), "H is the perspector of lambda^-1(ABC) and A3B3C3");
    return ev.done();
}

template <ExactField S>
Outcome gergonne_13_14_15(const ConstructionSet<S>& c) {
    if constexpr (!std::is_same_v<S, Rational>) {
        return skip("not_gergonne_13_14_15");
    } else {
        if (!(c.p == point_of<S>({21, 24, 28}))) return skip("not_gergonne_13_14_15");
        // BC = 13, CA = 14, AB = 15
        const CartesianTriangle tri({Point2{Rational(99) / Rational(13), Rational(168) / Rational(13)}, Point2{0, 0},
                                     Point2{13, 0}});
        const auto ortho = tri.to_barycentric(tri.orthocenter());
        const auto& cp = *c.cevian_conic;
        Ev ev;
        ev.note("triangle", tri.str()).note("C_P", cp).note("I", tri.incenter()).note("Na", tri.nagel());
        ev.note("Mi", tri.mittenpunkt()).note("H_classical", ortho);
        ev.expect(tri.gergonne() == c.p, "P is the Gergonne point");
        ev.expect(c.q == tri.incenter(), "Q is the incenter");
        ev.expect(c.p_prime == tri.nagel(), "P' is the Nagel point");
        ev.expect(c.q_prime == tri.mittenpunkt(), "Q' is the Mittenpunkt");
        ev.expect(c.h == ortho, "generalized H is the orthocenter");
        for (const auto& [name, pt] : {std::pair{"incenter", tri.incenter()}, std::pair{"Nagel", tri.nagel()},
                                       std::pair{"Mittenpunkt", tri.mittenpunkt()}, std::pair{"orthocenter", ortho}})
            ev.expect(cp.contains(pt), std::string("C_P contains the ") + name);
        return ev.done();
    }
}

template <ExactField S>
Outcome gergonne_3_4_5(const ConstructionSet<S>& c) {
    if constexpr (!std::is_same_v<S, Rational>) {
        return skip("not_gergonne_3_4_5");
    } else {
        if (!(c.p == point_of<S>({2, 3, 6}))) return skip("not_gergonne_3_4_5");
        // BC = 3, CA = 4, AB = 5: right angle at C
        const CartesianTriangle tri({Point2{0, 4}, Point2{3, 0}, Point2{0, 0}});
        const auto ortho = tri.to_barycentric(tri.orthocenter());
        Ev ev;
        ev.note("triangle", tri.str()).note("Q", c.q).note("H", c.h).note("H_classical", ortho);
        ev.expect(tri.gergonne() == c.p, "P is the Gergonne point");
        ev.expect(c.q == tri.incenter(), "Q is the incenter");
        ev.expect(c.h == ortho, "H is the classical orthocenter");
        ev.expect(c.h == vertex_c<S>(), "H is the right-angle vertex C");
        return ev.done();
    }
}

template <ExactField S>
Outcome locus_conic_ca(const ConstructionSet<S>& c) {
    if (!c.flags.h_vertex) return skip("h_not_a_vertex");
    const auto i = static_cast<std::size_t>(*c.flags.h_vertex);
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    const auto a = vertices<S>();
    const auto l = locus_conic<S>(static_cast<int>(i));
    const auto g = centroid<S>();
    Ev ev;
    ev.note("vertex", std::string(1, "ABC"[i])).note("locus", l);
    ev.expect(c.h == a[i], "H is the vertex");
    ev.expect(l.contains(c.p), "P on the locus conic");
    // x^2 = xy + xz + yz with the roles of the coordinates permuted
    std::array<S, 6> coeff{S(0), S(0), S(0), S(-1), S(-1), S(-1)};
    coeff[i] = S(1);
    coeff[3 + i] = S(-1);
    const auto expected = Conic<S>::from_equation(coeff[0], coeff[1], coeff[2], coeff[3], coeff[4], coeff[5]);
    ev.expect(l == expected, "locus conic is x^2 = xy + xz + yz (permuted)");
    const Vec3<S> av = a[i].normalized();
    const ProjPoint<S> six_sevenths(Vec3<S>(av + (c.medial[i].normalized() - av) * (S(6) / S(7))));
    ev.note("center", center_of(l));
    ev.expect(center_of(l) == six_sevenths, "center 6/7 of the way from the vertex to the opposite midpoint");
    ev.expect(polar(a[i], l) == join(g, direction_of(side_opposite<S>(i))), "polar of the vertex is l_G");
    for (const auto& pt : {a[j], a[k], midpoint(a[i], a[j]), midpoint(a[i], a[k])})
        ev.expect(l.contains(pt), "locus conic contains " + pt.str());
    ev.expect(polar(a[j], l) == c.k_inv(join(a[i], a[k])), "tangent at the next vertex is K^-1 of a side");
    ev.expect(polar(a[k], l) == c.k_inv(join(a[i], a[j])), "tangent at the last vertex is K^-1 of a side");
    const S r = collinear_ratio(c.medial[i], c.traces[i], a[k]);
    ev.note("DD0/D0C", r);
    ev.expect(r * r <= S(2), "(DD0/D0C)^2 <= 2");
    return ev.done();
}

template <ExactField S>
Outcome steiner_collapse(const ConstructionSet<S>& c) {
    if (!c.flags.on_steiner_circumellipse) return skip("not_on_steiner_circumellipse");
    Ev ev;
    ev.note("P'", c.p_prime).note("Q", c.q).note("O", c.o).note("H", c.h);
    ev.expect(c.p_prime.is_infinite(), "P' is at infinity");
    ev.expect(c.q == c.p_prime, "Q = P'");
    ev.expect(c.o == c.q && c.h == c.q, "O = H = Q");
    ev.expect(c.t_pp.inverse()(c.k(c.q)) == c.q, "formula for O also gives Q");
    return ev.done();
}

template <ExactField S>
Outcome psi_agreement(const ConstructionSet<S>& c) {
    if (c.q.is_infinite() || c.o.is_infinite()) return skip("o_or_q_at_infinity");
    std::mt19937_64 rng(fnv1a(c.p.str()));
    std::uniform_int_distribution<int> d(-9, 9);
    const std::array<std::pair<const char*, const Conic<S>*>, 3> conics{
        {{"I", &c.inconic}, {"C_O", &c.circum_o}, {"N_H", &c.nine_point_h}}};
    Ev ev;
    for (int n = 0; n < 5;) {
        const int u = d(rng), v = d(rng);
        if (u == 0 && v == 0) continue;
        const ProjPoint<S> x(S(u), S(v), S(-u - v));
        std::array<std::string, 3> image_of;
        for (std::size_t i = 0; i < 3; ++i) {
            try {
                const auto y = conjugate_involution(*conics[i].second, x);
                image_of[i] = y.str();
                if (i == 0) ev.expect(conjugate_involution(*conics[i].second, y) == x, "psi is an involution");
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SelfConjugate) throw;
                image_of[i] = "self-conjugate";
            }
            ev.note(std::string("psi_") + conics[i].first + x.str(), image_of[i]);
        }
        ev.expect(image_of[0] == image_of[1] && image_of[1] == image_of[2], "psi_1 = psi_2 = psi_3 at " + x.str());
        ++n;
    }
    return ev.done();
}

template <ExactField S>
Outcome h_tilde_midpoint(const ConstructionSet<S>& c) {
    if (c.flags.on_steiner_circumellipse) return skip("on_steiner_circumellipse");
    Ev ev;
    const auto m = midpoint(c.p_prime, c.k_inv(c.h));
    const auto r = point_reflection(c.o)(c.q);
    ev.note("H_tilde", c.h_tilde).note("midpoint(P', K^-1(H))", m).note("R_O(Q)", r);
    ev.expect(c.h_tilde == m, "H_tilde = midpoint(P', K^-1(H))");
    ev.expect(c.h_tilde == r, "H_tilde = R_O(Q)");
    return ev.done();
}

template <ExactField S>
Outcome ha_fallback_tangency(const ConstructionSet<S>& c) {
    if (!c.flags.h_vertex) return skip("h_not_a_vertex");
    const auto i = static_cast<std::size_t>(*c.flags.h_vertex);
    const auto v = vertices<S>()[i];
    Ev ev;
    ev.note("N_H", c.nine_point_h).note("C_O", c.circum_o).note("O", c.o);
    ev.expect(c.o == c.medial[i], "O is the opposite midpoint");
    ev.expect(c.nine_point_h == transform(c.k, c.circum_o), "N_H = K(C_O)");
    ev.expect(tangent_conics_at(c.nine_point_h, c.circum_o, v), "N_H tangent to C_O at the vertex");
    ev.expect(c.nine_point_h.contains(v), "N_H contains the vertex");
    for (const auto& m : c.medial) ev.expect(c.nine_point_h.contains(m), "N_H contains " + m.str());
    return ev.done();
}

template <ExactField S>
Outcome special_configuration(const ConstructionSet<S>& c) {
    const auto a = vertex_a<S>(), b = vertex_b<S>(), cc = vertex_c<S>(), g = centroid<S>();
    if (!(c.h == a && c.o == c.medial[0] && c.traces_prime[0] == midpoint(a, c.p_prime)))
        return skip("not_H_A_O_D0_D3_mid_AP'");
    Ev ev;
    // C_O is the isotomic image of l = K^-2(BC)
    const auto l = c.k_inv(c.k_inv(sideline_bc<S>()));
    const auto iota_l = Conic<S>::circumconic(l.coeffs()(0), l.coeffs()(1), l.coeffs()(2));
    ev.note("l", l).note("iota(l)", iota_l).note("C_O", c.circum_o);
    ev.expect(c.circum_o == iota_l, "C_O = iota(K^-2(BC))");
    ev.expect(c.o_prime && collinear(c.o, *c.o_prime, c.p) && collinear(c.o, c.p, c.p_prime),
              "O, O', P, P' collinear");
    const S r = collinear_ratio(c.o, c.p_prime, c.p);
    ev.note("ratio OP'/OP", r);
    ev.expect(r * r == S(9), "d(O,P') = 3 d(O,P)");
    const std::string cls = class_of(c.m);
    ev.note("class(M)", cls);
    ev.expect(cls == "Translation", "M is a translation");
    const auto l_g = join(g, direction_of(sideline_bc<S>()));
    ev.expect(l_g.contains(c.p), "P on l_G");
    ev.expect(c.circum_o.contains(c.p), "P on C_O");
    const auto& d = c.traces[0];
    const auto a3 = c.t_p(c.traces_prime[0]);
    ev.note("A3", a3);
    ev.expect(a3 == midpoint(c.o, d), "A3 = T_P(D3) is the midpoint of OD");
    ev.expect(a3 == c.s1(a), "A3 = S1(A)");
    const ProjPoint<S> centroid_odq(Vec3<S>(c.o.normalized() + d.normalized() + c.q.normalized()));
    ev.expect(c.p == centroid_odq, "P is the centroid of ODQ");
    const S od = collinear_ratio(c.o, d, cc);
    ev.note("OD/OC", od);
    ev.expect(od * od == S(2), "(OD/OC)^2 = 2");
    ev.expect(c.family[0] && *c.family[0] == second_intersection(join(c.p, g), c.circum_o, c.p),
              "P_a is the second intersection of PG with C_O");
    // tangents from A to the locus conic touch it on l_G, where the trace ratio is extremal
    const auto locus = locus_conic<S>(0);
    const auto meet_lg = line_conic_intersections(l_g, locus, field_of(c.p.y()));
    const auto* two = std::get_if<TwoPoints<S>>(&meet_lg);
    ev.expect(two != nullptr, "l_G meets the locus conic in two points");
    if (two) {
        bool has_p = false;
        for (const auto& x : {two->first, two->second}) {
            has_p = has_p || x == c.p;
            ev.note("l_G.locus", x);
            ev.expect(polar(x, locus).contains(a), "tangent at " + x.str() + " passes through A");
            const S rr = collinear_ratio(c.medial[0], cevian_traces(x)[0], cc);
            ev.expect(rr * rr == S(2), "(DD0/D0C)^2 = 2 at " + x.str());
        }
        ev.expect(has_p, "P is one of the two points");
    }
    (void)b;
    return ev.done();
}

// ---------------------------------------------------------------------------
// Registry

template <class F>
std::function<Outcome(const AnyPrepared&)> on_construction(F f) {
    return [f](const AnyPrepared& ap) {
        return std::visit(
            [&](const auto& pr) -> Outcome {
                if (!pr.cs) return skip("hard_degeneracy: " + pr.construct_error);
                return f(*pr.cs);
            },
            ap);
    };
}

#define CEVIAN_CHECK(id, claim, fn) \
    CheckDef { id, claim, on_construction([](const auto& c) { return fn(c); }) }

Registry build_registry() {
    Registry r{
        CEVIAN_CHECK("thm_HO_formula", "H and O from the parallels equal the affine formulas", thm_ho_formula),
        CEVIAN_CHECK("lambda_images", "lambda(P) = Q', lambda(H) = Q, T_P^-1(H) = T_P'^-1(Q)", lambda_images),
        CEVIAN_CHECK("eta_reflection", "eta(O) = O', eta(H) = H', OO' and HH' parallel to PP'", eta_reflection),
        CEVIAN_CHECK("H_on_cevian_conic", "H and H' lie on the cevian conic C_P", h_on_cevian_conic),
        CEVIAN_CHECK("nine_point_pp_center", "center of N_P' is K(Q); T_P'^-1(N_P') is the circumconic with center O",
                     nine_point_pp_center),
        CEVIAN_CHECK("nine_point_H_structure", "N_H = K(C_O) = Hom(H,1/2)(C_O); N = midpoint(H,O)",
                     nine_point_h_structure),
        CEVIAN_CHECK("map_M", "M is a homothety or translation taking C_O to I with fixed point S = OQ.GV = OQ.O'Q'",
                     map_m),
        CEVIAN_CHECK("phi_map", "T_P K^-1 fixes Z; Phi_P identities; Phi_P = Phi_P'", phi_map),
        CEVIAN_CHECK("gen_feuerbach_tangency", "N_H and I are tangent at Z; Phi_P(N_H') = I'", gen_feuerbach_tangency),
        CEVIAN_CHECK("Z_intersections", "Z = GV.QN and K^-1(Z) = GV.OP'", z_intersections),
        CEVIAN_CHECK("Z_tilde_fourth_point", "R_O K^-1(Z) lies on C_P and C_O", z_tilde_fourth_point),
        CEVIAN_CHECK("S1T1_parallel", "S1T1 is parallel to BC (and the H = A variant)", s1t1_parallel),
        CEVIAN_CHECK("lemma_equivalences", "H = A iff QE = AF and QF = AE iff the two collinearities",
                     lemma_equivalences),
        CEVIAN_CHECK("four_points", "P, P_a, P_b, P_c share O and H; their cevian conics meet in A, B, C, H",
                     four_points),
        CEVIAN_CHECK("perspector_a", "Q is the perspector of D0E0F0 and lambda(ABC)", perspector_a),
        CEVIAN_CHECK("perspector_b", "H_tilde is the perspector of T_P^-1(ABC) and medial(Q_aQ_bQ_c)", perspector_b),
        CEVIAN_CHECK("perspector_c", "H is the perspector of ABC and medial(lambda^-1(ABC))", perspector_c),
        CEVIAN_CHECK("perspector_d", "H_tilde is the perspector of Q_aQ_bQ_c and D3E3F3", perspector_d),
        CEVIAN_CHECK("perspector_e", "H is the perspector of lambda^-1(ABC) and A3B3C3", perspector_e),
        CEVIAN_CHECK("gergonne_13_14_15", "C_P for the Gergonne point of 13-14-15 contains I, Na, Mi, H",
                     gergonne_13_14_15),
        CEVIAN_CHECK("gergonne_3_4_5", "Gergonne point of 3-4-5: Q = I, H = right-angle vertex", gergonne_3_4_5),
        CEVIAN_CHECK("locus_conic_CA", "P with H = A lies on xy + xz + yz = x^2 with its tangents and center",
                     locus_conic_ca),
        CEVIAN_CHECK("steiner_collapse", "P on the Steiner circumellipse gives O = H = Q at infinity",
                     steiner_collapse),
        CEVIAN_CHECK("psi_agreement", "conjugate-direction involutions of I, C_O, N_H agree", psi_agreement),
        CEVIAN_CHECK("H_tilde_midpoint", "T_P^-1(H) = midpoint(P', K^-1(H)) = R_O(Q)", h_tilde_midpoint),
        CEVIAN_CHECK("HA_fallback_tangency", "H = A: K(C_O) is tangent to C_O at A through the medial points",
                     ha_fallback_tangency),
        CEVIAN_CHECK("special_configuration", "H = A, O = D0, D3 = mid(AP'): translation, ratios 3 and sqrt 2",
                     special_configuration),
    };
    std::sort(r.begin(), r.end(), [](const CheckDef& x, const CheckDef& y) { return x.id < y.id; });
    return r;
}

#undef CEVIAN_CHECK

const CheckDef& find_check(const Registry& registry, const std::string& id) {
    for (const auto& def : registry)
        if (def.id == id) return def;
    throw Error(ErrorCode::UnknownCheck, "unknown check id " + id);
}

}  // namespace

const Registry& default_registry() {
    static const Registry registry = build_registry();
    return registry;
}

std::vector<std::string> check_ids(const Registry& registry) {
    std::vector<std::string> ids;
    for (const auto& def : registry) ids.push_back(def.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

CheckDef negated(CheckDef def) {
    auto inner = def.fn;
    def.fn = [inner](const AnyPrepared& p) {
        Outcome o = inner(p);
        if (o.status == Status::Pass) {
            o.status = Status::Fail;
            o.reason = "negated: claim held";
        } else if (o.status == Status::Fail) {
            o.status = Status::Pass;
        }
        return o;
    };
    def.claim = "NOT " + def.claim;
    return def;
}

CheckResult run_check(const CheckDef& def, const Configuration& config, const AnyPrepared& prepared) {
    CheckResult r;
    r.check_id = def.id;
    r.config_label = config.label;
    r.p = point_str(config.p);
    r.field = point_field(config.p);
    try {
        Outcome o = def.fn(prepared);
        r.status = o.status;
        r.reason = std::move(o.reason);
        r.witness = std::move(o.witness);
    } catch (const Error& e) {
        r.status = Status::Fail;
        r.reason = std::string("error: ") + e.what();
    }
    return r;
}

CheckResult run_check(const std::string& check_id, const AnyPoint& p, const Registry& registry) {
    const CheckDef& def = find_check(registry, check_id);
    return run_check(def, Configuration{"single", p}, prepare(p));
}

std::vector<Configuration> fixed_configurations() {
    using R = Rational;
    return {
        {"gergonne_3_4_5", ProjPoint<R>(R(2), R(3), R(6))},
        {"gergonne_13_14_15", ProjPoint<R>(R(21), R(24), R(28))},
        {"locus_A_6_3_2", ProjPoint<R>(R(6), R(3), R(2))},
        {"locus_A_-1_3_2", ProjPoint<R>(R(-1), R(3), R(2))},
        {"special_HA_sqrt2", special_point_ha()},
        {"steiner_2_2_-1", ProjPoint<R>(R(2), R(2), R(-1))},
    };
}

std::vector<Configuration> sampled_configurations(std::uint64_t seed, int count) {
    std::vector<Configuration> out;
    int i = 0;
    for (auto& p : sample_nondegenerate<Rational>(seed, count)) {
        std::string label = std::to_string(i++);
        label.insert(0, 3 - std::min<std::size_t>(3, label.size()), '0');
        out.push_back({"sample_" + label, std::move(p)});
    }
    return out;
}

SuiteReport run_suite(const std::vector<Configuration>& configs, const std::vector<std::string>& only,
                      const Registry& registry) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<const CheckDef*> selected;
    if (only.empty()) {
        for (const auto& def : registry) selected.push_back(&def);
    } else {
        std::set<std::string> seen;
        for (const auto& id : only)
            if (seen.insert(id).second) selected.push_back(&find_check(registry, id));
    }
    std::sort(selected.begin(), selected.end(), [](const CheckDef* x, const CheckDef* y) { return x->id < y->id; });

    SuiteReport report;
    report.configurations = configs;
    for (const auto* def : selected) {
        report.checks.push_back(def->id);
        report.tallies[def->id] = {};
    }
    std::vector<AnyPrepared> prepared;
    prepared.reserve(configs.size());
    for (const auto& c : configs) prepared.push_back(prepare(c.p));
    for (const auto* def : selected) {
        for (std::size_t i = 0; i < configs.size(); ++i) {
            CheckResult r = run_check(*def, configs[i], prepared[i]);
            Tally& t = report.tallies[def->id];
            (r.status == Status::Pass ? t.pass : r.status == Status::Fail ? t.fail : t.skipped) += 1;
            report.results.push_back(std::move(r));
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SuiteReport run_suite(std::uint64_t seed, int count, const std::vector<std::string>& only, const Registry& registry) {
    auto configs = sampled_configurations(seed, count);
    for (auto& c : fixed_configurations()) configs.push_back(std::move(c));
    SuiteReport report = run_suite(configs, only, registry);
    report.seed = seed;
    report.count = count;
    return report;
}

}  // namespace cevian
