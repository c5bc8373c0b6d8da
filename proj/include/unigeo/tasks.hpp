#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "affine.hpp"
#include "fuzz.hpp"
#include "hyperbolic.hpp"
#include "projective.hpp"
#include "scene.hpp"
#include "spread_poly.hpp"

namespace unigeo {

// Ordered key/value lines plus a verdict. Rendering is byte-deterministic:
// no timestamps, no addresses, fixed float formatting, insertion order.
struct Report {
    std::string task;
    std::vector<std::pair<std::string, std::string>> lines;
    bool ok{true};

    void add(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : lines)
            if (k == key)
                return &v;
        return nullptr;
    }
};

inline std::string render_text(const Report& r) {
    std::string out = "task = " + r.task + "\n";
    for (const auto& [k, v] : r.lines)
        out += k + " = " + v + "\n";
    out += std::string("ok = ") + (r.ok ? "true" : "false") + "\n";
    return out;
}

inline std::string render_json(const Report& r) {
    nlohmann::ordered_json j;
    j["task"] = r.task;
    j["ok"] = r.ok;
    auto& data = j["data"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.lines)
        data[k] = v;
    return j.dump(2) + "\n";
}

namespace detail {

inline std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Load-phase guard: anything the scene data trips over is a scene problem.
template <class Fn>
auto scene_step(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SceneError)
            throw;
        throw Error(ErrorCode::SceneError, e.what());
    }
}

template <class F>
QForm<F> build_form(const F& K, const Scene& s) {
    return scene_step([&] {
        std::vector<typename F::Scalar> entries;
        entries.reserve(s.dimension * s.dimension);
        for (std::size_t i = 0; i < s.dimension; ++i)
            for (std::size_t j = 0; j < s.dimension; ++j) {
                try {
                    entries.push_back(K.parse(s.form_rows[i][j]));
                } catch (const Error& e) {
                    scene_fail("form[" + std::to_string(i) + "][" + std::to_string(j) + "]", e.what());
                }
            }
        try {
            return QForm<F>(K, s.dimension, std::move(entries));
        } catch (const Error& e) {
            scene_fail("form", e.what());
        }
    });
}

template <class F>
Vec<F> get_affine(const F& K, const Scene& s, const std::string& name) {
    auto it = s.affine_points.find(name);
    if (it == s.affine_points.end()) {
        if (s.proj_points.count(name))
            scene_fail("points." + name, "projective point where an affine point is needed");
        scene_fail("points." + name, "not defined");
    }
    Vec<F> v;
    v.reserve(it->second.size());
    for (std::size_t i = 0; i < it->second.size(); ++i) {
        try {
            v.push_back(K.parse(it->second[i]));
        } catch (const Error& e) {
            scene_fail("points." + name + "[" + std::to_string(i) + "]", e.what());
        }
    }
    return v;
}

template <class F>
ProjPoint<F> get_proj(const F& K, const Scene& s, const std::string& name) {
    auto it = s.proj_points.find(name);
    if (it == s.proj_points.end()) {
        if (s.affine_points.count(name))
            scene_fail("points." + name, "affine point where a projective point is needed");
        scene_fail("points." + name, "not defined");
    }
    return scene_step([&] {
        try {
            return parse_proj_point(K, it->second);
        } catch (const Error& e) {
            scene_fail("points." + name, e.what());
        }
    });
}

template <class F>
typename F::Scalar get_value(const F& K, const std::map<std::string, std::string>& m,
                             const std::string& map_name, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end())
        scene_fail(map_name + "." + key, "required");
    try {
        return K.parse(it->second);
    } catch (const Error& e) {
        scene_fail(map_name + "." + key, e.what());
    }
}

template <class F>
std::string vec_str(const F& K, const Vec<F>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += K.str(v[i]);
    }
    return out + "]";
}

template <class F>
bool residual_ok(const F& K, const typename F::Scalar& r) {
    if constexpr (F::is_exact) {
        (void)K;
        return is_zero(r);
    } else {
        double d = K.to_double(r);
        return d < 1e-9 && d > -1e-9;
    }
}

template <class F>
void require_exact(const F&, const char* task) {
    if constexpr (!F::is_exact)
        throw Error(ErrorCode::InexactField, std::string(task) + " needs an exact field");
}

inline std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            out += ",";
        out += names[i];
    }
    return out;
}

inline const std::vector<std::string>& need_triangle(const Scene& s) {
    if (s.triangle.size() != 3)
        scene_fail("triangle", "required (three point names)");
    return s.triangle;
}

}  // namespace detail

inline void apply_expectations(Report& r, const Scene& s) {
    if (s.expect.empty())
        return;
    int failed = 0;
    for (const auto& [key, want] : s.expect) {
        const std::string* got = r.find(key);
        if (!got) {
            r.add("expect_failed_" + key, "expected '" + want + "', key missing");
            ++failed;
        } else if (*got != want) {
            r.add("expect_failed_" + key, "expected '" + want + "', got '" + *got + "'");
            ++failed;
        }
    }
    r.add("expect_checked", std::to_string(s.expect.size()));
    if (failed)
        r.ok = false;
}

// ---- affine triangle -------------------------------------------------

inline Report run_affine_triangle(const Scene& s) {
    Report r;
    r.task = "affine-triangle";
    visit_field(s.field, [&](const auto& K) {
        const auto& tri = detail::need_triangle(s);
        auto G = detail::build_form(K, s);
        auto u = detail::get_affine(K, s, tri[0]);
        auto v = detail::get_affine(K, s, tri[1]);
        auto w = detail::get_affine(K, s, tri[2]);

        r.add("field", K.name());
        r.add("dimension", std::to_string(s.dimension));
        r.add("vertices", detail::join_names(tri));
        auto m = measure_points(K, G, u, v, w);
        r.add("q_u", K.str(m.qU));
        r.add("q_v", K.str(m.qV));
        r.add("q_w", K.str(m.qW));
        r.add("collinear", m.collinear ? "true" : "false");
        r.add("s_u", m.sU ? K.str(*m.sU) : "undefined");
        r.add("s_v", m.sV ? K.str(*m.sV) : "undefined");
        r.add("s_w", m.sW ? K.str(*m.sW) : "undefined");

        auto laws = law_residuals(K, m);
        auto show = [&](const char* key, const std::optional<typename std::decay_t<decltype(K)>::Scalar>& x) {
            if (!x)
                return;
            r.add(key, K.str(*x));
            if (!detail::residual_ok(K, *x))
                r.ok = false;
        };
        show("residual_triple_quad", laws.triple_quad);
        show("residual_cross", laws.cross);
        show("residual_triple_spread", laws.triple_spread);
        show("residual_spread_uv", laws.spread_uv);
        show("residual_spread_vw", laws.spread_vw);
        show("residual_spread_uw", laws.spread_uw);

        if (!m.collinear) {
            try {
                AffineTriangle<std::decay_t<decltype(K)>> t(K, u, v, w);
                auto c = triangle_centers(K, G, t);
                r.add("circumcenter", detail::vec_str(K, c.circumcenter));
                r.add("circumquadrance", K.str(c.circumquadrance));
                r.add("orthocenter", detail::vec_str(K, c.orthocenter));
                r.add("centroid", detail::vec_str(K, c.centroid));
                r.add("nine_point", detail::vec_str(K, c.nine_point));
                r.add("euler_collinear", c.euler_collinear ? "true" : "false");
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SingularCenterSystem && e.code() != ErrorCode::InexactDivision &&
                    e.code() != ErrorCode::UnsupportedField)
                    throw;
                r.add("centers", std::string("unavailable (") + error_code_name(e.code()) + ")");
            }
        }
    });
    apply_expectations(r, s);
    return r;
}

// ---- projective triangle ---------------------------------------------

inline Report run_projective_triangle(const Scene& s) {
    Report r;
    r.task = "projective-triangle";
    visit_field(s.field, [&](const auto& K) {
        const auto& tri = detail::need_triangle(s);
        auto G = detail::build_form(K, s);
        auto u = detail::get_proj(K, s, tri[0]);
        auto v = detail::get_proj(K, s, tri[1]);
        auto w = detail::get_proj(K, s, tri[2]);

        r.add("field", K.name());
        r.add("dimension", std::to_string(s.dimension));
        r.add("vertices", detail::join_names(tri));
        auto m = proj_triangle_measure(K, G, u, v, w);
        r.add("q_u", K.str(m.qu));
        r.add("q_v", K.str(m.qv));
        r.add("q_w", K.str(m.qw));
        r.add("S_u", K.str(m.Su));
        r.add("S_v", K.str(m.Sv));
        r.add("S_w", K.str(m.Sw));
        r.add("quadrea", K.str(m.quadrea));
        if (!is_zero(m.qu))
            r.add("spread_quadrance_ratio", K.str(m.Su / m.qu));

        auto laws = projective_law_residuals(K, m);
        auto show = [&](const char* key, const typename std::decay_t<decltype(K)>::Scalar& x) {
            r.add(key, K.str(x));
            if (!detail::residual_ok(K, x))
                r.ok = false;
        };
        show("residual_cross", laws.cross);
        show("residual_dual_cross", laws.dual_cross);
        show("residual_spread_uv", laws.spread_uv);
        show("residual_spread_vw", laws.spread_vw);
        show("residual_spread_uw", laws.spread_uw);
        if (laws.pythagoras)
            show("residual_pythagoras", *laws.pythagoras);
        if (laws.dual_pythagoras)
            show("residual_dual_pythagoras", *laws.dual_pythagoras);

        try {
            auto o = proj_orthocenter(K, G, u, v, w);
            r.add("orthocenter", proj_point_str(K, o));
        } catch (const Error& e) {
            r.add("orthocenter", std::string("unavailable (") + error_code_name(e.code()) + ")");
        }
    });
    apply_expectations(r, s);
    return r;
}

// ---- right-triangle solver --------------------------------------------

inline Report run_solve_right(const Scene& s) {
    Report r;
    r.task = "solve-right";
    visit_field(s.field, [&](const auto& K) {
        detail::require_exact(K, "solve-right");
        r.add("field", K.name());
        NapierKnowns<std::decay_t<decltype(K)>> kn;
        for (const auto& [key, raw] : s.knowns) {
            auto val = detail::get_value(K, s.knowns, "knowns", key);
            if (key == "q_u")
                kn.qu = val;
            else if (key == "q_v")
                kn.qv = val;
            else if (key == "q_w")
                kn.qw = val;
            else if (key == "S_u")
                kn.Su = val;
            else if (key == "S_v")
                kn.Sv = val;
            else
                detail::scene_fail("knowns." + key, "unknown quantity (q_u, q_v, q_w, S_u, S_v)");
            r.add("known_" + key, raw);
        }
        auto sol = napier_solve(K, kn);
        r.add("q_u", K.str(sol.qu));
        r.add("q_v", K.str(sol.qv));
        r.add("q_w", K.str(sol.qw));
        r.add("S_u", K.str(sol.Su));
        r.add("S_v", K.str(sol.Sv));
        r.add("S_w", K.str(K.one()));
        r.add("right_pair_ambiguous", sol.right_pair_ambiguous ? "true" : "false");
        auto show = [&](const char* key, const typename std::decay_t<decltype(K)>::Scalar& x) {
            r.add(key, K.str(x));
            if (!is_zero(x))
                r.ok = false;
        };
        show("residual_thales_u", sol.Su * sol.qw - sol.qu);
        show("residual_thales_v", sol.Sv * sol.qw - sol.qv);
        show("residual_pythagoras", sol.qu + sol.qv - sol.qu * sol.qv - sol.qw);
    });
    apply_expectations(r, s);
    return r;
}

// ---- Lambert quadrilateral ---------------------------------------------

inline Report run_lambert(const Scene& s) {
    Report r;
    r.task = "lambert";
    visit_field(s.field, [&](const auto& K) {
        r.add("field", K.name());
        auto q = detail::get_value(K, s.values, "values", "q");
        auto p = detail::get_value(K, s.values, "values", "p");
        r.add("q", K.str(q));
        r.add("p", K.str(p));
        auto sol = lambert_solve(K, q, p);
        r.add("x", K.str(sol.x));
        r.add("y", K.str(sol.y));
        r.add("s", K.str(sol.s));
        r.add("r", K.str(sol.r));
        r.add("S_vu_vz", K.str(sol.S_vu_vz));
        r.add("S_vw_vz", K.str(sol.S_vw_vz));
        r.add("S_wv_wu", K.str(sol.S_wv_wu));
        r.add("S_uw_uv", K.str(sol.S_uw_uv));
        r.add("S_uw_uz", K.str(sol.S_uw_uz));
        r.add("S_wu_wz", K.str(sol.S_wu_wz));
        r.add("S_zu_zw", K.str(sol.S_zu_zw));
    });
    apply_expectations(r, s);
    return r;
}

// ---- right hexagon -----------------------------------------------------

inline Report run_hexagon(const Scene& s) {
    Report r;
    r.task = "hexagon";
    visit_field(s.field, [&](const auto& K) {
        detail::require_exact(K, "hexagon");
        if (s.hexagon.size() != 6)
            detail::scene_fail("hexagon", "required (six point names)");
        auto G = detail::build_form(K, s);
        std::array<ProjPoint<std::decay_t<decltype(K)>>, 6> pts = {
            detail::get_proj(K, s, s.hexagon[0]), detail::get_proj(K, s, s.hexagon[1]),
            detail::get_proj(K, s, s.hexagon[2]), detail::get_proj(K, s, s.hexagon[3]),
            detail::get_proj(K, s, s.hexagon[4]), detail::get_proj(K, s, s.hexagon[5])};
        r.add("field", K.name());
        r.add("dimension", std::to_string(s.dimension));
        r.add("vertices", detail::join_names(s.hexagon));
        auto h = right_hexagon_check(K, G, pts);
        static const char* side_keys[6] = {"side_12", "side_23", "side_34", "side_45", "side_56", "side_61"};
        for (int i = 0; i < 6; ++i)
            r.add(side_keys[i], K.str(h.sides[i]));
        r.add("ratio_a", K.str(h.ratios[0]));
        r.add("ratio_b", K.str(h.ratios[1]));
        r.add("ratio_c", K.str(h.ratios[2]));
        r.add("alternating_ratios_equal", h.equal ? "true" : "false");
        if (!h.equal)
            r.ok = false;
    });
    apply_expectations(r, s);
    return r;
}

// ---- spread bisectors ----------------------------------------------------

inline Report run_bisectors(const Scene& s) {
    Report r;
    r.task = "bisectors";
    visit_field(s.field, [&](const auto& K) {
        detail::require_exact(K, "bisectors");
        const auto& tri = detail::need_triangle(s);
        auto G = detail::build_form(K, s);
        auto u = detail::get_proj(K, s, tri[0]);
        auto v = detail::get_proj(K, s, tri[1]);
        auto w = detail::get_proj(K, s, tri[2]);
        r.add("field", K.name());
        r.add("dimension", std::to_string(s.dimension));
        r.add("vertices", detail::join_names(tri));

        std::vector<std::size_t> apexes;
        if (s.vertex.empty()) {
            apexes = {0, 1, 2};
        } else {
            if (s.vertex == tri[0])
                apexes = {0};
            else if (s.vertex == tri[1])
                apexes = {1};
            else if (s.vertex == tri[2])
                apexes = {2};
            else
                detail::scene_fail("vertex", "'" + s.vertex + "' is not a triangle vertex");
        }
        const ProjPoint<std::decay_t<decltype(K)>>* pts[3] = {&u, &v, &w};
        for (std::size_t a : apexes) {
            const auto& apex = *pts[a];
            const auto& e1 = *pts[(a + 1) % 3];
            const auto& e2 = *pts[(a + 2) % 3];
            std::string prefix = "at_" + tri[a] + "_";
            auto found = vertex_bisectors(K, G, apex, e1, e2);
            r.add(prefix + "count", std::to_string(found.size()));
            for (std::size_t i = 0; i < found.size(); ++i) {
                r.add(prefix + "bisector_" + std::to_string(i), proj_point_str(K, found[i]));
                try {
                    auto sp = proj_spread(K, G, apex, e1, found[i]);
                    r.add(prefix + "spread_" + std::to_string(i), K.str(sp));
                } catch (const Error& e) {
                    r.add(prefix + "spread_" + std::to_string(i),
                          std::string("unavailable (") + error_code_name(e.code()) + ")");
                }
            }
        }
    });
    apply_expectations(r, s);
    return r;
}

// ---- hyperbolic disk bridge ----------------------------------------------

inline Report run_hyperbolic(const Scene& s, double tol = 1e-9) {
    Report r;
    r.task = "hyperbolic-demo";
    visit_field(s.field, [&](const auto& K) {
        if constexpr (!BridgeField<std::decay_t<decltype(K)>>) {
            throw Error(ErrorCode::UnsupportedField, "disk crosscheck needs a field that bridges to double");
        } else {
            if (s.disk.size() != 3)
                detail::scene_fail("disk", "required (three point names)");
            auto G = detail::build_form(K, s);
            auto a1 = detail::get_proj(K, s, s.disk[0]);
            auto a2 = detail::get_proj(K, s, s.disk[1]);
            auto a3 = detail::get_proj(K, s, s.disk[2]);
            r.add("field", K.name());
            r.add("vertices", detail::join_names(s.disk));
            auto c = hyperbolic_crosscheck(K, G, a1, a2, a3, tol);
            for (int i = 0; i < 3; ++i)
                r.add("z_" + std::to_string(i + 1), "(" + detail::fmt_double(c.z[i].x) + ", " +
                                                        detail::fmt_double(c.z[i].y) + ")");
            for (int i = 0; i < 3; ++i)
                r.add("rho_" + std::to_string(i + 1), detail::fmt_double(c.rho[i]));
            for (int i = 0; i < 3; ++i)
                r.add("theta_" + std::to_string(i + 1), detail::fmt_double(c.theta[i]));
            for (int i = 0; i < 3; ++i)
                r.add("q_" + std::to_string(i + 1), detail::fmt_double(c.q[i]));
            for (int i = 0; i < 3; ++i)
                r.add("S_" + std::to_string(i + 1), detail::fmt_double(c.S[i]));
            for (int i = 0; i < 3; ++i)
                r.add("sine_ratio_" + std::to_string(i + 1), detail::fmt_double(c.sine_ratio[i]));
            r.add("max_residual", detail::fmt_double(c.max_residual));
            if (!c.ok)
                r.ok = false;
        }
    });
    apply_expectations(r, s);
    return r;
}

// ---- verify: run every law suite the scene supports -----------------------

inline Report run_verify(const Scene& s) {
    Report r;
    r.task = "verify";
    visit_field(s.field, [&](const auto& K) {
        detail::require_exact(K, "verify");
        auto G = detail::build_form(K, s);
        r.add("field", K.name());
        r.add("dimension", std::to_string(s.dimension));
        bool any = false;
        auto verdict = [&](const std::string& key, bool pass) {
            r.add(key, pass ? "pass" : "fail");
            if (!pass)
                r.ok = false;
            any = true;
        };

        if (s.triangle.size() == 3) {
            if (s.affine_points.count(s.triangle[0])) {
                auto u = detail::get_affine(K, s, s.triangle[0]);
                auto v = detail::get_affine(K, s, s.triangle[1]);
                auto w = detail::get_affine(K, s, s.triangle[2]);
                auto m = measure_points(K, G, u, v, w);
                auto laws = law_residuals(K, m);
                verdict("affine_laws", laws.all_zero());
                auto rr = right_residual_at_w(K, G, u, v, w);
                verdict("pythagoras_equivalence", m.qU + m.qV - m.qW == rr + rr);
            } else {
                auto u = detail::get_proj(K, s, s.triangle[0]);
                auto v = detail::get_proj(K, s, s.triangle[1]);
                auto w = detail::get_proj(K, s, s.triangle[2]);
                auto m = proj_triangle_measure(K, G, u, v, w);
                verdict("projective_laws", projective_law_residuals(K, m).all_zero());
                verdict("quadrea_symmetric", m.Su * m.qv * m.qw == m.Sv * m.qu * m.qw &&
                                                 m.Sv * m.qu * m.qw == m.Sw * m.qu * m.qv);
                verdict("dual_spread_route", proj_spread_expanded(K, G, u, v, w) == m.Su &&
                                                 proj_spread_expanded(K, G, v, u, w) == m.Sv &&
                                                 proj_spread_expanded(K, G, w, u, v) == m.Sw);
            }
        }
        if (s.hexagon.size() == 6) {
            std::array<ProjPoint<std::decay_t<decltype(K)>>, 6> pts = {
                detail::get_proj(K, s, s.hexagon[0]), detail::get_proj(K, s, s.hexagon[1]),
                detail::get_proj(K, s, s.hexagon[2]), detail::get_proj(K, s, s.hexagon[3]),
                detail::get_proj(K, s, s.hexagon[4]), detail::get_proj(K, s, s.hexagon[5])};
            verdict("hexagon_ratios", right_hexagon_check(K, G, pts).equal);
        }
        if (s.disk.size() == 3) {
            if constexpr (!BridgeField<std::decay_t<decltype(K)>>) {
                throw Error(ErrorCode::UnsupportedField, "disk crosscheck needs a field that bridges to double");
            } else {
                auto a1 = detail::get_proj(K, s, s.disk[0]);
                auto a2 = detail::get_proj(K, s, s.disk[1]);
                auto a3 = detail::get_proj(K, s, s.disk[2]);
                verdict("disk_crosscheck", hyperbolic_crosscheck(K, G, a1, a2, a3).ok);
            }
        }
        if (!any)
            detail::scene_fail("triangle", "scene defines nothing to verify (need triangle, hexagon, or disk)");
    });
    // expect blocks pin the scene's primary task output, so verify skips them
    return r;
}

// ---- scene-free tasks ------------------------------------------------------

inline Report run_spread_poly_task(int n, const std::string& eval_at, const FieldDescriptor& fd) {
    if (n < 0)
        throw Error(ErrorCode::SceneError, "spread polynomial index must be nonnegative");
    Report r;
    r.task = "spread-poly";
    r.add("n", std::to_string(n));
    auto p = spread_poly(n);
    r.add("polynomial", p.str("s"));
    r.add("degree", std::to_string(p.degree()));
    if (p.degree() > 0)
        r.add("leading_coefficient", p.coeff(p.degree()).str());
    if (!(spread_poly_via_chebyshev(n) == p))
        r.ok = false;
    r.add("chebyshev_route_agrees", r.ok ? "true" : "false");
    if (!eval_at.empty()) {
        visit_field(fd, [&](const auto& K) {
            typename std::decay_t<decltype(K)>::Scalar x;
            try {
                x = K.parse(eval_at);
            } catch (const Error& e) {
                detail::scene_fail("eval", e.what());
            }
            r.add("field", K.name());
            r.add("eval_at", K.str(x));
            r.add("value", K.str(p.eval(K, x)));
        });
    }
    return r;
}

inline Report run_cyclotomic_task(int k) {
    if (k <= 0)
        throw Error(ErrorCode::SceneError, "cyclotomic index must be positive");
    Report r;
    r.task = "cyclotomic";
    r.add("k", std::to_string(k));
    auto p = spread_cyclotomic(k);
    r.add("polynomial", p.str("s"));
    r.add("degree", std::to_string(p.degree()));
    return r;
}

inline Report run_fuzz_task(const FieldDescriptor& fd, std::uint64_t seed, int count) {
    Report r;
    r.task = "fuzz";
    visit_field(fd, [&](const auto& K) {
        detail::require_exact(K, "fuzz");
        // require_exact has already thrown for inexact fields; the guard
        // only keeps the exactness static_assert inside run_fuzz happy.
        if constexpr (std::decay_t<decltype(K)>::is_exact) {
            FuzzOptions opt;
            opt.seed = seed;
            opt.count = count;
            auto st = run_fuzz(K, opt);
            r.add("field", K.name());
            r.add("seed", std::to_string(seed));
            r.add("count", std::to_string(count));
            r.add("forms", std::to_string(st.forms));
            r.add("affine_triangles", std::to_string(st.affine_triangles));
            r.add("collinear_triples", std::to_string(st.collinear_triples));
            r.add("constructed_right_affine", std::to_string(st.perp_affine));
            r.add("projective_triangles", std::to_string(st.proj_triangles));
            r.add("rescale_checks", std::to_string(st.rescales));
            r.add("dual_route_checks", std::to_string(st.dual_route));
            r.add("gram_pencil_checks", std::to_string(st.gram_pencil));
            r.add("constructed_right_projective", std::to_string(st.perp_proj));
            r.add("napier_roundtrips", std::to_string(st.napier_roundtrips));
            r.add("lambert_checks", std::to_string(st.lambert_checks));
            r.add("line_coordinate_checks", std::to_string(st.line_coord_checks));
            r.add("skipped", std::to_string(st.skipped));
            r.add("failures", std::to_string(st.failure_count));
            for (std::size_t i = 0; i < st.failures.size(); ++i)
                r.add("failure_" + std::to_string(i), st.failures[i]);
            if (!st.ok())
                r.ok = false;
        }
    });
    return r;
}

}  // namespace unigeo
