#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "affine.hpp"
#include "hyperbolic.hpp"
#include "projective.hpp"

namespace unigeo {

struct FuzzOptions {
    std::uint64_t seed{1};
    int count{200};
};

struct FuzzStats {
    int forms{0};
    int affine_triangles{0};
    int collinear_triples{0};
    int perp_affine{0};
    int proj_triangles{0};
    int rescales{0};
    int dual_route{0};
    int gram_pencil{0};
    int perp_proj{0};
    int napier_roundtrips{0};
    int lambert_checks{0};
    int line_coord_checks{0};
    int skipped{0};
    int failure_count{0};
    std::vector<std::string> failures;  // first few, for the report

    void fail(int iter, const std::string& what) {
        ++failure_count;
        if (failures.size() < 8)
            failures.push_back("iter " + std::to_string(iter) + ": " + what);
    }
    bool ok() const { return failure_count == 0; }
};

namespace detail {

template <class F>
typename F::Scalar rand_scalar(const F& K, std::mt19937_64& rng) {
    if constexpr (F::is_finite) {
        return K.from_int(static_cast<long long>(rng() % K.modulus()));
    } else {
        long long num = static_cast<long long>(rng() % 19) - 9;
        long long den = 1 + static_cast<long long>(rng() % 6);
        return K.from_int(num) / K.from_int(den);
    }
}

template <class F>
typename F::Scalar rand_nonzero(const F& K, std::mt19937_64& rng) {
    for (int i = 0; i < 64; ++i) {
        auto s = rand_scalar(K, rng);
        if (!is_zero(s))
            return s;
    }
    return K.one();
}

template <class F>
Vec<F> rand_vec(const F& K, std::mt19937_64& rng, std::size_t n) {
    Vec<F> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(rand_scalar(K, rng));
    return v;
}

// Random symmetric form; every fifth call duplicates the first row/column
// into the last so the matrix is guaranteed singular.
template <class F>
QForm<F> rand_form(const F& K, std::mt19937_64& rng, std::size_t n, bool singular) {
    std::vector<typename F::Scalar> e(n * n, K.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto s = rand_scalar(K, rng);
            e[i * n + j] = s;
            e[j * n + i] = s;
        }
    if (singular && n >= 2) {
        for (std::size_t j = 0; j < n; ++j) {
            e[(n - 1) * n + j] = e[0 * n + j];
            e[j * n + (n - 1)] = e[j * n + 0];
        }
        e[(n - 1) * n + (n - 1)] = e[0];
        e[(n - 1) * n + 0] = e[0];
        e[0 * n + (n - 1)] = e[0];
    }
    return QForm<F>(K, n, std::move(e));
}

// Solves c . x = 0 for a random x: fix all free coordinates randomly and
// balance at one index where c is nonzero. Empty optional when c == 0.
template <class F>
std::optional<Vec<F>> rand_kernel_of_functional(const F& K, std::mt19937_64& rng, const Vec<F>& c) {
    std::size_t pivot = c.size();
    for (std::size_t j = 0; j < c.size(); ++j)
        if (!is_zero(c[j])) {
            pivot = j;
            break;
        }
    if (pivot == c.size())
        return std::nullopt;
    for (int attempt = 0; attempt < 32; ++attempt) {
        Vec<F> x = rand_vec(K, rng, c.size());
        auto acc = K.zero();
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != pivot)
                acc += c[j] * x[j];
        x[pivot] = -acc / c[pivot];
        if (!all_zero(x))
            return x;
    }
    return std::nullopt;
}

// Functional whose kernel is the set of X with line wX perpendicular to
// line wv at w: coefficients of a_w b_vX - b_wv b_wX in X.
template <class F>
Vec<F> perp_functional(const F& K, const QForm<F>& G, const Vec<F>& w, const Vec<F>& v) {
    auto aw = G.eval(w, w);
    auto bwv = G.eval(w, v);
    std::size_t n = G.dim();
    Vec<F> c(n, K.zero());
    for (std::size_t j = 0; j < n; ++j) {
        auto gv = K.zero();
        auto gw = K.zero();
        for (std::size_t i = 0; i < n; ++i) {
            gv += G.at(j, i) * v[i];
            gw += G.at(j, i) * w[i];
        }
        c[j] = aw * gv - bwv * gw;
    }
    return c;
}

}  // namespace detail

// Randomized law checking over one exact field: affine and projective law
// residues, constructed perpendicularity, representative rescaling, solver
// round trips, and the 3-D line-coordinate formulas. Every assertion is an
// exact scalar comparison.
template <class F>
FuzzStats run_fuzz(const F& K, const FuzzOptions& opt) {
    static_assert(F::is_exact, "fuzzing asserts exact residues");
    std::mt19937_64 rng(opt.seed);
    FuzzStats st;

    const std::size_t dims[4] = {2, 3, 4, 5};
    int form_stride = opt.count >= 12 ? opt.count / 12 : 1;

    std::optional<QForm<F>> form;
    std::size_t dim = 0;
    bool hyperbolic3 = false;

    for (int iter = 0; iter < opt.count; ++iter) {
        int fi = iter / form_stride;
        if (!form || iter % form_stride == 0) {
            dim = dims[fi % 4];
            hyperbolic3 = dim == 3 && (fi / 4) % 2 == 0;
            if (hyperbolic3)
                form = QForm<F>::diagonal(K, {K.one(), K.one(), -K.one()});
            else
                form = detail::rand_form(K, rng, dim, fi % 5 == 4);
            ++st.forms;
        }
        const QForm<F>& G = *form;

        // ---- affine triangle with all spreads defined ----
        {
            bool made = false;
            for (int tries = 0; tries < 60 && !made; ++tries) {
                auto u = detail::rand_vec(K, rng, dim);
                auto v = detail::rand_vec(K, rng, dim);
                auto w = detail::rand_vec(K, rng, dim);
                if (vec_eq(u, v) || vec_eq(u, w) || vec_eq(v, w))
                    continue;
                auto m = measure_points(K, G, u, v, w);
                if (m.collinear || !m.spreads_complete())
                    continue;
                made = true;
                ++st.affine_triangles;
                auto r = law_residuals(K, m);
                if (!r.all_zero())
                    st.fail(iter, "affine law residue nonzero");
                // Pythagoras equivalence through the exact identity
                // qU + qV - qW = 2 (u-w).(v-w).
                auto rr = right_residual_at_w(K, G, u, v, w);
                if (!(m.qU + m.qV - m.qW == rr + rr))
                    st.fail(iter, "pythagoras identity broken");
                // Collinear stretch of the same base edge.
                auto lam = detail::rand_scalar(K, rng);
                auto c = vec_add(u, vec_scale(lam, vec_sub(v, u)));
                if (!vec_eq(c, u) && !vec_eq(c, v)) {
                    auto mc = measure_points(K, G, u, v, c);
                    if (!mc.collinear)
                        st.fail(iter, "stretched point left the line");
                    else {
                        auto rc = law_residuals(K, mc);
                        if (!rc.all_zero())
                            st.fail(iter, "triple quad residue nonzero");
                        else
                            ++st.collinear_triples;
                    }
                }
            }
            if (!made)
                ++st.skipped;
        }

        // ---- constructed affine right angle: Pythagoras + Thales ----
        {
            bool made = false;
            for (int tries = 0; tries < 60 && !made; ++tries) {
                auto u = detail::rand_vec(K, rng, dim);
                auto e1 = detail::rand_vec(K, rng, dim);
                if (all_zero(e1) || is_zero(G.eval(e1, e1)))
                    continue;
                auto e2 = detail::rand_vec(K, rng, dim);
                auto e2p = vec_sub(e2, vec_scale(G.eval(e2, e1) / G.eval(e1, e1), e1));
                if (all_zero(e2p) || is_zero(G.eval(e2p, e2p)))
                    continue;
                auto v = vec_add(u, e1);
                auto w = vec_add(u, e2p);
                if (vec_eq(v, w))
                    continue;
                auto m = measure_points(K, G, u, v, w);
                if (m.collinear || !m.spreads_complete())
                    continue;
                made = true;
                ++st.perp_affine;
                if (!is_zero(right_residual_at_w(K, G, v, w, u)))
                    st.fail(iter, "constructed right angle is not right");
                if (!(m.qU == m.qV + m.qW))
                    st.fail(iter, "pythagoras fails at constructed right angle");
                if (!(*m.sU == K.one()))
                    st.fail(iter, "right vertex spread is not 1");
                if (!(*m.sV * m.qU == m.qV) || !(*m.sW * m.qU == m.qW))
                    st.fail(iter, "thales ratios fail at right triangle");
            }
            if (!made)
                ++st.skipped;
        }

        if (dim < 3)
            continue;

        // ---- projective triangle ----
        ProjPoint<F> u{Vec<F>{}}, v{Vec<F>{}}, w{Vec<F>{}};
        bool made = false;
        ProjTriangleMeasure<F> m{K.zero(), K.zero(), K.zero(), K.zero(), K.zero(), K.zero(), K.zero()};
        for (int tries = 0; tries < 80 && !made; ++tries) {
            auto a = detail::rand_vec(K, rng, dim);
            auto b = detail::rand_vec(K, rng, dim);
            auto c = detail::rand_vec(K, rng, dim);
            if (all_zero(a) || all_zero(b) || all_zero(c))
                continue;
            try {
                u = make_proj_point(K, a);
                v = make_proj_point(K, b);
                w = make_proj_point(K, c);
                m = proj_triangle_measure(K, G, u, v, w);
                made = true;
            } catch (const Error&) {
            }
        }
        if (!made) {
            ++st.skipped;
            continue;
        }
        ++st.proj_triangles;

        auto r = projective_law_residuals(K, m);
        if (!r.all_zero())
            st.fail(iter, "projective law residue nonzero");
        if (!(m.Su * m.qv * m.qw == m.Sv * m.qu * m.qw) || !(m.Sv * m.qu * m.qw == m.Sw * m.qu * m.qv))
            st.fail(iter, "quadrea is not symmetric");

        // Dual evaluation route for each spread.
        if (!(proj_spread_expanded(K, G, u, v, w) == m.Su) ||
            !(proj_spread_expanded(K, G, v, u, w) == m.Sv) ||
            !(proj_spread_expanded(K, G, w, u, v) == m.Sw))
            st.fail(iter, "expanded spread route disagrees");
        else
            ++st.dual_route;

        // Rescaling representatives must not move any measurement.
        {
            auto u2 = make_proj_point(K, vec_scale(detail::rand_nonzero(K, rng), u.rep));
            auto v2 = make_proj_point(K, vec_scale(detail::rand_nonzero(K, rng), v.rep));
            auto w2 = make_proj_point(K, vec_scale(detail::rand_nonzero(K, rng), w.rep));
            auto m2 = proj_triangle_measure(K, G, u2, v2, w2);
            if (!(m2.qu == m.qu) || !(m2.qv == m.qv) || !(m2.qw == m.qw) || !(m2.Su == m.Su) ||
                !(m2.Sv == m.Sv) || !(m2.Sw == m.Sw))
                st.fail(iter, "measurements moved under rescaling");
            else
                ++st.rescales;
        }

        // A fourth coplanar point: Gram determinant and the pencil triple
        // spread residue both vanish.
        {
            auto z = vec_add(vec_scale(detail::rand_scalar(K, rng), u.rep),
                             vec_add(vec_scale(detail::rand_scalar(K, rng), v.rep),
                                     vec_scale(detail::rand_scalar(K, rng), w.rep)));
            if (!all_zero(z)) {
                if (!is_zero(gram_determinant(K, G, {u.rep, v.rep, w.rep, z})))
                    st.fail(iter, "coplanar gram determinant nonzero");
                try {
                    auto zp = make_proj_point(K, z);
                    auto s1 = proj_spread(K, G, zp, u, v);
                    auto s2 = proj_spread(K, G, zp, v, w);
                    auto s3 = proj_spread(K, G, zp, u, w);
                    if (!is_zero(triple_spread_residual(s1, s2, s3)))
                        st.fail(iter, "pencil triple spread residue nonzero");
                    ++st.gram_pencil;
                } catch (const Error&) {
                    // null lines in the pencil: no assertion applies
                }
            }
        }

        // Constructed projective right angle at w: forward Pythagoras only.
        {
            auto c = detail::perp_functional(K, G, w.rep, u.rep);
            auto x = detail::rand_kernel_of_functional(K, rng, c);
            if (x) {
                try {
                    auto xp = make_proj_point(K, *x);
                    auto mm = proj_triangle_measure(K, G, u, xp, w);
                    if (mm.Sw == K.one()) {
                        ++st.perp_proj;
                        auto rr = projective_law_residuals(K, mm);
                        if (!rr.pythagoras || !is_zero(*rr.pythagoras))
                            st.fail(iter, "projective pythagoras fails under constructed right angle");
                        // Napier round trips from every pair of knowns.
                        NapierSolution<F> base{mm.qu, mm.qv, mm.qw, mm.Su, mm.Sv, false};
                        bool round_ok = true;
                        for (int which = 0; which < 10 && round_ok; ++which) {
                            NapierKnowns<F> kn;
                            switch (which) {
                                case 0: kn.qu = base.qu; kn.qv = base.qv; break;
                                case 1: kn.qu = base.qu; kn.qw = base.qw; break;
                                case 2: kn.qv = base.qv; kn.qw = base.qw; break;
                                case 3: kn.Su = base.Su; kn.Sv = base.Sv; break;
                                case 4: kn.Su = base.Su; kn.qw = base.qw; break;
                                case 5: kn.Sv = base.Sv; kn.qw = base.qw; break;
                                case 6: kn.Su = base.Su; kn.qu = base.qu; break;
                                case 7: kn.Sv = base.Sv; kn.qv = base.qv; break;
                                case 8: kn.Su = base.Su; kn.qv = base.qv; break;
                                case 9: kn.Sv = base.Sv; kn.qu = base.qu; break;
                            }
                            try {
                                auto sol = napier_solve(K, kn);
                                if (!(sol.qu == base.qu) || !(sol.qv == base.qv) || !(sol.qw == base.qw) ||
                                    !(sol.Su == base.Su) || !(sol.Sv == base.Sv))
                                    round_ok = false;
                            } catch (const Error& e) {
                                // UndefinedCase is honest on special values; anything else is a bug
                                if (e.code() != ErrorCode::UndefinedCase)
                                    round_ok = false;
                            }
                        }
                        if (round_ok)
                            ++st.napier_roundtrips;
                        else
                            st.fail(iter, "napier round trip mismatch");
                    }
                } catch (const Error&) {
                }
            }
        }

        // 3-D diag(1,1,-1): line coordinates, meets, direct spread formula,
        // and the Lambert quadrilateral built from actual perpendiculars.
        if (hyperbolic3) {
            try {
                auto L1 = line_coords_3d(K, u, v);
                auto L2 = line_coords_3d(K, u, w);
                if (!is_zero(line_incidence(K, L1, u)) || !is_zero(line_incidence(K, L1, v)))
                    st.fail(iter, "line coordinates miss their points");
                auto mt = line_meet_3d(K, L1, L2);
                if (!proj_eq(K, mt, u))
                    st.fail(iter, "meet of concurrent lines is wrong");
                auto s = spread_from_line_coords(K, G, L1, L2);
                if (!(s == m.Su))
                    st.fail(iter, "line-coordinate spread disagrees");
                ++st.line_coord_checks;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::UndefinedSpread)
                    st.fail(iter, std::string("line coords: ") + e.what());
            }

            try {
                // Right spreads at u and w against the common line through v.
                auto cv = detail::perp_functional(K, G, v.rep, u.rep);
                auto wk = detail::rand_kernel_of_functional(K, rng, cv);
                if (wk && !all_zero(*wk)) {
                    auto wp = make_proj_point(K, *wk);
                    auto q = proj_quadrance(K, G, u, v);
                    auto p = proj_quadrance(K, G, v, wp);
                    auto sol = lambert_solve(K, q, p);
                    auto fu = detail::perp_functional(K, G, u.rep, v.rep);
                    auto fw = detail::perp_functional(K, G, wp.rep, v.rep);
                    auto ku = kernel_basis(K, Mat<F>{fu}, 3);
                    auto kw = kernel_basis(K, Mat<F>{fw}, 3);
                    if (ku.size() == 2 && kw.size() == 2) {
                        auto meet = meet_spans(K, ku[0], ku[1], kw[0], kw[1]);
                        if (meet.kind == SpanMeet<F>::Kind::Point) {
                            auto z = make_proj_point(K, meet.point);
                            if (!(proj_quadrance(K, G, u, z) == sol.x))
                                st.fail(iter, "lambert x mismatch");
                            if (!(proj_quadrance(K, G, wp, z) == sol.y))
                                st.fail(iter, "lambert y mismatch");
                            if (!(proj_quadrance(K, G, u, wp) == sol.s))
                                st.fail(iter, "lambert s mismatch");
                            if (!(proj_quadrance(K, G, v, z) == sol.r))
                                st.fail(iter, "lambert r mismatch");
                            if (!(proj_spread(K, G, v, u, z) == sol.S_vu_vz) ||
                                !(proj_spread(K, G, v, wp, z) == sol.S_vw_vz) ||
                                !(proj_spread(K, G, wp, v, u) == sol.S_wv_wu) ||
                                !(proj_spread(K, G, u, wp, v) == sol.S_uw_uv) ||
                                !(proj_spread(K, G, u, wp, z) == sol.S_uw_uz) ||
                                !(proj_spread(K, G, wp, u, z) == sol.S_wu_wz) ||
                                !(proj_spread(K, G, z, u, wp) == sol.S_zu_zw))
                                st.fail(iter, "lambert spread mismatch");
                            ++st.lambert_checks;
                        }
                    }
                }
            } catch (const Error& e) {
                switch (e.code()) {
                    case ErrorCode::NullProjectivePoint:
                    case ErrorCode::UndefinedSpread:
                    case ErrorCode::SingularDenominator:
                    case ErrorCode::DependentInput:
                    case ErrorCode::ZeroVector:
                        break;  // degenerate draw, no assertion applies
                    default:
                        st.fail(iter, std::string("lambert: ") + e.what());
                }
            }
        }
    }
    return st;
}

}  // namespace unigeo
