#pragma once

#include <optional>
#include <utility>

#include "bilinear.hpp"
#include "identities.hpp"

namespace unigeo {

// Quadrance between points: the self-pairing of the displacement. Plays the
// role squared distance plays over the reals, but stays inside the field.
template <class F>
typename F::Scalar quadrance(const F&, const QForm<F>& G, const Vec<F>& u, const Vec<F>& v) {
    auto d = vec_sub(v, u);
    return G.eval(d, d);
}

namespace detail {

// Spread of two direction vectors with known nonzero quadrances.
template <class F>
typename F::Scalar spread_of_dirs(const F& K, const QForm<F>& G, const Vec<F>& e1, const Vec<F>& e2,
                                  const typename F::Scalar& q1, const typename F::Scalar& q2) {
    auto c = G.eval(e1, e2);
    return K.one() - (c * c) / (q1 * q2);
}

}  // namespace detail

// Spread of the lines a1a2 and b1b2: 1 - (e1.e2)^2 / (Q(e1) Q(e2)).
// Ranges over the field, 0 for parallel, 1 for perpendicular.
template <class F>
typename F::Scalar line_spread(const F& K, const QForm<F>& G, const Vec<F>& a1, const Vec<F>& a2,
                               const Vec<F>& b1, const Vec<F>& b2) {
    if (vec_eq(a1, a2) || vec_eq(b1, b2))
        throw Error(ErrorCode::CoincidentPoints, "each line needs two distinct points");
    auto e1 = vec_sub(a2, a1);
    auto e2 = vec_sub(b2, b1);
    auto q1 = G.eval(e1, e1);
    auto q2 = G.eval(e2, e2);
    if (is_zero(q1) || is_zero(q2))
        throw Error(ErrorCode::NullLine, "spread with a null line is undefined");
    return detail::spread_of_dirs(K, G, e1, e2, q1, q2);
}

template <class F>
struct AffineTriangle {
    Vec<F> u, v, w;

    AffineTriangle(const F& K, Vec<F> U, Vec<F> V, Vec<F> W)
        : u(std::move(U)), v(std::move(V)), w(std::move(W)) {
        if (vec_eq(u, v) || vec_eq(u, w) || vec_eq(v, w))
            throw Error(ErrorCode::CoincidentPoints, "triangle vertices must be pairwise distinct");
        if (mat_rank(K, Mat<F>{vec_sub(v, u), vec_sub(w, u)}) < 2)
            throw Error(ErrorCode::CollinearPoints, "triangle vertices must not be collinear");
    }
};

// Quadrances carry opposite-vertex labels: qU = Q(v,w), qV = Q(u,w),
// qW = Q(u,v). A spread slot is empty when a flanking line is null.
template <class F>
struct TriangleMeasure {
    typename F::Scalar qU, qV, qW;
    std::optional<typename F::Scalar> sU, sV, sW;
    bool collinear{false};

    bool spreads_complete() const { return sU && sV && sW; }
};

// Measures any three pairwise distinct points, collinear triples included.
template <class F>
TriangleMeasure<F> measure_points(const F& K, const QForm<F>& G, const Vec<F>& u, const Vec<F>& v,
                                  const Vec<F>& w) {
    if (vec_eq(u, v) || vec_eq(u, w) || vec_eq(v, w))
        throw Error(ErrorCode::CoincidentPoints, "measure needs pairwise distinct points");
    TriangleMeasure<F> m{quadrance(K, G, v, w), quadrance(K, G, u, w), quadrance(K, G, u, v),
                         std::nullopt, std::nullopt, std::nullopt, false};
    m.collinear = mat_rank(K, Mat<F>{vec_sub(v, u), vec_sub(w, u)}) < 2;
    auto uv = vec_sub(v, u);
    auto uw = vec_sub(w, u);
    auto vw = vec_sub(w, v);
    if (!is_zero(m.qW) && !is_zero(m.qV))
        m.sU = detail::spread_of_dirs(K, G, uv, uw, m.qW, m.qV);
    if (!is_zero(m.qW) && !is_zero(m.qU))
        m.sV = detail::spread_of_dirs(K, G, vec_scale(-K.one(), uv), vw, m.qW, m.qU);
    if (!is_zero(m.qV) && !is_zero(m.qU))
        m.sW = detail::spread_of_dirs(K, G, uw, vw, m.qV, m.qU);
    return m;
}

template <class F>
TriangleMeasure<F> triangle_measure(const F& K, const QForm<F>& G, const AffineTriangle<F>& t) {
    return measure_points(K, G, t.u, t.v, t.w);
}

template <class F>
struct AffineLawResiduals {
    std::optional<typename F::Scalar> triple_quad;
    std::optional<typename F::Scalar> cross;
    std::optional<typename F::Scalar> triple_spread;
    std::optional<typename F::Scalar> spread_uv, spread_vw, spread_uw;

    bool all_zero() const {
        for (const auto* r : {&triple_quad, &cross, &triple_spread, &spread_uv, &spread_vw, &spread_uw})
            if (r->has_value() && !is_zero(r->value()))
                return false;
        return true;
    }
};

// Residues of the affine laws at a measured triple. Collinear input reports
// the triple-quad residue; a proper triangle with all spreads defined reports
// the cross law, the triple-spread law, and the three pairwise spread-law
// differences s_X Q_Y - s_Y Q_X.
template <class F>
AffineLawResiduals<F> law_residuals(const F& K, const TriangleMeasure<F>& m) {
    AffineLawResiduals<F> r;
    if (m.collinear) {
        r.triple_quad = triple_quad_residual(m.qU, m.qV, m.qW);
        return r;
    }
    if (!m.spreads_complete())
        return r;
    auto four = K.from_int(4);
    auto d = m.qU + m.qV - m.qW;
    r.cross = d * d - four * m.qU * m.qV * (K.one() - *m.sW);
    r.triple_spread = triple_spread_residual(*m.sU, *m.sV, *m.sW);
    r.spread_uv = *m.sU * m.qV - *m.sV * m.qU;
    r.spread_vw = *m.sV * m.qW - *m.sW * m.qV;
    r.spread_uw = *m.sU * m.qW - *m.sW * m.qU;
    return r;
}

// (u-w).(v-w): zero exactly when the triangle is right at w, and equal to
// -(qU + qV - qW)/2, so rightness and Q_W = Q_U + Q_V are equivalent.
template <class F>
typename F::Scalar right_residual_at_w(const F&, const QForm<F>& G, const Vec<F>& u, const Vec<F>& v,
                                       const Vec<F>& w) {
    return G.eval(vec_sub(u, w), vec_sub(v, w));
}

template <class F>
struct TriangleCenters {
    Vec<F> circumcenter, orthocenter, centroid, nine_point;
    typename F::Scalar circumquadrance;
    bool euler_collinear;
};

// All four classical centers from one 2x2 exact solve in the edge frame
// {e1 = v-u, e2 = w-u}. Both systems share the singularity ab = g^2
// (vanishing Gram determinant of the edge frame).
template <class F>
TriangleCenters<F> triangle_centers(const F& K, const QForm<F>& G, const AffineTriangle<F>& t) {
    auto e1 = vec_sub(t.v, t.u);
    auto e2 = vec_sub(t.w, t.u);
    auto a = G.eval(e1, e1);
    auto b = G.eval(e2, e2);
    auto g = G.eval(e1, e2);
    auto gram = a * b - g * g;
    if (is_zero(gram))
        throw Error(ErrorCode::SingularCenterSystem, "edge Gram determinant vanishes");

    auto two = K.from_int(2);
    auto solve2 = [&](const auto& m00, const auto& m01, const auto& m10, const auto& m11,
                      const auto& r0, const auto& r1) {
        auto det = m00 * m11 - m01 * m10;
        auto alpha = (r0 * m11 - m01 * r1) / det;
        auto beta = (m00 * r1 - r0 * m10) / det;
        return std::pair{alpha, beta};
    };
    auto at = [&](const auto& ab_pair) {
        return vec_add(t.u, vec_add(vec_scale(ab_pair.first, e1), vec_scale(ab_pair.second, e2)));
    };

    // Circumcenter: equal quadrance to all vertices -> 2 x.e1 = a, 2 x.e2 = b.
    auto C = at(solve2(two * a, two * g, two * g, two * b, a, b));
    // Orthocenter: x.(e2 - e1) = 0 and x.e2 = g.
    auto O = at(solve2(g - a, b - g, g, b, K.zero(), g));

    auto third = K.one() / K.from_int(3);
    auto Gc = vec_add(t.u, vec_scale(third, vec_add(e1, e2)));
    auto half = K.one() / two;
    auto N = vec_scale(half, vec_add(C, O));

    TriangleCenters<F> out{C, O, Gc, N, quadrance(K, G, C, t.u), false};
    out.euler_collinear = mat_rank(K, Mat<F>{vec_sub(C, Gc), vec_sub(O, Gc)}) <= 1;
    return out;
}

}  // namespace unigeo
