#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilinear.hpp"
#include "identities.hpp"

namespace unigeo {

// Point of projective (n-1)-space as a nonzero representative in F^n.
// All measurements below are invariant under rescaling the representative.
template <class F>
struct ProjPoint {
    Vec<F> rep;
};

template <class F>
ProjPoint<F> make_proj_point(const F&, Vec<F> rep) {
    if (all_zero(rep))
        throw Error(ErrorCode::ZeroVector, "projective point needs a nonzero representative");
    return {std::move(rep)};
}

template <class F>
bool proj_eq(const F& K, const ProjPoint<F>& a, const ProjPoint<F>& b) {
    if (a.rep.size() != b.rep.size())
        return false;
    return mat_rank(K, Mat<F>{a.rep, b.rep}) == 1;
}

// Canonical representative: first nonzero coordinate scaled to one.
template <class F>
Vec<F> proj_canonical(const F& K, const ProjPoint<F>& a) {
    for (const auto& c : a.rep)
        if (!is_zero(c))
            return vec_scale(K.one() / c, a.rep);
    throw Error(ErrorCode::ZeroVector, "projective point has a zero representative");
}

// Colon syntax "x0:x1:...:xk", each part a field scalar literal.
template <class F>
ProjPoint<F> parse_proj_point(const F& K, std::string_view text) {
    Vec<F> rep;
    std::size_t start = 0;
    while (true) {
        auto colon = text.find(':', start);
        auto part = colon == std::string_view::npos ? text.substr(start) : text.substr(start, colon - start);
        rep.push_back(K.parse(part));
        if (colon == std::string_view::npos)
            break;
        start = colon + 1;
    }
    if (rep.size() < 2)
        throw Error(ErrorCode::ParseError, "projective point needs at least two coordinates");
    return make_proj_point(K, std::move(rep));
}

template <class F>
std::string proj_point_str(const F& K, const ProjPoint<F>& a) {
    auto c = proj_canonical(K, a);
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ':';
        out += K.str(c[i]);
    }
    return out;
}

// Projective quadrance q(u,v) = 1 - b_uv^2/(a_u a_v): zero for equal points,
// one for perpendicular ones, undefined at null points.
template <class F>
typename F::Scalar proj_quadrance(const F& K, const QForm<F>& G, const ProjPoint<F>& u,
                                  const ProjPoint<F>& v) {
    auto au = G.eval(u.rep, u.rep);
    auto av = G.eval(v.rep, v.rep);
    if (is_zero(au) || is_zero(av))
        throw Error(ErrorCode::NullProjectivePoint, "projective quadrance needs non-null points");
    auto b = G.eval(u.rep, v.rep);
    return K.one() - (b * b) / (au * av);
}

// Spread at apex w between the lines wu and wv. Defined exactly when both
// denominator factors are nonzero; vertex nullity alone does not obstruct it.
template <class F>
typename F::Scalar proj_spread(const F& K, const QForm<F>& G, const ProjPoint<F>& w,
                               const ProjPoint<F>& u, const ProjPoint<F>& v) {
    auto aw = G.eval(w.rep, w.rep);
    auto au = G.eval(u.rep, u.rep);
    auto av = G.eval(v.rep, v.rep);
    auto buw = G.eval(u.rep, w.rep);
    auto bvw = G.eval(v.rep, w.rep);
    auto buv = G.eval(u.rep, v.rep);
    auto d1 = au * aw - buw * buw;
    auto d2 = av * aw - bvw * bvw;
    if (is_zero(d1) || is_zero(d2))
        throw Error(ErrorCode::UndefinedSpread, "spread along a null line is undefined");
    auto num = aw * buv - buw * bvw;
    return K.one() - (num * num) / (d1 * d2);
}

// Same spread through the expanded numerator; kept as an independent route
// for cross-checks.
template <class F>
typename F::Scalar proj_spread_expanded(const F& K, const QForm<F>& G, const ProjPoint<F>& w,
                                        const ProjPoint<F>& u, const ProjPoint<F>& v) {
    auto aw = G.eval(w.rep, w.rep);
    auto au = G.eval(u.rep, u.rep);
    auto av = G.eval(v.rep, v.rep);
    auto buw = G.eval(u.rep, w.rep);
    auto bvw = G.eval(v.rep, w.rep);
    auto buv = G.eval(u.rep, v.rep);
    auto d1 = au * aw - buw * buw;
    auto d2 = av * aw - bvw * bvw;
    if (is_zero(d1) || is_zero(d2))
        throw Error(ErrorCode::UndefinedSpread, "spread along a null line is undefined");
    auto two = K.from_int(2);
    auto num = au * av * aw - av * buw * buw - au * bvw * bvw - aw * buv * buv + two * buw * buv * bvw;
    return aw * num / (d1 * d2);
}

// Quadrances carry opposite-vertex labels (qu = q(v,w) and so on); spreads
// sit at their vertex. The quadrea Su qv qw is the triangle's symmetric
// invariant: the spread law makes all three such products equal.
template <class F>
struct ProjTriangleMeasure {
    typename F::Scalar qu, qv, qw;
    typename F::Scalar Su, Sv, Sw;
    typename F::Scalar quadrea;
};

template <class F>
ProjTriangleMeasure<F> proj_triangle_measure(const F& K, const QForm<F>& G, const ProjPoint<F>& u,
                                             const ProjPoint<F>& v, const ProjPoint<F>& w) {
    if (mat_rank(K, Mat<F>{u.rep, v.rep, w.rep}) < 3)
        throw Error(ErrorCode::CollinearPoints, "projective triangle needs independent vertices");
    auto au = G.eval(u.rep, u.rep);
    auto av = G.eval(v.rep, v.rep);
    auto aw = G.eval(w.rep, w.rep);
    if (is_zero(au) || is_zero(av) || is_zero(aw))
        throw Error(ErrorCode::NullTriangle, "projective triangle has a null vertex");
    ProjTriangleMeasure<F> m{proj_quadrance(K, G, v, w), proj_quadrance(K, G, u, w),
                             proj_quadrance(K, G, u, v),
                             proj_spread(K, G, u, v, w), proj_spread(K, G, v, u, w),
                             proj_spread(K, G, w, u, v), K.zero()};
    m.quadrea = m.Su * m.qv * m.qw;
    return m;
}

template <class F>
struct ProjLawResiduals {
    typename F::Scalar cross, dual_cross;
    typename F::Scalar spread_uv, spread_vw, spread_uw;
    std::optional<typename F::Scalar> pythagoras;       // present when Sw == 1
    std::optional<typename F::Scalar> dual_pythagoras;  // present when qw == 1
    bool all_zero() const {
        if (!is_zero(cross) || !is_zero(dual_cross) || !is_zero(spread_uv) || !is_zero(spread_vw) ||
            !is_zero(spread_uw))
            return false;
        if (pythagoras && !is_zero(*pythagoras))
            return false;
        if (dual_pythagoras && !is_zero(*dual_pythagoras))
            return false;
        return true;
    }
};

template <class F>
ProjLawResiduals<F> projective_law_residuals(const F& K, const ProjTriangleMeasure<F>& m) {
    auto one = K.one();
    auto two = K.from_int(2);
    auto four = K.from_int(4);
    ProjLawResiduals<F> r{K.zero(), K.zero(), K.zero(), K.zero(), K.zero(), std::nullopt, std::nullopt};
    auto c = m.Sw * m.qu * m.qv - m.qu - m.qv - m.qw + two;
    r.cross = c * c - four * (one - m.qu) * (one - m.qv) * (one - m.qw);
    auto d = m.qw * m.Su * m.Sv - m.Su - m.Sv - m.Sw + two;
    r.dual_cross = d * d - four * (one - m.Su) * (one - m.Sv) * (one - m.Sw);
    r.spread_uv = m.Su * m.qv - m.Sv * m.qu;
    r.spread_vw = m.Sv * m.qw - m.Sw * m.qv;
    r.spread_uw = m.Su * m.qw - m.Sw * m.qu;
    if (m.Sw == one)
        r.pythagoras = m.qu + m.qv - m.qu * m.qv - m.qw;
    if (m.qw == one)
        r.dual_pythagoras = m.Su + m.Sv - m.Su * m.Sv - m.Sw;
    return r;
}

// ---- right-triangle solving (right spread at w) -------------------------

template <class F>
struct NapierKnowns {
    std::optional<typename F::Scalar> qu, qv, qw, Su, Sv;

    int count() const {
        return int(qu.has_value()) + int(qv.has_value()) + int(qw.has_value()) + int(Su.has_value()) +
               int(Sv.has_value());
    }
};

template <class F>
struct NapierSolution {
    typename F::Scalar qu, qv, qw, Su, Sv;
    // Set when both given spreads are 1: the returned all-ones solution
    // coexists with a degenerate family having qw = 0.
    bool right_pair_ambiguous{false};
};

namespace detail {

template <class F>
NapierKnowns<F> napier_swap(const NapierKnowns<F>& k) {
    return {k.qv, k.qu, k.qw, k.Sv, k.Su};
}

template <class F>
NapierSolution<F> napier_swap(const NapierSolution<F>& s) {
    return {s.qv, s.qu, s.qw, s.Sv, s.Su, s.right_pair_ambiguous};
}

}  // namespace detail

// Given a right spread at w and exactly two of {qu, qv, qw, Su, Sv},
// recovers the rest. Every division is guarded: a vanishing case
// denominator means the data does not pin a non-degenerate triangle.
template <class F>
NapierSolution<F> napier_solve(const F& K, const NapierKnowns<F>& k) {
    if (k.count() != 2)
        throw Error(ErrorCode::InconsistentKnowns,
                    "exactly two known quantities required, got " + std::to_string(k.count()));
    auto one = K.one();
    auto fail = [](const char* msg) -> NapierSolution<F> { throw Error(ErrorCode::UndefinedCase, msg); };
    auto finish = [&](typename F::Scalar qu, typename F::Scalar qv, typename F::Scalar qw,
                      bool ambiguous = false) {
        if (is_zero(qw))
            return fail("hypotenuse quadrance vanishes");
        return NapierSolution<F>{qu, qv, qw, qu / qw, qv / qw, ambiguous};
    };

    if (k.qu && k.qv) {
        auto qw = *k.qu + *k.qv - *k.qu * *k.qv;
        return finish(*k.qu, *k.qv, qw);
    }
    if (k.qu && k.qw) {
        if (*k.qu == one)
            return fail("qu = 1 leaves qv undetermined");
        auto qv = (*k.qw - *k.qu) / (one - *k.qu);
        return finish(*k.qu, qv, *k.qw);
    }
    if (k.qv && k.qw)
        return detail::napier_swap(napier_solve(K, detail::napier_swap(k)));
    if (k.Su && k.Sv) {
        if (is_zero(*k.Su) || is_zero(*k.Sv))
            return fail("zero spread at a base vertex");
        auto t = *k.Su + *k.Sv - one;
        if (is_zero(t))
            return fail("spreads sum to one only for null-sided data");
        bool ambiguous = (*k.Su == one) && (*k.Sv == one);
        return finish(t / *k.Sv, t / *k.Su, t / (*k.Su * *k.Sv), ambiguous);
    }
    if (k.Su && k.qw) {
        auto d = one - *k.Su * *k.qw;
        if (is_zero(d))
            return fail("1 - Su qw vanishes");
        auto qu = *k.Su * *k.qw;
        auto qv = *k.qw * (one - *k.Su) / d;
        return finish(qu, qv, *k.qw);
    }
    if (k.Sv && k.qw)
        return detail::napier_swap(napier_solve(K, detail::napier_swap(k)));
    if (k.Su && k.qu) {
        if (is_zero(*k.Su))
            return fail("zero spread opposite a side of nonzero quadrance");
        if (*k.qu == one)
            return fail("qu = 1 leaves the triangle undetermined");
        auto qw = *k.qu / *k.Su;
        auto qv = *k.qu * (one - *k.Su) / (*k.Su * (one - *k.qu));
        return finish(*k.qu, qv, qw);
    }
    if (k.Sv && k.qv)
        return detail::napier_swap(napier_solve(K, detail::napier_swap(k)));
    if (k.Su && k.qv) {
        auto d = one - *k.Su * (one - *k.qv);
        if (is_zero(d))
            return fail("1 - Su(1 - qv) vanishes");
        auto qw = *k.qv / d;
        auto qu = *k.Su * *k.qv / d;
        return finish(qu, *k.qv, qw);
    }
    if (k.Sv && k.qu)
        return detail::napier_swap(napier_solve(K, detail::napier_swap(k)));
    throw Error(ErrorCode::UndefinedCase, "unhandled combination of knowns");
}

// Isosceles triangle with equal base quadrances q and equal base spreads S:
// apex quantities in closed form.
template <class F>
std::pair<typename F::Scalar, typename F::Scalar> isosceles_apex(const F& K, const typename F::Scalar& q,
                                                                 const typename F::Scalar& S) {
    if (is_zero(q))
        throw Error(ErrorCode::ZeroQuadrance, "isosceles relation needs a nonzero base quadrance");
    auto one = K.one();
    auto four = K.from_int(4);
    auto d = one - S * q;
    if (is_zero(d))
        throw Error(ErrorCode::SingularDenominator, "1 - Sq vanishes");
    auto common = four * (one - S) * (one - q) / (d * d);
    return {q * common, S * common};
}

namespace detail {

// Roots of a^2 x^2 + (4 - 6a) x + (4a - 3) = 0 with zero roots dropped:
// the equilateral relation is symmetric in (quadrance, spread), so one
// solver serves both directions. Discriminant is 16(1-a)^3.
template <class F>
std::vector<typename F::Scalar> equilateral_partner(const F& K, const typename F::Scalar& a) {
    auto one = K.one();
    auto three = K.from_int(3);
    auto four = K.from_int(4);
    auto six = K.from_int(6);
    std::vector<typename F::Scalar> roots;
    if (is_zero(a)) {
        roots.push_back(three / four);
        return roots;
    }
    auto qa = a * a;
    auto qb = four - six * a;
    auto qc = four * a - three;
    auto disc = qb * qb - four * qa * qc;
    auto rt = K.sqrt(disc);
    if (!rt)
        return roots;
    auto two_a = qa + qa;
    auto r1 = (-qb + rt->first) / two_a;
    auto r2 = (-qb + rt->second) / two_a;
    if (!is_zero(r1))
        roots.push_back(r1);
    if (!(r2 == r1) && !is_zero(r2))
        roots.push_back(r2);
    return roots;
}

}  // namespace detail

// Equilateral triangle: common spread from common quadrance and back.
template <class F>
std::vector<typename F::Scalar> equilateral_quadrances(const F& K, const typename F::Scalar& S) {
    return detail::equilateral_partner(K, S);
}

template <class F>
std::vector<typename F::Scalar> equilateral_spreads(const F& K, const typename F::Scalar& q) {
    return detail::equilateral_partner(K, q);
}

// ---- Lambert configuration ----------------------------------------------

// Vertices u, v, w with right spreads at all three; z completes the
// quadrilateral (meet of the perpendiculars at u and w). Everything is
// rational in q = q(u,v) and p = q(v,w).
template <class F>
struct LambertSolution {
    typename F::Scalar x;  // q(u,z)
    typename F::Scalar y;  // q(w,z)
    typename F::Scalar s;  // q(u,w)
    typename F::Scalar r;  // q(v,z)
    typename F::Scalar S_vu_vz, S_vw_vz;
    typename F::Scalar S_wv_wu, S_uw_uv;
    typename F::Scalar S_uw_uz, S_wu_wz;
    typename F::Scalar S_zu_zw;
};

template <class F>
LambertSolution<F> lambert_solve(const F& K, const typename F::Scalar& q, const typename F::Scalar& p) {
    auto one = K.one();
    auto d = one - q * p;
    if (is_zero(d))
        throw Error(ErrorCode::SingularDenominator, "1 - qp vanishes");
    LambertSolution<F> out{
        p * (one - q) / d,        // x
        q * (one - p) / d,        // y
        q + p - q * p,            // s
        (q + p - (q * p + q * p)) / d,  // r
        K.zero(), K.zero(), K.zero(), K.zero(), K.zero(), K.zero(), K.zero()};
    if (is_zero(out.r))
        throw Error(ErrorCode::SingularDenominator, "q(v,z) vanishes");
    if (is_zero(out.s))
        throw Error(ErrorCode::SingularDenominator, "q(u,w) vanishes");
    out.S_vu_vz = out.x / out.r;
    out.S_vw_vz = out.y / out.r;
    out.S_wv_wu = q / out.s;
    out.S_uw_uv = p / out.s;
    out.S_uw_uz = q * (one - p) / out.s;
    out.S_wu_wz = p * (one - q) / out.s;
    out.S_zu_zw = one - p * q;
    return out;
}

// ---- right hexagon --------------------------------------------------------

template <class F>
struct HexagonReport {
    std::array<typename F::Scalar, 6> sides;   // q(a_i, a_{i+1}) cyclically
    std::array<typename F::Scalar, 3> ratios;  // side0/side3, side4/side1, side2/side5
    bool equal;
};

// Hexagon with a right spread at every vertex, all six points coplanar.
// Opposite sides pair off with one common ratio; the pairing alternates
// orientation around the cycle (0/3, 4/1, 2/5).
template <class F>
HexagonReport<F> right_hexagon_check(const F& K, const QForm<F>& G,
                                     const std::array<ProjPoint<F>, 6>& a) {
    Mat<F> reps;
    for (const auto& pt : a)
        reps.push_back(pt.rep);
    if (mat_rank(K, reps) > 3)
        throw Error(ErrorCode::NotPlanar, "hexagon vertices span more than a projective plane");
    for (std::size_t i = 0; i < 6; ++i)
        if (is_zero(G.eval(a[i].rep, a[i].rep)))
            throw Error(ErrorCode::NotRightHexagon, "vertex " + std::to_string(i) + " is null");
    auto one = K.one();
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& prev = a[(i + 5) % 6];
        const auto& next = a[(i + 1) % 6];
        typename F::Scalar s = K.zero();
        try {
            s = proj_spread(K, G, a[i], prev, next);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::UndefinedSpread)
                throw Error(ErrorCode::NotRightHexagon,
                            "spread at vertex " + std::to_string(i) + " is undefined");
            throw;
        }
        if (!(s == one))
            throw Error(ErrorCode::NotRightHexagon, "spread at vertex " + std::to_string(i) + " is not 1");
    }
    HexagonReport<F> rep{{}, {}, false};
    for (std::size_t i = 0; i < 6; ++i)
        rep.sides[i] = proj_quadrance(K, G, a[i], a[(i + 1) % 6]);
    // All-right spreads force nonzero sides, so the divisions are safe.
    rep.ratios[0] = rep.sides[0] / rep.sides[3];
    rep.ratios[1] = rep.sides[4] / rep.sides[1];
    rep.ratios[2] = rep.sides[2] / rep.sides[5];
    rep.equal = rep.ratios[0] == rep.ratios[1] && rep.ratios[1] == rep.ratios[2];
    return rep;
}

// ---- altitudes and bisectors ----------------------------------------------

// Foot of the perpendicular dropped from x onto the line yz:
// f = y + t z with t = (a_y b_xz - b_xy b_yz) / (a_z b_xy - b_xz b_yz).
template <class F>
ProjPoint<F> altitude_foot(const F& K, const QForm<F>& G, const ProjPoint<F>& x, const ProjPoint<F>& y,
                           const ProjPoint<F>& z) {
    if (mat_rank(K, Mat<F>{y.rep, z.rep}) < 2)
        throw Error(ErrorCode::DependentInput, "altitude target line needs independent points");
    auto ay = G.eval(y.rep, y.rep);
    auto az = G.eval(z.rep, z.rep);
    auto bxy = G.eval(x.rep, y.rep);
    auto bxz = G.eval(x.rep, z.rep);
    auto byz = G.eval(y.rep, z.rep);
    auto den = az * bxy - bxz * byz;
    if (is_zero(den))
        throw Error(ErrorCode::SingularAltitude, "altitude foot is not determined");
    auto t = (ay * bxz - bxy * byz) / den;
    return make_proj_point(K, vec_add(y.rep, vec_scale(t, z.rep)));
}

// Orthocenter of a projective triangle: meet of two altitudes, checked
// against the third. The meet goes through exact linear algebra on spans.
template <class F>
ProjPoint<F> proj_orthocenter(const F& K, const QForm<F>& G, const ProjPoint<F>& u, const ProjPoint<F>& v,
                              const ProjPoint<F>& w) {
    if (mat_rank(K, Mat<F>{u.rep, v.rep, w.rep}) < 3)
        throw Error(ErrorCode::CollinearPoints, "orthocenter needs independent vertices");
    auto fu = altitude_foot(K, G, u, v, w);
    auto fv = altitude_foot(K, G, v, u, w);
    auto fw = altitude_foot(K, G, w, u, v);
    auto meet = meet_spans(K, u.rep, fu.rep, v.rep, fv.rep);
    if (meet.kind == SpanMeet<F>::Kind::Same)
        throw Error(ErrorCode::IdenticalLines, "two altitudes coincide");
    if (meet.kind == SpanMeet<F>::Kind::Empty)
        throw Error(ErrorCode::NoCommonPoint, "altitudes do not meet");
    if (mat_rank(K, Mat<F>{meet.point, w.rep, fw.rep}) > 2)
        throw Error(ErrorCode::NoCommonPoint, "third altitude misses the meet of the first two");
    return make_proj_point(K, std::move(meet.point));
}

// Points b on the line uw with both spreads to the legs at apex v defined
// and equal: S(vu, vb) = S(vw, vb). Finite fields are settled by walking
// both charts of the line (p+1 candidates). Over the rationals the chart
// b = u + t w reduces the condition to (AC - B0^2)(A - t^2 C) = 0 with
// A = a_v a_u - b_uv^2, B0 = a_v b_uw - b_uv b_vw, C = a_v a_w - b_vw^2,
// so aside from a degenerate first factor it is the square root of A/C.
template <class F>
std::vector<ProjPoint<F>> vertex_bisectors(const F& K, const QForm<F>& G, const ProjPoint<F>& v,
                                           const ProjPoint<F>& u, const ProjPoint<F>& w) {
    if (mat_rank(K, Mat<F>{u.rep, w.rep}) < 2)
        throw Error(ErrorCode::CoincidentPoints, "bisector line needs independent endpoints");

    auto equal_spreads = [&](const ProjPoint<F>& b) {
        try {
            auto s1 = proj_spread(K, G, v, u, b);
            auto s2 = proj_spread(K, G, v, w, b);
            return s1 == s2;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::UndefinedSpread)
                return false;
            throw;
        }
    };

    std::vector<ProjPoint<F>> out;
    if constexpr (F::is_finite) {
        auto p = K.modulus();
        for (std::uint64_t t = 0; t < p; ++t) {
            auto b = make_proj_point(K, vec_add(u.rep, vec_scale(K.from_int(static_cast<long long>(t)), w.rep)));
            if (equal_spreads(b))
                out.push_back(std::move(b));
        }
        if (equal_spreads(w))
            out.push_back(w);
    } else {
        auto av = G.eval(v.rep, v.rep);
        auto A = av * G.eval(u.rep, u.rep) - G.eval(u.rep, v.rep) * G.eval(u.rep, v.rep);
        auto B0 = av * G.eval(u.rep, w.rep) - G.eval(u.rep, v.rep) * G.eval(v.rep, w.rep);
        auto C = av * G.eval(w.rep, w.rep) - G.eval(v.rep, w.rep) * G.eval(v.rep, w.rep);
        if (is_zero(A) || is_zero(C))
            return out;  // a leg spread is undefined for every candidate
        if (is_zero(A * C - B0 * B0))
            throw Error(ErrorCode::DependentInput,
                        "every point of the line bisects; the set is infinite over this field");
        auto rt = K.sqrt(A / C);
        if (rt) {
            for (const auto& t : {rt->first, rt->second}) {
                auto b = make_proj_point(K, vec_add(u.rep, vec_scale(t, w.rep)));
                if (equal_spreads(b))
                    out.push_back(std::move(b));
                if (rt->first == rt->second)
                    break;
            }
        }
        if (equal_spreads(w))
            out.push_back(w);
    }
    return out;
}

// ---- 3-D line coordinates under the form diag(1,1,-1) ---------------------

template <class F>
struct LineCoords3 {
    typename F::Scalar l, m, n;
};

namespace detail {

template <class F>
bool is_hyperbolic_form3(const F& K, const QForm<F>& G) {
    return G == QForm<F>::diagonal(K, {K.one(), K.one(), -K.one()});
}

}  // namespace detail

// (l:m:n) from two points of the line: the twisted cross product of the
// representatives. Incidence of [x:y:z] is l x + m y - n z = 0.
template <class F>
LineCoords3<F> line_coords_3d(const F& K, const ProjPoint<F>& u, const ProjPoint<F>& v) {
    if (u.rep.size() != 3 || v.rep.size() != 3)
        throw Error(ErrorCode::NotThreeDimensional, "line coordinates live in projective 3-space");
    const auto& x1 = u.rep[0];
    const auto& y1 = u.rep[1];
    const auto& z1 = u.rep[2];
    const auto& x2 = v.rep[0];
    const auto& y2 = v.rep[1];
    const auto& z2 = v.rep[2];
    LineCoords3<F> L{y1 * (-z2) - (-z1) * y2, (-z1) * x2 - x1 * (-z2), x1 * y2 - y1 * x2};
    if (is_zero(L.l) && is_zero(L.m) && is_zero(L.n))
        throw Error(ErrorCode::CoincidentPoints, "line coordinates need distinct points");
    (void)K;
    return L;
}

template <class F>
typename F::Scalar line_incidence(const F&, const LineCoords3<F>& L, const ProjPoint<F>& p) {
    if (p.rep.size() != 3)
        throw Error(ErrorCode::NotThreeDimensional, "incidence lives in projective 3-space");
    return L.l * p.rep[0] + L.m * p.rep[1] - L.n * p.rep[2];
}

template <class F>
ProjPoint<F> line_meet_3d(const F& K, const LineCoords3<F>& L1, const LineCoords3<F>& L2) {
    Vec<F> a{L1.l, L1.m, -L1.n};
    Vec<F> b{L2.l, L2.m, -L2.n};
    Vec<F> p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    if (all_zero(p))
        throw Error(ErrorCode::IdenticalLines, "the lines coincide");
    return make_proj_point(K, std::move(p));
}

// Spread of two lines directly from their coordinates; only valid for the
// form diag(1,1,-1), which is checked.
template <class F>
typename F::Scalar spread_from_line_coords(const F& K, const QForm<F>& G, const LineCoords3<F>& L1,
                                           const LineCoords3<F>& L2) {
    if (G.dim() != 3 || !detail::is_hyperbolic_form3(K, G))
        throw Error(ErrorCode::WrongForm, "line-coordinate spread is specific to diag(1,1,-1)");
    auto d1 = L1.l * L1.l + L1.m * L1.m - L1.n * L1.n;
    auto d2 = L2.l * L2.l + L2.m * L2.m - L2.n * L2.n;
    if (is_zero(d1) || is_zero(d2))
        throw Error(ErrorCode::UndefinedSpread, "null line has no spread");
    auto c1 = L1.l * L2.m - L2.l * L1.m;
    auto c2 = L1.m * L2.n - L2.m * L1.n;
    auto c3 = L1.n * L2.l - L2.n * L1.l;
    return (c1 * c1 - c2 * c2 - c3 * c3) / (d1 * d2);
}

}  // namespace unigeo
