#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "projective.hpp"

namespace unigeo {

// Fields that can hand scalars to double-precision numerics.
template <class F>
concept BridgeField = requires(const F& k, const typename F::Scalar& a) {
    { k.to_double(a) } -> std::convertible_to<double>;
};

struct DiskPoint {
    double x{0}, y{0};
};

// [x:y:z] inside the cone of diag(1,1,-1) to the open unit disk:
// normalize to z = 1, then pull the chordal point to the conformal model.
template <BridgeField F>
DiskPoint poincare_map(const F& K, const QForm<F>& G, const ProjPoint<F>& a) {
    if (a.rep.size() != 3)
        throw Error(ErrorCode::NotThreeDimensional, "disk map lives in projective 3-space");
    if (G.dim() != 3 || !detail::is_hyperbolic_form3(K, G))
        throw Error(ErrorCode::WrongForm, "disk map is specific to diag(1,1,-1)");
    if (is_zero(a.rep[2]))
        throw Error(ErrorCode::ZDivisionImpossible, "third coordinate vanishes; no affine chart");
    double x0 = K.to_double(a.rep[0] / a.rep[2]);
    double y0 = K.to_double(a.rep[1] / a.rep[2]);
    double n = x0 * x0 + y0 * y0;
    if (n >= 1.0)
        throw Error(ErrorCode::OutsideCone, "point lies outside the interior of the null cone");
    if (n == 0.0)
        return {0.0, 0.0};
    double f = (1.0 - std::sqrt(1.0 - n)) / n;
    return {x0 * f, y0 * f};
}

// Hyperbolic distance in the conformal disk model.
inline double hyp_distance(const DiskPoint& z, const DiskPoint& w) {
    std::complex<double> zz(z.x, z.y), ww(w.x, w.y);
    double a = std::abs(1.0 - zz * std::conj(ww));
    double d = std::abs(zz - ww);
    return std::log((a + d) / (a - d));
}

// Vertex angles from the side lengths via the hyperbolic cosine rule;
// cosines a hair outside [-1,1] are clamped within `slack`, anything worse
// is a degenerate triangle.
inline std::array<double, 3> hyp_angles(double rho1, double rho2, double rho3, double slack = 1e-9) {
    auto angle = [&](double b, double c, double opp) {
        double den = std::sinh(b) * std::sinh(c);
        if (den == 0.0)
            throw Error(ErrorCode::DegenerateTriangle, "a side has zero length");
        double cosv = (std::cosh(b) * std::cosh(c) - std::cosh(opp)) / den;
        if (cosv > 1.0 || cosv < -1.0) {
            if (cosv > 1.0 + slack || cosv < -1.0 - slack)
                throw Error(ErrorCode::DegenerateTriangle, "cosine outside [-1,1]");
            cosv = cosv > 1.0 ? 1.0 : -1.0;
        }
        return std::acos(cosv);
    };
    return {angle(rho2, rho3, rho1), angle(rho1, rho3, rho2), angle(rho1, rho2, rho3)};
}

// Exact projective measurements against classical hyperbolic trigonometry
// for one triangle: sinh^2(rho_i) should recover -q_i and sin^2(theta_i)
// should recover S_i, with sin(theta)/sinh(rho) constant across vertices.
struct HyperbolicCrosscheck {
    std::array<DiskPoint, 3> z;
    std::array<double, 3> rho, theta;
    std::array<double, 3> q, S;               // exact values, bridged to double
    std::array<double, 3> resid_q, resid_S;   // |sinh^2 rho + q|, |sin^2 theta - S|
    std::array<double, 3> sine_ratio;         // sin(theta_i) / sinh(rho_i)
    double max_residual{0};
    bool ok{false};
};

template <BridgeField F>
HyperbolicCrosscheck hyperbolic_crosscheck(const F& K, const QForm<F>& G, const ProjPoint<F>& a1,
                                           const ProjPoint<F>& a2, const ProjPoint<F>& a3,
                                           double tol = 1e-9) {
    auto m = proj_triangle_measure(K, G, a1, a2, a3);
    HyperbolicCrosscheck out;
    out.q = {K.to_double(m.qu), K.to_double(m.qv), K.to_double(m.qw)};
    out.S = {K.to_double(m.Su), K.to_double(m.Sv), K.to_double(m.Sw)};
    out.z = {poincare_map(K, G, a1), poincare_map(K, G, a2), poincare_map(K, G, a3)};
    out.rho = {hyp_distance(out.z[1], out.z[2]), hyp_distance(out.z[0], out.z[2]),
               hyp_distance(out.z[0], out.z[1])};
    out.theta = hyp_angles(out.rho[0], out.rho[1], out.rho[2]);
    for (int i = 0; i < 3; ++i) {
        double sh = std::sinh(out.rho[i]);
        double sn = std::sin(out.theta[i]);
        out.resid_q[i] = std::abs(sh * sh + out.q[i]);
        out.resid_S[i] = std::abs(sn * sn - out.S[i]);
        out.sine_ratio[i] = sn / sh;
        out.max_residual = std::max({out.max_residual, out.resid_q[i], out.resid_S[i]});
    }
    out.ok = out.max_residual <= tol;
    return out;
}

}  // namespace unigeo
