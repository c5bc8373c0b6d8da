#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <unigeo/field.hpp>
#include <unigeo/hyperbolic.hpp>

using namespace unigeo;

namespace {

RationalField Q;

QForm<RationalField> hyp3() { return QForm<RationalField>::diagonal(Q, {Q.one(), Q.one(), -Q.one()}); }

ProjPoint<RationalField> qp(const char* text) { return parse_proj_point(Q, text); }

}  // namespace

TEST_CASE("disk map of interior points", "[hyperbolic]") {
    auto G = hyp3();
    auto z = poincare_map(Q, G, qp("1:0:2"));
    // Klein radius 1/2 pulls back to 2 - sqrt(3)
    CHECK(z.x == Catch::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-14));
    CHECK(z.y == 0.0);
    auto o = poincare_map(Q, G, qp("0:0:1"));
    CHECK(o.x == 0.0);
    CHECK(o.y == 0.0);
    CHECK(hyp_distance(o, o) == 0.0);

    CHECK_THROWS_AS(poincare_map(Q, G, qp("2:0:1")), Error);  // outside the cone
    CHECK_THROWS_AS(poincare_map(Q, G, qp("1:0:1")), Error);  // on the cone
    CHECK_THROWS_AS(poincare_map(Q, G, qp("1:0:0")), Error);  // no affine chart
    auto I = QForm<RationalField>::identity(Q, 3);
    CHECK_THROWS_AS(poincare_map(Q, I, qp("1:0:2")), Error);  // wrong form
    auto four = make_proj_point(Q, Vec<RationalField>{Q.one(), Q.zero(), Q.zero(), Q.from_int(2)});
    auto G4 = QForm<RationalField>::diagonal(Q, {Q.one(), Q.one(), Q.one(), -Q.one()});
    CHECK_THROWS_AS(poincare_map(Q, G4, four), Error);  // not 3-dimensional
}

TEST_CASE("conformal distance equals the Klein chart pullback", "[hyperbolic]") {
    auto G = hyp3();
    DiskPoint origin{0.0, 0.0};
    for (const char* text : {"1:0:2", "1:-1:3", "2:1:5", "-3:1:7"}) {
        auto p = qp(text);
        double x0 = Q.to_double(p.rep[0] / p.rep[2]);
        double y0 = Q.to_double(p.rep[1] / p.rep[2]);
        double klein_r = std::sqrt(x0 * x0 + y0 * y0);
        double rho = hyp_distance(origin, poincare_map(Q, G, p));
        CHECK(rho == Catch::Approx(std::atanh(klein_r)).margin(1e-12));
        // and sinh^2(rho) recovers the negated quadrance to the origin
        auto q = proj_quadrance(Q, G, qp("0:0:1"), p);
        double sh = std::sinh(rho);
        CHECK(sh * sh == Catch::Approx(-Q.to_double(q)).margin(1e-12));
    }
}

TEST_CASE("distance is symmetric", "[hyperbolic]") {
    auto G = hyp3();
    auto za = poincare_map(Q, G, qp("1:-1:3"));
    auto zb = poincare_map(Q, G, qp("2:1:5"));
    CHECK(hyp_distance(za, zb) == Catch::Approx(hyp_distance(zb, za)).epsilon(1e-15));
    CHECK(hyp_distance(za, zb) > 0.0);
}

TEST_CASE("classical crosscheck on the standard triangle", "[hyperbolic]") {
    auto G = hyp3();
    auto c = hyperbolic_crosscheck(Q, G, qp("1:0:2"), qp("1:-1:3"), qp("2:1:5"));
    CHECK(c.rho[0] == Catch::Approx(0.596455365).margin(2e-9));
    CHECK(c.rho[1] == Catch::Approx(0.255412812).margin(2e-9));
    CHECK(c.rho[2] == Catch::Approx(0.423648930).margin(2e-9));
    CHECK(c.theta[0] == Catch::Approx(2.0 * std::acos(-1.0) / 3.0).margin(1e-12));
    CHECK(c.theta[1] == Catch::Approx(0.361367124).margin(2e-9));
    CHECK(c.theta[2] == Catch::Approx(0.640522313).margin(2e-9));
    double want = std::sqrt(15.0 / 8.0);
    for (int i = 0; i < 3; ++i) {
        CHECK(c.sine_ratio[i] == Catch::Approx(want).margin(1e-9));
        CHECK(c.resid_q[i] < 1e-12);
        CHECK(c.resid_S[i] < 1e-12);
    }
    CHECK(c.max_residual < 1e-12);
    CHECK(c.ok);
    CHECK(c.q[0] == Catch::Approx(-0.4).margin(1e-15));
    CHECK(c.S[0] == Catch::Approx(0.75).margin(1e-15));
}

TEST_CASE("crosscheck holds across random rational triangles", "[hyperbolic]") {
    auto G = hyp3();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(8, 11);
    auto draw = [&]() {
        while (true) {
            auto x = Q.make(BigInt(num(rng)), BigInt(den(rng)));
            auto y = Q.make(BigInt(num(rng)), BigInt(den(rng)));
            if (Q.to_double(x * x + y * y) < 0.9)
                return make_proj_point(Q, Vec<RationalField>{x, y, Q.one()});
        }
    };
    int successes = 0, attempts = 0;
    while (successes < 100 && attempts < 500) {
        ++attempts;
        auto a = draw(), b = draw(), c = draw();
        try {
            auto chk = hyperbolic_crosscheck(Q, G, a, b, c);
            CHECK(chk.max_residual < 1e-9);
            CHECK(chk.ok);
            ++successes;
        } catch (const Error&) {
            // collinear or otherwise degenerate draw; try again
        }
    }
    CHECK(successes == 100);
}

TEST_CASE("angle recovery guards", "[hyperbolic]") {
    CHECK_THROWS_AS(hyp_angles(0.0, 1.0, 1.0), Error);
    CHECK_THROWS_AS(hyp_angles(5.0, 1.0, 1.0), Error);  // cosine far outside [-1,1]
    // collinear configuration: cosine clamps to -1, angle becomes pi
    auto flat = hyp_angles(3.0, 1.0, 2.0);
    CHECK(flat[0] == Catch::Approx(std::acos(-1.0)).margin(1e-6));
}
