#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <unigeo/field.hpp>
#include <unigeo/identities.hpp>
#include <unigeo/spread_poly.hpp>

using namespace unigeo;

namespace {

RationalField Q;

IntPoly mk(std::initializer_list<long long> ascending) {
    std::vector<BigInt> c;
    for (long long v : ascending)
        c.emplace_back(v);
    return IntPoly(std::move(c));
}

std::size_t totient(std::size_t k) {
    std::size_t out = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        std::size_t a = i, b = k;
        while (b) {
            auto t = b;
            b = a % b;
            a = t;
        }
        if (a == 1)
            ++out;
    }
    return out;
}

}  // namespace

TEST_CASE("first six spread polynomials, exact coefficients", "[spreadpoly]") {
    CHECK(spread_poly(0) == mk({}));
    CHECK(spread_poly(1) == mk({0, 1}));
    CHECK(spread_poly(2) == mk({0, 4, -4}));
    CHECK(spread_poly(3) == mk({0, 9, -24, 16}));
    CHECK(spread_poly(4) == mk({0, 16, -80, 128, -64}));
    CHECK(spread_poly(5) == mk({0, 25, -200, 560, -640, 256}));
    CHECK(spread_poly(2).str("s") == "-4*s^2 + 4*s");
    CHECK(spread_poly(3).str("s") == "16*s^3 - 24*s^2 + 9*s");
    CHECK(spread_poly(5).coeff(5) == BigInt(256));
}

TEST_CASE("degree and leading coefficient pattern", "[spreadpoly]") {
    BigInt four(4);
    BigInt lead(1);
    for (std::size_t n = 1; n <= 12; ++n) {
        auto p = spread_poly(n);
        CHECK(p.degree() == static_cast<int>(n));
        // |lead| = 4^(n-1), sign alternates
        BigInt expect = (n % 2 == 0) ? BigInt(-lead) : lead;
        CHECK(p.coeff(n) == expect);
        lead *= four;
    }
}

TEST_CASE("consecutive spread polynomials satisfy the triple spread relation", "[spreadpoly]") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const char* sv : {"1/3", "-2/7", "5", "9/4"}) {
            auto s = Q.parse(sv);
            auto a = spread_poly(n - 1).eval(Q, s);
            auto c = spread_poly(n).eval(Q, s);
            CHECK(is_zero(triple_spread_residual(a, s, c)));
        }
    }
}

TEST_CASE("composition multiplies indices", "[spreadpoly]") {
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t m = 1; m * n <= 12; ++m)
            CHECK(spread_composition_check(n, m));
}

TEST_CASE("chebyshev route reproduces the recurrence", "[spreadpoly]") {
    CHECK(chebyshev_poly(0) == mk({1}));
    CHECK(chebyshev_poly(1) == mk({0, 1}));
    CHECK(chebyshev_poly(2) == mk({-1, 0, 2}));
    CHECK(chebyshev_poly(4) == mk({1, 0, -8, 0, 8}));
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(spread_poly_via_chebyshev(n) == spread_poly(n));
}

TEST_CASE("cyclotomic factors: degrees, products, exact forms", "[spreadpoly]") {
    CHECK_THROWS_AS(spread_cyclotomic(0), Error);
    CHECK(spread_cyclotomic(1).str("s") == "s");
    CHECK(spread_cyclotomic(2).str("s") == "-4*s + 4");
    CHECK(spread_cyclotomic(3).str("s") == "16*s^2 - 24*s + 9");
    CHECK(spread_cyclotomic(4).str("s") == "16*s^2 - 16*s + 4");
    CHECK(spread_cyclotomic(5).str("s") == "256*s^4 - 640*s^3 + 560*s^2 - 200*s + 25");
    CHECK(spread_cyclotomic(6).str("s") == "16*s^2 - 8*s + 1");
    for (std::size_t k = 1; k <= 30; ++k)
        CHECK(spread_cyclotomic(k).degree() == static_cast<int>(totient(k)));
    for (std::size_t n = 1; n <= 30; ++n) {
        IntPoly prod = IntPoly::constant(1);
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0)
                prod = prod * spread_cyclotomic(d);
        CHECK(prod == spread_poly(n));
    }
}

TEST_CASE("evaluation over each field kind", "[spreadpoly]") {
    CHECK(spread_poly_eval(Q, 3, Q.parse("1/4")) == Q.one());
    CHECK(spread_poly_eval(Q, 2, Q.parse("1/2")) == Q.one());
    PrimeField F11(11);
    CHECK(spread_poly_eval(F11, 2, F11.from_int(3)) == F11.from_int(9));
    Float64Field R;
    auto v = spread_poly_eval(R, 2, R.parse("0.3"));
    CHECK(std::abs(R.to_double(v) - 0.84) < 1e-12);
}

TEST_CASE("exact division guards", "[spreadpoly]") {
    auto s2 = spread_poly(2);
    CHECK_THROWS_AS(s2.divide_exact(IntPoly{}), Error);
    CHECK_THROWS_AS(mk({1, 1}).divide_exact(mk({0, 0, 1})), Error);    // degree too high
    CHECK_THROWS_AS(mk({1, 0, 1}).divide_exact(mk({1, 1})), Error);    // nonzero remainder
    CHECK(s2.divide_exact(mk({0, 1})) == mk({4, -4}));
    CHECK(IntPoly{}.divide_exact(mk({1, 1})) == IntPoly{});
}

TEST_CASE("polynomial string corner cases", "[spreadpoly]") {
    CHECK(IntPoly{}.str("s") == "0");
    CHECK(mk({-3}).str("s") == "-3");
    CHECK(mk({0, 1}).str("s") == "s");
    CHECK(mk({0, -1}).str("s") == "-s");
    CHECK(mk({2, -1, 1}).str("s") == "s^2 - s + 2");
}
