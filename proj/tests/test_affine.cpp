#include <catch2/catch_amalgamated.hpp>

#include <unigeo/affine.hpp>
#include <unigeo/field.hpp>

using namespace unigeo;

namespace {

RationalField Q;

Vec<RationalField> qvec(std::initializer_list<const char*> xs) {
    Vec<RationalField> v;
    for (auto* x : xs)
        v.push_back(Q.parse(x));
    return v;
}

QForm<RationalField> mixed_form_4d() {
    std::vector<BigRational> e;
    for (const char* x : {"0", "1", "0", "3", "1", "1", "2", "-1", "0", "2", "1", "0", "3", "-1", "0", "-1"})
        e.push_back(Q.parse(x));
    return QForm<RationalField>(Q, 4, std::move(e));
}

const Vec<RationalField> U = qvec({"1", "2", "4", "3/2"});
const Vec<RationalField> V = qvec({"-1", "0", "1/2", "3"});
const Vec<RationalField> W = qvec({"2", "2", "1", "5"});

}  // namespace

TEST_CASE("4-D rational triangle measurements", "[affine]") {
    auto G = mixed_form_4d();
    auto m = measure_points(Q, G, U, V, W);
    CHECK(m.qU == Q.parse("177/4"));
    CHECK(m.qV == Q.parse("71/4"));
    CHECK(m.qW == Q.parse("38"));
    CHECK_FALSE(m.collinear);
    REQUIRE(m.spreads_complete());
    CHECK(*m.sU == Q.parse("10263/10792"));
    CHECK(*m.sV == Q.parse("3421/8968"));
    CHECK(*m.sW == Q.parse("3421/4189"));

    // spread law, multiplicatively and as the common ratio
    CHECK(*m.sU * m.qV == *m.sV * m.qU);
    CHECK(*m.sV * m.qW == *m.sW * m.qV);
    CHECK(*m.sU / m.qU == Q.parse("3421/159182"));

    auto laws = law_residuals(Q, m);
    CHECK(laws.all_zero());

    // the displayed cross-law instance
    auto lhs = (m.qU + m.qV - m.qW) * (m.qU + m.qV - m.qW);
    auto rhs = Q.parse("4") * m.qU * m.qV * (Q.one() - *m.sW);
    CHECK(lhs == rhs);

    // the displayed triple-spread value
    auto sum = *m.sU + *m.sV + *m.sW;
    CHECK(sum * sum == Q.parse("29258102500/6334727281"));
}

TEST_CASE("4-D rational triangle centers", "[affine]") {
    auto G = mixed_form_4d();
    AffineTriangle<RationalField> t(Q, U, V, W);
    auto c = triangle_centers(Q, G, t);
    CHECK(vec_eq(c.circumcenter, qvec({"144/311", "3789/3421", "18773/13684", "46709/13684"})));
    CHECK(c.circumquadrance == Q.parse("79591/6842"));
    CHECK(vec_eq(c.orthocenter, qvec({"334/311", "6106/3421", "9429/3421", "9145/3421"})));
    CHECK(vec_eq(c.centroid, qvec({"2/3", "4/3", "11/6", "19/6"})));
    CHECK(vec_eq(c.nine_point, qvec({"239/311", "9895/6842", "56489/27368", "83289/27368"})));
    CHECK(c.euler_collinear);

    // centroid and nine-point sit at fixed combinations of C and O
    auto third = Q.parse("1/3");
    auto half = Q.parse("1/2");
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(c.centroid[i] == (Q.one() + Q.one()) * third * c.circumcenter[i] + third * c.orthocenter[i]);
        CHECK(c.nine_point[i] == half * (c.circumcenter[i] + c.orthocenter[i]));
    }

    // all circumquadrances agree
    CHECK(quadrance(Q, G, c.circumcenter, U) == c.circumquadrance);
    CHECK(quadrance(Q, G, c.circumcenter, V) == c.circumquadrance);
    CHECK(quadrance(Q, G, c.circumcenter, W) == c.circumquadrance);

    // orthocenter: each vertex-to-O direction is perpendicular to the opposite side
    CHECK(is_zero(G.eval(vec_sub(c.orthocenter, U), vec_sub(W, V))));
    CHECK(is_zero(G.eval(vec_sub(c.orthocenter, V), vec_sub(W, U))));
}

TEST_CASE("quadrance symmetry and coincidence", "[affine]") {
    auto G = mixed_form_4d();
    CHECK(quadrance(Q, G, U, V) == quadrance(Q, G, V, U));
    CHECK(is_zero(quadrance(Q, G, U, U)));
}

TEST_CASE("collinear triples satisfy the triple quad relation", "[affine]") {
    auto G = QForm<RationalField>::identity(Q, 2);
    auto a = qvec({"0", "0"});
    auto b = qvec({"1", "2"});
    auto c = vec_add(a, vec_scale(Q.parse("2"), vec_sub(b, a)));  // stretch by 2
    auto m = measure_points(Q, G, a, b, c);
    CHECK(m.collinear);
    // quadrances come out (Q, Q, 4Q) against the stretched point
    CHECK(m.qW == Q.parse("5"));
    CHECK(m.qU == Q.parse("5"));
    CHECK(m.qV == Q.parse("20"));
    auto laws = law_residuals(Q, m);
    REQUIRE(laws.triple_quad.has_value());
    CHECK(is_zero(*laws.triple_quad));
    CHECK_FALSE(laws.cross.has_value());
}

TEST_CASE("pythagoras both directions", "[affine]") {
    auto G = QForm<RationalField>::identity(Q, 2);
    auto u = qvec({"3", "0"});
    auto v = qvec({"0", "4"});
    auto w = qvec({"0", "0"});
    CHECK(is_zero(right_residual_at_w(Q, G, u, v, w)));
    auto m = measure_points(Q, G, u, v, w);
    CHECK(m.qW == m.qU + m.qV);
    CHECK(m.qW == Q.parse("25"));
    // right angle at w forces the hypotenuse split and unit spread
    REQUIRE(m.spreads_complete());
    CHECK(*m.sW == Q.one());
    CHECK(*m.sU + *m.sV == Q.one());
    // Thales: spreads are quadrance ratios against the hypotenuse
    CHECK(*m.sU * m.qW == m.qU);
    CHECK(*m.sV * m.qW == m.qV);

    // converse: a non-right triangle has nonzero dot and fails the sum
    auto v2 = qvec({"1", "4"});
    CHECK_FALSE(is_zero(right_residual_at_w(Q, G, u, v2, w)));
    auto m2 = measure_points(Q, G, u, v2, w);
    CHECK_FALSE(m2.qW == m2.qU + m2.qV);
}

TEST_CASE("null line leaves spreads undefined but keeps quadrances", "[affine]") {
    auto G = QForm<RationalField>::diagonal(Q, {Q.one(), Q.one(), -Q.one()});
    auto u = qvec({"0", "0", "0"});
    auto v = qvec({"1", "0", "1"});  // null direction from u
    auto w = qvec({"0", "1", "0"});
    auto m = measure_points(Q, G, u, v, w);
    CHECK_FALSE(m.collinear);
    CHECK_FALSE(m.spreads_complete());
    CHECK(is_zero(m.qW));  // the null side has zero quadrance
    CHECK_FALSE(m.sU.has_value());
    CHECK_FALSE(m.sV.has_value());
    CHECK(m.qU == Q.one());

    auto laws = law_residuals(Q, m);
    CHECK_FALSE(laws.cross.has_value());
}

TEST_CASE("finite field triangle obeys every law", "[affine]") {
    PrimeField K(13);
    QForm<PrimeField> G(K, 3,
                        {K.from_int(2), K.from_int(1), K.from_int(0), K.from_int(1), K.from_int(5),
                         K.from_int(3), K.from_int(0), K.from_int(3), K.from_int(7)});
    Vec<PrimeField> u = {K.from_int(1), K.from_int(2), K.from_int(3)};
    Vec<PrimeField> v = {K.from_int(4), K.from_int(0), K.from_int(1)};
    Vec<PrimeField> w = {K.from_int(2), K.from_int(2), K.from_int(9)};
    auto m = measure_points(K, G, u, v, w);
    if (m.spreads_complete() && !m.collinear)
        CHECK(law_residuals(K, m).all_zero());
    CHECK(m.qU + m.qV - m.qW == right_residual_at_w(K, G, u, v, w) + right_residual_at_w(K, G, u, v, w));
}

TEST_CASE("line spread matches measure and detects null lines", "[affine]") {
    auto G = QForm<RationalField>::identity(Q, 2);
    auto s = line_spread(Q, G, qvec({"0", "0"}), qvec({"1", "0"}), qvec({"0", "0"}), qvec({"0", "1"}));
    CHECK(s == Q.one());
    auto s2 = line_spread(Q, G, qvec({"0", "0"}), qvec({"1", "0"}), qvec({"0", "0"}), qvec({"1", "1"}));
    CHECK(s2 == Q.parse("1/2"));
    // reparametrizing either line never moves the spread
    auto s3 = line_spread(Q, G, qvec({"0", "0"}), qvec({"5", "0"}), qvec({"1", "1"}), qvec({"3", "3"}));
    CHECK(s3 == s2);
    auto H = QForm<RationalField>::diagonal(Q, {Q.one(), Q.one(), -Q.one()});
    CHECK_THROWS_AS(
        line_spread(Q, H, qvec({"0", "0", "0"}), qvec({"1", "0", "1"}), qvec({"0", "0", "0"}), qvec({"0", "1", "0"})),
        Error);
}
