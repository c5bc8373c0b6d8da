#include <catch2/catch_amalgamated.hpp>

#include <unigeo/field.hpp>

using namespace unigeo;

TEST_CASE("rational parse and print", "[fields]") {
    RationalField K;
    CHECK(K.str(K.parse("177/4")) == "177/4");
    CHECK(K.str(K.parse("-6/8")) == "-3/4");
    CHECK(K.str(K.parse("38")) == "38");
    CHECK(K.str(K.parse("+7")) == "7");
    CHECK(K.str(K.parse("0/5")) == "0");
    CHECK(K.parse("10263/10792") == K.make(BigInt(10263), BigInt(10792)));
    CHECK_THROWS_AS(K.parse(""), Error);
    CHECK_THROWS_AS(K.parse("1/0"), Error);
    CHECK_THROWS_AS(K.parse("2.5"), Error);
    CHECK_THROWS_AS(K.parse("1/2/3"), Error);
}

TEST_CASE("rational make normalizes sign", "[fields]") {
    RationalField K;
    CHECK(K.str(K.make(BigInt(3), BigInt(-6))) == "-1/2");
    CHECK(K.str(K.make(BigInt(-3), BigInt(-6))) == "1/2");
    CHECK_THROWS_AS(K.make(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("rational square roots", "[fields]") {
    RationalField K;
    auto r = K.sqrt(K.parse("9/4"));
    REQUIRE(r.has_value());
    CHECK(r->first == K.parse("3/2"));
    CHECK(r->second == K.parse("-3/2"));
    CHECK_FALSE(K.sqrt(K.parse("2")).has_value());
    CHECK_FALSE(K.sqrt(K.parse("-1")).has_value());
    auto z = K.sqrt(K.zero());
    REQUIRE(z.has_value());
    CHECK(z->first == K.zero());
}

TEST_CASE("prime field validation", "[fields]") {
    CHECK_THROWS_AS(PrimeField(2), Error);
    CHECK_THROWS_AS(PrimeField(1007), Error);  // 19 * 53
    CHECK_THROWS_AS(PrimeField(561), Error);   // Carmichael number
    CHECK_THROWS_AS(PrimeField(1), Error);
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(65537));
    CHECK_THROWS_AS(PrimeField(std::uint64_t(1) << 62), Error);
    try {
        PrimeField(1007);
        FAIL("composite modulus accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPrimeModulus);
    }
}

TEST_CASE("prime field arithmetic", "[fields]") {
    PrimeField K(11);
    auto a = K.from_int(7), b = K.from_int(8);
    CHECK(K.str(a + b) == "4");
    CHECK(K.str(a * b) == "1");
    CHECK(K.str(a - b) == "10");
    CHECK(K.str(-a) == "4");
    CHECK(K.str(a / b) == "5");  // 8 * 5 = 40 = 7 mod 11
    CHECK(K.from_int(-3) == K.from_int(8));
    CHECK(K.parse("7/8") == a / b);
    CHECK_THROWS_AS(a / K.zero(), Error);
}

TEST_CASE("prime field square roots", "[fields]") {
    PrimeField K(11);
    // squares mod 11 are exactly {0, 1, 3, 4, 5, 9}
    for (int x : {0, 1, 3, 4, 5, 9})
        CHECK(K.sqrt(K.from_int(x)).has_value());
    for (int x : {2, 6, 7, 8, 10})
        CHECK_FALSE(K.sqrt(K.from_int(x)).has_value());
    auto r = K.sqrt(K.from_int(3));
    REQUIRE(r.has_value());
    CHECK(r->first * r->first == K.from_int(3));

    PrimeField big(65537);  // 1 mod 4: full Tonelli-Shanks
    auto s = big.sqrt(big.from_int(2));
    REQUIRE(s.has_value());
    CHECK(s->first * s->first == big.from_int(2));

    PrimeField big3(65539);  // 3 mod 4: exponent shortcut
    CHECK_FALSE(big3.sqrt(big3.from_int(2)).has_value());  // 65539 = 3 mod 8, so 2 is a non-residue
    auto t = big3.sqrt(big3.from_int(20850));              // 12345^2 mod 65539
    REQUIRE(t.has_value());
    CHECK(t->first * t->first == big3.from_int(20850));
    CHECK(t->first + t->second == big3.zero());
}

TEST_CASE("float64 field", "[fields]") {
    Float64Field K;
    CHECK(K.parse("2.5") == 2.5);
    CHECK(K.parse("-3") == -3.0);
    CHECK_THROWS_AS(K.parse("abc"), Error);
    CHECK_THROWS_AS(K.parse("1.5x"), Error);
    CHECK(K.str(0.5) == "0.5");
    CHECK_THROWS_AS(K.sqrt(4.0), Error);  // inexact fields refuse algebraic roots
    CHECK(K.from_bigint(BigInt(7)) == 7.0);
}

TEST_CASE("field descriptors", "[fields]") {
    auto d = FieldDescriptor::parse("prime:11");
    CHECK(d.str() == "prime:11");
    CHECK(FieldDescriptor::parse("rational").str() == "rational");
    CHECK(FieldDescriptor::parse("float64").str() == "float64");
    CHECK_THROWS_AS(FieldDescriptor::parse("prime:abc"), Error);
    CHECK_THROWS_AS(FieldDescriptor::parse("galois:9"), Error);
    CHECK_THROWS_AS(FieldDescriptor::parse("prime:99999999999999999999999"), Error);

    std::string name = visit_field(d, [](const auto& K) { return K.name(); });
    CHECK(name == "prime:11");
}
