#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace binomia;
using test_support::Rng;

namespace {
GaussianRational gr(long long re_n, long long re_d, long long im_n, long long im_d) {
    return GaussianRational(Rational(BigInt(re_n), BigInt(re_d)),
                            Rational(BigInt(im_n), BigInt(im_d)));
}
} // namespace

TEST_CASE("componentwise equality and lifting") {
    Rational half(BigInt(1), BigInt(2));
    GaussianRational lifted(half);
    CHECK(lifted.is_real());
    CHECK(lifted.re() == half);
    CHECK(lifted.im().is_zero());
    CHECK(lifted == GaussianRational(half, Rational()));

    Rng rng(0x5eed0010);
    for (int trial = 0; trial < 100; ++trial) {
        Rational r = rng.rational();
        GaussianRational g(r);
        REQUIRE(g.is_real());
        CHECK(g.re() == r); // lift round-trip is the identity
    }
}

TEST_CASE("complex arithmetic") {
    GaussianRational i = GaussianRational::unit_imaginary();
    GaussianRational one(Rational(BigInt(1)));
    GaussianRational two(Rational(BigInt(2)));

    // i*(i-1) = -1-i, hand-expanded; then /2
    GaussianRational v = i * (i - one) / two;
    CHECK(v == gr(-1, 2, -1, 2));

    CHECK(i * i == GaussianRational(Rational(BigInt(-1))));
    CHECK(i.conjugate() == -i);
    CHECK(gr(3, 1, 4, 1).norm() == Rational(BigInt(25)));

    CHECK_THROWS_AS(one / GaussianRational(), std::domain_error);
}

TEST_CASE("gaussian field axioms on random values") {
    Rng rng(0x5eed0011);
    GaussianRational one(Rational(BigInt(1)));
    for (int trial = 0; trial < 150; ++trial) {
        GaussianRational a = rng.gaussian();
        GaussianRational b = rng.gaussian();
        GaussianRational c = rng.gaussian();

        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == GaussianRational());
        if (!a.is_zero())
            CHECK(a * (one / a) == one);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("gaussian rendering and parsing") {
    CHECK(GaussianRational().to_string() == "0");
    CHECK(gr(1, 2, 0, 1).to_string() == "1/2");
    CHECK(gr(0, 1, 1, 1).to_string() == "i");
    CHECK(gr(0, 1, -1, 1).to_string() == "-i");
    CHECK(gr(1, 1, 1, 1).to_string() == "1+i");
    CHECK(gr(1, 1, -1, 3).to_string() == "1-1/3i");
    CHECK(gr(-1, 2, -1, 2).to_string() == "-1/2-1/2i");
    CHECK(gr(0, 1, 2, 3).to_string() == "2/3i");

    CHECK(GaussianRational::parse("i") == gr(0, 1, 1, 1));
    CHECK(GaussianRational::parse("-i") == gr(0, 1, -1, 1));
    CHECK(GaussianRational::parse("1/2+1/3i") == gr(1, 2, 1, 3));
    CHECK(GaussianRational::parse("1-i") == gr(1, 1, -1, 1));
    CHECK(GaussianRational::parse("-2/3i") == gr(0, 1, -2, 3));
    CHECK(GaussianRational::parse("7") == gr(7, 1, 0, 1));

    CHECK_THROWS_AS(GaussianRational::parse("1+2"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse("i+1"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);

    Rng rng(0x5eed0012);
    for (int trial = 0; trial < 100; ++trial) {
        GaussianRational g = rng.gaussian();
        CHECK(GaussianRational::parse(g.to_string()) == g);
    }
}

TEST_CASE("scalar lifts mixed kinds and narrows real results") {
    Scalar half{Rational(BigInt(1), BigInt(2))};
    Scalar i{GaussianRational::unit_imaginary()};

    SECTION("mixed arithmetic lifts") {
        Scalar sum = half + i;
        CHECK_FALSE(sum.is_real());
        CHECK(sum.gaussian() == gr(1, 2, 1, 1));
    }
    SECTION("real-valued results narrow") {
        Scalar product = i * i;
        CHECK(product.is_real());
        CHECK(product.rational() == Rational(BigInt(-1)));
    }
    SECTION("a real-valued complex equals the lifted rational") {
        CHECK(Scalar{GaussianRational(Rational(BigInt(1), BigInt(2)), Rational())} == half);
    }
    SECTION("additive identity for any scalar kind") {
        CHECK(half + Scalar{} == half);
        CHECK(i + Scalar{} == i);
    }
    SECTION("division and errors") {
        CHECK((i / i).is_real());
        CHECK_THROWS_AS(half / Scalar{}, std::domain_error);
        CHECK_THROWS_AS(i.rational(), std::domain_error);
    }
    SECTION("rendering") {
        CHECK(half.to_string() == "1/2");
        CHECK(i.to_string() == "i");
        CHECK((half + i).to_string() == "1/2+i");
    }
}
