#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace binomia;

TEST_CASE("exponent parsing covers the full grammar") {
    CHECK(Exponent::parse("3").kind() == ExponentKind::integer);
    CHECK(Exponent::parse("-7").kind() == ExponentKind::integer);
    CHECK(Exponent::parse("1/2").kind() == ExponentKind::rational);
    CHECK(Exponent::parse("-2/3").kind() == ExponentKind::rational);
    CHECK(Exponent::parse("i").kind() == ExponentKind::complex_rational);
    CHECK(Exponent::parse("1/2+1/3i").kind() == ExponentKind::complex_rational);
    CHECK(Exponent::parse("1+i").kind() == ExponentKind::complex_rational);
    CHECK(Exponent::parse("0.5").kind() == ExponentKind::floating);
    CHECK(Exponent::parse("1e-3").kind() == ExponentKind::floating);
    CHECK(Exponent::parse(" 1/2 ").kind() == ExponentKind::rational);

    CHECK(Exponent::parse("1/2").rational_value() == Rational(BigInt(1), BigInt(2)));
    CHECK(Exponent::parse("0.5").float_value() == 0.5);
    CHECK(Exponent::parse("i").complex_value() == GaussianRational::unit_imaginary());
}

TEST_CASE("exponent parse failures") {
    CHECK_THROWS_AS(Exponent::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Exponent::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Exponent::parse("1/2+"), std::invalid_argument);
    CHECK_THROWS_AS(Exponent::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Exponent::parse("nan"), std::invalid_argument);
    CHECK_THROWS_AS(Exponent::parse("inf"), std::invalid_argument);
}

TEST_CASE("canonical kind is the narrowest representation") {
    // integers and rationals are interchangeable under lifting
    CHECK(Exponent::parse("6/2").kind() == ExponentKind::integer);
    CHECK(Exponent(Rational(BigInt(4), BigInt(2))).kind() == ExponentKind::integer);

    // a complex value with zero imaginary part narrows to its real part
    Exponent narrowed{GaussianRational(Rational(BigInt(1), BigInt(2)), Rational())};
    CHECK(narrowed.kind() == ExponentKind::rational);
    CHECK(narrowed.rational_value() == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("float kind is rejected by the exact view") {
    Exponent f(0.5);
    CHECK_FALSE(f.is_exact());
    CHECK_THROWS_WITH(f.exact_scalar(), "exact evaluation requires exact scalar");

    CHECK(Exponent::parse("1/2").is_exact());
    CHECK(Exponent::parse("i").is_exact());
}

TEST_CASE("exponent predicates and conversions") {
    CHECK(Exponent(3).is_nonnegative_integer());
    CHECK(Exponent(0).is_nonnegative_integer());
    CHECK_FALSE(Exponent(-2).is_nonnegative_integer());
    CHECK_FALSE(Exponent::parse("1/2").is_nonnegative_integer());

    CHECK(Exponent::parse("1/2").to_double() == 0.5);
    CHECK(Exponent::parse("1+i").to_complex() == std::complex<double>(1.0, 1.0));
    CHECK_THROWS_AS(Exponent::parse("i").to_double(), std::domain_error);

    CHECK(Exponent::parse("-2/3").to_string() == "-2/3");
    CHECK(Exponent::parse("1/2+1/3i").to_string() == "1/2+1/3i");
    CHECK(Exponent::parse("0.5").to_string() == "0.5");
}
