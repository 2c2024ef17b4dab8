#include <gtest/gtest.h>

#include <random>

#include "elimpoly/poly.hpp"
#include "elimpoly/poly_json.hpp"

namespace elimpoly {
namespace {

const Poly X = Poly::x(), Y = Poly::y(), Z = Poly::z();

Poly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), exp(0, 3), coeff(-9, 9);
    Poly p;
    for (int i = nterms(rng); i > 0; --i)
        p.add_term(Monomial(exp(rng), exp(rng), exp(rng)), Integer(coeff(rng)));
    return p;
}

RationalPoint random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

TEST(Poly, AdditionCollectsLikeTerms) {
    EXPECT_EQ(X + X, X.scaled(2));
    EXPECT_EQ(to_string(X + X), "2*x");
}

TEST(Poly, DifferenceOfSquares) { EXPECT_EQ((X + Y) * (X - Y), X * X - Y * Y); }

TEST(Poly, ZeroIsAdditiveIdentity) {
    const Poly p = X * X + Y.scaled(3) - Z;
    EXPECT_EQ(p + Poly(), p);
    EXPECT_EQ(p + Poly(0), p);
}

TEST(Poly, CancellationPrunesTerms) {
    const Poly p = X * Y - Y * X;
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.size(), 0u);
    EXPECT_EQ(to_string(p), "0");
}

TEST(Poly, CanonicalTextOrder) {
    EXPECT_EQ(to_string(X + X * Y + Z), "x + x*y + z");
    EXPECT_EQ(to_string(Y * Z + X * Y * Y + Z.scaled(2) + X * X + (X * Y).scaled(2)),
              "x^2 + 2*x*y + x*y^2 + y*z + 2*z");
    EXPECT_EQ(to_string(X * X - Y), "x^2 - y");
    EXPECT_EQ(to_string(-X + Poly(1)), "1 - x");
    EXPECT_EQ(to_string(Poly(-3)), "-3");
    EXPECT_EQ(to_string(Poly(1)), "1");
}

TEST(Poly, ParseAcceptsCanonicalAndPermutedText) {
    const Poly p = parse_poly("x^2 + 2*x*y + x*y^2 + y*z + 2*z");
    EXPECT_EQ(p, parse_poly("2*z + y*z + x*y^2 + 2*y*x + x*x"));
    EXPECT_EQ(to_string(p), "x^2 + 2*x*y + x*y^2 + y*z + 2*z");
    EXPECT_EQ(parse_poly("-x + 1"), Poly(1) - X);
    EXPECT_THROW(parse_poly("x +"), poly_parse_error);
    EXPECT_THROW(parse_poly("2x"), poly_parse_error);
    EXPECT_THROW(parse_poly(""), poly_parse_error);
}

TEST(Poly, TextRoundTripOnRandomPolys) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Poly p = random_poly(rng);
        EXPECT_EQ(parse_poly(to_string(p)), p) << to_string(p);
    }
}

TEST(Poly, ExponentOverflowIsAnError) {
    const Poly big(Monomial(kMaxExponent, 0, 0), Integer(1));
    EXPECT_NO_THROW(big * Poly(5));
    EXPECT_THROW(big * X, exponent_overflow);
    EXPECT_THROW(Monomial(kMaxExponent + 1, 0, 0), exponent_overflow);
    EXPECT_THROW(substitute(big, Substitution{X * X, Y, Z}), exponent_overflow);
    EXPECT_GE(kMaxExponent, 1u << 16);
}

TEST(Poly, CoefficientsAreArbitraryPrecision) {
    const Poly p = (X + Poly(1)).pow(80);
    // C(80, 40) does not fit in 64 bits.
    EXPECT_EQ(p.coefficient(Monomial(40, 0, 0)), Integer("107507208733336176461620"));
}

TEST(Poly, EvalExact) {
    const RationalPoint pt{2, 1, 1};
    EXPECT_EQ(eval_exact(X + X * Y + Z, pt), 5);
    EXPECT_EQ(eval_exact(X * X + X * Y + Z, pt), 7);
    const Poly p = parse_poly("3 + x*y - 4*z^2");
    EXPECT_EQ(eval_exact(p, {0, 0, 0}), 3);
}

TEST(Poly, EvalFloat) {
    const FloatPoint pt{2, 1, 1};
    EXPECT_DOUBLE_EQ(eval_float(X + X * Y + Z, pt), 5.0);
    EXPECT_DOUBLE_EQ(eval_float(X * X + X * Y + Z, pt), 7.0);
    EXPECT_DOUBLE_EQ(eval_float(parse_poly("3 + x*y - 4*z^2"), {0, 0, 0}), 3.0);
}

TEST(Poly, Substitute) {
    const Poly p2 = X * X + X * Y + Z;
    EXPECT_EQ(substitute(X + X * Y + Z, Substitution{}), X + X * Y + Z);
    EXPECT_EQ(substitute(p2, Substitution{X, Y, X * Y * Z - X * Y}), X * X + X * Y * Z);
    EXPECT_EQ(substitute(p2, Substitution{X, Poly(-1), X - Y}), X * X - Y);
}

TEST(PolyProperty, RingAxioms) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 150; ++i) {
        const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Poly());
        EXPECT_EQ(a * Poly(1), a);
    }
}

TEST(PolyProperty, EvaluationIsAHomomorphism) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 150; ++i) {
        const Poly p = random_poly(rng), q = random_poly(rng);
        const RationalPoint v = random_point(rng);
        EXPECT_EQ(eval_exact(p * q, v), eval_exact(p, v) * eval_exact(q, v));
        EXPECT_EQ(eval_exact(p + q, v), eval_exact(p, v) + eval_exact(q, v));
    }
}

TEST(PolyProperty, SubstituteThenEvaluate) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const Poly p = random_poly(rng);
        const Substitution sigma{random_poly(rng), random_poly(rng), random_poly(rng)};
        const RationalPoint v = random_point(rng);
        const RationalPoint image{eval_exact(sigma.x, v), eval_exact(sigma.y, v), eval_exact(sigma.z, v)};
        EXPECT_EQ(eval_exact(substitute(p, sigma), v), eval_exact(p, image));
    }
}

TEST(PolyJson, Shape) {
    EXPECT_EQ(to_json(X + X * Y + Z),
              R"([{"a":1,"b":0,"c":0,"coeff":"1"},{"a":1,"b":1,"c":0,"coeff":"1"},{"a":0,"b":0,"c":1,"coeff":"1"}])");
    EXPECT_EQ(to_json(Poly()), "[]");
}

TEST(PolyJson, RoundTripIsByteIdentical) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        const Poly p = random_poly(rng).pow(3);
        const std::string text = to_json(p);
        const Poly back = poly_from_json(text);
        EXPECT_EQ(back, p);
        EXPECT_EQ(to_json(back), text);
    }
}

TEST(PolyJson, RejectsMalformedInput) {
    EXPECT_THROW(poly_from_json("{}"), poly_parse_error);
    EXPECT_THROW(poly_from_json(R"([{"a":1,"b":0,"c":0,"coeff":3}])"), poly_parse_error);
    EXPECT_THROW(poly_from_json(R"([{"a":-1,"b":0,"c":0,"coeff":"3"}])"), poly_parse_error);
    EXPECT_THROW(poly_from_json("[1,"), poly_parse_error);
    EXPECT_THROW(poly_from_json(R"([{"a":0,"b":0,"c":0,"coeff":"0x1f"}])"), poly_parse_error);
    EXPECT_THROW(poly_from_json(R"([{"a":0,"b":0,"c":0,"coeff":""}])"), poly_parse_error);
}

TEST(PolyParse, LeadingZerosAreDecimal) {
    EXPECT_EQ(parse_poly("010*x + 007"), X.scaled(10) + Poly(7));
    EXPECT_EQ(poly_from_json(R"([{"a":0,"b":0,"c":0,"coeff":"-010"}])"), Poly(-10));
}

}  // namespace
}  // namespace elimpoly
