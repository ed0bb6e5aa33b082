#include <doctest.h>

#include <random>

#include "picard/checks.hpp"
#include "picard/real_quadratic.hpp"

using namespace picard;

namespace {
RealQuadratic rq(long a, long b, long c) { return {Int(a), Int(b), Int(c)}; }
}  // namespace

TEST_CASE("canonical orientation") {
    CHECK(rq(0, -1, 1) == rq(0, 1, -1));
    CHECK(rq(3, 2, 1).a() == 3);
    CHECK(rq(0, -2, -6) == rq(0, 2, 6));
    CHECK_THROWS_AS(rq(1, 1, 0), ZeroDenominator);
}

TEST_CASE("embedding and extraction") {
    CHECK(rq(0, 1, 1).embed() == FieldElement::sqrt3());
    CHECK(rq(3, 2, 3).embed() ==
          FieldElement{Rational(1), 0, Rational(2, 3), 0});
    CHECK(rq(1, 0, 2).embed() == FieldElement{Rational(1, 2), 0, 0, 0});

    CHECK(RealQuadratic::extract(FieldElement::sqrt3()) == rq(0, 1, 1));
    CHECK(RealQuadratic::extract(FieldElement{Rational(1, 2), 0, 0, 0}) == rq(1, 0, 2));
    // A(sqrt(3)) carries i, so extraction must fail
    CHECK(!RealQuadratic::extract(FieldElement{0, Rational(1, 4), Rational(1, 4), 0})
               .has_value());
}

TEST_CASE("d-value") {
    CHECK(rq(0, 2, 1).d_value() == Rational(-12));
    CHECK(rq(1, 1, 2).d_value() == Rational(-1));
    CHECK(rq(3, 2, 3).d_value() == Rational(-1));
    CHECK(rq(1, 1, 3).d_value() == Rational(-2, 3));
    CHECK(!rq(1, 1, 3).d_integral());
    CHECK_THROWS_AS(rq(1, 1, 3).d_int(), NonIntegralD);
}

TEST_CASE("classification") {
    CHECK(rq(0, 1, 1).classify() == AmbiguityClass::Ambiguous);
    CHECK(rq(5, 1, 1).classify() == AmbiguityClass::TotallyPositive);
    CHECK(rq(3, 2, 1).classify() == AmbiguityClass::Ambiguous);
    CHECK(rq(5, 1, -1).classify() == AmbiguityClass::TotallyNegative);
    CHECK(rq(-5, 1, -1).classify() == AmbiguityClass::TotallyPositive);
    CHECK(rq(1, 0, 2).classify() == AmbiguityClass::RationalDegenerate);
}

TEST_CASE("closed-form actions") {
    // Fig. 5 bold edge
    CHECK(rq(-3, 2, 1).act_B() == rq(3, 2, 3));
    CHECK(rq(0, 1, 1).act_B() == rq(0, 1, 3));
    CHECK(rq(0, 1, 1).act_D() == rq(0, 1, -3));
    CHECK(rq(-1, 1, -2).act_D() == rq(1, 1, 1));
    CHECK(rq(0, 1, 1).act_C() == rq(3, 1, -3));
    CHECK(rq(1, 1, 1).act_C() == rq(1, 1, -2));
    CHECK(rq(0, 1, 1).act_C2() == rq(-1, 1, -2));
    CHECK(rq(-1, 1, 1).act_C2() == rq(0, 1, -3));
    CHECK_THROWS_AS(rq(0, 0, 1).act_B(), ZeroInput);
    CHECK_THROWS_AS(rq(1, 1, 3).act_C(), NonIntegralD);
}

TEST_CASE("d-value identities of the C actions") {
    RealQuadratic q = rq(5, 1, 1);
    CHECK(q.act_C() == rq(-27, 1, 22));
    CHECK(q.act_C().d_value() == Rational(33));  // 2a + c + d = 10 + 1 + 22
    CHECK(rq(0, 1, 1).act_C2().d_value() == Rational(1));  // equals original c
}

TEST_CASE("B and D are involutions, conj is an involution") {
    std::mt19937 rng(3);
    for (const RealQuadratic& q : detail::random_integral_d_triples(rng, 300)) {
        CHECK(q.act_B().act_B() == q);
        CHECK(q.act_D().act_D() == q);
        CHECK(q.conj().conj() == q);
    }
}

TEST_CASE("conjugate") {
    CHECK(rq(0, 1, 1).conj() == rq(0, 1, -1));
    CHECK(rq(1, 1, 2).conj() == rq(-1, 1, -2));
    // matches the field-level conjugation up to representation
    RealQuadratic q = rq(3, 2, 3);
    auto via_field = RealQuadratic::extract(q.embed().conj_over_qi());
    REQUIRE(via_field.has_value());
    CHECK(via_field->value_equal(q.conj()));
}

TEST_CASE("images under A leave the real quadratic line") {
    CHECK(rq(0, 1, 1).act_A_image() ==
          FieldElement{0, Rational(1, 4), Rational(1, 4), 0});
    CHECK(rq(0, 1, 1).act_A2_image() ==
          FieldElement{0, Rational(1), Rational(1, 3), 0});
    CHECK(!RealQuadratic::extract(rq(0, 1, 1).act_A_image()).has_value());
}

TEST_CASE("rendering") {
    CHECK(rq(3, 2, 3).render() == "(3+2√3)/3");
    CHECK(rq(-3, 2, 1).render() == "-3+2√3");
    CHECK(rq(0, 1, 1).render() == "√3");
    CHECK(rq(0, 1, -3).render() == "-√3/3");
    CHECK(rq(1, 0, 2).render() == "1/2");
    CHECK(rq(0, 2, 4).render() == "2√3/4");
    CHECK(rq(-3, 2, 1).node_id() == "m3_2_1");
    CHECK(rq(0, 1, -3).node_id() == "0_1_m3");
}

TEST_CASE("value equality vs structural equality") {
    CHECK(rq(0, 2, 4).value_equal(rq(0, 1, 2)));
    CHECK(!(rq(0, 2, 4) == rq(0, 1, 2)));
    CHECK(rq(0, 2, 4).reduced() == rq(0, 1, 2));
}

TEST_CASE("proposition suites on random samples") {
    std::mt19937 rng(99);
    auto samples = detail::random_integral_d_triples(rng, 500);

    SUBCASE("prop 1") { CHECK(suite_prop1(rng, 500).ok); }
    SUBCASE("lemmas 1 and 2") { CHECK(suite_lemma1_2(samples).ok); }
    SUBCASE("prop 4") { CHECK(suite_prop4(samples).ok); }
    SUBCASE("remark 1") { CHECK(suite_remark1(samples).ok); }
    SUBCASE("dc sign") { CHECK(suite_dc_sign(samples).ok); }
    SUBCASE("oracle equivalence") { CHECK(suite_oracle_equivalence(samples).ok); }
}
