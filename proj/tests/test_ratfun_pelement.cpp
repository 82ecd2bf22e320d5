#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "schur/pelement.hpp"
#include "support/oracles.hpp"

using namespace schur;

TEST_CASE("rational function normalization") {
    RationalFunction a(Polynomial::parse("2*x"), Polynomial(4));
    CHECK(a.num() == Polynomial::parse("x"));
    CHECK(a.den() == Polynomial(2));

    RationalFunction b(Polynomial::parse("x"), Polynomial::parse("-y"));
    CHECK(b.den() == Polynomial::parse("y")); // denominator sign normalized
    CHECK(b.num() == Polynomial::parse("-x"));

    CHECK_THROWS_AS(RationalFunction(Polynomial(1), Polynomial()), domain_error);
    CHECK_THROWS_AS(RationalFunction(Polynomial::parse("p")), domain_error);
}

TEST_CASE("rational arithmetic") {
    RationalFunction x(Polynomial::parse("x"));
    RationalFunction inv_x(Polynomial(1), Polynomial::parse("x"));
    RationalFunction inv_y(Polynomial(1), Polynomial::parse("y"));
    CHECK(inv_x + inv_y ==
          RationalFunction(Polynomial::parse("x+y"), Polynomial::parse("x*y")));
    CHECK(x * inv_x == RationalFunction(1));
    CHECK((x / x).is_one());
    CHECK_THROWS_AS(x / RationalFunction(), domain_error);

    // Equality is value-based even when representations differ.
    RationalFunction r1(Polynomial::parse("x^2-1"), Polynomial::parse("x-1"));
    CHECK(r1 == RationalFunction(Polynomial::parse("x+1")));
    CHECK(r1.reduced().num() == Polynomial::parse("x+1"));
    CHECK(r1.reduced().den().is_one());
}

TEST_CASE("rational function field axioms on randoms") {
    std::mt19937_64 rng(31);
    std::vector<std::string> vars{"x", "y"};
    for (int iter = 0; iter < 150; ++iter) {
        Polynomial n1 = test::random_poly(rng, vars, 3, 2, 5);
        Polynomial n2 = test::random_poly(rng, vars, 3, 2, 5);
        Polynomial d1 = test::random_nonzero_poly(rng, vars, 2, 1, 3);
        Polynomial d2 = test::random_nonzero_poly(rng, vars, 2, 1, 3);
        RationalFunction a(n1, d1), b(n2, d2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RationalFunction());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("pelement construction and printing") {
    PElement e = PElement::parse("x*p + x^2");
    CHECK(e.degree() == 1);
    CHECK(e.valuation() == 0);
    CHECK(e.to_string() == "x*p + x^2");
    CHECK(PElement::parse("(x+1)*p^2").to_string() == "(x+1)*p^2");
    CHECK(PElement().to_string() == "0");
    CHECK(PElement::parse("p^3 - p").to_string() == "p^3 - p");
    CHECK(PElement::parse("p^2*(x+1)") == PElement::parse("x*p^2 + p^2"));
}

TEST_CASE("pelement arithmetic") {
    PElement a = PElement::parse("p + 1");
    PElement b = PElement::parse("p - 1");
    CHECK(a * b == PElement::parse("p^2 - 1"));
    CHECK(a + b == PElement::parse("2*p"));
    CHECK(a - a == PElement());
    CHECK(a.shifted_up(2) == PElement::parse("p^3 + p^2"));
    CHECK(PElement::parse("x^2+x*p").evaluate_mod(7, {{"x", 3}}) == 2); // only s_0 survives
}

TEST_CASE("pseudo-unit decomposition examples") {
    SUBCASE("p^2*(x+1)") {
        auto [l, u] = decompose_pseudo_unit(PElement::parse("p^2*(x+1)"));
        CHECK(l == 2);
        CHECK(u.value == PElement::parse("x+1"));
    }
    SUBCASE("x*p + x^2 is already a pseudo-unit") {
        auto [l, u] = decompose_pseudo_unit(PElement::parse("x*p + x^2"));
        CHECK(l == 0);
        CHECK(u.value == PElement::parse("x*p + x^2"));
    }
    SUBCASE("(p^3+p^2)/x") {
        auto [l, u] = decompose_pseudo_unit(PElement::parse("(p^3+p^2)/x"));
        CHECK(l == 2);
        RationalFunction inv_x(Polynomial(1), Polynomial::parse("x"));
        CHECK(u.value.coeff(0) == inv_x);
        CHECK(u.value.coeff(1) == inv_x);
    }
    SUBCASE("zero is rejected") {
        CHECK_THROWS_AS(decompose_pseudo_unit(PElement()), domain_error);
    }
}

TEST_CASE("pseudo-unit zero part strips sign and content") {
    auto [l, u] = decompose_pseudo_unit(PElement::parse("-2*x^2-2*x"));
    CHECK(l == 0);
    CHECK(u.zero_part() == Polynomial::parse("x^2+x"));
    CHECK_THROWS_AS(PseudoUnit(PElement::parse("p")), domain_error);
}

TEST_CASE("decompose/recompose round trip on randoms") {
    std::mt19937_64 rng(37);
    std::vector<std::string> vars{"x", "y"};
    int done = 0;
    while (done < 1000) {
        PElement f = test::random_pelement(rng, vars);
        if (f.is_zero()) continue;
        ++done;
        auto [l, u] = decompose_pseudo_unit(f);
        CHECK_FALSE(u.value.constant_coeff().is_zero());
        CHECK(recompose(l, u) == f);
        CHECK(l == f.valuation());
    }
}
