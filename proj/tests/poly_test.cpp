// Binary polynomial arithmetic in the delay operator.
#include <doctest.h>

#include "tbcc/poly.hpp"

using namespace tbcc;

TEST_CASE("parse and print round trip") {
    CHECK(Poly::parse("0").is_zero());
    CHECK(Poly::parse("1") == Poly::one());
    CHECK(Poly::parse("D") == Poly::monomial(1));
    CHECK(Poly::parse("D^0") == Poly::one());
    CHECK(Poly::parse("D^1") == Poly::monomial(1));
    CHECK(Poly::parse("1+D+D^2").mask() == 0b111);
    CHECK(Poly::parse("1+D^2+D^3").mask() == 0b1101);
    CHECK(Poly::zero().to_string() == "0");
    CHECK(Poly::one().to_string() == "1");
    CHECK(Poly::monomial(3).to_string() == "D^3");
    for (const char* text : {"1+D", "D^3", "1+D^2+D^3", "D+D^2"}) {
        CHECK(Poly::parse(Poly::parse(text).to_string()) ==
              Poly::parse(text));
    }
    CHECK_THROWS_AS(Poly::parse("1+E"), ParseError);
    CHECK_THROWS_AS(Poly::parse(""), ParseError);
    CHECK_THROWS_AS(Poly::parse("D^"), ParseError);
}

TEST_CASE("degree bookkeeping") {
    CHECK(Poly::zero().degree() == -1);
    CHECK(Poly::zero().low_degree() == -1);
    CHECK(Poly::one().degree() == 0);
    CHECK(Poly::parse("D+D^3").degree() == 3);
    CHECK(Poly::parse("D+D^3").low_degree() == 1);
    CHECK(Poly::parse("1+D^4").low_degree() == 0);
    CHECK(Poly::parse("1+D^2").coeff(2));
    CHECK_FALSE(Poly::parse("1+D^2").coeff(1));
}

TEST_CASE("addition and multiplication") {
    Poly a = Poly::parse("1+D");
    CHECK((a + a).is_zero());
    CHECK((a * a) == Poly::parse("1+D^2"));
    CHECK((a * Poly::parse("1+D+D^2")) == Poly::parse("1+D^3"));
    CHECK((a * Poly::zero()).is_zero());
    CHECK_THROWS_AS(Poly::monomial(40) * Poly::monomial(40), DimensionError);
}

TEST_CASE("monomial scaling") {
    Poly p = Poly::parse("1+D^2");
    CHECK(p.times_monomial(3) == Poly::parse("D^3+D^5"));
    CHECK(p.times_monomial(3).divide_monomial(3) == p);
    CHECK(p.divide_monomial(0) == p);
    CHECK_THROWS_AS(p.divide_monomial(1), NonDivisibleError);
    CHECK(Poly::parse("D^2+D^4").divide_monomial(2) == p);
    CHECK_THROWS_AS(Poly::monomial(62).times_monomial(1), DimensionError);
    CHECK_THROWS_AS(Poly::monomial(63), DimensionError);
}

TEST_CASE("coefficient reversal in a degree window") {
    CHECK(Poly::parse("1+D+D^3").reversed(3) == Poly::parse("1+D^2+D^3"));
    CHECK(Poly::parse("1+D^2+D^3").reversed(3) == Poly::parse("1+D+D^3"));
    CHECK(Poly::parse("1+D").reversed(2) == Poly::parse("D+D^2"));
    CHECK(Poly::zero().reversed(4).is_zero());
    CHECK(Poly::parse("1+D+D^2+D^3").reversed(3) ==
          Poly::parse("1+D+D^2+D^3"));
    CHECK_THROWS_AS(Poly::parse("D^4").reversed(3), DimensionError);
}

TEST_CASE("divisibility, gcd, and divmod") {
    Poly a = Poly::parse("1+D^2");  // (1+D)^2
    CHECK(a.divides(Poly::parse("1+D")));
    CHECK_FALSE(a.divides(Poly::parse("1+D+D^2")));
    CHECK(Poly::gcd(a, Poly::parse("1+D")) == Poly::parse("1+D"));
    CHECK(Poly::gcd(Poly::parse("1+D+D^2"), Poly::parse("1+D")) ==
          Poly::one());
    CHECK(Poly::gcd(Poly::zero(), a) == a);

    auto [q, r] = Poly::parse("1+D^3").divmod(Poly::parse("1+D"));
    CHECK(q == Poly::parse("1+D+D^2"));
    CHECK(r.is_zero());
    auto [q2, r2] = Poly::parse("1+D+D^3").divmod(Poly::parse("1+D^2"));
    CHECK(q2 * Poly::parse("1+D^2") + r2 == Poly::parse("1+D+D^3"));
    CHECK(r2.degree() < 2);
}
