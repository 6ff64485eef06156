#include "catch_amalgamated.hpp"

#include "tau/rational_function.hpp"
#include "tau/weyl_action.hpp"

using namespace tau;

TEST_CASE("substitution") {
    Substitution m;
    m[f_var(0)] = RationalFunction(f(0) * f(1) - alpha(1), f(1));
    RationalFunction r = substitute(f(0), m);
    CHECK(rat_equal(r, RationalFunction(f(0) * f(1) - alpha(1), f(1))));

    CHECK(rat_equal(substitute(alpha(0), {}), RationalFunction(alpha(0))));
    CHECK(substitute(alpha(0), {}).den().is_one());

    Substitution inv;
    inv[f_var(0)] = RationalFunction(Polynomial(1), f(1));
    RationalFunction raw = substitute(f(0) * f(1), inv);
    CHECK(raw.num() == f(1));
    CHECK(raw.den() == f(1));
    CHECK(rat_equal(raw, RationalFunction(1)));
}

TEST_CASE("substitution is a homomorphism on random polynomials") {
    Substitution m = s_substitution(0);
    const std::vector<Polynomial> samples{f(1) * f(-1) + alpha(0), f(1).pow(2) - alpha(1) * f(-1), alpha(-1) * f(1) + Polynomial(3)};
    for (const auto& a : samples) {
        for (const auto& b : samples) {
            CHECK(rat_equal(substitute(a * b, m), substitute(a, m) * substitute(b, m)));
            CHECK(rat_equal(substitute(a + b, m), substitute(a, m) + substitute(b, m)));
        }
    }
}

TEST_CASE("rational equality") {
    CHECK(rat_equal(RationalFunction(f(1), f(1)), RationalFunction(1)));
    CHECK_FALSE(rat_equal(RationalFunction(f(0), alpha(0)), RationalFunction(f(0), alpha(1))));
    CHECK(rat_equal(RationalFunction(-f(0), -alpha(0)), RationalFunction(f(0), alpha(0))));
    CHECK_THROWS_AS(RationalFunction(f(0), Polynomial()), DivisionByZero);
}

TEST_CASE("field operations") {
    RationalFunction x(f(0), alpha(0));
    RationalFunction y(f(1) + alpha(1), f(0));
    CHECK(rat_equal(x * y / y, x));
    CHECK(rat_equal(x + y - y, x));
    CHECK(rat_equal((x + y) * (x - y), x * x - y * y));
    CHECK_THROWS_AS(x / RationalFunction(), DivisionByZero);
}

TEST_CASE("cancellation strips common content") {
    RationalFunction r(f(0) * alpha(0) * Polynomial(6), alpha(0).pow(2) * Polynomial(4));
    RationalFunction c = r.cancelled();
    CHECK(c.num() == f(0) * Polynomial(3));
    CHECK(c.den() == alpha(0) * Polynomial(2));
    RationalFunction d = RationalFunction(alpha(0).pow(2) - alpha(1).pow(2), alpha(0) + alpha(1)).cancelled();
    CHECK(d.den().is_one());
    CHECK(d.to_polynomial() == alpha(0) - alpha(1));
}
