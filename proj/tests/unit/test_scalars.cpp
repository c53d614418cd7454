#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common/oracles.hpp"
#include "common/test_rng.hpp"
#include "downup/scalar.hpp"

#include <random>

using namespace downup;

namespace {

Poly<Rational> poly_from_ints(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.emplace_back(v);
    return Poly<Rational>(std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials, small orders") {
    CHECK(cyclotomic_poly(1) == poly_from_ints({-1, 1}));
    CHECK(cyclotomic_poly(2) == poly_from_ints({1, 1}));
    CHECK(cyclotomic_poly(3) == poly_from_ints({1, 1, 1}));
    CHECK(cyclotomic_poly(6) == poly_from_ints({1, -1, 1}));
    CHECK(cyclotomic_poly(12) == poly_from_ints({1, 0, -1, 0, 1}));

    // Phi_4 recomputed here by dividing x^4 - 1 by (x - 1)(x + 1).
    Poly<Rational> x4m1 = poly_from_ints({-1, 0, 0, 0, 1});
    Poly<Rational> divisor = poly_from_ints({-1, 1}) * poly_from_ints({1, 1});
    auto [quotient, remainder] = x4m1.divmod(divisor);
    CHECK(remainder.is_zero());
    CHECK(cyclotomic_poly(4) == quotient);
    CHECK(quotient == poly_from_ints({1, 0, 1}));
}

TEST_CASE("cyclotomic polynomials: degree, integrality, product identity") {
    for (unsigned n = 1; n <= 30; ++n) {
        Poly<Rational> phi = cyclotomic_poly(n);
        CHECK(phi.degree() == static_cast<long>(euler_phi(n)));
        for (const auto& c : phi.coeffs())
            CHECK(boost::multiprecision::denominator(c) == 1);
        Poly<Rational> prod = Poly<Rational>::constant(Rational(1));
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic_poly(d);
        std::vector<Rational> xn(n + 1, Rational(0));
        xn[0] = Rational(-1);
        xn[n] = Rational(1);
        CHECK(prod == Poly<Rational>(std::move(xn)));
    }
    // The first order whose cyclotomic polynomial has a coefficient
    // outside {-1, 0, 1}: the x^7 coefficient of Phi_105 is -2.
    Poly<Rational> phi105 = cyclotomic_poly(105);
    CHECK(phi105.coeffs()[7] == Rational(-2));
}

TEST_CASE("rational function canonical form") {
    Scalar q = Scalar::q();
    Scalar one = q.one_like();

    Scalar lhs = (q * q - one) / (q - one);
    CHECK(lhs == q + one);
    CHECK(lhs.to_string() == "q + 1");

    CHECK((one / (q - one) + one / (one - q)).is_zero());

    // Same value through non-reduced inputs lands on identical fields.
    std::mt19937_64 rng(testutil::default_seed());
    for (int i = 0; i < 200; ++i) {
        Poly<Rational> num = testutil::rational_poly(rng, 3);
        Poly<Rational> den = testutil::rational_poly(rng, 3);
        while (den.is_zero()) den = testutil::rational_poly(rng, 3);
        Poly<Rational> junk = testutil::rational_poly(rng, 2);
        while (junk.is_zero()) junk = testutil::rational_poly(rng, 2);
        RatFunc f(num, den);
        RatFunc g(num * junk, den * junk);
        CHECK(f == g);
        CHECK(f.num() == g.num());
        CHECK(f.den() == g.den());
        CHECK(f.den().lead() == Rational(1));
    }
}

TEST_CASE("rational function arithmetic agrees with pointwise evaluation") {
    std::mt19937_64 rng(testutil::default_seed() + 1);
    ScalarMode mode{ModeKind::RationalFunction, 0};
    int done = 0;
    while (done < 300) {
        Scalar x = testutil::scalar_in_mode(rng, mode);
        Scalar y = testutil::scalar_in_mode(rng, mode);
        Rational at = testutil::rational(rng, 7);
        auto xv = testutil::ratfunc_eval(x.as_ratfunc(), at);
        auto yv = testutil::ratfunc_eval(y.as_ratfunc(), at);
        if (!xv || !yv) continue;
        auto sum = testutil::ratfunc_eval((x + y).as_ratfunc(), at);
        auto prod = testutil::ratfunc_eval((x * y).as_ratfunc(), at);
        REQUIRE(sum.has_value());
        REQUIRE(prod.has_value());
        CHECK(*sum == *xv + *yv);
        CHECK(*prod == *xv * *yv);
        if (!y.is_zero()) {
            auto quot = testutil::ratfunc_eval((x / y).as_ratfunc(), at);
            if (!yv->is_zero()) {
                REQUIRE(quot.has_value());
                CHECK(*quot == *xv / *yv);
            }
        }
        ++done;
    }
}

TEST_CASE("cyclotomic arithmetic") {
    Scalar z4 = Scalar::zeta(4);
    CHECK(z4 * z4 == -z4.one_like());

    Scalar z6 = Scalar::zeta(6);
    CHECK(z6 * z6 == z6 - z6.one_like());

    // 1/(1 + zeta_4) = (1 - zeta_4)/2
    Scalar inv = (z4.one_like() + z4).inv();
    Scalar expected = (z4.one_like() - z4) / Scalar::constant(Rational(2), z4.mode());
    CHECK(inv == expected);
    CHECK(inv.to_string() == "-1/2*zeta:4 + 1/2");

    std::mt19937_64 rng(testutil::default_seed() + 2);
    for (unsigned order : {5u, 8u, 12u}) {
        ScalarMode mode{ModeKind::Cyclotomic, order};
        for (int i = 0; i < 80; ++i) {
            Scalar x = testutil::scalar_in_mode(rng, mode);
            Scalar y = testutil::scalar_in_mode(rng, mode);
            Cyclotomic prod = (x * y).as_cyclotomic();
            CHECK(prod == testutil::cyclotomic_mul_oracle(x.as_cyclotomic(), y.as_cyclotomic()));
            if (!x.is_zero()) CHECK(x * x.inv() == x.one_like());
        }
    }
}

TEST_CASE("field axioms in all three modes") {
    std::mt19937_64 rng(testutil::default_seed() + 3);
    std::vector<ScalarMode> modes{{ModeKind::Rational, 0},
                                  {ModeKind::RationalFunction, 0},
                                  {ModeKind::Cyclotomic, 12}};
    for (const auto& mode : modes) {
        for (int i = 0; i < 1000; ++i) {
            Scalar x = testutil::scalar_in_mode(rng, mode);
            Scalar y = testutil::scalar_in_mode(rng, mode);
            Scalar z = testutil::scalar_in_mode(rng, mode);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inv() == x.one_like());
        }
    }
}

TEST_CASE("mode mixing is rejected") {
    Scalar r = Scalar::integer(2);
    Scalar q = Scalar::q();
    Scalar z = Scalar::zeta(4);
    CHECK_THROWS_AS(r + q, Error);
    CHECK_THROWS_AS(q * z, Error);
    CHECK_THROWS_AS(Scalar::zeta(4) + Scalar::zeta(6), Error);
    try {
        r + q;
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ModeMismatch);
    }
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Scalar::integer(1) / Scalar::integer(0), Error);
    CHECK_THROWS_AS(Scalar::q().zero_like().inv(), Error);
    CHECK_THROWS_AS(Scalar::zeta(4).zero_like().inv(), Error);
    try {
        Scalar::integer(1) / Scalar::integer(0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
}

TEST_CASE("powers against repeated multiplication") {
    std::mt19937_64 rng(testutil::default_seed() + 4);
    std::vector<ScalarMode> modes{{ModeKind::Rational, 0},
                                  {ModeKind::RationalFunction, 0},
                                  {ModeKind::Cyclotomic, 8}};
    for (const auto& mode : modes) {
        for (int i = 0; i < 50; ++i) {
            Scalar x = testutil::scalar_in_mode(rng, mode);
            for (unsigned e : {0u, 1u, 2u, 3u, 5u, 9u}) {
                CHECK(x.pow(e) == testutil::pow_oracle(x, e));
            }
            if (!x.is_zero()) CHECK(x.pow(-3) == testutil::pow_oracle(x, 3).inv());
        }
    }
}

TEST_CASE("root of unity order") {
    CHECK(root_of_unity_order(Scalar::integer(-1), 100) == 2u);
    CHECK(root_of_unity_order(Scalar::integer(1), 100) == 1u);
    CHECK(!root_of_unity_order(Scalar::integer(2), 100).has_value());
    CHECK(!root_of_unity_order(Scalar::q(), 100).has_value());
    CHECK(root_of_unity_order(-Scalar::q().one_like(), 100) == 2u);

    Scalar z6 = Scalar::zeta(6);
    CHECK(root_of_unity_order(z6, 100) == 6u);
    CHECK(root_of_unity_order(z6 * z6, 100) == 3u);
    CHECK(root_of_unity_order(z6.pow(3), 100) == 2u);
    CHECK(root_of_unity_order(-z6, 100) == 3u);

    Scalar z8 = Scalar::zeta(8);
    CHECK(root_of_unity_order(z8, 8) == 8u);
    CHECK(!root_of_unity_order(z8, 4).has_value());

    CHECK_THROWS_AS(root_of_unity_order(Scalar::integer(0), 10), Error);
}

TEST_CASE("canonical rendering") {
    CHECK(Scalar::from_rational(Rational(-3, 7)).to_string() == "-3/7");
    Scalar q = Scalar::q();
    Scalar one = q.one_like();
    CHECK(((q + one) / (q - one)).to_string() == "(q + 1)/(q - 1)");
    CHECK((one / (q * q)).to_string() == "1/q^2");
    CHECK((q + one).to_string() == "q + 1");
    Scalar z6 = Scalar::zeta(6);
    CHECK((z6 - z6.one_like()).to_string() == "zeta:6 - 1");
    Scalar z4 = Scalar::zeta(4);
    CHECK((z4 + z4).to_string() == "2*zeta:4");
    CHECK(Scalar::zeta(8).pow(3).to_string() == "zeta:8^3");
    CHECK(Scalar::integer(0).to_string() == "0");
}
