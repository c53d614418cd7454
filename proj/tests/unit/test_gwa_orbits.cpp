#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common/test_rng.hpp"
#include "downup/gwa_orbits.hpp"

#include <random>
#include <vector>

using namespace downup;
using namespace downup::gwa;

namespace {

Scalar rat(long num, long den = 1) { return Scalar::from_rational(Rational(num, den)); }

Scalar cnum(long v, const ScalarMode& m) { return Scalar::constant(Rational(v), m); }

LambdaSequence seq_from_root(const Scalar& r, const Scalar& gamma, const Scalar& l0,
                             const Scalar& l1) {
    return LambdaSequence::from_double_root(DoubleRootParams(r, gamma), l0, l1);
}

}  // namespace

TEST_CASE("lambda recursion and backward solving") {
    Scalar r = rat(2);
    ScalarMode m = r.mode();
    auto seq = seq_from_root(r, rat(1), rat(0), rat(1));
    CHECK(lambda_at(seq, 0) == rat(0));
    CHECK(lambda_at(seq, 1) == rat(1));
    // one step: alpha*1 + beta*0 + gamma = 2r + 1
    CHECK(lambda_at(seq, 2) == r + r + cnum(1, m));

    Scalar z = Scalar::zeta(3);
    auto zseq = seq_from_root(z, cnum(1, z.mode()), cnum(0, z.mode()), cnum(1, z.mode()));
    CHECK(lambda_at(zseq, 2) == z + z + cnum(1, z.mode()));

    // the backward solve inverts the forward recursion
    std::mt19937_64 rng(testutil::default_seed() + 50);
    for (int i = 0; i < 20; ++i) {
        Scalar l0 = testutil::scalar_in_mode(rng, m);
        Scalar l1 = testutil::scalar_in_mode(rng, m);
        Scalar g = testutil::scalar_in_mode(rng, m);
        auto s = seq_from_root(r, g, l0, l1);
        LambdaSequence shifted(s.alpha, s.beta, s.gamma, lambda_at(s, -1), l0);
        for (long k = -9; k <= 9; ++k) CHECK(lambda_at(shifted, k + 1) == lambda_at(s, k));
    }

    LambdaSequence degenerate(rat(2), rat(0), rat(1), rat(0), rat(1));
    CHECK(lambda_at(degenerate, 5) == lambda_at(degenerate, 5));
    CHECK_THROWS_WITH_AS(lambda_at(degenerate, -1),
                         "DegenerateBeta: backward solving divides by beta", Error);
}

TEST_CASE("closed form matches the recursion") {
    // gamma = 0, lambda = (0, r): the sequence n*r^n
    for (Scalar r : {rat(2), Scalar::zeta(4)}) {
        ScalarMode m = r.mode();
        auto seq = seq_from_root(r, cnum(0, m), cnum(0, m), r);
        auto cf = lambda_closed_form(seq);
        CHECK(cf.r == r);
        CHECK(cf.c1.is_zero());
        CHECK(cf.c2.is_one());
        CHECK(cf.lambda_star.is_zero());
        for (long n = 0; n <= 12; ++n)
            CHECK(lambda_at(seq, n) == cnum(n, m) * r.pow(n));
    }

    // constant sequence at the particular solution
    {
        Scalar r = Scalar::zeta(3);
        ScalarMode m = r.mode();
        Scalar g = cnum(5, m);
        Scalar one = Scalar::one(m);
        Scalar star = g / ((r - one) * (r - one));
        auto seq = seq_from_root(r, g, star, star);
        auto cf = lambda_closed_form(seq);
        CHECK(cf.c1.is_zero());
        CHECK(cf.c2.is_zero());
        CHECK(cf.lambda_star == star);
        for (long n = 0; n <= 10; ++n) CHECK(lambda_at(seq, n) == star);
    }

    // random draws across the torsion roots and one non-torsion root
    std::mt19937_64 rng(testutil::default_seed() + 51);
    std::vector<Scalar> roots = {Scalar::zeta(2), Scalar::zeta(3), Scalar::zeta(4),
                                 Scalar::zeta(6), rat(2)};
    for (const Scalar& r : roots) {
        ScalarMode m = r.mode();
        for (int i = 0; i < 20; ++i) {
            Scalar l0 = testutil::scalar_in_mode(rng, m);
            Scalar l1 = testutil::scalar_in_mode(rng, m);
            Scalar g = testutil::scalar_in_mode(rng, m);
            auto seq = seq_from_root(r, g, l0, l1);
            auto cf = lambda_closed_form(seq);
            for (long n = 0; n <= 50; ++n) {
                Scalar closed = (cf.c1 + cf.c2 * cnum(n, m)) * r.pow(n) + cf.lambda_star;
                CHECK(lambda_at(seq, n) == closed);
            }
        }
    }

    CHECK_THROWS_WITH_AS(
        lambda_closed_form(LambdaSequence(rat(2), rat(-1), rat(0), rat(0), rat(1))),
        "RIsOne: closed form divides by r - 1", Error);
    CHECK_THROWS_WITH_AS(
        lambda_closed_form(LambdaSequence(rat(4), rat(-3), rat(0), rat(0), rat(1))),
        "InvalidParameter: parameters do not give a double root", Error);
}

TEST_CASE("periodicity verdicts") {
    Scalar r = Scalar::zeta(4);
    ScalarMode m = r.mode();
    Scalar one = Scalar::one(m);

    // c2 = 0 with lambda* = -1: lambda_k = r^k - 1, zeros at multiples of 4
    Scalar g = -((r - one) * (r - one));
    auto seq = seq_from_root(r, g, one - one, r - one);
    auto rep = periodicity_check(seq, r);
    CHECK(rep.order == 4);
    CHECK(rep.periodic);
    CHECK(rep.c2.is_zero());
    CHECK_FALSE(rep.counterexample_k.has_value());
    CHECK(rep.zero_bound == 48);
    CHECK(rep.zero_set == std::vector<long>{0, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48});

    // c2 != 0: lambda_k = k*r^k, only k = 0 vanishes
    auto drift = seq_from_root(r, cnum(0, m), cnum(0, m), r);
    auto rep2 = periodicity_check(drift, r);
    CHECK_FALSE(rep2.periodic);
    CHECK(rep2.counterexample_k.has_value());
    CHECK(*rep2.counterexample_k == 0);
    CHECK(rep2.zero_set == std::vector<long>{0});

    // constant sequence is periodic for any torsion root
    Scalar z3 = Scalar::zeta(3);
    ScalarMode m3 = z3.mode();
    Scalar star = cnum(7, m3) / ((z3 - Scalar::one(m3)) * (z3 - Scalar::one(m3)));
    auto cseq = seq_from_root(z3, cnum(7, m3), star, star);
    auto rep3 = periodicity_check(cseq, z3);
    CHECK(rep3.periodic);
    CHECK(rep3.zero_set.empty());

    CHECK_THROWS_WITH_AS(periodicity_check(seq_from_root(rat(2), rat(0), rat(0), rat(1)), rat(2)),
                         "TorsionRequired: periodicity needs a torsion root", Error);
    CHECK_THROWS_AS(periodicity_check(seq, Scalar::zeta(4) * Scalar::zeta(4)), Error);
}

TEST_CASE("w elements, the scaling identity, and normality") {
    for (auto& [rv, gv] : std::vector<std::pair<Scalar, Scalar>>{
             {rat(-1), rat(1)},
             {Scalar::zeta(3), Scalar::zero(Scalar::zeta(3).mode())},
             {Scalar::zeta(4), Scalar::one(Scalar::zeta(4).mode())}}) {
        DoubleRootParams p(rv, gv);
        auto els = w_elements(p);
        ScalarMode m = rv.mode();
        Scalar one = Scalar::one(m);
        Scalar two = one + one;
        auto pres = els.w.presentation();

        CHECK(els.w2 == AlgebraElement::from_raw(pres, {{"du", two}, {"ud", -two}}));
        CHECK(els.w ==
              AlgebraElement::from_raw(pres, {{"du", one}, {"ud", -rv}, {"", p.epsilon()}}));
        CHECK((els.w.scale(two * (rv - one)) - els.w1).is_zero());

        // d*w = r*w*d and u*w = r^-1*w*u
        auto d = AlgebraElement::generator(pres, 'd');
        auto u = AlgebraElement::generator(pres, 'u');
        CHECK((d * els.w - (els.w * d).scale(rv)).is_zero());
        CHECK((u * els.w - (els.w * u).scale(rv.inv())).is_zero());
        auto ns = normality_scalars(els.w);
        REQUIRE(ns.has_value());
        CHECK(ns->first == rv);
        CHECK(ns->second == rv.inv());
    }

    CHECK_THROWS_AS(w_elements(DoubleRootParams(rat(1), rat(1))), Error);
}

TEST_CASE("sigma orbit and the shear law") {
    std::mt19937_64 rng(testutil::default_seed() + 52);

    // a1 = 0 is fixed by the full period
    {
        Scalar r = Scalar::zeta(4);
        ScalarMode m = r.mode();
        DoubleRootParams p(r, Scalar::zero(m));
        IdealPoint pt{Scalar::zero(m), cnum(5, m)};
        IdealPoint it = sigma_iterate(p, pt, 4);
        CHECK(it.a1 == pt.a1);
        CHECK(it.a2 == pt.a2);
    }

    // frozen: (1, 0) moves to (1, 4*zeta^3) after a full period
    {
        Scalar r = Scalar::zeta(4);
        ScalarMode m = r.mode();
        DoubleRootParams p(r, Scalar::zero(m));
        IdealPoint it = sigma_iterate(p, IdealPoint{cnum(1, m), cnum(0, m)}, 4);
        CHECK(it.a1 == cnum(1, m));
        CHECK(it.a2 == cnum(4, m) * r.pow(3));
        CHECK(it.a2 != cnum(0, m));
    }

    // shear law at the torsion order, randomized
    for (unsigned n : {2u, 3u, 4u, 6u}) {
        Scalar r = Scalar::zeta(n);
        ScalarMode m = r.mode();
        DoubleRootParams p(r, Scalar::zero(m));
        for (int i = 0; i < 13; ++i) {
            IdealPoint pt{testutil::scalar_in_mode(rng, m), testutil::scalar_in_mode(rng, m)};
            IdealPoint it = sigma_iterate(p, pt, n);
            CHECK(it.a1 == pt.a1);
            CHECK(it.a2 == pt.a2 + cnum(n, m) * r.pow(static_cast<long>(n) - 1) * pt.a1);
        }
    }

    // fixed-ideal criterion: fixed iff a1 = 0
    {
        Scalar r = Scalar::zeta(4);
        ScalarMode m = r.mode();
        DoubleRootParams p(r, Scalar::zero(m));
        auto fr = fixed_ideal_criterion(p, IdealPoint{Scalar::zero(m), cnum(5, m)}, 4);
        CHECK(fr.fixed);
        CHECK(fr.a1_zero);
        CHECK(fr.biconditional_ok);
        auto fr2 = fixed_ideal_criterion(p, IdealPoint{cnum(1, m), cnum(0, m)}, 4);
        CHECK_FALSE(fr2.fixed);
        CHECK(fr2.biconditional_ok);
        for (int i = 0; i < 25; ++i) {
            IdealPoint pt{testutil::scalar_in_mode(rng, m), testutil::scalar_in_mode(rng, m)};
            auto f = fixed_ideal_criterion(p, pt, 4);
            CHECK(f.biconditional_ok);
            CHECK(f.fixed == pt.a1.is_zero());
        }
        CHECK_THROWS_AS(fixed_ideal_criterion(p, IdealPoint{cnum(0, m), cnum(0, m)}, 3), Error);
        DoubleRootParams bad(rat(2), rat(0));
        CHECK_THROWS_AS(
            fixed_ideal_criterion(bad, IdealPoint{rat(0), rat(0)}, 4), Error);
    }
}

TEST_CASE("quotient substitution kills both relations") {
    CHECK(abar_relation_check(DoubleRootParams(rat(-1), rat(0))));
    CHECK(abar_relation_check(DoubleRootParams(rat(-1), rat(1))));
    CHECK(abar_relation_check(DoubleRootParams(rat(3), rat(2))));
    Scalar z3 = Scalar::zeta(3);
    CHECK(abar_relation_check(DoubleRootParams(z3, Scalar::one(z3.mode()))));
    Scalar z4 = Scalar::zeta(4);
    CHECK(abar_relation_check(DoubleRootParams(z4, Scalar::zero(z4.mode()))));
    CHECK_THROWS_AS(abar_relation_check(DoubleRootParams(rat(1), rat(1))), Error);
}

TEST_CASE("powers of w and centrality") {
    // order 2 lives in Rational mode
    DoubleRootParams p2(rat(-1), rat(1));
    CHECK(wn_centrality(p2, 2));
    CHECK_FALSE(is_central(w_elements(p2).w));

    Scalar z3 = Scalar::zeta(3);
    DoubleRootParams p3(z3, Scalar::zero(z3.mode()));
    CHECK(wn_centrality(p3, 3));
    {
        auto w = w_elements(p3).w;
        CHECK_FALSE(is_central(w));
        CHECK_FALSE(is_central(w * w));
    }

    Scalar z4 = Scalar::zeta(4);
    DoubleRootParams p4(z4, Scalar::one(z4.mode()));
    CHECK(wn_centrality(p4, 4));
    {
        auto w = w_elements(p4).w;
        for (unsigned k = 1; k < 4; ++k) CHECK_FALSE(is_central(w.pow(k)));
    }

    Scalar z6 = Scalar::zeta(6);
    DoubleRootParams p6(z6, Scalar::one(z6.mode()));
    CHECK(wn_centrality(p6, 6));

    CHECK_THROWS_WITH_AS(wn_centrality(DoubleRootParams(rat(2), rat(0)), 4),
                         "TorsionRequired: r must be a root of unity of order 4", Error);
    CHECK_THROWS_AS(wn_centrality(p4, 3), Error);
}

TEST_CASE("bezout cofactors") {
    Scalar one = rat(1);

    auto [p1, s1] = bezout_w(1, rat(1));
    CHECK(p1 == Poly<Scalar>::constant(one));
    CHECK(s1 == Poly<Scalar>::constant(-one));

    auto [p2, s2] = bezout_w(2, rat(1));
    CHECK(p2 == Poly<Scalar>::monomial(one, 1));
    CHECK(s2 == Poly<Scalar>::constant(-one));

    // identity check for assorted lambda, including a cyclotomic one
    std::vector<Scalar> lambdas = {rat(5, 7), rat(-3), Scalar::zeta(3) + Scalar::one(Scalar::zeta(3).mode())};
    for (const Scalar& lam : lambdas) {
        for (unsigned n : {1u, 2u, 3u, 4u, 6u}) {
            auto [p, s] = bezout_w(n, lam);
            Scalar o = Scalar::one(lam.mode());
            Poly<Scalar> t = Poly<Scalar>::monomial(o, 1);
            Poly<Scalar> b = Poly<Scalar>::monomial(o, n) + Poly<Scalar>::constant(-lam);
            Poly<Scalar> lhs = p * t + s * b;
            CHECK(lhs == Poly<Scalar>::constant(o));
            // the shape from the proof: p = t^(n-1)/lambda, s = -1/lambda
            CHECK(p == Poly<Scalar>::monomial(lam.inv(), n - 1));
            CHECK(s == Poly<Scalar>::constant(-lam.inv()));
        }
    }

    CHECK_THROWS_WITH_AS(bezout_w(3, rat(0)), "ZeroLambda: lambda must be nonzero", Error);
    CHECK_THROWS_AS(bezout_w(0, rat(1)), Error);
}

TEST_CASE("kdim bounded evidence") {
    Scalar r = Scalar::zeta(4);
    ScalarMode m = r.mode();
    Scalar one = Scalar::one(m);

    // lambda_k = r^k - 1: returns to the seed at n = 4, zeros every 4 steps
    Scalar g = -((r - one) * (r - one));
    auto seq = seq_from_root(r, g, one - one, r - one);
    auto rep = kdim_conditions(seq, 20);
    REQUIRE(rep.orbit_return_n.has_value());
    CHECK(*rep.orbit_return_n == 4);
    CHECK(rep.zero_hits == std::vector<long>{0, 4, 8, 12, 16, 20});
    CHECK(rep.bound == 20);
    CHECK_FALSE(rep.caveat.empty());

    // constant sequence returns immediately
    Scalar star = cnum(3, m) / ((r - one) * (r - one));
    auto creq = seq_from_root(r, cnum(3, m), star, star);
    auto crep = kdim_conditions(creq, 10);
    REQUIRE(crep.orbit_return_n.has_value());
    CHECK(*crep.orbit_return_n == 1);
    CHECK(crep.zero_hits.empty());

    // drifting sequence: no return, one zero
    auto drift = seq_from_root(r, cnum(0, m), cnum(0, m), r);
    auto drep = kdim_conditions(drift, 50);
    CHECK_FALSE(drep.orbit_return_n.has_value());
    CHECK(drep.zero_hits == std::vector<long>{0});

    CHECK_THROWS_AS(kdim_conditions(drift, 0), Error);
}
