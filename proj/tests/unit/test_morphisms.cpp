#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common/test_rng.hpp"
#include "downup/morphisms.hpp"

#include <random>

using namespace downup;

namespace {

Scalar rat(long long n, long long d = 1) { return Scalar::from_rational(Rational(n, d)); }

}  // namespace

TEST_CASE("case (a): onto the quantum plane") {
    // (r, s) = (2, 1): A(3, -2, 0) -> B(2)
    {
        GeneratorMap m = lemma_case_a(rat(3), rat(-2), rat(2), rat(1));
        CHECK(m.verified);
        CHECK(m.target->q() == rat(2));
    }
    // (r, s) = (q, 1): A(q+1, -q, 0) -> B(q)
    {
        Scalar q = Scalar::q();
        Scalar one = q.one_like();
        GeneratorMap m = lemma_case_a(q + one, -q, q, one);
        CHECK(m.verified);
    }
    // (r, s) = (zeta_4, -zeta_4): A(0, -1, 0) -> B(zeta_4)
    {
        Scalar z = Scalar::zeta(4);
        GeneratorMap m = lemma_case_a(z + (-z), -(z * (-z)), z, -z);
        CHECK(m.verified);
        CHECK(m.source->alpha().is_zero());
        CHECK(m.source->beta() == -z.one_like());
    }
}

TEST_CASE("case (b): onto the quantized Weyl algebra") {
    GeneratorMap m = lemma_case_b(rat(5), rat(-6), rat(2), rat(3));
    CHECK(m.verified);
    CHECK(m.source->gamma() == rat(1));
    // t = 1/(1-s) = -1/2
    CHECK(m.image_d == AlgebraElement::generator(m.target, 'a').scale(rat(-1, 2)));

    std::mt19937_64 rng(testutil::default_seed() + 20);
    std::vector<ScalarMode> modes{{ModeKind::Rational, 0},
                                  {ModeKind::RationalFunction, 0},
                                  {ModeKind::Cyclotomic, 4}};
    for (const auto& mode : modes) {
        for (int i = 0; i < 10; ++i) {
            Scalar r = testutil::nonzero_scalar_in_mode(rng, mode);
            Scalar s = testutil::nonzero_scalar_in_mode(rng, mode);
            if (s == s.one_like()) continue;
            GeneratorMap mm = lemma_case_b(r + s, -(r * s), r, s);
            CHECK(mm.verified);
        }
    }
}

TEST_CASE("case (b) rejects s = 1") {
    CHECK_THROWS_AS(lemma_case_b(rat(3), rat(-2), rat(2), rat(1)), Error);
    try {
        lemma_case_b(rat(3), rat(-2), rat(2), rat(1));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidParameter);
    }
}

TEST_CASE("root validation") {
    CHECK_THROWS_AS(lemma_case_a(rat(3), rat(-2), rat(2), rat(2)), Error);
    try {
        lemma_case_a(rat(3), rat(-2), rat(4), rat(1));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RootMismatch);
    }
}

TEST_CASE("failing map carries a certificate") {
    // A(alpha, beta, 0) -> C(r) with d -> a, u -> b is not a homomorphism
    // unless s = 1; the R1 image reduces to (1-s)*a.
    Scalar r = rat(2), s = rat(3);
    auto source = Presentation::down_up(r + s, -(r * s), r.zero_like());
    auto target = Presentation::quantized_weyl(r);
    GeneratorMap m = make_generator_map(source, target, AlgebraElement::generator(target, 'a'),
                                        AlgebraElement::generator(target, 'b'));
    HomCheck res = check_hom(m);
    CHECK(!res.ok);
    CHECK(!m.verified);
    CHECK(res.failed_relation == "R1");
    REQUIRE(res.certificate.has_value());
    Scalar one = r.one_like();
    CHECK(*res.certificate == AlgebraElement::generator(target, 'a').scale(one - s));
    CHECK(res.certificate->to_string() == "-2*a");
}

TEST_CASE("apply_hom requires verification") {
    Scalar r = rat(2), s = rat(3);
    auto source = Presentation::down_up(r + s, -(r * s), r.zero_like());
    auto target = Presentation::quantized_weyl(r);
    GeneratorMap m = make_generator_map(source, target, AlgebraElement::generator(target, 'a'),
                                        AlgebraElement::generator(target, 'b'));
    auto x = AlgebraElement::generator(source, 'd');
    CHECK_THROWS_AS(apply_hom(m, x), Error);
    try {
        apply_hom(m, x);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnverifiedMap);
    }
}

TEST_CASE("apply_hom is well-defined on rewritten words") {
    GeneratorMap m = lemma_case_a(rat(3), rat(-2), rat(2), rat(1));
    Scalar one = Scalar::one(m.source->mode());

    // ddu normal-forms in the source before mapping; mapping the raw word
    // letter by letter must agree.
    auto x = AlgebraElement::from_raw(m.source, {{"ddu", one}});
    AlgebraElement direct = word_image(m, "ddu");
    CHECK(apply_hom(m, x) == direct);

    auto du = AlgebraElement::from_raw(m.source, {{"du", one}});
    CHECK(apply_hom(m, du) == m.image_d * m.image_u);
    CHECK(apply_hom(m, AlgebraElement::one(m.source)) == AlgebraElement::one(m.target));
}

TEST_CASE("apply_hom is multiplicative on random pairs") {
    std::mt19937_64 rng(testutil::default_seed() + 21);
    std::vector<GeneratorMap> maps{lemma_case_a(rat(3), rat(-2), rat(2), rat(1)),
                                   lemma_case_b(rat(5), rat(-6), rat(2), rat(3))};
    for (auto& m : maps) {
        for (int i = 0; i < 60; ++i) {
            RawElement raw_x, raw_y;
            for (int t = 0; t < 2; ++t) {
                Word w;
                int len = static_cast<int>(testutil::int_in(rng, 0, 4));
                for (int j = 0; j < len; ++j) w += testutil::int_in(rng, 0, 1) ? 'u' : 'd';
                raw_x.emplace_back(w, testutil::scalar_in_mode(rng, m.source->mode()));
                Word w2;
                len = static_cast<int>(testutil::int_in(rng, 0, 4));
                for (int j = 0; j < len; ++j) w2 += testutil::int_in(rng, 0, 1) ? 'u' : 'd';
                raw_y.emplace_back(w2, testutil::scalar_in_mode(rng, m.source->mode()));
            }
            auto x = AlgebraElement::from_raw(m.source, raw_x);
            auto y = AlgebraElement::from_raw(m.source, raw_y);
            CHECK(apply_hom(m, x * y) == apply_hom(m, x) * apply_hom(m, y));
            CHECK(apply_hom(m, x + y) == apply_hom(m, x) + apply_hom(m, y));
        }
    }
}
