#include "downup/morphisms.hpp"

namespace downup {

GeneratorMap make_generator_map(std::shared_ptr<const Presentation> source,
                                std::shared_ptr<const Presentation> target,
                                AlgebraElement image_d, AlgebraElement image_u) {
    if (!source || source->kind() != PresentationKind::DownUp)
        throw Error(Errc::InvalidParameter, "source must be a down-up presentation");
    if (!target || target->kind() == PresentationKind::DownUp)
        throw Error(Errc::InvalidParameter, "target must be qplane or qweyl");
    if (!(source->mode() == target->mode()))
        throw Error(Errc::ModeMismatch, "source and target use different scalar modes");
    if (!image_d.presentation()->same_as(*target) || !image_u.presentation()->same_as(*target))
        throw Error(Errc::PresentationMismatch, "generator images must live over the target");
    return GeneratorMap{std::move(source), std::move(target), std::move(image_d),
                        std::move(image_u), false};
}

AlgebraElement word_image(const GeneratorMap& m, const Word& w) {
    AlgebraElement acc = AlgebraElement::one(m.target);
    for (char ch : w) acc = acc * (ch == 'd' ? m.image_d : m.image_u);
    return acc;
}

HomCheck check_hom(GeneratorMap& m) {
    const char* names[] = {"R1", "R2"};
    int idx = 0;
    for (const auto& rule : m.source->rules()) {
        AlgebraElement image = word_image(m, rule.lhs);
        for (const auto& [w, c] : rule.rhs) image = image - word_image(m, w).scale(c);
        if (!image.is_zero()) return HomCheck{false, names[idx], std::move(image)};
        ++idx;
    }
    m.verified = true;
    return HomCheck{true, "", std::nullopt};
}

namespace {

void check_roots(const Scalar& alpha, const Scalar& beta, const Scalar& r, const Scalar& s) {
    if (r + s != alpha || r * s != -beta)
        throw Error(Errc::RootMismatch, "r, s are not the roots of X^2 - alpha*X - beta");
}

}  // namespace

GeneratorMap lemma_case_a(const Scalar& alpha, const Scalar& beta, const Scalar& r,
                          const Scalar& s) {
    check_roots(alpha, beta, r, s);
    auto source = Presentation::down_up(alpha, beta, alpha.zero_like());
    auto target = Presentation::quantum_plane(r);
    GeneratorMap m = make_generator_map(source, target, AlgebraElement::generator(target, 'a'),
                                        AlgebraElement::generator(target, 'b'));
    check_hom(m);
    return m;
}

GeneratorMap lemma_case_b(const Scalar& alpha, const Scalar& beta, const Scalar& r,
                          const Scalar& s) {
    check_roots(alpha, beta, r, s);
    Scalar one = alpha.one_like();
    if (s == one)
        throw Error(Errc::InvalidParameter, "the co-root s = 1 leaves t = 1/(1-s) undefined");
    Scalar t = one / (one - s);
    auto source = Presentation::down_up(alpha, beta, one);
    auto target = Presentation::quantized_weyl(r);
    GeneratorMap m =
        make_generator_map(source, target, AlgebraElement::generator(target, 'a').scale(t),
                           AlgebraElement::generator(target, 'b'));
    check_hom(m);
    return m;
}

AlgebraElement apply_hom(const GeneratorMap& m, const AlgebraElement& x) {
    if (!m.verified) throw Error(Errc::UnverifiedMap, "map has not passed check_hom");
    if (!x.presentation()->same_as(*m.source))
        throw Error(Errc::PresentationMismatch, "element does not live over the map's source");
    AlgebraElement acc = AlgebraElement::zero(m.target);
    for (const auto& [w, c] : x.terms()) acc = acc + word_image(m, w).scale(c);
    return acc;
}

}  // namespace downup
