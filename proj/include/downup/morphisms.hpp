#pragma once

#include "downup/ncalg.hpp"

#include <optional>
#include <string>

namespace downup {

// Generator assignment from a down-up presentation into qplane or qweyl.
// The verified flag is set only by check_hom.
struct GeneratorMap {
    std::shared_ptr<const Presentation> source;
    std::shared_ptr<const Presentation> target;
    AlgebraElement image_d;
    AlgebraElement image_u;
    bool verified = false;
};

struct HomCheck {
    bool ok;
    std::string failed_relation;                // "R1" or "R2" when !ok
    std::optional<AlgebraElement> certificate;  // the nonzero image when !ok
};

GeneratorMap make_generator_map(std::shared_ptr<const Presentation> source,
                                std::shared_ptr<const Presentation> target,
                                AlgebraElement image_d, AlgebraElement image_u);

// Substitutes the images into the source relations and reduces in the
// target; sets m.verified when both vanish.
HomCheck check_hom(GeneratorMap& m);

// d -> a, u -> b onto the quantum plane B(r); requires gamma = 0 and
// r + s = alpha, r*s = -beta.
GeneratorMap lemma_case_a(const Scalar& alpha, const Scalar& beta, const Scalar& r,
                          const Scalar& s);

// d -> t*a, u -> b onto the quantized Weyl algebra C(r) with t = 1/(1-s);
// requires gamma = 1 and s != 1.
GeneratorMap lemma_case_b(const Scalar& alpha, const Scalar& beta, const Scalar& r,
                          const Scalar& s);

// Image of a source element; linear and multiplicative. The map must be
// verified.
AlgebraElement apply_hom(const GeneratorMap& m, const AlgebraElement& x);

// Image of a single source word (no linearity involved); usable on
// unverified maps, which check_hom itself relies on.
AlgebraElement word_image(const GeneratorMap& m, const Word& w);

}  // namespace downup
