#include "downup/classifier.hpp"

#include <initializer_list>
#include <utility>

namespace downup::diamond {

const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "HOLDS";
        case Status::Fails: return "FAILS";
        case Status::Open: return "OPEN";
    }
    return "UNKNOWN";
}

namespace {

void check_modes(std::initializer_list<const Scalar*> xs) {
    const Scalar* head = *xs.begin();
    for (const Scalar* x : xs)
        if (!(x->mode() == head->mode()))
            throw Error(Errc::ModeMismatch, "parameters use different scalar modes");
}

}  // namespace

GammaNormalization normalize_gamma(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    check_modes({&alpha, &beta, &gamma});
    if (gamma.is_zero()) throw Error(Errc::ZeroGamma, "gamma = 0 admits no rescaling to 1");
    return GammaNormalization{alpha, beta, alpha.one_like(), gamma};
}

Verdict classify(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, const Scalar& r,
                 const Scalar& s, unsigned order_bound) {
    check_modes({&alpha, &beta, &gamma, &r, &s});
    if (r + s != alpha || r * s != -beta)
        throw Error(Errc::RootMismatch, "r, s are not the roots of X^2 - alpha*X - beta");
    if (beta.is_zero())
        throw Error(Errc::NonNoetherian, "beta = 0 leaves the algebra non-Noetherian");

    // Order the pair by rendering so the verdict cannot depend on which
    // argument carried which root.
    Scalar first = r, second = s;
    if (second.to_string() < first.to_string()) std::swap(first, second);
    const bool torsion[2] = {root_of_unity_order(first, order_bound).has_value(),
                             root_of_unity_order(second, order_bound).has_value()};

    if (torsion[0] && torsion[1]) {
        const char* tag = (first == second) ? "equal-torsion-roots" : "distinct-torsion-roots";
        return Verdict{Status::Holds, tag, std::nullopt};
    }

    if (gamma.is_zero()) {
        // At least one root is non-torsion; it carries the quantum plane.
        const Scalar& root = torsion[0] ? second : first;
        const Scalar& co = torsion[0] ? first : second;
        GeneratorMap hom = lemma_case_a(alpha, beta, root, co);
        return Verdict{Status::Fails, "quantum-plane", Witness{std::move(hom), "qp"}};
    }

    const Scalar one = alpha.one_like();
    const Scalar* roots[2] = {&first, &second};
    for (int i = 0; i < 2; ++i) {
        const Scalar& root = *roots[i];
        const Scalar& co = *roots[1 - i];
        if (torsion[i] || co == one) continue;
        GeneratorMap hom = lemma_case_b(alpha, beta, root, co);
        return Verdict{Status::Fails, "quantized-weyl", Witness{std::move(hom), "qwa"}};
    }
    return Verdict{Status::Open, "weyl-algebra-image", std::nullopt};
}

}  // namespace downup::diamond
