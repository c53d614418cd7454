#pragma once

#include "downup/morphisms.hpp"

#include <optional>
#include <string>

namespace downup::diamond {

// Verdict on whether every finitely generated module of A(alpha, beta, gamma)
// with an essential simple socle has finite length: HOLDS and FAILS are
// decided by the torsion of the roots of X^2 - alpha*X - beta; the singular
// configuration roots {1, eta} with eta non-torsion and gamma != 0 stays OPEN.
enum class Status { Holds, Fails, Open };

const char* status_name(Status s);

// A FAILS verdict carries a verified hom onto B(r) or C(r) together with
// the module family ("qp" or "qwa") whose essential extensions pull back.
struct Witness {
    GeneratorMap hom;
    std::string module_family;
};

struct Verdict {
    Status status;
    std::string rationale;
    std::optional<Witness> witness;
};

// Parameters with gamma rescaled to 1; u -> scale*u identifies
// A(alpha, beta, gamma) with A(alpha, beta, 1).
struct GammaNormalization {
    Scalar alpha;
    Scalar beta;
    Scalar gamma;
    Scalar scale;
};

GammaNormalization normalize_gamma(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

// Decision procedure. The roots are inputs and get validated against
// (alpha, beta); beta must be nonzero. Torsion is tested through
// root_of_unity_order with the given bound, which is exact in Rational
// mode and for Cyclotomic entries, and never flags a non-constant rational
// function. For nonzero gamma the witness hom is built over the normalized
// presentation A(alpha, beta, 1).
Verdict classify(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, const Scalar& r,
                 const Scalar& s, unsigned order_bound = 360);

}  // namespace downup::diamond
