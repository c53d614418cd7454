#pragma once

#include "downup/ncalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace downup::gwa {

// Parameters (alpha, beta) = (2r, -r^2) whose root polynomial X^2 - alpha X
// - beta has the double root r. The constant epsilon = gamma/(r-1) enters
// the normal element w and needs r != 1.
struct DoubleRootParams {
    Scalar r;
    Scalar gamma;

    DoubleRootParams(Scalar r_, Scalar gamma_);

    Scalar alpha() const { return r + r; }
    Scalar beta() const { return -(r * r); }
    Scalar epsilon() const;
};

// The affine recursion lambda_n = alpha*lambda_(n-1) + beta*lambda_(n-2)
// + gamma, seeded by the two initial values.
struct LambdaSequence {
    Scalar alpha;
    Scalar beta;
    Scalar gamma;
    Scalar lambda0;
    Scalar lambda1;

    LambdaSequence(Scalar alpha_, Scalar beta_, Scalar gamma_, Scalar l0, Scalar l1);

    static LambdaSequence from_double_root(const DoubleRootParams& p, const Scalar& l0,
                                           const Scalar& l1);
};

// Exact term of the sequence; negative n solves the recursion backward,
// which divides by beta.
Scalar lambda_at(const LambdaSequence& seq, long n);

// Constants of lambda_n = (c1 + c2*n)*r^n + lambda_star in the double-root
// case, with lambda_star = gamma/(r-1)^2 the constant particular solution.
struct ClosedForm {
    Scalar r;
    Scalar c1;
    Scalar c2;
    Scalar lambda_star;
};

ClosedForm lambda_closed_form(const LambdaSequence& seq);

// Periodicity verdict for torsion r: the sequence is periodic exactly when
// the linear coefficient c2 vanishes. zero_set lists the k with lambda_k = 0
// up to zero_bound (default 12 times the order of r).
struct PeriodicityReport {
    unsigned order;
    Scalar c2;
    bool periodic;
    std::optional<long> counterexample_k;  // lambda_(k+order) != lambda_k
    std::vector<long> zero_set;
    long zero_bound;
};

PeriodicityReport periodicity_check(const LambdaSequence& seq, const Scalar& r,
                                    long zero_bound = -1, unsigned order_bound = 360);

// w1 = (2*beta+alpha)*ud + (alpha-2)*du + 2*gamma, w2 = 2*du - 2*ud, and the
// normal element w = w1/(2(r-1)) = du - r*ud + epsilon, all over the down-up
// presentation with (2r, -r^2, gamma).
struct WElements {
    AlgebraElement w1;
    AlgebraElement w2;
    AlgebraElement w;
};

WElements w_elements(const DoubleRootParams& p);

// Maximal ideal (w1 - a1, w2 - a2) recorded by its point coordinates.
struct IdealPoint {
    Scalar a1;
    Scalar a2;
};

// The map induced on ideal points by sigma(w1) = r*w1, sigma(w2) = r*w2 + w1.
IdealPoint sigma_point(const DoubleRootParams& p, const IdealPoint& pt);
IdealPoint sigma_iterate(const DoubleRootParams& p, IdealPoint pt, unsigned long k);

// For r of torsion order n the n-th sigma iterate is the shear
// (a1, a2) -> (a1, a2 + n*r^(n-1)*a1), so the point is fixed exactly when
// a1 = 0, which in turn says w lies in the ideal.
struct FixedIdealReport {
    unsigned order;
    IdealPoint iterate;
    bool fixed;
    bool a1_zero;
    bool biconditional_ok;
};

FixedIdealReport fixed_ideal_criterion(const DoubleRootParams& p, const IdealPoint& pt,
                                       unsigned n, unsigned order_bound = 360);

// Checks that substituting du -> r*ud - epsilon, the passage to the quotient
// by w, reduces both defining relations of the down-up presentation to zero.
bool abar_relation_check(const DoubleRootParams& p);

// Computes w^n by rewriting and reports whether it is central; r must be a
// root of unity of order exactly n.
bool wn_centrality(const DoubleRootParams& p, unsigned n, unsigned order_bound = 360);

// Cofactors (p, s) with 1 = p(t)*t + s(t)*(t^n - lambda), by extended Euclid
// in a single commuting variable.
std::pair<Poly<Scalar>, Poly<Scalar>> bezout_w(unsigned n, const Scalar& lambda);

// Bounded evidence for the two orbit conditions: the least n <= bound with
// (lambda_n, lambda_(n+1)) = (lambda_0, lambda_1), and the n <= bound with
// lambda_n = 0. Enumeration up to a bound decides neither unbounded
// condition; the caveat says so.
struct KdimReport {
    std::optional<long> orbit_return_n;
    std::vector<long> zero_hits;
    long bound;
    std::string caveat;
};

KdimReport kdim_conditions(const LambdaSequence& seq, long bound);

}  // namespace downup::gwa
