#pragma once

#include "downup/errors.hpp"
#include "downup/poly.hpp"
#include "downup/rational.hpp"

#include <optional>
#include <string>
#include <variant>

namespace downup {

unsigned euler_phi(unsigned n);
unsigned long gcd_ul(unsigned long a, unsigned long b);
unsigned long lcm_ul(unsigned long a, unsigned long b);

// The n-th cyclotomic polynomial over Q, computed by exact division of
// x^n - 1 by the lower cyclotomic factors. Results are memoized.
Poly<Rational> cyclotomic_poly(unsigned n);

// Monic gcd over Q[x] via a primitive remainder sequence on integer
// polynomials, which keeps intermediate coefficients small.
Poly<Rational> rational_poly_gcd(const Poly<Rational>& a, const Poly<Rational>& b);

// Canonical rendering of a rational-coefficient polynomial, descending
// degree, e.g. "q^2 - 2*q + 1".
std::string poly_to_string(const Poly<Rational>& p, const std::string& var);

// Rational function in one indeterminate q. Invariants: the denominator is
// monic and nonzero, gcd(num, den) = 1, and zero is stored as 0/1.
class RatFunc {
public:
    RatFunc();
    RatFunc(Poly<Rational> num, Poly<Rational> den);

    static RatFunc indeterminate();
    static RatFunc constant(const Rational& r);
    static RatFunc from_poly(Poly<Rational> p);

    const Poly<Rational>& num() const { return num_; }
    const Poly<Rational>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inv() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Poly<Rational> num_, den_;
};

// Element of the cyclotomic field Q(zeta_n), stored as a rational polynomial
// in zeta_n of degree below phi(n), i.e. reduced mod the n-th cyclotomic
// polynomial.
class Cyclotomic {
public:
    Cyclotomic(unsigned order, Poly<Rational> coeffs);

    static Cyclotomic zeta(unsigned n);
    static Cyclotomic constant(unsigned n, const Rational& r);

    unsigned order() const { return order_; }
    const Poly<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.is_zero(); }
    std::optional<Rational> rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic inv() const;

    bool operator==(const Cyclotomic& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_order(const Cyclotomic& o) const;

    unsigned order_;
    Poly<Rational> coeffs_;
};

enum class ModeKind { Rational, RationalFunction, Cyclotomic };

struct ScalarMode {
    ModeKind kind = ModeKind::Rational;
    unsigned order = 0;  // cyclotomic order; 0 otherwise

    bool operator==(const ScalarMode&) const = default;
    std::string to_string() const;
};

// Exact scalar: a rational number, a rational function in q, or an element
// of a cyclotomic field. All arithmetic stays within one mode; combining
// scalars of different modes raises ModeMismatch.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}

    static Scalar from_rational(Rational r) { return Scalar(std::move(r)); }
    static Scalar integer(long long n) { return Scalar(Rational(n)); }
    static Scalar q() { return Scalar(RatFunc::indeterminate()); }
    static Scalar from_ratfunc(RatFunc f) { return Scalar(std::move(f)); }
    static Scalar zeta(unsigned n);
    static Scalar from_cyclotomic(Cyclotomic c) { return Scalar(std::move(c)); }
    static Scalar zero(const ScalarMode& m);
    static Scalar one(const ScalarMode& m);
    static Scalar constant(const Rational& r, const ScalarMode& m);

    ScalarMode mode() const;
    Scalar zero_like() const { return zero(mode()); }
    Scalar one_like() const { return one(mode()); }

    bool is_zero() const;
    bool is_one() const;
    // The rational number this scalar equals, if it lies in Q.
    std::optional<Rational> rational_value() const;

    const Rational& as_rational() const;
    const RatFunc& as_ratfunc() const;
    const Cyclotomic& as_cyclotomic() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    Scalar pow(long long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;
    // Whether to_string() can appear as a factor of a product without
    // being parenthesized.
    bool atomic_in_product() const;

private:
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(RatFunc f) : v_(std::move(f)) {}
    explicit Scalar(Cyclotomic c) : v_(std::move(c)) {}

    void check_mode(const Scalar& o) const;

    std::variant<Rational, RatFunc, Cyclotomic> v_;
};

// Least k in [1, bound] with x^k == 1, if any. The search is cut off at the
// largest order a root of unity can have in the scalar's field: 2 for
// rationals (and constant rational functions), lcm(2, n) in Q(zeta_n).
// Non-constant rational functions are never roots of unity.
std::optional<unsigned> root_of_unity_order(const Scalar& x, unsigned bound);

}  // namespace downup
