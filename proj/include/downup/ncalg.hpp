#pragma once

#include "downup/errors.hpp"
#include "downup/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace downup {

// A word over the presentation's two-letter alphabet; "" denotes 1.
using Word = std::string;

// Degree-lexicographic order with the fixed generator precedences d > u and
// b > a. Shorter words are smaller; among equal lengths the word with the
// higher-precedence letter at the first difference is larger.
int word_deglex_cmp(const Word& a, const Word& b);

struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const { return word_deglex_cmp(a, b) < 0; }
};

enum class PresentationKind { DownUp, QPlane, QWeyl };

// Raw (unreduced) linear combination of words.
using RawElement = std::vector<std::pair<Word, Scalar>>;

struct Rule {
    Word lhs;
    RawElement rhs;
};

class AlgebraElement;

// A two-generator algebra given by a terminating rewriting system:
//   downup:  ddu -> alpha*dud + beta*udd + gamma*d,
//            duu -> alpha*udu + beta*uud + gamma*u      (alphabet d > u)
//   qplane:  ba -> (1/q)*ab                             (alphabet b > a)
//   qweyl:   ba -> (1/q)*ab - (1/q)*1                   (alphabet b > a)
class Presentation : public std::enable_shared_from_this<Presentation> {
public:
    static std::shared_ptr<const Presentation> down_up(const Scalar& alpha, const Scalar& beta,
                                                       const Scalar& gamma);
    static std::shared_ptr<const Presentation> quantum_plane(const Scalar& q);
    static std::shared_ptr<const Presentation> quantized_weyl(const Scalar& q);

    PresentationKind kind() const { return kind_; }
    std::string name() const;
    // Generators in precedence order ("du" or "ba").
    const std::string& alphabet() const { return alphabet_; }
    ScalarMode mode() const { return mode_; }
    const std::vector<Rule>& rules() const { return rules_; }

    const Scalar& alpha() const;
    const Scalar& beta() const;
    const Scalar& gamma() const;
    const Scalar& q() const;

    bool same_as(const Presentation& o) const;

    bool is_normal_word(const Word& w) const;

    static constexpr unsigned long default_fuel = 20000000;

    // Full reduction to normal form. Every rewrite consumes one unit of
    // fuel; exceeding it raises ReductionFuelExhausted.
    std::map<Word, Scalar, DeglexLess> reduce(const RawElement& raw,
                                              unsigned long fuel = default_fuel,
                                              unsigned long* steps_out = nullptr) const;

private:
    Presentation(PresentationKind kind, std::string alphabet, std::vector<Scalar> params,
                 std::vector<Rule> rules);

    PresentationKind kind_;
    std::string alphabet_;
    std::vector<Scalar> params_;  // downup: alpha, beta, gamma; others: q
    std::vector<Rule> rules_;
    ScalarMode mode_;
};

// Element of the quotient algebra, stored in normal form: a deglex-sorted
// map from normal words to nonzero coefficients.
class AlgebraElement {
public:
    using Terms = std::map<Word, Scalar, DeglexLess>;

    static AlgebraElement zero(std::shared_ptr<const Presentation> p);
    static AlgebraElement one(std::shared_ptr<const Presentation> p);
    static AlgebraElement generator(std::shared_ptr<const Presentation> p, char letter);
    static AlgebraElement constant(std::shared_ptr<const Presentation> p, const Scalar& c);
    static AlgebraElement from_raw(std::shared_ptr<const Presentation> p, const RawElement& raw);

    const std::shared_ptr<const Presentation>& presentation() const { return pres_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const;  // max word length, -1 for zero

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scale(const Scalar& c) const;
    AlgebraElement pow(unsigned long e) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    // Canonical rendering, deglex-descending, letters joined with '*',
    // e.g. "2*d*u*d - u*d*d".
    std::string to_string() const;

private:
    AlgebraElement(std::shared_ptr<const Presentation> p, Terms t)
        : pres_(std::move(p)), terms_(std::move(t)) {}

    void check_same(const AlgebraElement& o) const;

    std::shared_ptr<const Presentation> pres_;
    Terms terms_;
};

// xy - r*yx in normal form.
AlgebraElement r_commutator(const AlgebraElement& x, const AlgebraElement& y, const Scalar& r);

struct Ambiguity {
    Word word;            // the overlap word
    AlgebraElement left;  // normal form after first rewriting the left rule
    AlgebraElement right; // normal form after first rewriting the right rule
    bool equal;
};

struct ConfluenceReport {
    std::vector<Ambiguity> ambiguities;
    bool confluent;
};

// Enumerates suffix-prefix overlaps and containments among rule LHSs and
// resolves each both ways.
ConfluenceReport check_confluence(const std::shared_ptr<const Presentation>& p);

// Scalars (c_first, c_second), ordered like the alphabet, with
// g*x == c_g * (x*g) for each generator g; absent if none exist.
std::optional<std::pair<Scalar, Scalar>> normality_scalars(const AlgebraElement& x);

// True iff g*x - x*g reduces to zero for every generator g.
bool is_central(const AlgebraElement& x);

}  // namespace downup
