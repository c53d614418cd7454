#pragma once

#include "downup/ncalg.hpp"

#include <map>
#include <vector>

namespace downup::qwa {

// Basis families of the C(q)-modules: v_n spans the simple submodule V,
// w_n spans the complement whose image in W = M/V is uniserial. Indices
// are nonnegative in both families.
enum class Family { V, Wb };

enum class ModuleKind { V, W, M };

struct BasisSymbol {
    Family family;
    long index;

    bool operator<(const BasisSymbol& o) const {
        if (family != o.family) return family < o.family;
        return index < o.index;
    }
    bool operator==(const BasisSymbol& o) const {
        return family == o.family && index == o.index;
    }
};

// Element of V, W, or M with exact coefficients. V uses the V family only,
// W the Wb family, M mixes both. The parameter q must avoid 0 and 1: the
// b-action on w_n divides by 1 - q.
class ModuleElement {
public:
    using Terms = std::map<BasisSymbol, Scalar>;

    static ModuleElement zero(ModuleKind kind, const Scalar& q);
    static ModuleElement basis(ModuleKind kind, const Scalar& q, Family family, long index);
    static ModuleElement from_terms(ModuleKind kind, const Scalar& q,
                                    const std::vector<std::pair<BasisSymbol, Scalar>>& terms);

    ModuleKind kind() const { return kind_; }
    const Scalar& q() const { return q_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True when every term lies in the V family.
    bool in_V() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement operator-() const;
    ModuleElement scale(const Scalar& c) const;

    bool operator==(const ModuleElement& o) const;
    bool operator!=(const ModuleElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    ModuleElement(ModuleKind kind, Scalar q, Terms terms)
        : kind_(kind), q_(std::move(q)), terms_(std::move(terms)) {}

    void check_compatible(const ModuleElement& o) const;

    ModuleKind kind_;
    Scalar q_;
    Terms terms_;
};

// The q-integer [n]_q = (q^n - 1)/(q - 1) appearing in the a-action on V.
Scalar q_bracket(long n, const Scalar& q);

// Action of a single generator letter ('a' or 'b'):
//   a*v_0 = 0        a*v_n = [n]_q v_(n-1)           b*v_n = v_(n+1)
//   a*w_n = q^n (w_n + w_(n+1))
//   b*w_n = q^(-n)/(1-q) w_n + (-1)^n v_0
// with the v_0 term of the last line dropped in W, which is the quotient
// of M by V.
ModuleElement act(char g, const ModuleElement& x);

// Action of a quantized-Weyl element; letters of each word act right to left.
ModuleElement act_algebra(const AlgebraElement& x, const ModuleElement& m);

struct Witness {
    AlgebraElement op;                    // the full operator, c with c*m = result
    std::vector<AlgebraElement> factors;  // structural factors, first applied first
    ModuleElement result;
};

// Operator a^top scaled so that the witness lands exactly on v(0); a kills
// the lower terms and sends v_top through the nonzero product of q-integers.
Witness simplicity_witness_V(const ModuleElement& v);

// Repeatedly applies (b - q^(-n)/(1-q)) at the current maximal w-index n;
// each application removes the top w-term, so at most top+1 steps leave a
// nonzero element of V.
Witness essentiality_witness_M(const ModuleElement& m);

// Min support index n of a nonzero element of W; C*w equals span{Wb(m): m >= n}.
long submodule_index_W(const ModuleElement& w);

// q^(-n)/(1-q), the scalar by which b acts on the unique simple quotient of W_n.
Scalar quotient_character_W(long n, const Scalar& q);

// Guard shared by the witness operations: q must not be a root of unity
// within the given bound.
void require_nontorsion(const Scalar& q, unsigned bound = 360);

}  // namespace downup::qwa
