#pragma once

#include "downup/ncalg.hpp"

#include <map>
#include <vector>

namespace downup::qp {

// Basis families of the three B(q)-modules: V(n) with n ranging over all
// integers, Mo(p) and Wb(n) with nonnegative indices.
enum class Family { V, Mo, Wb };

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
// W the Wb family, M mixes V and Mo.
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

// Action of a single generator letter ('a' or 'b').
ModuleElement act(char g, const ModuleElement& x);

// Action of a quantum-plane element; letters of each word act right to left.
ModuleElement act_algebra(const AlgebraElement& x, const ModuleElement& m);

struct Witness {
    AlgebraElement op;                    // the full operator, c with c*m = result
    std::vector<AlgebraElement> factors;  // structural factors, first applied first
    ModuleElement result;
};

// Operator c with c*v = V(0) exactly: eigen-separation by ab per the
// distinct eigenvalues q^k, then an index shift with the scalars divided
// out.
Witness simplicity_witness_V(const ModuleElement& v);

// Operator product of (a - q^n) over the Mo-support in decreasing order;
// the result lies in V and is nonzero.
Witness essentiality_witness_M(const ModuleElement& m);

// Max support index minus min support index of a nonzero element of V.
long length_V(const ModuleElement& v);

// Min support index n of a nonzero element of W; B*w equals span{Wb(m): m >= n}.
long submodule_index_W(const ModuleElement& w);

// q^n, the scalar by which a acts on the unique simple quotient of W_n.
Scalar quotient_character_W(long n, const Scalar& q);

// Guard shared by the witness operations: q must not be a root of unity
// within the given bound.
void require_nontorsion(const Scalar& q, unsigned bound = 360);

}  // namespace downup::qp
