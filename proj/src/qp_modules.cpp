#include "downup/qp_modules.hpp"

#include <sstream>

namespace downup::qp {

namespace {

void check_symbol(ModuleKind kind, const BasisSymbol& s) {
    bool ok = false;
    switch (kind) {
        case ModuleKind::V: ok = s.family == Family::V; break;
        case ModuleKind::W: ok = s.family == Family::Wb; break;
        case ModuleKind::M: ok = s.family == Family::V || s.family == Family::Mo; break;
    }
    if (!ok) throw Error(Errc::InvalidParameter, "basis family not allowed in this module");
    if (s.family != Family::V && s.index < 0)
        throw Error(Errc::InvalidParameter, "index must be nonnegative for this family");
}

const char* family_letter(Family f) {
    switch (f) {
        case Family::V: return "v";
        case Family::Mo: return "m";
        case Family::Wb: return "w";
    }
    return "?";
}

}  // namespace

ModuleElement ModuleElement::zero(ModuleKind kind, const Scalar& q) {
    if (q.is_zero()) throw Error(Errc::InvalidParameter, "q must be nonzero");
    return ModuleElement(kind, q, Terms{});
}

ModuleElement ModuleElement::basis(ModuleKind kind, const Scalar& q, Family family, long index) {
    return from_terms(kind, q, {{BasisSymbol{family, index}, Scalar::one(q.mode())}});
}

ModuleElement ModuleElement::from_terms(ModuleKind kind, const Scalar& q,
                                        const std::vector<std::pair<BasisSymbol, Scalar>>& terms) {
    if (q.is_zero()) throw Error(Errc::InvalidParameter, "q must be nonzero");
    Terms t;
    for (const auto& [sym, c] : terms) {
        check_symbol(kind, sym);
        if (!(c.mode() == q.mode()))
            throw Error(Errc::ModeMismatch, "coefficient mode differs from q's");
        if (c.is_zero()) continue;
        auto it = t.find(sym);
        if (it == t.end()) {
            t.emplace(sym, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return ModuleElement(kind, q, std::move(t));
}

bool ModuleElement::in_V() const {
    for (const auto& [sym, c] : terms_)
        if (sym.family != Family::V) return false;
    return true;
}

void ModuleElement::check_compatible(const ModuleElement& o) const {
    if (kind_ != o.kind_) throw Error(Errc::ParameterMismatch, "module kinds differ");
    if (!(q_.mode() == o.q_.mode()) || q_ != o.q_)
        throw Error(Errc::ParameterMismatch, "module parameters q differ");
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    check_compatible(o);
    Terms t = terms_;
    for (const auto& [sym, c] : o.terms_) {
        auto it = t.find(sym);
        if (it == t.end()) {
            t.emplace(sym, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return ModuleElement(kind_, q_, std::move(t));
}

ModuleElement ModuleElement::operator-() const {
    Terms t;
    for (const auto& [sym, c] : terms_) t.emplace(sym, -c);
    return ModuleElement(kind_, q_, std::move(t));
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const { return *this + (-o); }

ModuleElement ModuleElement::scale(const Scalar& c) const {
    if (!(c.mode() == q_.mode()))
        throw Error(Errc::ModeMismatch, "scalar mode differs from q's");
    if (c.is_zero()) return ModuleElement(kind_, q_, Terms{});
    Terms t;
    for (const auto& [sym, v] : terms_) t.emplace(sym, v * c);
    return ModuleElement(kind_, q_, std::move(t));
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

std::string ModuleElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [sym, coeff] : terms_) {
        Scalar c = coeff;
        bool negated = false;
        if (c.atomic_in_product()) {
            std::string s = c.to_string();
            if (!s.empty() && s[0] == '-') {
                negated = true;
                c = -c;
            }
        }
        if (first) {
            if (negated) out << "-";
            first = false;
        } else {
            out << (negated ? " - " : " + ");
        }
        std::string symbol =
            std::string(family_letter(sym.family)) + "(" + std::to_string(sym.index) + ")";
        if (c.is_one()) {
            out << symbol;
        } else if (c.atomic_in_product()) {
            out << c.to_string() << "*" << symbol;
        } else {
            out << "(" << c.to_string() << ")*" << symbol;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Action

namespace {

void add_term(ModuleElement::Terms& t, const BasisSymbol& sym, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(sym);
    if (it == t.end()) {
        t.emplace(sym, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace

ModuleElement act(char g, const ModuleElement& x) {
    if (g != 'a' && g != 'b')
        throw Error(Errc::InvalidParameter, std::string("unknown generator '") + g + "'");
    const Scalar& q = x.q();
    std::vector<std::pair<BasisSymbol, Scalar>> out;
    for (const auto& [sym, c] : x.terms()) {
        long n = sym.index;
        switch (sym.family) {
            case Family::V:
                if (g == 'a') {
                    // a*v_n = q^(n-1)*v_(n-1) for n >= 1, v_(n-1) otherwise
                    Scalar f = n >= 1 ? q.pow(n - 1) : Scalar::one(q.mode());
                    out.emplace_back(BasisSymbol{Family::V, n - 1}, c * f);
                } else {
                    // b*v_n = v_(n+1) for n >= 0, q^n*v_(n+1) otherwise
                    Scalar f = n >= 0 ? Scalar::one(q.mode()) : q.pow(n);
                    out.emplace_back(BasisSymbol{Family::V, n + 1}, c * f);
                }
                break;
            case Family::Mo:
                if (g == 'a') {
                    // a*m_p = q^p*(m_p + v_p)
                    Scalar f = q.pow(n);
                    out.emplace_back(BasisSymbol{Family::Mo, n}, c * f);
                    out.emplace_back(BasisSymbol{Family::V, n}, c * f);
                } else {
                    out.emplace_back(BasisSymbol{Family::Mo, n + 1}, c);
                }
                break;
            case Family::Wb:
                if (g == 'a') {
                    out.emplace_back(BasisSymbol{Family::Wb, n}, c * q.pow(n));
                } else {
                    out.emplace_back(BasisSymbol{Family::Wb, n + 1}, c);
                }
                break;
        }
    }
    return ModuleElement::from_terms(x.kind(), q, out);
}

ModuleElement act_algebra(const AlgebraElement& x, const ModuleElement& m) {
    const auto& p = x.presentation();
    if (p->kind() != PresentationKind::QPlane)
        throw Error(Errc::PresentationMismatch, "operator must live over the quantum plane");
    if (!(p->mode() == m.q().mode()) || p->q() != m.q())
        throw Error(Errc::ParameterMismatch, "operator parameter q differs from the module's");
    ModuleElement acc = ModuleElement::zero(m.kind(), m.q());
    for (const auto& [w, c] : x.terms()) {
        ModuleElement cur = m;
        for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act(*it, cur);
        acc = acc + cur.scale(c);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Witnesses

void require_nontorsion(const Scalar& q, unsigned bound) {
    if (q.is_zero()) throw Error(Errc::InvalidParameter, "q must be nonzero");
    if (root_of_unity_order(q, bound).has_value())
        throw Error(Errc::TorsionParameter, "q is a root of unity");
}

Witness simplicity_witness_V(const ModuleElement& v) {
    if (v.kind() != ModuleKind::V)
        throw Error(Errc::InvalidParameter, "simplicity witness expects an element of V");
    if (v.is_zero()) throw Error(Errc::ZeroVector, "zero vector has no witness");
    require_nontorsion(v.q());

    const Scalar& q = v.q();
    auto pres = Presentation::quantum_plane(q);
    Scalar one = Scalar::one(q.mode());

    long n0 = v.terms().begin()->first.index;  // min support index
    AlgebraElement op = AlgebraElement::one(pres);
    std::vector<AlgebraElement> factors;

    // Eigen-separator: (ab - q^k)/(q^n0 - q^k) fixes v_n0 and kills v_k.
    for (const auto& [sym, c] : v.terms()) {
        long k = sym.index;
        if (k == n0) continue;
        Scalar denom = q.pow(n0) - q.pow(k);
        AlgebraElement factor =
            AlgebraElement::from_raw(pres, {{"ab", one}, {"", -q.pow(k)}}).scale(denom.inv());
        factors.push_back(factor);
        op = factor * op;
    }

    // Shift v_n0 to v_0 by a's (n0 > 0) or b's (n0 < 0).
    if (n0 != 0) {
        char g = n0 > 0 ? 'a' : 'b';
        AlgebraElement gen = AlgebraElement::generator(pres, g);
        AlgebraElement shift = gen.pow(static_cast<unsigned long>(n0 > 0 ? n0 : -n0));
        factors.push_back(shift);
        op = shift * op;
    }

    // Divide out the accumulated scalar so the witness lands exactly on v_0.
    ModuleElement raw = act_algebra(op, v);
    if (raw.terms().size() != 1 || raw.terms().begin()->first.index != 0)
        throw Error(Errc::InvalidParameter, "separator did not isolate v(0)");
    Scalar mu = raw.terms().begin()->second;
    op = op.scale(mu.inv());

    ModuleElement result = act_algebra(op, v);
    return Witness{std::move(op), std::move(factors), std::move(result)};
}

Witness essentiality_witness_M(const ModuleElement& m) {
    if (m.kind() != ModuleKind::M)
        throw Error(Errc::InvalidParameter, "essentiality witness expects an element of M");
    if (m.is_zero()) throw Error(Errc::ZeroVector, "zero vector has no witness");
    require_nontorsion(m.q());

    const Scalar& q = m.q();
    auto pres = Presentation::quantum_plane(q);
    Scalar one = Scalar::one(q.mode());

    std::vector<long> mo_support;
    for (const auto& [sym, c] : m.terms())
        if (sym.family == Family::Mo) mo_support.push_back(sym.index);

    AlgebraElement op = AlgebraElement::one(pres);
    std::vector<AlgebraElement> factors;
    for (auto it = mo_support.rbegin(); it != mo_support.rend(); ++it) {
        AlgebraElement factor = AlgebraElement::from_raw(pres, {{"a", one}, {"", -q.pow(*it)}});
        factors.push_back(factor);
        op = factor * op;
    }

    ModuleElement result = act_algebra(op, m);
    if (!result.in_V() || result.is_zero())
        throw Error(Errc::InvalidParameter, "essentiality reduction failed");
    return Witness{std::move(op), std::move(factors), std::move(result)};
}

long length_V(const ModuleElement& v) {
    if (v.is_zero()) throw Error(Errc::ZeroVector, "zero vector has no length");
    if (!v.in_V()) throw Error(Errc::InvalidParameter, "length is defined on elements of V");
    long lo = v.terms().begin()->first.index;
    long hi = v.terms().rbegin()->first.index;
    return hi - lo;
}

long submodule_index_W(const ModuleElement& w) {
    if (w.kind() != ModuleKind::W)
        throw Error(Errc::InvalidParameter, "submodule index is defined on W");
    if (w.is_zero()) throw Error(Errc::ZeroVector, "zero vector generates the zero submodule");
    return w.terms().begin()->first.index;
}

Scalar quotient_character_W(long n, const Scalar& q) {
    if (n < 0) throw Error(Errc::InvalidParameter, "submodule index must be nonnegative");
    return q.pow(n);
}

}  // namespace downup::qp
