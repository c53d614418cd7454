#include "downup/qwa_modules.hpp"

#include <sstream>

namespace downup::qwa {

namespace {

void check_symbol(ModuleKind kind, const BasisSymbol& s) {
    bool ok = false;
    switch (kind) {
        case ModuleKind::V: ok = s.family == Family::V; break;
        case ModuleKind::W: ok = s.family == Family::Wb; break;
        case ModuleKind::M: ok = true; break;
    }
    if (!ok) throw Error(Errc::InvalidParameter, "basis family not allowed in this module");
    if (s.index < 0) throw Error(Errc::InvalidParameter, "basis indices are nonnegative");
}

void check_parameter(const Scalar& q) {
    if (q.is_zero() || q.is_one())
        throw Error(Errc::InvalidParameter, "q must avoid 0 and 1");
}

const char* family_letter(Family f) {
    switch (f) {
        case Family::V: return "v";
        case Family::Wb: return "w";
    }
    return "?";
}

}  // namespace

ModuleElement ModuleElement::zero(ModuleKind kind, const Scalar& q) {
    check_parameter(q);
    return ModuleElement(kind, q, Terms{});
}

ModuleElement ModuleElement::basis(ModuleKind kind, const Scalar& q, Family family, long index) {
    return from_terms(kind, q, {{BasisSymbol{family, index}, Scalar::one(q.mode())}});
}

ModuleElement ModuleElement::from_terms(ModuleKind kind, const Scalar& q,
                                        const std::vector<std::pair<BasisSymbol, Scalar>>& terms) {
    check_parameter(q);
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

Scalar q_bracket(long n, const Scalar& q) {
    if (n < 0) throw Error(Errc::InvalidParameter, "q-integers are indexed by n >= 0");
    Scalar one = Scalar::one(q.mode());
    return (q.pow(n) - one) * (q - one).inv();
}

namespace {

void add_term(std::vector<std::pair<BasisSymbol, Scalar>>& out, Family f, long n,
              const Scalar& c) {
    out.emplace_back(BasisSymbol{f, n}, c);
}

}  // namespace

ModuleElement act(char g, const ModuleElement& x) {
    if (g != 'a' && g != 'b')
        throw Error(Errc::InvalidParameter, std::string("unknown generator '") + g + "'");
    const Scalar& q = x.q();
    Scalar one = Scalar::one(q.mode());
    std::vector<std::pair<BasisSymbol, Scalar>> out;
    for (const auto& [sym, c] : x.terms()) {
        long n = sym.index;
        switch (sym.family) {
            case Family::V:
                if (g == 'a') {
                    if (n >= 1) add_term(out, Family::V, n - 1, c * q_bracket(n, q));
                } else {
                    add_term(out, Family::V, n + 1, c);
                }
                break;
            case Family::Wb:
                if (g == 'a') {
                    Scalar f = c * q.pow(n);
                    add_term(out, Family::Wb, n, f);
                    add_term(out, Family::Wb, n + 1, f);
                } else {
                    add_term(out, Family::Wb, n, c * q.pow(-n) * (one - q).inv());
                    if (x.kind() == ModuleKind::M) {
                        Scalar sign = n % 2 == 0 ? one : -one;
                        add_term(out, Family::V, 0, c * sign);
                    }
                }
                break;
        }
    }
    return ModuleElement::from_terms(x.kind(), q, out);
}

ModuleElement act_algebra(const AlgebraElement& x, const ModuleElement& m) {
    const auto& p = x.presentation();
    if (p->kind() != PresentationKind::QWeyl)
        throw Error(Errc::PresentationMismatch, "operator must live over the quantized Weyl algebra");
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
    auto pres = Presentation::quantized_weyl(q);

    long top = v.terms().rbegin()->first.index;
    AlgebraElement op = AlgebraElement::one(pres);
    std::vector<AlgebraElement> factors;
    if (top > 0) {
        AlgebraElement shift =
            AlgebraElement::generator(pres, 'a').pow(static_cast<unsigned long>(top));
        factors.push_back(shift);
        op = shift;
    }

    // a^top annihilates every lower term and maps v_top to the product of
    // the q-integers [top]_q ... [1]_q times v_0; divide that out.
    ModuleElement raw = act_algebra(op, v);
    if (raw.terms().size() != 1 || raw.terms().begin()->first.index != 0)
        throw Error(Errc::InvalidParameter, "power of a did not isolate v(0)");
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
    auto pres = Presentation::quantized_weyl(q);
    Scalar one = Scalar::one(q.mode());

    AlgebraElement op = AlgebraElement::one(pres);
    std::vector<AlgebraElement> factors;
    ModuleElement cur = m;

    // Wb sorts after V, so the map's last key is the top w-index whenever
    // any w-term is present. Each factor strictly lowers that index.
    long steps_left = cur.terms().rbegin()->first.index + 1;
    while (!cur.in_V()) {
        if (steps_left-- <= 0)
            throw Error(Errc::InvalidParameter, "essentiality reduction failed to terminate");
        long n = cur.terms().rbegin()->first.index;
        Scalar shift = q.pow(-n) * (one - q).inv();
        AlgebraElement factor = AlgebraElement::from_raw(pres, {{"b", one}, {"", -shift}});
        factors.push_back(factor);
        op = factor * op;
        cur = act_algebra(factor, cur);
    }

    if (cur.is_zero())
        throw Error(Errc::InvalidParameter, "essentiality reduction reached zero");
    return Witness{std::move(op), std::move(factors), std::move(cur)};
}

long submodule_index_W(const ModuleElement& w) {
    if (w.kind() != ModuleKind::W)
        throw Error(Errc::InvalidParameter, "submodule index is defined on W");
    if (w.is_zero()) throw Error(Errc::ZeroVector, "zero vector generates the zero submodule");
    return w.terms().begin()->first.index;
}

Scalar quotient_character_W(long n, const Scalar& q) {
    if (n < 0) throw Error(Errc::InvalidParameter, "submodule index must be nonnegative");
    check_parameter(q);
    return q.pow(-n) * (Scalar::one(q.mode()) - q).inv();
}

}  // namespace downup::qwa
