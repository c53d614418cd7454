#include "downup/parse.hpp"

#include <cctype>
#include <optional>

namespace downup::parse {

namespace {

enum class Tok { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Colon, Comma, Equal, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

[[noreturn]] void fail(std::size_t pos, const std::string& msg) {
    throw Error(Errc::ParseError, "at position " + std::to_string(pos + 1) + ": " + msg);
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::Int: return "number " + t.text;
        case Tok::Name: return "name '" + t.text + "'";
        case Tok::End: return "end of input";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Int, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(c)) {
            std::size_t j = i;
            while (j < n && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Name, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        Tok k;
        switch (text[i]) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ':': k = Tok::Colon; break;
            case ',': k = Tok::Comma; break;
            case '=': k = Tok::Equal; break;
            default: fail(i, std::string("unexpected character '") + text[i] + "'");
        }
        out.push_back({k, std::string(1, text[i]), i});
        ++i;
    }
    out.push_back({Tok::End, "", n});
    return out;
}

class Cursor {
public:
    explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek() const { return toks_[i_]; }
    bool at(Tok k) const { return toks_[i_].kind == k; }

    Token next() {
        Token t = toks_[i_];
        if (t.kind != Tok::End) ++i_;
        return t;
    }

    Token expect(Tok k, const std::string& what) {
        if (!at(k)) fail(peek().pos, "expected " + what + ", found " + describe(peek()));
        return next();
    }

    void expect_end() {
        if (!at(Tok::End)) fail(peek().pos, "unexpected " + describe(peek()));
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

long long to_ll(const Token& t) {
    try {
        return std::stoll(t.text);
    } catch (const std::exception&) {
        fail(t.pos, "number " + t.text + " is out of range");
    }
}

unsigned to_order(const Token& t) {
    long long v = to_ll(t);
    if (v == 0) fail(t.pos, "zeta:0 is not defined");
    if (v > 1000000) fail(t.pos, "cyclotomic order " + t.text + " is out of range");
    return static_cast<unsigned>(v);
}

// Decide the mode of a standalone scalar expression by scanning for q and
// zeta:n literals before evaluation.
ScalarMode infer_mode(const std::vector<Token>& toks) {
    ScalarMode m;
    bool saw_q = false;
    std::optional<unsigned> zeta_order;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.kind != Tok::Name) continue;
        if (t.text == "q") {
            if (zeta_order) fail(t.pos, "cannot mix q with zeta literals");
            saw_q = true;
            m = {ModeKind::RationalFunction, 0};
        } else if (t.text == "zeta") {
            if (saw_q) fail(t.pos, "cannot mix q with zeta literals");
            if (i + 2 < toks.size() && toks[i + 1].kind == Tok::Colon &&
                toks[i + 2].kind == Tok::Int) {
                unsigned n = to_order(toks[i + 2]);
                if (zeta_order && *zeta_order != n)
                    fail(t.pos, "cannot mix cyclotomic orders " + std::to_string(*zeta_order) +
                                    " and " + std::to_string(n));
                zeta_order = n;
                m = {ModeKind::Cyclotomic, n};
            }
        }
    }
    return m;
}

class ScalarParser {
public:
    ScalarParser(Cursor& cur, ScalarMode mode) : cur_(cur), mode_(mode) {}

    Scalar parse_sum() {
        Scalar acc = parse_prod();
        while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus)) {
            bool neg = cur_.next().kind == Tok::Minus;
            Scalar rhs = parse_prod();
            acc = neg ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Scalar parse_prod() {
        Scalar acc = parse_signed();
        while (cur_.at(Tok::Star) || cur_.at(Tok::Slash)) {
            bool div = cur_.next().kind == Tok::Slash;
            Scalar rhs = parse_signed();
            acc = div ? acc / rhs : acc * rhs;
        }
        return acc;
    }

    Scalar parse_signed() {
        if (cur_.at(Tok::Minus)) {
            cur_.next();
            return -parse_signed();
        }
        if (cur_.at(Tok::Plus)) {
            cur_.next();
            return parse_signed();
        }
        return parse_power();
    }

    Scalar parse_power() {
        Scalar base = parse_atom();
        if (cur_.at(Tok::Caret)) {
            cur_.next();
            long long e = parse_exponent();
            base = base.pow(e);
            if (cur_.at(Tok::Caret)) fail(cur_.peek().pos, "chained '^' needs parentheses");
        }
        return base;
    }

    long long parse_exponent() {
        bool paren = false;
        if (cur_.at(Tok::LParen)) {
            paren = true;
            cur_.next();
        }
        bool neg = false;
        if (cur_.at(Tok::Minus)) {
            neg = true;
            cur_.next();
        }
        Token t = cur_.expect(Tok::Int, "an integer exponent");
        long long v = to_ll(t);
        if (paren) cur_.expect(Tok::RParen, "')'");
        return neg ? -v : v;
    }

    Scalar parse_atom() {
        const Token t = cur_.peek();
        if (t.kind == Tok::Int) {
            cur_.next();
            return Scalar::constant(Rational(Integer(t.text)), mode_);
        }
        if (t.kind == Tok::Name) {
            if (t.text == "q") {
                if (mode_.kind != ModeKind::RationalFunction)
                    fail(t.pos, "the q literal needs the rational-function mode, not " +
                                    mode_.to_string());
                cur_.next();
                return Scalar::q();
            }
            if (t.text == "zeta") {
                cur_.next();
                cur_.expect(Tok::Colon, "':' after zeta");
                Token ord = cur_.expect(Tok::Int, "a cyclotomic order");
                unsigned n = to_order(ord);
                if (mode_.kind != ModeKind::Cyclotomic || mode_.order != n)
                    fail(t.pos,
                         "zeta:" + ord.text + " does not live in mode " + mode_.to_string());
                return Scalar::zeta(n);
            }
            fail(t.pos, "unknown name '" + t.text + "'");
        }
        if (t.kind == Tok::LParen) {
            cur_.next();
            Scalar inner = parse_sum();
            cur_.expect(Tok::RParen, "')'");
            return inner;
        }
        fail(t.pos, "expected a scalar here, found " + describe(t));
    }

private:
    Cursor& cur_;
    ScalarMode mode_;
};

class AlgebraParser {
public:
    AlgebraParser(Cursor& cur, std::shared_ptr<const Presentation> p)
        : cur_(cur), pres_(std::move(p)), scalars_(cur, pres_->mode()) {}

    AlgebraElement parse_sum() {
        AlgebraElement acc = parse_prod();
        while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus)) {
            bool neg = cur_.next().kind == Tok::Minus;
            AlgebraElement rhs = parse_prod();
            acc = neg ? acc - rhs : acc + rhs;
        }
        return acc;
    }

private:
    AlgebraElement parse_prod() {
        AlgebraElement acc = parse_signed();
        while (cur_.at(Tok::Star) || cur_.at(Tok::Slash)) {
            Token op = cur_.next();
            AlgebraElement rhs = parse_signed();
            if (op.kind == Tok::Star)
                acc = acc * rhs;
            else
                acc = acc.scale(as_constant(rhs, op.pos).inv());
        }
        return acc;
    }

    AlgebraElement parse_signed() {
        if (cur_.at(Tok::Minus)) {
            cur_.next();
            return -parse_signed();
        }
        if (cur_.at(Tok::Plus)) {
            cur_.next();
            return parse_signed();
        }
        return parse_power();
    }

    AlgebraElement parse_power() {
        AlgebraElement base = parse_atom();
        if (cur_.at(Tok::Caret)) {
            Token op = cur_.next();
            long long e = scalars_.parse_exponent();
            if (cur_.at(Tok::Caret)) fail(cur_.peek().pos, "chained '^' needs parentheses");
            if (e < 0) {
                if (!is_constant(base))
                    fail(op.pos, "negative powers are only defined for scalars");
                return AlgebraElement::constant(pres_, as_constant(base, op.pos).pow(e));
            }
            base = base.pow(static_cast<unsigned long>(e));
        }
        return base;
    }

    AlgebraElement parse_atom() {
        const Token t = cur_.peek();
        if (t.kind == Tok::Name && t.text.size() == 1 &&
            std::string("duab").find(t.text[0]) != std::string::npos) {
            if (pres_->alphabet().find(t.text[0]) == std::string::npos)
                fail(t.pos, "the letter '" + t.text + "' is not a generator of " + pres_->name());
            cur_.next();
            return AlgebraElement::generator(pres_, t.text[0]);
        }
        if (t.kind == Tok::LParen) {
            cur_.next();
            AlgebraElement inner = parse_sum();
            cur_.expect(Tok::RParen, "')'");
            return inner;
        }
        if (t.kind == Tok::Int || t.kind == Tok::Name)
            return AlgebraElement::constant(pres_, scalars_.parse_atom());
        fail(t.pos, "expected a generator or scalar here, found " + describe(t));
    }

    static bool is_constant(const AlgebraElement& x) {
        return x.is_zero() || (x.terms().size() == 1 && x.terms().begin()->first.empty());
    }

    Scalar as_constant(const AlgebraElement& x, std::size_t pos) {
        if (!is_constant(x)) fail(pos, "division is only defined by scalars");
        if (x.is_zero()) return Scalar::zero(pres_->mode());
        return x.terms().begin()->second;
    }

    Cursor& cur_;
    std::shared_ptr<const Presentation> pres_;
    ScalarParser scalars_;
};

struct ModuleTerm {
    char symbol;
    long index;
    Scalar coeff;
};

// Shared term parser for qp and qwa elements; `allowed` lists the symbol
// letters of the flavor ("vmw" or "vw").
class ModuleParser {
public:
    ModuleParser(Cursor& cur, ScalarMode mode, std::string allowed)
        : cur_(cur), mode_(mode), allowed_(std::move(allowed)), scalars_(cur, mode) {}

    std::vector<ModuleTerm> parse_sum() {
        std::vector<ModuleTerm> out;
        out.push_back(parse_term(false));
        while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus)) {
            bool neg = cur_.next().kind == Tok::Minus;
            out.push_back(parse_term(neg));
        }
        return out;
    }

private:
    ModuleTerm parse_term(bool negate) {
        while (cur_.at(Tok::Minus) || cur_.at(Tok::Plus)) {
            if (cur_.next().kind == Tok::Minus) negate = !negate;
        }
        const std::size_t start = cur_.peek().pos;
        Scalar coeff = Scalar::one(mode_);
        std::optional<std::pair<char, long>> symbol;
        parse_factor(coeff, symbol);
        while (cur_.at(Tok::Star) || cur_.at(Tok::Slash)) {
            Token op = cur_.next();
            if (op.kind == Tok::Slash)
                coeff = coeff / scalars_.parse_signed();
            else
                parse_factor(coeff, symbol);
        }
        if (!symbol) fail(start, "term lacks a basis symbol");
        return ModuleTerm{symbol->first, symbol->second, negate ? -coeff : coeff};
    }

    void parse_factor(Scalar& coeff, std::optional<std::pair<char, long>>& symbol) {
        const Token t = cur_.peek();
        if (t.kind == Tok::Name && t.text.size() == 1 &&
            std::string("vmw").find(t.text[0]) != std::string::npos) {
            if (allowed_.find(t.text[0]) == std::string::npos)
                fail(t.pos, "the symbol '" + t.text + "' is not part of this module");
            if (symbol) fail(t.pos, "a term may contain at most one basis symbol");
            cur_.next();
            cur_.expect(Tok::LParen, "'('");
            bool neg = false;
            if (cur_.at(Tok::Minus)) {
                neg = true;
                cur_.next();
            }
            Token idx = cur_.expect(Tok::Int, "a basis index");
            long v = static_cast<long>(to_ll(idx));
            cur_.expect(Tok::RParen, "')'");
            symbol = {t.text[0], neg ? -v : v};
            return;
        }
        coeff = coeff * scalars_.parse_power();
    }

    Cursor& cur_;
    ScalarMode mode_;
    std::string allowed_;
    ScalarParser scalars_;
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
    auto toks = tokenize(text);
    ScalarMode mode = infer_mode(toks);
    Cursor cur(std::move(toks));
    ScalarParser p(cur, mode);
    Scalar v = p.parse_sum();
    cur.expect_end();
    return v;
}

Scalar to_mode(const Scalar& x, const ScalarMode& m) {
    if (x.mode() == m) return x;
    if (x.mode().kind == ModeKind::Rational) return Scalar::constant(x.as_rational(), m);
    throw Error(Errc::ModeMismatch,
                "cannot lift " + x.mode().to_string() + " into " + m.to_string());
}

std::vector<std::pair<std::string, Scalar>> parse_params(const std::string& text) {
    auto toks = tokenize(text);
    Cursor cur(std::move(toks));
    std::vector<std::pair<std::string, Scalar>> out;
    while (true) {
        Token key = cur.expect(Tok::Name, "a parameter name");
        cur.expect(Tok::Equal, "'='");
        // collect this value's tokens up to the next top-level comma
        std::vector<Token> value;
        int depth = 0;
        while (!(cur.at(Tok::End) || (depth == 0 && cur.at(Tok::Comma)))) {
            Token t = cur.next();
            if (t.kind == Tok::LParen) ++depth;
            if (t.kind == Tok::RParen) --depth;
            value.push_back(t);
        }
        if (value.empty()) fail(cur.peek().pos, "expected a value for " + key.text);
        value.push_back({Tok::End, "", cur.peek().pos});
        ScalarMode mode = infer_mode(value);
        Cursor vcur(std::move(value));
        ScalarParser p(vcur, mode);
        Scalar v = p.parse_sum();
        vcur.expect_end();
        out.emplace_back(key.text, std::move(v));
        if (cur.at(Tok::Comma)) {
            cur.next();
            continue;
        }
        cur.expect_end();
        break;
    }
    // lift everything into the widest mode present
    ScalarMode target;
    for (const auto& [k, v] : out) {
        ScalarMode m = v.mode();
        if (m.kind == ModeKind::Rational) continue;
        if (target.kind == ModeKind::Rational)
            target = m;
        else if (!(target == m))
            throw Error(Errc::ModeMismatch, "parameters mix " + target.to_string() + " with " +
                                                m.to_string());
    }
    for (auto& [k, v] : out) v = to_mode(v, target);
    return out;
}

AlgebraElement parse_algebra_element(const std::shared_ptr<const Presentation>& p,
                                     const std::string& text) {
    Cursor cur(tokenize(text));
    AlgebraParser ap(cur, p);
    AlgebraElement e = ap.parse_sum();
    cur.expect_end();
    return e;
}

qp::ModuleElement parse_qp_element(qp::ModuleKind kind, const Scalar& q, const std::string& text) {
    Cursor cur(tokenize(text));
    ModuleParser mp(cur, q.mode(), "vmw");
    auto terms = mp.parse_sum();
    cur.expect_end();
    std::vector<std::pair<qp::BasisSymbol, Scalar>> ts;
    for (const auto& t : terms) {
        qp::Family f = t.symbol == 'v'   ? qp::Family::V
                       : t.symbol == 'm' ? qp::Family::Mo
                                         : qp::Family::Wb;
        ts.push_back({{f, t.index}, t.coeff});
    }
    return qp::ModuleElement::from_terms(kind, q, ts);
}

qwa::ModuleElement parse_qwa_element(qwa::ModuleKind kind, const Scalar& q,
                                     const std::string& text) {
    Cursor cur(tokenize(text));
    ModuleParser mp(cur, q.mode(), "vw");
    auto terms = mp.parse_sum();
    cur.expect_end();
    std::vector<std::pair<qwa::BasisSymbol, Scalar>> ts;
    for (const auto& t : terms) {
        qwa::Family f = t.symbol == 'v' ? qwa::Family::V : qwa::Family::Wb;
        ts.push_back({{f, t.index}, t.coeff});
    }
    return qwa::ModuleElement::from_terms(kind, q, ts);
}

}  // namespace downup::parse
