#include "downup/ncalg.hpp"

#include <algorithm>
#include <sstream>

namespace downup {

namespace {

// Global letter precedence ranks; smaller rank = higher precedence.
int letter_rank(char c) {
    switch (c) {
        case 'd': return 0;
        case 'u': return 1;
        case 'b': return 2;
        case 'a': return 3;
    }
    return 4;
}

}  // namespace

int word_deglex_cmp(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
        if (ra != rb) return ra < rb ? 1 : -1;  // higher precedence => larger word
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(PresentationKind kind, std::string alphabet,
                           std::vector<Scalar> params, std::vector<Rule> rules)
    : kind_(kind),
      alphabet_(std::move(alphabet)),
      params_(std::move(params)),
      rules_(std::move(rules)),
      mode_(params_.front().mode()) {
    for (const auto& p : params_)
        if (!(p.mode() == mode_))
            throw Error(Errc::ModeMismatch, "presentation parameters use different scalar modes");
}

std::shared_ptr<const Presentation> Presentation::down_up(const Scalar& alpha, const Scalar& beta,
                                                          const Scalar& gamma) {
    auto term = [](const char* w, const Scalar& c) { return std::pair<Word, Scalar>(w, c); };
    RawElement r1, r2;
    if (!alpha.is_zero()) {
        r1.push_back(term("dud", alpha));
        r2.push_back(term("udu", alpha));
    }
    if (!beta.is_zero()) {
        r1.push_back(term("udd", beta));
        r2.push_back(term("uud", beta));
    }
    if (!gamma.is_zero()) {
        r1.push_back(term("d", gamma));
        r2.push_back(term("u", gamma));
    }
    std::vector<Rule> rules{{"ddu", r1}, {"duu", r2}};
    return std::shared_ptr<const Presentation>(
        new Presentation(PresentationKind::DownUp, "du", {alpha, beta, gamma}, std::move(rules)));
}

std::shared_ptr<const Presentation> Presentation::quantum_plane(const Scalar& q) {
    if (q.is_zero()) throw Error(Errc::InvalidParameter, "quantum plane requires q != 0");
    RawElement rhs{{"ab", q.inv()}};
    std::vector<Rule> rules{{"ba", rhs}};
    return std::shared_ptr<const Presentation>(
        new Presentation(PresentationKind::QPlane, "ba", {q}, std::move(rules)));
}

std::shared_ptr<const Presentation> Presentation::quantized_weyl(const Scalar& q) {
    if (q.is_zero()) throw Error(Errc::InvalidParameter, "quantized Weyl algebra requires q != 0");
    Scalar qi = q.inv();
    RawElement rhs{{"ab", qi}, {"", -qi}};
    std::vector<Rule> rules{{"ba", rhs}};
    return std::shared_ptr<const Presentation>(
        new Presentation(PresentationKind::QWeyl, "ba", {q}, std::move(rules)));
}

std::string Presentation::name() const {
    switch (kind_) {
        case PresentationKind::DownUp: return "downup";
        case PresentationKind::QPlane: return "qplane";
        case PresentationKind::QWeyl: return "qweyl";
    }
    return "unknown";
}

const Scalar& Presentation::alpha() const {
    if (kind_ != PresentationKind::DownUp)
        throw Error(Errc::PresentationMismatch, "alpha is a down-up parameter");
    return params_[0];
}

const Scalar& Presentation::beta() const {
    if (kind_ != PresentationKind::DownUp)
        throw Error(Errc::PresentationMismatch, "beta is a down-up parameter");
    return params_[1];
}

const Scalar& Presentation::gamma() const {
    if (kind_ != PresentationKind::DownUp)
        throw Error(Errc::PresentationMismatch, "gamma is a down-up parameter");
    return params_[2];
}

const Scalar& Presentation::q() const {
    if (kind_ == PresentationKind::DownUp)
        throw Error(Errc::PresentationMismatch, "q is a qplane/qweyl parameter");
    return params_[0];
}

bool Presentation::same_as(const Presentation& o) const {
    if (kind_ != o.kind_) return false;
    if (!(mode_ == o.mode_)) return false;
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i] != o.params_[i]) return false;
    return true;
}

bool Presentation::is_normal_word(const Word& w) const {
    for (const auto& rule : rules_)
        if (w.find(rule.lhs) != Word::npos) return false;
    return true;
}

std::map<Word, Scalar, DeglexLess> Presentation::reduce(const RawElement& raw, unsigned long fuel,
                                                        unsigned long* steps_out) const {
    std::map<Word, Scalar, DeglexLess> out;
    std::vector<std::pair<Word, Scalar>> work(raw.begin(), raw.end());
    unsigned long steps = 0;
    auto add_to = [&](const Word& w, const Scalar& c) {
        auto it = out.find(w);
        if (it == out.end()) {
            out.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (!(c.mode() == mode_))
            throw Error(Errc::ModeMismatch, "coefficient mode differs from the presentation's");
        if (c.is_zero()) continue;
        const Rule* hit = nullptr;
        std::size_t pos = 0;
        for (const auto& rule : rules_) {
            std::size_t p = w.find(rule.lhs);
            if (p != Word::npos) {
                hit = &rule;
                pos = p;
                break;
            }
        }
        if (!hit) {
            add_to(w, c);
            continue;
        }
        if (++steps > fuel)
            throw Error(Errc::ReductionFuelExhausted,
                        "rewriting exceeded " + std::to_string(fuel) + " steps");
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + hit->lhs.size());
        for (const auto& [rw, rc] : hit->rhs) work.emplace_back(prefix + rw + suffix, c * rc);
    }
    if (steps_out) *steps_out = steps;
    return out;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::zero(std::shared_ptr<const Presentation> p) {
    return AlgebraElement(std::move(p), Terms{});
}

AlgebraElement AlgebraElement::one(std::shared_ptr<const Presentation> p) {
    if (!p) throw Error(Errc::InvalidParameter, "null presentation");
    Scalar c = Scalar::one(p->mode());
    return constant(std::move(p), c);
}

AlgebraElement AlgebraElement::constant(std::shared_ptr<const Presentation> p, const Scalar& c) {
    return from_raw(std::move(p), {{Word{}, c}});
}

AlgebraElement AlgebraElement::generator(std::shared_ptr<const Presentation> p, char letter) {
    if (!p) throw Error(Errc::InvalidParameter, "null presentation");
    if (p->alphabet().find(letter) == std::string::npos)
        throw Error(Errc::InvalidParameter,
                    std::string("generator '") + letter + "' is not in the alphabet");
    Scalar one = Scalar::one(p->mode());
    return from_raw(std::move(p), {{Word(1, letter), one}});
}

AlgebraElement AlgebraElement::from_raw(std::shared_ptr<const Presentation> p,
                                        const RawElement& raw) {
    if (!p) throw Error(Errc::InvalidParameter, "null presentation");
    for (const auto& [w, c] : raw)
        for (char ch : w)
            if (p->alphabet().find(ch) == std::string::npos)
                throw Error(Errc::InvalidParameter,
                            std::string("letter '") + ch + "' is not in the alphabet");
    Terms t = p->reduce(raw);
    return AlgebraElement(std::move(p), std::move(t));
}

long AlgebraElement::degree() const {
    long d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<long>(w.size()));
    return d;
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
    if (!pres_ || !o.pres_ || !pres_->same_as(*o.pres_))
        throw Error(Errc::PresentationMismatch, "elements live over different presentations");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same(o);
    Terms t = terms_;
    for (const auto& [w, c] : o.terms_) {
        auto it = t.find(w);
        if (it == t.end()) {
            t.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return AlgebraElement(pres_, std::move(t));
}

AlgebraElement AlgebraElement::operator-() const {
    Terms t;
    for (const auto& [w, c] : terms_) t.emplace(w, -c);
    return AlgebraElement(pres_, std::move(t));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_same(o);
    RawElement raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) raw.emplace_back(w1 + w2, c1 * c2);
    Terms t = pres_->reduce(raw);
    return AlgebraElement(pres_, std::move(t));
}

AlgebraElement AlgebraElement::scale(const Scalar& c) const {
    if (!(c.mode() == pres_->mode()))
        throw Error(Errc::ModeMismatch, "scalar mode differs from the presentation's");
    if (c.is_zero()) return zero(pres_);
    Terms t;
    for (const auto& [w, v] : terms_) t.emplace(w, v * c);
    return AlgebraElement(pres_, std::move(t));
}

AlgebraElement AlgebraElement::pow(unsigned long e) const {
    AlgebraElement acc = one(pres_);
    AlgebraElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check_same(o);
    return terms_ == o.terms_;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // deglex-descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        Scalar c = it->second;
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
        std::string cs = c.to_string();
        if (w.empty()) {
            if (c.atomic_in_product())
                out << cs;
            else
                out << "(" << cs << ")";
            continue;
        }
        std::string word_str;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) word_str += "*";
            word_str += w[i];
        }
        if (c.is_one()) {
            out << word_str;
        } else if (c.atomic_in_product()) {
            out << cs << "*" << word_str;
        } else {
            out << "(" << cs << ")*" << word_str;
        }
    }
    return out.str();
}

AlgebraElement r_commutator(const AlgebraElement& x, const AlgebraElement& y, const Scalar& r) {
    return x * y - (y * x).scale(r);
}

// ---------------------------------------------------------------------------
// Confluence

ConfluenceReport check_confluence(const std::shared_ptr<const Presentation>& p) {
    ConfluenceReport report;
    report.confluent = true;
    const auto& rules = p->rules();
    auto resolve = [&](const Word& word, const Rule& rule, std::size_t pos) {
        RawElement raw;
        Word prefix = word.substr(0, pos);
        Word suffix = word.substr(pos + rule.lhs.size());
        for (const auto& [rw, rc] : rule.rhs) raw.emplace_back(prefix + rw + suffix, rc);
        return AlgebraElement::from_raw(p, raw);
    };
    auto record = [&](const Word& word, const Rule& ri, std::size_t pi, const Rule& rj,
                      std::size_t pj) {
        AlgebraElement left = resolve(word, ri, pi);
        AlgebraElement right = resolve(word, rj, pj);
        bool equal = left == right;
        if (!equal) report.confluent = false;
        report.ambiguities.push_back({word, left, right, equal});
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& li = rules[i].lhs;
            const Word& lj = rules[j].lhs;
            // Suffix-prefix overlaps: a proper suffix of li equals a proper
            // prefix of lj; the overlap word is li glued to lj.
            for (std::size_t len = 1; len < std::min(li.size(), lj.size()); ++len) {
                if (li.substr(li.size() - len) != lj.substr(0, len)) continue;
                Word word = li + lj.substr(len);
                record(word, rules[i], 0, rules[j], li.size() - len);
            }
            // Containments: lj occurs strictly inside li.
            if (i != j && lj.size() < li.size()) {
                for (std::size_t pos = li.find(lj); pos != Word::npos;
                     pos = li.find(lj, pos + 1)) {
                    record(li, rules[i], 0, rules[j], pos);
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Normality and centrality

std::optional<std::pair<Scalar, Scalar>> normality_scalars(const AlgebraElement& x) {
    const auto& p = x.presentation();
    std::vector<Scalar> cs;
    for (char g : p->alphabet()) {
        AlgebraElement gen = AlgebraElement::generator(p, g);
        AlgebraElement gx = gen * x;
        AlgebraElement xg = x * gen;
        if (gx.is_zero() && xg.is_zero()) {
            cs.push_back(Scalar::one(p->mode()));
            continue;
        }
        if (gx.is_zero() || xg.is_zero()) return std::nullopt;
        const auto& lt_gx = *gx.terms().rbegin();
        const auto& lt_xg = *xg.terms().rbegin();
        if (lt_gx.first != lt_xg.first) return std::nullopt;
        Scalar c = lt_gx.second / lt_xg.second;
        if (!(gx == xg.scale(c))) return std::nullopt;
        cs.push_back(c);
    }
    return std::make_pair(cs[0], cs[1]);
}

bool is_central(const AlgebraElement& x) {
    const auto& p = x.presentation();
    for (char g : p->alphabet()) {
        AlgebraElement gen = AlgebraElement::generator(p, g);
        if (!(gen * x == x * gen)) return false;
    }
    return true;
}

}  // namespace downup
