#include "downup/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace downup {

unsigned euler_phi(unsigned n) {
    if (n == 0) throw Error(Errc::InvalidParameter, "euler_phi(0)");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; static_cast<unsigned long>(p) * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }
unsigned long lcm_ul(unsigned long a, unsigned long b) { return std::lcm(a, b); }

namespace {

Poly<Rational> x_pow_minus_one(unsigned n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = Rational(-1);
    c[n] = Rational(1);
    return Poly<Rational>(std::move(c));
}

std::map<unsigned, Poly<Rational>>& cyclotomic_cache() {
    static std::map<unsigned, Poly<Rational>> cache;
    return cache;
}

std::mutex& cyclotomic_mutex() {
    static std::mutex m;
    return m;
}

Poly<Rational> cyclotomic_poly_locked(unsigned n) {
    auto& cache = cyclotomic_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly<Rational> acc = x_pow_minus_one(n);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = acc.divmod(cyclotomic_poly_locked(d));
        if (!r.is_zero())
            throw Error(Errc::InvalidParameter, "cyclotomic division left a remainder");
        acc = std::move(q);
    }
    cache.emplace(n, acc);
    return acc;
}

}  // namespace

Poly<Rational> cyclotomic_poly(unsigned n) {
    if (n == 0) throw Error(Errc::InvalidParameter, "cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(cyclotomic_mutex());
    return cyclotomic_poly_locked(n);
}

std::string poly_to_string(const Poly<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        const Rational& v = c[i];
        if (v.is_zero()) continue;
        Rational mag = v;
        bool neg = v < 0;
        if (neg) mag = -mag;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            out << mag.str();
        } else {
            if (!unit) out << mag.str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Polynomial gcd over Q via integer pseudo-remainders.  Plain Euclidean
// division over Q suffers severe coefficient swell on inputs of moderate
// degree; working with primitive integer polynomials keeps every
// intermediate value small.

namespace {

void strip_and_primitive(std::vector<Integer>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) return;
    Integer content = 0;
    for (const Integer& x : v) content = boost::multiprecision::gcd(content, x);
    for (Integer& x : v) x /= content;
}

std::vector<Integer> primitive_integer_form(const Poly<Rational>& p) {
    const std::vector<Rational>& cs = p.coeffs();
    Integer den_lcm = 1;
    for (const Rational& c : cs) {
        Integer d = boost::multiprecision::denominator(c);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    std::vector<Integer> out(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        out[i] = boost::multiprecision::numerator(cs[i]) *
                 (den_lcm / boost::multiprecision::denominator(cs[i]));
    strip_and_primitive(out);
    return out;
}

// Pseudo-remainder of a by b: repeatedly scales a by lc(b) and cancels the
// leading term, so the whole computation stays in Z[x].
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const std::size_t nb = b.size();
    const Integer& lb = b.back();
    while (true) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() < nb) return a;
        Integer la = a.back();
        std::size_t shift = a.size() - nb;
        a.pop_back();
        for (Integer& x : a) x *= lb;
        for (std::size_t i = 0; i + 1 < nb; ++i)
            a[shift + i] -= la * b[i];
    }
}

} // namespace

Poly<Rational> rational_poly_gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.is_zero() && b.is_zero()) return Poly<Rational>();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Integer> A = primitive_integer_form(a);
    std::vector<Integer> B = primitive_integer_form(b);
    if (A.size() < B.size()) std::swap(A, B);
    while (true) {
        std::vector<Integer> R = pseudo_rem(std::move(A), B);
        strip_and_primitive(R);
        if (R.empty()) break;
        A = std::move(B);
        B = std::move(R);
    }
    std::vector<Rational> out(B.size());
    Rational lead{B.back()};
    for (std::size_t i = 0; i < B.size(); ++i) out[i] = Rational(B[i]) / lead;
    return Poly<Rational>(std::move(out));
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc()
    : num_(), den_(Poly<Rational>::constant(Rational(1))) {}

RatFunc::RatFunc(Poly<Rational> num, Poly<Rational> den) {
    if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly<Rational>();
        den_ = Poly<Rational>::constant(Rational(1));
        return;
    }
    Poly<Rational> g = rational_poly_gcd(num, den);
    num = num.divmod(g).first;
    den = den.divmod(g).first;
    Rational lead = den.lead();
    num_ = num.scale(Rational(1) / lead);
    den_ = den.scale(Rational(1) / lead);
}

RatFunc RatFunc::indeterminate() {
    return from_poly(Poly<Rational>::monomial(Rational(1), 1));
}

RatFunc RatFunc::constant(const Rational& r) {
    return from_poly(Poly<Rational>::constant(r));
}

RatFunc RatFunc::from_poly(Poly<Rational> p) {
    RatFunc f;
    f.num_ = std::move(p);
    return f;
}

bool RatFunc::is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

std::optional<Rational> RatFunc::constant_value() const {
    if (!is_constant()) return std::nullopt;
    if (num_.is_zero()) return Rational(0);
    return num_.lead() / den_.lead();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    Poly<Rational> g = rational_poly_gcd(den_, o.den_);
    Poly<Rational> da = den_.divmod(g).first;
    Poly<Rational> db = o.den_.divmod(g).first;
    return RatFunc(num_ * db + o.num_ * da, den_ * db);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    Poly<Rational> g = rational_poly_gcd(den_, o.den_);
    Poly<Rational> da = den_.divmod(g).first;
    Poly<Rational> db = o.den_.divmod(g).first;
    return RatFunc(num_ * db - o.num_ * da, den_ * db);
}

RatFunc RatFunc::operator-() const {
    RatFunc f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // Numerator and denominator of each operand are already coprime, so
    // cancelling across the product leaves nothing for the constructor to do.
    Poly<Rational> g1 = rational_poly_gcd(num_, o.den_);
    Poly<Rational> g2 = rational_poly_gcd(o.num_, den_);
    RatFunc f;
    f.num_ = num_.divmod(g1).first * o.num_.divmod(g2).first;
    f.den_ = den_.divmod(g2).first * o.den_.divmod(g1).first;
    return f;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero rational function");
    return *this * o.inv();
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of the zero rational function");
    RatFunc f;
    Rational lead = num_.lead();
    f.num_ = den_.scale(Rational(1) / lead);
    f.den_ = num_.scale(Rational(1) / lead);
    return f;
}

std::string RatFunc::to_string() const {
    std::string n = poly_to_string(num_, "q");
    if (den_.degree() == 0) return n;
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = poly_to_string(den_, "q");
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic(unsigned order, Poly<Rational> coeffs) : order_(order) {
    if (order == 0) throw Error(Errc::InvalidParameter, "cyclotomic order must be positive");
    coeffs_ = coeffs.divmod(cyclotomic_poly(order)).second;
}

Cyclotomic Cyclotomic::zeta(unsigned n) {
    return Cyclotomic(n, Poly<Rational>::monomial(Rational(1), 1));
}

Cyclotomic Cyclotomic::constant(unsigned n, const Rational& r) {
    return Cyclotomic(n, Poly<Rational>::constant(r));
}

std::optional<Rational> Cyclotomic::rational_value() const {
    if (coeffs_.is_zero()) return Rational(0);
    if (coeffs_.degree() == 0) return coeffs_.lead();
    return std::nullopt;
}

void Cyclotomic::check_order(const Cyclotomic& o) const {
    if (order_ != o.order_)
        throw Error(Errc::ModeMismatch,
                    "cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                        std::to_string(o.order_));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    check_order(o);
    return Cyclotomic(order_, coeffs_ + o.coeffs_);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    check_order(o);
    return Cyclotomic(order_, coeffs_ - o.coeffs_);
}

Cyclotomic Cyclotomic::operator-() const { return Cyclotomic(order_, -coeffs_); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    check_order(o);
    return Cyclotomic(order_, coeffs_ * o.coeffs_);
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
    check_order(o);
    return *this * o.inv();
}

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in a cyclotomic field");
    auto [g, s, t] = Poly<Rational>::ext_gcd(coeffs_, cyclotomic_poly(order_));
    (void)t;
    if (g.degree() != 0)
        throw Error(Errc::DivisionByZero, "element is not invertible");
    return Cyclotomic(order_, s.scale(Rational(1) / g.lead()));
}

std::string Cyclotomic::to_string() const {
    return poly_to_string(coeffs_, "zeta:" + std::to_string(order_));
}

// ---------------------------------------------------------------------------
// Scalar

std::string ScalarMode::to_string() const {
    switch (kind) {
        case ModeKind::Rational: return "rational";
        case ModeKind::RationalFunction: return "rational-function";
        case ModeKind::Cyclotomic: return "cyclotomic:" + std::to_string(order);
    }
    return "unknown";
}

Scalar Scalar::zeta(unsigned n) {
    if (n == 0) throw Error(Errc::InvalidParameter, "zeta:0 is not defined");
    return Scalar(Cyclotomic::zeta(n));
}

Scalar Scalar::zero(const ScalarMode& m) { return constant(Rational(0), m); }

Scalar Scalar::one(const ScalarMode& m) { return constant(Rational(1), m); }

Scalar Scalar::constant(const Rational& r, const ScalarMode& m) {
    switch (m.kind) {
        case ModeKind::Rational: return Scalar(r);
        case ModeKind::RationalFunction: return Scalar(RatFunc::constant(r));
        case ModeKind::Cyclotomic: return Scalar(Cyclotomic::constant(m.order, r));
    }
    throw Error(Errc::InvalidParameter, "unknown scalar mode");
}

ScalarMode Scalar::mode() const {
    if (std::holds_alternative<Rational>(v_)) return {ModeKind::Rational, 0};
    if (std::holds_alternative<RatFunc>(v_)) return {ModeKind::RationalFunction, 0};
    return {ModeKind::Cyclotomic, std::get<Cyclotomic>(v_).order()};
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

bool Scalar::is_one() const { return *this == one_like(); }

std::optional<Rational> Scalar::rational_value() const {
    if (const auto* r = std::get_if<Rational>(&v_)) return *r;
    if (const auto* f = std::get_if<RatFunc>(&v_)) return f->constant_value();
    return std::get<Cyclotomic>(v_).rational_value();
}

const Rational& Scalar::as_rational() const {
    if (const auto* r = std::get_if<Rational>(&v_)) return *r;
    throw Error(Errc::ModeMismatch, "scalar is not in rational mode");
}

const RatFunc& Scalar::as_ratfunc() const {
    if (const auto* f = std::get_if<RatFunc>(&v_)) return *f;
    throw Error(Errc::ModeMismatch, "scalar is not in rational-function mode");
}

const Cyclotomic& Scalar::as_cyclotomic() const {
    if (const auto* c = std::get_if<Cyclotomic>(&v_)) return *c;
    throw Error(Errc::ModeMismatch, "scalar is not in cyclotomic mode");
}

void Scalar::check_mode(const Scalar& o) const {
    if (!(mode() == o.mode()))
        throw Error(Errc::ModeMismatch,
                    "cannot combine " + mode().to_string() + " with " + o.mode().to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_mode(o);
    if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(*r + std::get<Rational>(o.v_));
    if (const auto* f = std::get_if<RatFunc>(&v_)) return Scalar(*f + std::get<RatFunc>(o.v_));
    return Scalar(std::get<Cyclotomic>(v_) + std::get<Cyclotomic>(o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_mode(o);
    if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(*r - std::get<Rational>(o.v_));
    if (const auto* f = std::get_if<RatFunc>(&v_)) return Scalar(*f - std::get<RatFunc>(o.v_));
    return Scalar(std::get<Cyclotomic>(v_) - std::get<Cyclotomic>(o.v_));
}

Scalar Scalar::operator-() const {
    if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(Rational(-*r));
    if (const auto* f = std::get_if<RatFunc>(&v_)) return Scalar(-*f);
    return Scalar(-std::get<Cyclotomic>(v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_mode(o);
    if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(*r * std::get<Rational>(o.v_));
    if (const auto* f = std::get_if<RatFunc>(&v_)) return Scalar(*f * std::get<RatFunc>(o.v_));
    return Scalar(std::get<Cyclotomic>(v_) * std::get<Cyclotomic>(o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_mode(o);
    if (o.is_zero()) throw Error(Errc::DivisionByZero, "scalar division by zero");
    if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(*r / std::get<Rational>(o.v_));
    if (const auto* f = std::get_if<RatFunc>(&v_)) return Scalar(*f / std::get<RatFunc>(o.v_));
    return Scalar(std::get<Cyclotomic>(v_) / std::get<Cyclotomic>(o.v_));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return one_like() / *this;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = one_like();
    Scalar base = *this;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    check_mode(o);
    return v_ == o.v_;
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Rational>(&v_)) return r->str();
    if (const auto* f = std::get_if<RatFunc>(&v_)) return f->to_string();
    return std::get<Cyclotomic>(v_).to_string();
}

bool Scalar::atomic_in_product() const {
    if (std::holds_alternative<Rational>(v_)) return true;
    if (const auto* f = std::get_if<RatFunc>(&v_)) {
        if (f->den().degree() == 0) return f->num().term_count() <= 1;
        return true;  // rendered as N/D with multi-term sides parenthesized
    }
    return std::get<Cyclotomic>(v_).coeffs().term_count() <= 1;
}

std::optional<unsigned> root_of_unity_order(const Scalar& x, unsigned bound) {
    if (x.is_zero()) throw Error(Errc::ZeroInput, "zero has no root-of-unity order");
    unsigned cap = 0;
    switch (x.mode().kind) {
        case ModeKind::Rational: cap = 2; break;
        case ModeKind::RationalFunction:
            if (!x.as_ratfunc().is_constant()) return std::nullopt;
            cap = 2;
            break;
        case ModeKind::Cyclotomic:
            cap = static_cast<unsigned>(lcm_ul(2, x.mode().order));
            break;
    }
    unsigned limit = std::min(bound, cap);
    Scalar acc = x;
    const Scalar one = x.one_like();
    for (unsigned k = 1; k <= limit; ++k) {
        if (acc == one) return k;
        acc = acc * x;
    }
    return std::nullopt;
}

}  // namespace downup
