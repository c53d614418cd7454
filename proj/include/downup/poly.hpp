#pragma once

#include "downup/errors.hpp"
#include "downup/rational.hpp"

#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace downup {

// Coefficient hooks. The generic forms cover any type with is_zero(); the
// Rational overload is picked by ordinary overload resolution.
inline bool kf_is_zero(const Rational& x) { return x.is_zero(); }
template <class K>
bool kf_is_zero(const K& x) {
    return x.is_zero();
}

// A zero (resp. one) of the same kind as the sample, without assuming K has
// literal constructors. The sample for kf_one must be nonzero.
template <class K>
K kf_zero(const K& sample) {
    return sample - sample;
}
template <class K>
K kf_one(const K& nonzero_sample) {
    return nonzero_sample / nonzero_sample;
}

// Dense univariate polynomial over a field K. Coefficient i multiplies x^i;
// the representation never carries trailing zeros, so degree() is the vector
// size minus one and the zero polynomial is the empty vector.
template <class K>
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(K v) {
        Poly p;
        if (!kf_is_zero(v)) p.c_.push_back(std::move(v));
        return p;
    }

    static Poly monomial(K v, std::size_t deg) {
        Poly p;
        if (kf_is_zero(v)) return p;
        for (std::size_t i = 0; i < deg; ++i) p.c_.push_back(kf_zero(v));
        p.c_.push_back(std::move(v));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& v : c_)
            if (!kf_is_zero(v)) ++n;
        return n;
    }
    const std::vector<K>& coeffs() const { return c_; }
    const K& lead() const { return c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<K> r;
        std::size_t n = c_.size(), m = o.c_.size();
        r.reserve(std::max(n, m));
        for (std::size_t i = 0; i < std::max(n, m); ++i) {
            if (i < n && i < m)
                r.push_back(c_[i] + o.c_[i]);
            else if (i < n)
                r.push_back(c_[i]);
            else
                r.push_back(o.c_[i]);
        }
        return Poly(std::move(r));
    }

    Poly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(kf_zero(v) - v);
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<std::optional<K>> acc(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                K p = c_[i] * o.c_[j];
                if (acc[i + j])
                    acc[i + j] = *acc[i + j] + p;
                else
                    acc[i + j] = std::move(p);
            }
        std::vector<K> r;
        r.reserve(acc.size());
        const K z = kf_zero(c_.front());
        for (auto& v : acc) r.push_back(v ? std::move(*v) : z);
        return Poly(std::move(r));
    }

    Poly scale(const K& s) const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(v * s);
        return Poly(std::move(r));
    }

    Poly shift(std::size_t k) const {
        if (is_zero() || k == 0) {
            if (k == 0) return *this;
            return Poly();
        }
        std::vector<K> r;
        r.reserve(c_.size() + k);
        const K z = kf_zero(c_.front());
        for (std::size_t i = 0; i < k; ++i) r.push_back(z);
        for (const auto& v : c_) r.push_back(v);
        return Poly(std::move(r));
    }

    Poly pow(unsigned long e) const {
        if (e == 0) {
            if (is_zero()) throw Error(Errc::ZeroInput, "0^0 for polynomials is not defined here");
            return constant(kf_one(lead()));
        }
        Poly base = *this, out;
        bool have = false;
        while (e) {
            if (e & 1) {
                out = have ? out * base : base;
                have = true;
            }
            e >>= 1;
            if (e) base = base * base;
        }
        return out;
    }

    // Euclidean division by a nonzero divisor; returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
        Poly rem = *this;
        if (degree() < d.degree()) return {Poly(), rem};
        const K z = kf_zero(d.lead());
        std::vector<K> q(static_cast<std::size_t>(degree() - d.degree()) + 1, z);
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            std::size_t k = static_cast<std::size_t>(rem.degree() - d.degree());
            K t = rem.lead() / d.lead();
            q[k] = q[k] + t;
            rem = rem - d.scale(t).shift(k);
        }
        return {Poly(std::move(q)), std::move(rem)};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scale(kf_one(lead()) / lead());
    }

    K eval(const K& at) const {
        if (is_zero()) return kf_zero(at);
        K acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Extended Euclid: returns g (monic) with s*a + t*b == g.
    static std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
        if (a.is_zero() && b.is_zero())
            throw Error(Errc::ZeroInput, "gcd(0, 0) is not defined");
        const K one = kf_one(a.is_zero() ? b.lead() : a.lead());
        Poly r0 = a, r1 = b;
        Poly s0 = constant(one), s1;
        Poly t0, t1 = constant(one);
        while (!r1.is_zero()) {
            auto [q, r] = r0.divmod(r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            Poly s2 = s0 - q * s1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            Poly t2 = t0 - q * t1;
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        K lead = r0.lead();
        K inv = one / lead;
        return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
    }

private:
    void trim() {
        while (!c_.empty() && kf_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

}  // namespace downup
