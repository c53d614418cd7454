#include "downup/gwa_orbits.hpp"

#include <map>

namespace downup::gwa {

namespace {

void check_same_mode(const Scalar& a, const Scalar& b, const char* what) {
    if (!(a.mode() == b.mode()))
        throw Error(Errc::ModeMismatch, std::string("mixed scalar modes in ") + what);
}

unsigned required_order(const Scalar& r, unsigned n, unsigned order_bound) {
    auto ord = root_of_unity_order(r, order_bound);
    if (!ord || *ord != n)
        throw Error(Errc::TorsionRequired,
                    "r must be a root of unity of order " + std::to_string(n));
    return *ord;
}

}  // namespace

DoubleRootParams::DoubleRootParams(Scalar r_, Scalar gamma_)
    : r(std::move(r_)), gamma(std::move(gamma_)) {
    check_same_mode(r, gamma, "DoubleRootParams");
}

Scalar DoubleRootParams::epsilon() const {
    if (r.is_one()) throw Error(Errc::RIsOne, "epsilon divides by r - 1");
    return gamma / (r - Scalar::one(r.mode()));
}

LambdaSequence::LambdaSequence(Scalar alpha_, Scalar beta_, Scalar gamma_, Scalar l0, Scalar l1)
    : alpha(std::move(alpha_)),
      beta(std::move(beta_)),
      gamma(std::move(gamma_)),
      lambda0(std::move(l0)),
      lambda1(std::move(l1)) {
    check_same_mode(alpha, beta, "LambdaSequence");
    check_same_mode(alpha, gamma, "LambdaSequence");
    check_same_mode(alpha, lambda0, "LambdaSequence");
    check_same_mode(alpha, lambda1, "LambdaSequence");
}

LambdaSequence LambdaSequence::from_double_root(const DoubleRootParams& p, const Scalar& l0,
                                                const Scalar& l1) {
    return LambdaSequence(p.alpha(), p.beta(), p.gamma, l0, l1);
}

Scalar lambda_at(const LambdaSequence& seq, long n) {
    if (n == 0) return seq.lambda0;
    if (n == 1) return seq.lambda1;
    if (n > 1) {
        Scalar prev = seq.lambda0;
        Scalar cur = seq.lambda1;
        for (long k = 2; k <= n; ++k) {
            Scalar next = seq.alpha * cur + seq.beta * prev + seq.gamma;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    if (seq.beta.is_zero())
        throw Error(Errc::DegenerateBeta, "backward solving divides by beta");
    Scalar above = seq.lambda1;  // lambda_(k+1)
    Scalar cur = seq.lambda0;    // lambda_k
    for (long k = -1; k >= n; --k) {
        Scalar below = (above - seq.alpha * cur - seq.gamma) / seq.beta;
        above = cur;
        cur = below;
    }
    return cur;
}

ClosedForm lambda_closed_form(const LambdaSequence& seq) {
    Scalar one = Scalar::one(seq.alpha.mode());
    Scalar two = one + one;
    Scalar r = seq.alpha / two;
    if (seq.beta != -(r * r))
        throw Error(Errc::InvalidParameter, "parameters do not give a double root");
    if (r.is_one()) throw Error(Errc::RIsOne, "closed form divides by r - 1");
    Scalar rm1 = r - one;
    Scalar lambda_star = seq.gamma / (rm1 * rm1);
    Scalar c1 = seq.lambda0 - lambda_star;
    Scalar c2 = (seq.lambda1 - lambda_star) / r - c1;
    return ClosedForm{std::move(r), std::move(c1), std::move(c2), std::move(lambda_star)};
}

PeriodicityReport periodicity_check(const LambdaSequence& seq, const Scalar& r, long zero_bound,
                                    unsigned order_bound) {
    check_same_mode(seq.alpha, r, "periodicity_check");
    if (seq.alpha != r + r || seq.beta != -(r * r))
        throw Error(Errc::ParameterMismatch, "sequence parameters do not match the root");
    auto ord = root_of_unity_order(r, order_bound);
    if (!ord) throw Error(Errc::TorsionRequired, "periodicity needs a torsion root");
    unsigned n = *ord;
    if (zero_bound < 0) zero_bound = 12L * n;

    ClosedForm cf = lambda_closed_form(seq);
    bool periodic = cf.c2.is_zero();

    long top = std::max<long>(zero_bound, 4L * n + 1);
    std::vector<Scalar> lam;
    lam.reserve(static_cast<std::size_t>(top) + 1);
    lam.push_back(seq.lambda0);
    lam.push_back(seq.lambda1);
    for (long k = 2; k <= top; ++k)
        lam.push_back(seq.alpha * lam[k - 1] + seq.beta * lam[k - 2] + seq.gamma);

    std::optional<long> counterexample;
    for (long k = 0; k <= 3L * n; ++k) {
        if (lam[k + n] != lam[k]) {
            counterexample = k;
            break;
        }
    }
    if (periodic == counterexample.has_value())
        throw Error(Errc::InvalidParameter, "closed form disagrees with the recursion");

    std::vector<long> zeros;
    for (long k = 0; k <= zero_bound; ++k)
        if (lam[k].is_zero()) zeros.push_back(k);

    return PeriodicityReport{n,     cf.c2, periodic, std::move(counterexample),
                             std::move(zeros), zero_bound};
}

WElements w_elements(const DoubleRootParams& p) {
    Scalar eps = p.epsilon();  // throws RIsOne when r = 1
    Scalar one = Scalar::one(p.r.mode());
    Scalar two = one + one;
    Scalar alpha = p.alpha();
    Scalar beta = p.beta();
    auto pres = Presentation::down_up(alpha, beta, p.gamma);

    auto w1 = AlgebraElement::from_raw(
        pres, {{"ud", two * beta + alpha}, {"du", alpha - two}, {"", two * p.gamma}});
    auto w2 = AlgebraElement::from_raw(pres, {{"du", two}, {"ud", -two}});
    auto w = AlgebraElement::from_raw(pres, {{"du", one}, {"ud", -p.r}, {"", eps}});

    if (!(w.scale(two * (p.r - one)) - w1).is_zero())
        throw Error(Errc::InvalidParameter, "w does not match w1/(2(r-1))");
    return WElements{std::move(w1), std::move(w2), std::move(w)};
}

IdealPoint sigma_point(const DoubleRootParams& p, const IdealPoint& pt) {
    check_same_mode(p.r, pt.a1, "sigma_point");
    check_same_mode(p.r, pt.a2, "sigma_point");
    return IdealPoint{p.r * pt.a1, p.r * pt.a2 + pt.a1};
}

IdealPoint sigma_iterate(const DoubleRootParams& p, IdealPoint pt, unsigned long k) {
    for (unsigned long i = 0; i < k; ++i) pt = sigma_point(p, pt);
    return pt;
}

FixedIdealReport fixed_ideal_criterion(const DoubleRootParams& p, const IdealPoint& pt,
                                       unsigned n, unsigned order_bound) {
    unsigned order = required_order(p.r, n, order_bound);
    IdealPoint it = sigma_iterate(p, pt, order);
    bool fixed = it.a1 == pt.a1 && it.a2 == pt.a2;
    bool a1_zero = pt.a1.is_zero();
    return FixedIdealReport{order, std::move(it), fixed, a1_zero, fixed == a1_zero};
}

namespace {

// Substitute du -> r*ud - eps until no du remains, collecting coefficients
// on the residual words u^i d^j.
void bar_accumulate(const Word& w, const Scalar& coeff, const Scalar& r, const Scalar& eps,
                    std::map<Word, Scalar>& out) {
    auto pos = w.find("du");
    if (pos == Word::npos) {
        auto it = out.find(w);
        if (it == out.end())
            out.emplace(w, coeff);
        else
            it->second = it->second + coeff;
        return;
    }
    Word swapped = w;
    swapped[pos] = 'u';
    swapped[pos + 1] = 'd';
    bar_accumulate(swapped, coeff * r, r, eps, out);
    Word dropped = w.substr(0, pos) + w.substr(pos + 2);
    bar_accumulate(dropped, -(coeff * eps), r, eps, out);
}

}  // namespace

bool abar_relation_check(const DoubleRootParams& p) {
    Scalar eps = p.epsilon();
    Scalar one = Scalar::one(p.r.mode());
    auto pres = Presentation::down_up(p.alpha(), p.beta(), p.gamma);
    for (const Rule& rule : pres->rules()) {
        std::map<Word, Scalar> residue;
        bar_accumulate(rule.lhs, one, p.r, eps, residue);
        for (const auto& [word, c] : rule.rhs) bar_accumulate(word, -c, p.r, eps, residue);
        for (const auto& [word, c] : residue)
            if (!c.is_zero()) return false;
    }
    return true;
}

bool wn_centrality(const DoubleRootParams& p, unsigned n, unsigned order_bound) {
    required_order(p.r, n, order_bound);
    AlgebraElement w = w_elements(p).w;
    return is_central(w.pow(n));
}

std::pair<Poly<Scalar>, Poly<Scalar>> bezout_w(unsigned n, const Scalar& lambda) {
    if (n < 1) throw Error(Errc::InvalidParameter, "the exponent must be at least 1");
    if (lambda.is_zero()) throw Error(Errc::ZeroLambda, "lambda must be nonzero");
    Scalar one = Scalar::one(lambda.mode());
    Poly<Scalar> t = Poly<Scalar>::monomial(one, 1);
    Poly<Scalar> tn_minus_lambda =
        Poly<Scalar>::monomial(one, n) + Poly<Scalar>::constant(-lambda);
    auto [g, cof_a, cof_b] = Poly<Scalar>::ext_gcd(t, tn_minus_lambda);
    if (g.degree() != 0)
        throw Error(Errc::InvalidParameter, "t and t^n - lambda are not coprime");
    // ext_gcd returns a monic gcd, here the constant 1, so the cofactors
    // already satisfy the required identity.
    return {std::move(cof_a), std::move(cof_b)};
}

KdimReport kdim_conditions(const LambdaSequence& seq, long bound) {
    if (bound < 1) throw Error(Errc::InvalidParameter, "bound must be at least 1");
    std::vector<Scalar> lam;
    lam.reserve(static_cast<std::size_t>(bound) + 2);
    lam.push_back(seq.lambda0);
    lam.push_back(seq.lambda1);
    for (long k = 2; k <= bound + 1; ++k)
        lam.push_back(seq.alpha * lam[k - 1] + seq.beta * lam[k - 2] + seq.gamma);

    std::optional<long> orbit_return;
    for (long n = 1; n <= bound; ++n) {
        if (lam[n] == seq.lambda0 && lam[n + 1] == seq.lambda1) {
            orbit_return = n;
            break;
        }
    }
    std::vector<long> zeros;
    for (long n = 0; n <= bound; ++n)
        if (lam[n].is_zero()) zeros.push_back(n);

    return KdimReport{orbit_return, std::move(zeros), bound,
                      "bounded evidence up to the given n only; the unbounded conditions are "
                      "not decided by enumeration"};
}

}  // namespace downup::gwa
