#include "downup/cli.hpp"

#include "downup/classifier.hpp"
#include "downup/gwa_orbits.hpp"
#include "downup/morphisms.hpp"
#include "downup/parse.hpp"
#include "downup/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

namespace downup::cli {

namespace {

using report::CheckResult;
using report::Report;

std::string padded(long v, int width) {
    std::string s = std::to_string(v);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

std::string join_longs(const std::vector<long>& v) {
    if (v.empty()) return "none";
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    return out.str();
}

std::string join_elements(const std::vector<AlgebraElement>& v) {
    if (v.empty()) return "none";
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << "; ";
        out << v[i].to_string();
    }
    return out.str();
}

// Parse the flag texts with the scalar grammar and lift everything into the
// widest mode that appears.
std::vector<Scalar> unified_scalars(const std::vector<std::string>& texts) {
    std::vector<Scalar> vals;
    vals.reserve(texts.size());
    for (const auto& t : texts) vals.push_back(parse::parse_scalar(t));
    ScalarMode target;
    for (const auto& v : vals) {
        ScalarMode m = v.mode();
        if (m.kind == ModeKind::Rational) continue;
        if (target.kind == ModeKind::Rational)
            target = m;
        else if (!(target == m))
            throw Error(Errc::ModeMismatch,
                        "parameters mix " + target.to_string() + " with " + m.to_string());
    }
    for (auto& v : vals) v = parse::to_mode(v, target);
    return vals;
}

std::map<std::string, Scalar> param_map(const std::string& text,
                                        std::initializer_list<const char*> keys) {
    auto parsed = parse::parse_params(text);
    std::map<std::string, Scalar> out;
    for (auto& [k, v] : parsed) {
        bool known = false;
        for (const char* key : keys)
            if (k == key) known = true;
        if (!known) throw Error(Errc::InvalidParameter, "unexpected parameter " + k);
        if (!out.emplace(k, v).second)
            throw Error(Errc::InvalidParameter, "duplicate parameter " + k);
    }
    for (const char* key : keys)
        if (!out.count(key))
            throw Error(Errc::InvalidParameter, std::string("missing parameter ") + key);
    return out;
}

std::shared_ptr<const Presentation> build_presentation(const std::string& algebra,
                                                       const std::string& params_text) {
    if (algebra == "downup") {
        auto p = param_map(params_text, {"alpha", "beta", "gamma"});
        return Presentation::down_up(p.at("alpha"), p.at("beta"), p.at("gamma"));
    }
    auto p = param_map(params_text, {"q"});
    if (algebra == "qplane") return Presentation::quantum_plane(p.at("q"));
    return Presentation::quantized_weyl(p.at("q"));
}

// Small random inputs for the seeded compatibility draws.
AlgebraElement random_algebra(std::mt19937_64& rng, const std::shared_ptr<const Presentation>& p) {
    RawElement raw;
    int terms = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < terms; ++i) {
        Word w;
        int len = static_cast<int>(rng() % 3);
        for (int j = 0; j < len; ++j) w.push_back(p->alphabet()[rng() % 2]);
        long c = static_cast<long>(rng() % 5) - 2;
        if (c == 0) c = 1;
        raw.push_back({w, Scalar::constant(Rational(c), p->mode())});
    }
    return AlgebraElement::from_raw(p, raw);
}

qp::ModuleElement random_qp(std::mt19937_64& rng, qp::ModuleKind kind, const Scalar& qv) {
    std::vector<std::pair<qp::BasisSymbol, Scalar>> ts;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < terms; ++i) {
        qp::Family fam = qp::Family::V;
        long idx = 0;
        switch (kind) {
            case qp::ModuleKind::V: idx = static_cast<long>(rng() % 13) - 6; break;
            case qp::ModuleKind::W:
                fam = qp::Family::Wb;
                idx = static_cast<long>(rng() % 7);
                break;
            case qp::ModuleKind::M:
                fam = (rng() % 2) ? qp::Family::Mo : qp::Family::V;
                idx = static_cast<long>(rng() % 7);
                break;
        }
        long c = static_cast<long>(rng() % 7) - 3;
        if (c == 0) c = 2;
        ts.push_back({{fam, idx}, Scalar::constant(Rational(c), qv.mode())});
    }
    return qp::ModuleElement::from_terms(kind, qv, ts);
}

qwa::ModuleElement random_qwa(std::mt19937_64& rng, qwa::ModuleKind kind, const Scalar& qv) {
    std::vector<std::pair<qwa::BasisSymbol, Scalar>> ts;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < terms; ++i) {
        qwa::Family fam = qwa::Family::V;
        switch (kind) {
            case qwa::ModuleKind::V: break;
            case qwa::ModuleKind::W: fam = qwa::Family::Wb; break;
            case qwa::ModuleKind::M: fam = (rng() % 2) ? qwa::Family::Wb : qwa::Family::V; break;
        }
        long idx = static_cast<long>(rng() % 7);
        long c = static_cast<long>(rng() % 7) - 3;
        if (c == 0) c = 2;
        ts.push_back({{fam, idx}, Scalar::constant(Rational(c), qv.mode())});
    }
    return qwa::ModuleElement::from_terms(kind, qv, ts);
}

Report handle_nf(const std::string& algebra, const std::string& params_text,
                 const std::string& expr) {
    auto p = build_presentation(algebra, params_text);
    AlgebraElement e = parse::parse_algebra_element(p, expr);
    Report rep;
    rep.command = "nf";
    rep.parameters = {{"algebra", algebra}, {"params", params_text}, {"expr", expr}};
    rep.checks.push_back({"normal-form",
                          true,
                          {{"result", e.to_string()},
                           {"degree", std::to_string(e.degree())},
                           {"terms", std::to_string(e.terms().size())}}});
    return rep;
}

Report handle_confluence(const std::string& algebra, const std::string& params_text) {
    auto p = build_presentation(algebra, params_text);
    ConfluenceReport cr = check_confluence(p);
    Report rep;
    rep.command = "confluence";
    rep.parameters = {{"algebra", algebra}, {"params", params_text}};
    CheckResult c{"confluence", cr.confluent, {}};
    c.details.push_back({"ambiguities", std::to_string(cr.ambiguities.size())});
    for (std::size_t i = 0; i < cr.ambiguities.size(); ++i) {
        const auto& amb = cr.ambiguities[i];
        c.details.push_back({"overlap-" + std::to_string(i), amb.word});
        c.details.push_back({"resolved-" + std::to_string(i), amb.equal ? "equal" : "differs"});
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

Report handle_hom(const std::string& case_name, const std::string& params_text) {
    auto p = param_map(params_text, {"alpha", "beta", "r", "s"});
    GeneratorMap m = case_name == "a"
                         ? lemma_case_a(p.at("alpha"), p.at("beta"), p.at("r"), p.at("s"))
                         : lemma_case_b(p.at("alpha"), p.at("beta"), p.at("r"), p.at("s"));
    HomCheck hc = check_hom(m);
    Report rep;
    rep.command = "hom";
    rep.parameters = {{"case", case_name}, {"params", params_text}};
    CheckResult c{"hom-relations", hc.ok, {}};
    c.details = {{"source", m.source->name()},
                 {"source-alpha", m.source->alpha().to_string()},
                 {"source-beta", m.source->beta().to_string()},
                 {"source-gamma", m.source->gamma().to_string()},
                 {"target", m.target->name()},
                 {"target-q", m.target->q().to_string()},
                 {"image-d", m.image_d.to_string()},
                 {"image-u", m.image_u.to_string()}};
    if (!hc.ok) {
        c.details.push_back({"failed-relation", hc.failed_relation});
        c.details.push_back({"certificate", hc.certificate->to_string()});
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

Report handle_module_check(const std::string& flavor, const std::string& q_text, long range,
                           long draws, unsigned long long seed) {
    Scalar qv = parse::parse_scalar(q_text);
    Report rep;
    rep.command = "module-check";
    rep.parameters = {{"module", flavor},
                      {"q", q_text},
                      {"range", std::to_string(range)},
                      {"draws", std::to_string(draws)},
                      {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);

    if (flavor == "qp") {
        auto relation = [&](const qp::ModuleElement& x) {
            return qp::act('a', qp::act('b', x)) == qp::act('b', qp::act('a', x)).scale(qv);
        };
        auto run_family = [&](const char* name, qp::ModuleKind kind, qp::Family fam, long lo) {
            CheckResult c{name, true, {{"range", std::to_string(range)}}};
            for (long idx = lo; idx <= range; ++idx) {
                qp::ModuleElement x = qp::ModuleElement::basis(kind, qv, fam, idx);
                if (!relation(x)) {
                    c.pass = false;
                    c.details.push_back({"failed-at", x.to_string()});
                    break;
                }
            }
            rep.checks.push_back(std::move(c));
        };
        run_family("relation-V", qp::ModuleKind::V, qp::Family::V, -range);
        run_family("relation-W", qp::ModuleKind::W, qp::Family::Wb, 0);
        run_family("relation-M-mo", qp::ModuleKind::M, qp::Family::Mo, 0);
        run_family("relation-M-v", qp::ModuleKind::M, qp::Family::V, 0);

        auto pres = Presentation::quantum_plane(qv);
        CheckResult comp{"action-compatibility", true, {{"draws", std::to_string(draws)}}};
        for (long i = 0; i < draws && comp.pass; ++i) {
            for (qp::ModuleKind kind : {qp::ModuleKind::V, qp::ModuleKind::W, qp::ModuleKind::M}) {
                qp::ModuleElement v = random_qp(rng, kind, qv);
                AlgebraElement x = random_algebra(rng, pres);
                AlgebraElement y = random_algebra(rng, pres);
                if (qp::act_algebra(x * y, v) != qp::act_algebra(x, qp::act_algebra(y, v))) {
                    comp.pass = false;
                    comp.details.push_back({"failed-at", "draw " + std::to_string(i)});
                    break;
                }
            }
        }
        rep.checks.push_back(std::move(comp));
        return rep;
    }

    auto relation = [&](const qwa::ModuleElement& x) {
        qwa::ModuleElement lhs = qwa::act('a', qwa::act('b', x));
        qwa::ModuleElement rhs = qwa::act('b', qwa::act('a', x)).scale(qv) + x;
        return lhs == rhs;
    };
    auto run_family = [&](const char* name, qwa::ModuleKind kind, qwa::Family fam) {
        CheckResult c{name, true, {{"range", std::to_string(range)}}};
        for (long idx = 0; idx <= range; ++idx) {
            qwa::ModuleElement x = qwa::ModuleElement::basis(kind, qv, fam, idx);
            if (!relation(x)) {
                c.pass = false;
                c.details.push_back({"failed-at", x.to_string()});
                break;
            }
        }
        rep.checks.push_back(std::move(c));
    };
    run_family("relation-V", qwa::ModuleKind::V, qwa::Family::V);
    run_family("relation-W", qwa::ModuleKind::W, qwa::Family::Wb);
    run_family("relation-M-w", qwa::ModuleKind::M, qwa::Family::Wb);
    run_family("relation-M-v", qwa::ModuleKind::M, qwa::Family::V);

    auto pres = Presentation::quantized_weyl(qv);
    CheckResult comp{"action-compatibility", true, {{"draws", std::to_string(draws)}}};
    for (long i = 0; i < draws && comp.pass; ++i) {
        for (qwa::ModuleKind kind : {qwa::ModuleKind::V, qwa::ModuleKind::W, qwa::ModuleKind::M}) {
            qwa::ModuleElement v = random_qwa(rng, kind, qv);
            AlgebraElement x = random_algebra(rng, pres);
            AlgebraElement y = random_algebra(rng, pres);
            if (qwa::act_algebra(x * y, v) != qwa::act_algebra(x, qwa::act_algebra(y, v))) {
                comp.pass = false;
                comp.details.push_back({"failed-at", "draw " + std::to_string(i)});
                break;
            }
        }
    }
    rep.checks.push_back(std::move(comp));
    return rep;
}

Report handle_witness(const std::string& kind, const std::string& q_text,
                      const std::string& element_text) {
    Scalar qv = parse::parse_scalar(q_text);
    Report rep;
    rep.command = "witness";
    rep.parameters = {{"kind", kind}, {"q", q_text}, {"element", element_text}};

    auto record = [&](const AlgebraElement& op, const std::vector<AlgebraElement>& factors,
                      const std::string& result) {
        rep.checks.push_back({"witness",
                              true,
                              {{"operator", op.to_string()},
                               {"factors", join_elements(factors)},
                               {"steps", std::to_string(factors.size())},
                               {"result", result}}});
    };

    if (kind == "qp-simple") {
        auto elem = parse::parse_qp_element(qp::ModuleKind::V, qv, element_text);
        qp::Witness wit = qp::simplicity_witness_V(elem);
        record(wit.op, wit.factors, wit.result.to_string());
        bool sound = qp::act_algebra(wit.op, elem) == wit.result &&
                     wit.result == qp::ModuleElement::basis(qp::ModuleKind::V, qv, qp::Family::V, 0);
        rep.checks.push_back({"soundness", sound, {{"target", "v(0)"}}});
    } else if (kind == "qp-essential") {
        auto elem = parse::parse_qp_element(qp::ModuleKind::M, qv, element_text);
        qp::Witness wit = qp::essentiality_witness_M(elem);
        record(wit.op, wit.factors, wit.result.to_string());
        bool sound = qp::act_algebra(wit.op, elem) == wit.result && wit.result.in_V() &&
                     !wit.result.is_zero();
        rep.checks.push_back({"soundness", sound, {{"target", "a nonzero element of V"}}});
    } else if (kind == "qwa-simple") {
        auto elem = parse::parse_qwa_element(qwa::ModuleKind::V, qv, element_text);
        qwa::Witness wit = qwa::simplicity_witness_V(elem);
        record(wit.op, wit.factors, wit.result.to_string());
        bool sound =
            qwa::act_algebra(wit.op, elem) == wit.result &&
            wit.result == qwa::ModuleElement::basis(qwa::ModuleKind::V, qv, qwa::Family::V, 0);
        rep.checks.push_back({"soundness", sound, {{"target", "v(0)"}}});
    } else {
        auto elem = parse::parse_qwa_element(qwa::ModuleKind::M, qv, element_text);
        qwa::Witness wit = qwa::essentiality_witness_M(elem);
        record(wit.op, wit.factors, wit.result.to_string());
        long top = -1;
        for (const auto& [sym, c] : elem.terms())
            if (sym.family == qwa::Family::Wb && sym.index > top) top = sym.index;
        bool sound = qwa::act_algebra(wit.op, elem) == wit.result && wit.result.in_V() &&
                     !wit.result.is_zero() &&
                     static_cast<long>(wit.factors.size()) <= top + 1;
        rep.checks.push_back({"soundness",
                              sound,
                              {{"target", "a nonzero element of V"},
                               {"step-bound", std::to_string(top + 1)}}});
    }
    return rep;
}

Report handle_orbit(const std::string& r_text, const std::string& gamma_text,
                    const std::string& l0_text, const std::string& l1_text, long bound,
                    unsigned order_bound) {
    auto vals = unified_scalars({r_text, gamma_text, l0_text, l1_text});
    const Scalar& r = vals[0];
    gwa::DoubleRootParams p(r, vals[1]);
    auto seq = gwa::LambdaSequence::from_double_root(p, vals[2], vals[3]);
    Report rep;
    rep.command = "orbit";
    rep.parameters = {{"r", r_text},
                      {"gamma", gamma_text},
                      {"lambda0", l0_text},
                      {"lambda1", l1_text},
                      {"bound", std::to_string(bound)},
                      {"order-bound", std::to_string(order_bound)}};

    CheckResult table{"lambda-table", true, {}};
    const int width = static_cast<int>(std::to_string(bound).size());
    std::vector<Scalar> lam;
    for (long n = 0; n <= bound; ++n) {
        lam.push_back(gwa::lambda_at(seq, n));
        table.details.push_back({"lambda-" + padded(n, width), lam.back().to_string()});
    }
    rep.checks.push_back(std::move(table));

    CheckResult cf{"closed-form", true, {}};
    if (r.is_one()) {
        cf.details = {{"applicable", "no"}, {"reason", "r = 1 has no closed form"}};
    } else {
        gwa::ClosedForm form = gwa::lambda_closed_form(seq);
        cf.details = {{"c1", form.c1.to_string()},
                      {"c2", form.c2.to_string()},
                      {"lambda-star", form.lambda_star.to_string()},
                      {"verified-range", "0..=" + std::to_string(bound)}};
        for (long n = 0; n <= bound; ++n) {
            Scalar expect =
                (form.c1 + form.c2 * Scalar::constant(Rational(n), r.mode())) * r.pow(n) +
                form.lambda_star;
            if (expect != lam[static_cast<std::size_t>(n)]) {
                cf.pass = false;
                cf.details.push_back({"failed-at", std::to_string(n)});
                break;
            }
        }
    }
    rep.checks.push_back(std::move(cf));

    CheckResult per{"periodicity", true, {}};
    auto ord = root_of_unity_order(r, order_bound);
    if (r.is_one()) {
        per.details = {{"applicable", "no"}, {"reason", "r = 1 has no closed form"}};
    } else if (!ord) {
        per.details = {{"applicable", "no"},
                       {"reason", "r is not a root of unity within the bound"}};
    } else {
        gwa::PeriodicityReport pr = gwa::periodicity_check(seq, r, -1, order_bound);
        per.details = {
            {"order", std::to_string(pr.order)},
            {"c2", pr.c2.to_string()},
            {"periodic", pr.periodic ? "yes" : "no"},
            {"counterexample-k",
             pr.counterexample_k ? std::to_string(*pr.counterexample_k) : "none"},
            {"zero-set", join_longs(pr.zero_set)},
            {"zero-bound", std::to_string(pr.zero_bound)}};
    }
    rep.checks.push_back(std::move(per));

    gwa::KdimReport kd = gwa::kdim_conditions(seq, bound);
    rep.checks.push_back(
        {"kdim-evidence",
         true,
         {{"orbit-return-n", kd.orbit_return_n ? std::to_string(*kd.orbit_return_n) : "none"},
          {"zero-hits", join_longs(kd.zero_hits)},
          {"bound", std::to_string(kd.bound)},
          {"caveat", kd.caveat}}});
    return rep;
}

Report handle_centrality(const std::string& r_text, const std::string& gamma_text, unsigned power,
                         unsigned order_bound) {
    auto vals = unified_scalars({r_text, gamma_text});
    gwa::DoubleRootParams p(vals[0], vals[1]);
    auto ord = root_of_unity_order(vals[0], order_bound);
    if (!ord)
        throw Error(Errc::TorsionRequired, "r must be a root of unity for centrality checks");
    bool central = (power == *ord) ? gwa::wn_centrality(p, power, order_bound)
                                   : is_central(gwa::w_elements(p).w.pow(power));
    Report rep;
    rep.command = "centrality";
    rep.parameters = {{"r", r_text},
                      {"gamma", gamma_text},
                      {"power", std::to_string(power)},
                      {"order-bound", std::to_string(order_bound)}};
    rep.checks.push_back({"central",
                          central,
                          {{"order", std::to_string(*ord)}, {"power", std::to_string(power)}}});
    return rep;
}

Report handle_classify(const std::string& alpha_text, const std::string& beta_text,
                       const std::string& gamma_text, const std::string& r_text,
                       const std::string& s_text, unsigned order_bound) {
    auto vals = unified_scalars({alpha_text, beta_text, gamma_text, r_text, s_text});
    diamond::Verdict v =
        diamond::classify(vals[0], vals[1], vals[2], vals[3], vals[4], order_bound);
    Report rep;
    rep.command = "classify";
    rep.parameters = {{"alpha", alpha_text},
                      {"beta", beta_text},
                      {"gamma", gamma_text},
                      {"root-r", r_text},
                      {"root-s", s_text},
                      {"order-bound", std::to_string(order_bound)}};
    CheckResult c{"classify", true, {}};
    c.details = {{"status", diamond::status_name(v.status)}, {"rationale", v.rationale}};
    if (v.witness) {
        c.details.push_back({"witness-family", v.witness->module_family});
        c.details.push_back({"witness-target", v.witness->hom.target->name()});
        c.details.push_back({"witness-q", v.witness->hom.target->q().to_string()});
        c.details.push_back({"witness-image-d", v.witness->hom.image_d.to_string()});
        c.details.push_back({"witness-image-u", v.witness->hom.image_u.to_string()});
        c.details.push_back({"witness-verified", v.witness->hom.verified ? "yes" : "no"});
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

}  // namespace

RunResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact checks for down-up algebras and their modules"};
    app.name("downup");
    app.require_subcommand(1);

    std::string format = "text";
    unsigned long long seed = 20240816ull;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for randomized suites");

    auto* nf = app.add_subcommand("nf", "normal form of an algebra expression");
    std::string nf_algebra, nf_params, nf_expr;
    nf->add_option("--algebra", nf_algebra)
        ->required()
        ->check(CLI::IsMember({"downup", "qplane", "qweyl"}));
    nf->add_option("--params", nf_params)->required();
    nf->add_option("--expr", nf_expr)->required();

    auto* confl = app.add_subcommand("confluence", "resolve all rewriting overlaps");
    std::string cf_algebra, cf_params;
    confl->add_option("--algebra", cf_algebra)
        ->required()
        ->check(CLI::IsMember({"downup", "qplane", "qweyl"}));
    confl->add_option("--params", cf_params)->required();

    auto* hom = app.add_subcommand("hom", "verify the generator maps onto B(r) and C(r)");
    std::string hom_case, hom_params;
    hom->add_option("--case", hom_case)->required()->check(CLI::IsMember({"a", "b"}));
    hom->add_option("--params", hom_params)->required();

    auto* mc = app.add_subcommand("module-check", "relation identities on a basis range");
    std::string mc_flavor, mc_q;
    long mc_range = 20, mc_draws = 25;
    mc->add_option("module", mc_flavor)->required()->check(CLI::IsMember({"qp", "qwa"}));
    mc->add_option("--q", mc_q)->required();
    mc->add_option("--range", mc_range)->check(CLI::Range(0l, 200l));
    mc->add_option("--draws", mc_draws)->check(CLI::Range(0l, 10000l));

    auto* wit = app.add_subcommand("witness", "simplicity and essentiality witnesses");
    std::string wit_kind, wit_q, wit_element;
    wit->add_option("kind", wit_kind)
        ->required()
        ->check(CLI::IsMember({"qp-simple", "qp-essential", "qwa-simple", "qwa-essential"}));
    wit->add_option("--q", wit_q)->required();
    wit->add_option("--element", wit_element)->required();

    auto* orbit = app.add_subcommand("orbit", "lambda sequence, closed form, periodicity");
    std::string or_r, or_gamma, or_l0, or_l1;
    long or_bound = 12;
    unsigned or_order_bound = 360;
    orbit->add_option("--r", or_r)->required();
    orbit->add_option("--gamma", or_gamma)->required();
    orbit->add_option("--lambda0", or_l0)->required();
    orbit->add_option("--lambda1", or_l1)->required();
    orbit->add_option("--bound", or_bound)->check(CLI::Range(0l, 200l));
    orbit->add_option("--order-bound", or_order_bound)->check(CLI::Range(1u, 100000u));

    auto* cen = app.add_subcommand("centrality", "centrality of powers of the normal element");
    std::string cen_r, cen_gamma;
    unsigned cen_power = 1, cen_order_bound = 360;
    cen->add_option("--r", cen_r)->required();
    cen->add_option("--gamma", cen_gamma)->required();
    cen->add_option("--power", cen_power)->required()->check(CLI::Range(0u, 24u));
    cen->add_option("--order-bound", cen_order_bound)->check(CLI::Range(1u, 100000u));

    auto* cls = app.add_subcommand("classify", "decide the finite-length property");
    std::string cl_alpha, cl_beta, cl_gamma, cl_r, cl_s;
    unsigned cl_order_bound = 360;
    cls->add_option("--alpha", cl_alpha)->required();
    cls->add_option("--beta", cl_beta)->required();
    cls->add_option("--gamma", cl_gamma)->required();
    cls->add_option("--root-r", cl_r)->required();
    cls->add_option("--root-s", cl_s)->required();
    cls->add_option("--order-bound", cl_order_bound)->check(CLI::Range(1u, 100000u));

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {1, std::string("usage error: ") + e.what() + "\n"};
    }

    try {
        Report rep;
        if (nf->parsed())
            rep = handle_nf(nf_algebra, nf_params, nf_expr);
        else if (confl->parsed())
            rep = handle_confluence(cf_algebra, cf_params);
        else if (hom->parsed())
            rep = handle_hom(hom_case, hom_params);
        else if (mc->parsed())
            rep = handle_module_check(mc_flavor, mc_q, mc_range, mc_draws, seed);
        else if (wit->parsed())
            rep = handle_witness(wit_kind, wit_q, wit_element);
        else if (orbit->parsed())
            rep = handle_orbit(or_r, or_gamma, or_l0, or_l1, or_bound, or_order_bound);
        else if (cen->parsed())
            rep = handle_centrality(cen_r, cen_gamma, cen_power, cen_order_bound);
        else
            rep = handle_classify(cl_alpha, cl_beta, cl_gamma, cl_r, cl_s, cl_order_bound);
        rep.exit_status = report::status_from_checks(rep.checks);
        std::string out = format == "json" ? report::to_json(rep) : report::to_text(rep);
        return {rep.exit_status, out};
    } catch (const Error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunResult res = run_command(args);
    std::fputs(res.output.c_str(), res.exit_code == 1 ? stderr : stdout);
    return res.exit_code;
}

}  // namespace downup::cli
