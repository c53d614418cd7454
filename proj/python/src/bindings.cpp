#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "downup/classifier.hpp"
#include "downup/cli.hpp"
#include "downup/gwa_orbits.hpp"
#include "downup/morphisms.hpp"
#include "downup/parse.hpp"

namespace py = pybind11;
using namespace downup;

namespace {

std::shared_ptr<const Presentation> build_presentation(const std::string& algebra,
                                                       const std::string& params) {
    auto ps = parse::parse_params(params);
    auto get = [&](const char* key) -> const Scalar& {
        for (const auto& [k, v] : ps)
            if (k == key) return v;
        throw Error(Errc::InvalidParameter, std::string("missing parameter ") + key);
    };
    if (algebra == "downup")
        return Presentation::down_up(get("alpha"), get("beta"), get("gamma"));
    if (algebra == "qplane") return Presentation::quantum_plane(get("q"));
    if (algebra == "qweyl") return Presentation::quantized_weyl(get("q"));
    throw Error(Errc::InvalidParameter, "unknown algebra " + algebra);
}

std::vector<Scalar> unified(const std::vector<std::string>& texts) {
    std::vector<Scalar> vals;
    vals.reserve(texts.size());
    for (const auto& t : texts) vals.push_back(parse::parse_scalar(t));
    ScalarMode target;
    for (const auto& v : vals) {
        if (v.mode().kind == ModeKind::Rational) continue;
        if (target.kind == ModeKind::Rational)
            target = v.mode();
        else if (!(target == v.mode()))
            throw Error(Errc::ModeMismatch, "parameters mix " + target.to_string() + " with " +
                                                v.mode().to_string());
    }
    for (auto& v : vals) v = parse::to_mode(v, target);
    return vals;
}

py::dict hom_dict(const GeneratorMap& m, const HomCheck& hc) {
    py::dict out;
    out["ok"] = hc.ok;
    out["source"] = m.source->name();
    out["source_gamma"] = m.source->gamma().to_string();
    out["target"] = m.target->name();
    out["target_q"] = m.target->q().to_string();
    out["image_d"] = m.image_d.to_string();
    out["image_u"] = m.image_u.to_string();
    if (!hc.ok) {
        out["failed_relation"] = hc.failed_relation;
        out["certificate"] = hc.certificate->to_string();
    }
    return out;
}

template <typename Wit>
py::dict witness_dict(const Wit& wit) {
    py::dict out;
    out["operator"] = wit.op.to_string();
    py::list fs;
    for (const auto& f : wit.factors) fs.append(f.to_string());
    out["factors"] = fs;
    out["result"] = wit.result.to_string();
    return out;
}

std::string normal_form(const std::string& algebra, const std::string& params,
                        const std::string& expr) {
    auto p = build_presentation(algebra, params);
    return parse::parse_algebra_element(p, expr).to_string();
}

bool confluence(const std::string& algebra, const std::string& params) {
    return check_confluence(build_presentation(algebra, params)).confluent;
}

py::dict hom_case(const std::string& which, const std::string& alpha, const std::string& beta,
                  const std::string& r, const std::string& s) {
    auto vals = unified({alpha, beta, r, s});
    GeneratorMap m = which == "a" ? lemma_case_a(vals[0], vals[1], vals[2], vals[3])
                                  : lemma_case_b(vals[0], vals[1], vals[2], vals[3]);
    return hom_dict(m, check_hom(m));
}

py::dict witness(const std::string& kind, const std::string& q_text,
                 const std::string& element) {
    Scalar q = parse::parse_scalar(q_text);
    if (kind == "qp-simple")
        return witness_dict(
            qp::simplicity_witness_V(parse::parse_qp_element(qp::ModuleKind::V, q, element)));
    if (kind == "qp-essential")
        return witness_dict(
            qp::essentiality_witness_M(parse::parse_qp_element(qp::ModuleKind::M, q, element)));
    if (kind == "qwa-simple")
        return witness_dict(
            qwa::simplicity_witness_V(parse::parse_qwa_element(qwa::ModuleKind::V, q, element)));
    if (kind == "qwa-essential")
        return witness_dict(
            qwa::essentiality_witness_M(parse::parse_qwa_element(qwa::ModuleKind::M, q, element)));
    throw Error(Errc::InvalidParameter, "unknown witness kind " + kind);
}

py::list lambda_table(const std::string& r, const std::string& gamma, const std::string& l0,
                      const std::string& l1, long bound) {
    auto vals = unified({r, gamma, l0, l1});
    gwa::DoubleRootParams p(vals[0], vals[1]);
    auto seq = gwa::LambdaSequence::from_double_root(p, vals[2], vals[3]);
    py::list out;
    for (long n = 0; n <= bound; ++n) out.append(gwa::lambda_at(seq, n).to_string());
    return out;
}

py::dict closed_form(const std::string& r, const std::string& gamma, const std::string& l0,
                     const std::string& l1) {
    auto vals = unified({r, gamma, l0, l1});
    gwa::DoubleRootParams p(vals[0], vals[1]);
    auto form = gwa::lambda_closed_form(gwa::LambdaSequence::from_double_root(p, vals[2], vals[3]));
    py::dict out;
    out["r"] = form.r.to_string();
    out["c1"] = form.c1.to_string();
    out["c2"] = form.c2.to_string();
    out["lambda_star"] = form.lambda_star.to_string();
    return out;
}

py::dict periodicity(const std::string& r, const std::string& gamma, const std::string& l0,
                     const std::string& l1) {
    auto vals = unified({r, gamma, l0, l1});
    gwa::DoubleRootParams p(vals[0], vals[1]);
    auto seq = gwa::LambdaSequence::from_double_root(p, vals[2], vals[3]);
    gwa::PeriodicityReport pr = gwa::periodicity_check(seq, vals[0]);
    py::dict out;
    out["order"] = pr.order;
    out["c2"] = pr.c2.to_string();
    out["periodic"] = pr.periodic;
    out["counterexample_k"] =
        pr.counterexample_k ? py::object(py::int_(*pr.counterexample_k)) : py::none();
    out["zero_set"] = pr.zero_set;
    out["zero_bound"] = pr.zero_bound;
    return out;
}

bool centrality(const std::string& r, const std::string& gamma, unsigned power) {
    auto vals = unified({r, gamma});
    gwa::DoubleRootParams p(vals[0], vals[1]);
    auto ord = root_of_unity_order(vals[0], 360);
    if (!ord)
        throw Error(Errc::TorsionRequired, "r must be a root of unity for centrality checks");
    if (power == *ord) return gwa::wn_centrality(p, power);
    return is_central(gwa::w_elements(p).w.pow(power));
}

py::dict classify_params(const std::string& alpha, const std::string& beta,
                         const std::string& gamma, const std::string& r, const std::string& s) {
    auto vals = unified({alpha, beta, gamma, r, s});
    diamond::Verdict v = diamond::classify(vals[0], vals[1], vals[2], vals[3], vals[4]);
    py::dict out;
    out["status"] = diamond::status_name(v.status);
    out["rationale"] = v.rationale;
    if (v.witness) {
        py::dict w;
        w["module_family"] = v.witness->module_family;
        w["target"] = v.witness->hom.target->name();
        w["target_q"] = v.witness->hom.target->q().to_string();
        w["image_d"] = v.witness->hom.image_d.to_string();
        w["image_u"] = v.witness->hom.image_u.to_string();
        out["witness"] = w;
    } else {
        out["witness"] = py::none();
    }
    return out;
}

py::tuple run(const std::vector<std::string>& args) {
    cli::RunResult res = cli::run_command(args);
    return py::make_tuple(res.exit_code, res.output);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for down-up algebras, their module families, and the "
              "finite-length classifier";

    py::register_exception<Error>(m, "DownupError");

    m.def("normal_form", &normal_form, py::arg("algebra"), py::arg("params"), py::arg("expr"),
          "Reduce an algebra expression to its normal form and render it.");
    m.def("confluence", &confluence, py::arg("algebra"), py::arg("params"),
          "Resolve all rewriting overlaps for the given presentation.");
    m.def("hom_case", &hom_case, py::arg("case"), py::arg("alpha"), py::arg("beta"), py::arg("r"),
          py::arg("s"),
          "Build and verify the generator map for roots (r, s); case 'a' targets the quantum "
          "plane, case 'b' the quantized Weyl algebra.");
    m.def("witness", &witness, py::arg("kind"), py::arg("q"), py::arg("element"),
          "Produce a simplicity or essentiality witness; kinds are qp-simple, qp-essential, "
          "qwa-simple, qwa-essential.");
    m.def("lambda_table", &lambda_table, py::arg("r"), py::arg("gamma"), py::arg("lambda0"),
          py::arg("lambda1"), py::arg("bound"),
          "Evaluate the lambda recursion on [0, bound].");
    m.def("closed_form", &closed_form, py::arg("r"), py::arg("gamma"), py::arg("lambda0"),
          py::arg("lambda1"), "Closed-form coefficients (c1 + c2*n)*r^n + lambda_star.");
    m.def("periodicity", &periodicity, py::arg("r"), py::arg("gamma"), py::arg("lambda0"),
          py::arg("lambda1"), "Periodicity verdict for a torsion ratio r.");
    m.def("centrality", &centrality, py::arg("r"), py::arg("gamma"), py::arg("power"),
          "Whether w^power is central; r must be a root of unity.");
    m.def("classify", &classify_params, py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
          py::arg("r"), py::arg("s"),
          "Decide the finite-length property for A(alpha, beta, gamma) with roots r, s.");
    m.def("run", &run, py::arg("args"),
          "Run a command line invocation in-process; returns (exit_code, output).");
}
