#include "weyr/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "weyr/json_io.hpp"
#include "weyr/random_gen.hpp"
#include "weyr/reduce.hpp"
#include "weyr/verify.hpp"

namespace weyr::cli {

namespace {

// Inline JSON, `-` for stdin, anything else is a file path.
std::string read_payload(const std::string& arg, std::istream& in) {
    if (arg == "-") {
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream f(arg);
    if (!f) throw std::invalid_argument("cannot open input file: " + arg);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

json parse_json(const std::string& text) {
    return json::parse(text);  // throws json::parse_error
}

struct CommonInput {
    std::string segre, pencil, contra;
};

SegreStructure need_segre(const CommonInput& ci, std::istream& in) {
    if (ci.segre.empty())
        throw std::invalid_argument("this command needs --segre input");
    return segre_from_json(parse_json(read_payload(ci.segre, in)));
}

std::string matrix_ascii(const ExactMatrix& m) { return m.str(); }

void emit_template(const Template& t, bool as_json, std::ostream& out) {
    if (as_json) {
        out << to_json(t).dump(2) << "\n";
    } else {
        out << "base:\n"
            << matrix_ascii(t.base) << "pattern:\n"
            << t.pattern.ascii(&t.partition);
    }
}

void emit_pair(const TemplatePair& tp, bool as_json, std::ostream& out) {
    if (as_json) {
        out << to_json(tp).dump(2) << "\n";
    } else {
        out << "== first ==\n";
        emit_template(tp.first, false, out);
        out << "== second ==\n";
        emit_template(tp.second, false, out);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyr canonical forms and miniversal deformation templates"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the verb

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "ascii"}));

    CommonInput ci;
    auto add_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--segre", ci.segre, "Segre structure (JSON, path, or -)");
        cmd->add_option("--pencil", ci.pencil, "pencil structure");
        cmd->add_option("--contra", ci.contra, "contragredient structure");
    };

    auto* canon = app.add_subcommand("canon", "build a canonical matrix");
    std::string form = "weyr";
    canon->add_option("--form", form, "jordan or weyr")
        ->check(CLI::IsMember({"jordan", "weyr"}));
    add_inputs(canon);

    auto* weyr_cmd =
        app.add_subcommand("weyr", "Weyr characteristics of a Segre structure");
    add_inputs(weyr_cmd);

    auto* perm = app.add_subcommand("perm", "Jordan-to-Weyr permutation");
    add_inputs(perm);

    auto* deform = app.add_subcommand("deform", "build a deformation template");
    std::string kind = "similarity";
    std::string route = "direct";
    std::string ordering = "weyr";
    bool triangularize = false;
    deform->add_option("--kind", kind, "similarity, pencil, or contragredient")
        ->check(CLI::IsMember({"similarity", "pencil", "contragredient"}));
    deform->add_option("--route", route, "similarity construction route")
        ->check(CLI::IsMember({"permute", "direct"}));
    deform->add_option("--ordering", ordering, "pencil summand ordering")
        ->check(CLI::IsMember({"weyr", "kronecker"}));
    deform->add_flag("--triangularize", triangularize,
                     "apply the triangularizing permutations (contragredient)");
    add_inputs(deform);

    auto* certify_cmd = app.add_subcommand("certify", "rank-certify a template");
    std::string cert_kind = "similarity";
    std::size_t fuzz = 0;
    std::uint64_t seed = 0;
    certify_cmd->add_option("--kind", cert_kind)
        ->check(CLI::IsMember({"similarity", "pencil", "contragredient"}));
    certify_cmd->add_option("--fuzz", fuzz, "certify N random structures");
    certify_cmd->add_option("--seed", seed, "fuzz RNG seed");
    add_inputs(certify_cmd);

    auto* reduce_cmd =
        app.add_subcommand("reduce", "map a perturbed matrix to normal form");
    std::string perturbation;
    ReduceOptions opts;
    reduce_cmd->add_option("--perturbation", perturbation,
                           "float matrix E (JSON, path, or -)");
    reduce_cmd->add_option("--tol", opts.tol);
    reduce_cmd->add_option("--max-iter", opts.max_iter);
    reduce_cmd->add_option("--cond-cap", opts.cond_cap);
    add_inputs(reduce_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    bool as_json = format == "json";
    try {
        if (canon->parsed()) {
            SegreStructure s = need_segre(ci, in);
            if (form == "jordan") {
                ExactMatrix j = build_jordan(s);
                if (as_json)
                    out << to_json(j).dump(2) << "\n";
                else
                    out << matrix_ascii(j);
            } else {
                WeyrForm wf = build_weyr(s);
                if (as_json)
                    out << json{{"matrix", to_json(wf.matrix)},
                                {"partition", to_json(wf.partition)}}
                               .dump(2)
                        << "\n";
                else
                    out << matrix_ascii(wf.matrix);
            }
            return 0;
        }
        if (weyr_cmd->parsed()) {
            SegreStructure s = need_segre(ci, in);
            json per_eig = json::array();
            for (const auto& eb : s.eigenvalues)
                per_eig.push_back({{"eigenvalue", eb.value.str()},
                                   {"segre", eb.sizes},
                                   {"weyr", weyr_char_from_segre(eb.sizes).s}});
            if (as_json) {
                out << per_eig.dump(2) << "\n";
            } else {
                for (const auto& e : per_eig) {
                    out << e["eigenvalue"].get<std::string>() << ": ";
                    for (const auto& v : e["weyr"]) out << v << " ";
                    out << "\n";
                }
            }
            return 0;
        }
        if (perm->parsed()) {
            SegreStructure s = need_segre(ci, in);
            Permutation p = jordan_to_weyr_permutation(s);
            if (as_json) {
                out << to_json(p).dump(2) << "\n";
            } else {
                for (std::size_t v : p.image) out << v + 1 << " ";
                out << "\n";
            }
            return 0;
        }
        if (deform->parsed()) {
            if (kind == "similarity") {
                SegreStructure s = need_segre(ci, in);
                Template t = deform_weyr(s, route == "permute" ? WeyrRoute::Permute
                                                               : WeyrRoute::Direct);
                emit_template(t, as_json, out);
            } else if (kind == "pencil") {
                if (ci.pencil.empty())
                    throw std::invalid_argument("pencil deformation needs --pencil");
                PencilStructure ps =
                    pencil_from_json(parse_json(read_payload(ci.pencil, in)));
                TemplatePair tp = ordering == "kronecker"
                                      ? deform_pencil_kronecker(ps)
                                      : deform_pencil(ps);
                emit_pair(tp, as_json, out);
            } else {
                if (ci.contra.empty())
                    throw std::invalid_argument(
                        "contragredient deformation needs --contra");
                ContraStructure cs =
                    contra_from_json(parse_json(read_payload(ci.contra, in)));
                TemplatePair tp = deform_contragredient(cs);
                if (triangularize) tp = triangularize_contragredient(tp, cs).pair;
                emit_pair(tp, as_json, out);
            }
            return 0;
        }
        if (certify_cmd->parsed()) {
            if (fuzz > 0) {
                std::mt19937_64 rng(seed);
                std::size_t failures = 0;
                for (std::size_t i = 0; i < fuzz; ++i) {
                    VersalityReport rep;
                    if (cert_kind == "similarity") {
                        rep = certify(deform_weyr(random_segre(rng)));
                    } else if (cert_kind == "pencil") {
                        rep = certify(deform_pencil(random_pencil(rng)),
                                      TangentKind::PencilEquivalence);
                    } else {
                        rep = certify(deform_contragredient(random_contra(rng)),
                                      TangentKind::Contragredient);
                    }
                    if (!rep.miniversal) ++failures;
                }
                json summary = {{"cases", fuzz},
                                {"failures", failures},
                                {"seed", seed},
                                {"kind", cert_kind}};
                if (as_json)
                    out << summary.dump(2) << "\n";
                else
                    out << cert_kind << ": " << fuzz - failures << "/" << fuzz
                        << " miniversal\n";
                return failures == 0 ? 0 : 1;
            }
            VersalityReport rep;
            if (cert_kind == "similarity") {
                rep = certify(deform_weyr(need_segre(ci, in)));
            } else if (cert_kind == "pencil") {
                if (ci.pencil.empty())
                    throw std::invalid_argument("pencil certify needs --pencil");
                PencilStructure ps =
                    pencil_from_json(parse_json(read_payload(ci.pencil, in)));
                rep = certify(deform_pencil(ps), TangentKind::PencilEquivalence);
            } else {
                if (ci.contra.empty())
                    throw std::invalid_argument("contragredient certify needs --contra");
                ContraStructure cs =
                    contra_from_json(parse_json(read_payload(ci.contra, in)));
                rep = certify(deform_contragredient(cs), TangentKind::Contragredient);
            }
            if (as_json)
                out << to_json(rep).dump(2) << "\n";
            else
                out << "total_dim=" << rep.total_dim
                    << " tangent_rank=" << rep.tangent_rank
                    << " params=" << rep.param_count
                    << " versal=" << (rep.versal ? "yes" : "no")
                    << " miniversal=" << (rep.miniversal ? "yes" : "no") << "\n";
            return rep.miniversal ? 0 : 1;
        }
        if (reduce_cmd->parsed()) {
            SegreStructure s = need_segre(ci, in);
            Template t = deform_weyr(s);
            FloatMatrix e;
            if (perturbation.empty()) {
                e = FloatMatrix::Zero(static_cast<Eigen::Index>(t.base.rows()),
                                      static_cast<Eigen::Index>(t.base.cols()));
            } else {
                e = float_matrix_from_json(
                    parse_json(read_payload(perturbation, in)));
            }
            ReductionResult r = reduce_similarity(t, e, opts);
            if (as_json) {
                out << to_json(r).dump(2) << "\n";
            } else {
                out << "residual=" << r.residual << " iterations=" << r.iterations
                    << "\n";
            }
            return r.status == ReduceStatus::Converged ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace weyr::cli
