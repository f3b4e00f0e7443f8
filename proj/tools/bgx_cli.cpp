#include "bgx/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bgx;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw UsageError("empty rational list");
    return out;
}

Representation build_extension(const std::string& rep_name, int n) {
    if (rep_name == "ia") return build_ia_generators(n);
    if (rep_name == "gassner-ext") return build_rho_g(n);
    if (rep_name == "burau-ext") return build_rho_b(n);
    throw UsageError("unknown --rep '" + rep_name +
                     "' (expected ia, gassner-ext or burau-ext)");
}

// Rejects --spec entries that name variables outside the target context
// (missing ones surface as ContextError during specialization).
void require_known_vars(const Specialization& spec, const Context& ctx) {
    for (const auto& [name, value] : spec.assignment)
        if (std::find(ctx.begin(), ctx.end(), name) == ctx.end())
            throw UsageError("--spec names unknown variable '" + name + "'");
}

// Optional specialization from --spec k=v,... or the --t shortcut for the
// single-variable families.
std::optional<Specialization> optional_spec(const std::string& spec_text,
                                            const std::string& t_text,
                                            const Context& ctx) {
    if (!spec_text.empty() && !t_text.empty())
        throw UsageError("use either --spec or --t, not both");
    if (!spec_text.empty()) {
        const Specialization s = parse_specialization(spec_text);
        require_known_vars(s, ctx);
        return s;
    }
    if (!t_text.empty()) {
        Specialization s;
        s.assignment["t"] = parse_rational(t_text);
        require_known_vars(s, ctx);
        return s;
    }
    return std::nullopt;
}

void emit(const Representation& rep, const std::optional<Specialization>& spec,
          const std::string& format) {
    if (format == "latex") {
        if (spec) throw UsageError("--format latex emits symbolic documents only");
        std::cout << rep_to_latex(rep);
        return;
    }
    if (format != "json")
        throw UsageError("unknown --format '" + format + "' (json or latex)");
    if (spec)
        std::cout << dump_json(rep_to_json(specialize_rep(rep, *spec)));
    else
        std::cout << dump_json(rep_to_json(rep));
}

// Tensor square of the composition factor, second copy over m-variables.
Representation build_tensor(const std::string& rep_name, int n) {
    Representation phi;
    if (rep_name == "phi-g")
        phi = composition_factor(build_rho_g(n));
    else if (rep_name == "phi-b")
        phi = composition_factor(build_rho_b(n));
    else
        throw UsageError("unknown --rep '" + rep_name +
                         "' (expected phi-g or phi-b)");
    std::map<std::string, std::string> to_m;
    Context m_ctx;
    for (const auto& name : phi.context) {
        const std::string m_name = "m" + name.substr(1);
        to_m[name] = m_name;
        m_ctx.push_back(m_name);
    }
    return tensor_product(phi, rename_rep_vars(phi, to_m, m_ctx));
}

std::optional<Specialization> tensor_spec(const Representation& tensor,
                                          const std::string& t_text,
                                          const std::string& m_text) {
    if (t_text.empty() != m_text.empty())
        throw UsageError("tensor specialization needs both --t and --m");
    if (t_text.empty()) return std::nullopt;
    const std::vector<Rational> t_vals = parse_rational_list(t_text);
    const std::vector<Rational> m_vals = parse_rational_list(m_text);
    const size_t half = tensor.context.size() / 2;
    if (t_vals.size() != half || m_vals.size() != half)
        throw UsageError("expected " + std::to_string(half) +
                         " value(s) each for --t and --m");
    Specialization s;
    for (size_t i = 0; i < half; ++i) {
        s.assignment[tensor.context[i]] = t_vals[i];
        s.assignment[tensor.context[half + i]] = m_vals[i];
    }
    return s;
}

struct Options {
    std::string rep, spec, t, m, format = "json", theorem;
    int n = 3;
    std::uint64_t seed = 0;
};

int run_gen(const Options& o) {
    const Representation rep = build_extension(o.rep, o.n);
    emit(rep, optional_spec(o.spec, o.t, rep.context), o.format);
    return 0;
}

int run_factor(const Options& o) {
    if (o.rep != "gassner-ext" && o.rep != "burau-ext")
        throw UsageError("factor takes --rep gassner-ext or burau-ext");
    const Representation rep = composition_factor(build_extension(o.rep, o.n));
    emit(rep, optional_spec(o.spec, o.t, rep.context), o.format);
    return 0;
}

int run_tensor(const Options& o) {
    const Representation tensor = build_tensor(o.rep, o.n);
    emit(tensor, tensor_spec(tensor, o.t, o.m), o.format);
    return 0;
}

int run_irred(const Options& o) {
    Representation target;
    std::optional<Specialization> spec;
    if (o.rep == "gassner-ext" || o.rep == "burau-ext") {
        target = composition_factor(build_extension(o.rep, o.n));
        spec = optional_spec(o.spec, o.t, target.context);
        if (!spec)
            throw UsageError("irred needs a specialization (--spec or --t)");
    } else if (o.rep == "phi-g" || o.rep == "phi-b") {
        target = build_tensor(o.rep, o.n);
        spec = tensor_spec(target, o.t, o.m);
        if (!spec) throw UsageError("irred on a tensor needs --t and --m");
    } else {
        throw UsageError("irred takes --rep gassner-ext, burau-ext, phi-g or phi-b");
    }
    const SpecializedRep srep = specialize_rep(target, *spec);
    const IrredCertificate cert = decide(srep.image_list(), o.seed);

    Json doc;
    doc["schema_version"] = 1;
    doc["command"] = "irred";
    doc["family"] = family_name(srep.family);
    doc["n"] = srep.n;
    doc["degree"] = srep.degree;
    Json spec_doc;
    for (const auto& [name, value] : srep.spec.assignment)
        spec_doc[name] = to_string(value);
    doc["specialization"] = std::move(spec_doc);
    doc["seed"] = o.seed;
    doc["certificate"] = certificate_to_json(cert);
    std::cout << dump_json(doc);
    return 0;
}

int run_verify(const Options& o) {
    if (o.theorem.empty()) throw UsageError("verify needs --theorem");
    TheoremParams params;
    params.n = o.n;
    params.seed = o.seed;
    if (!o.spec.empty()) params.spec = parse_specialization(o.spec);
    if (o.theorem == "T8") {
        if (!o.t.empty()) params.t_vec = parse_rational_list(o.t);
        if (!o.m.empty()) params.m_vec = parse_rational_list(o.m);
    } else {
        if (!o.t.empty()) params.t = parse_rational(o.t);
        if (!o.m.empty()) params.m = parse_rational(o.m);
    }
    const TheoremReport report = check_theorem(o.theorem, params);
    std::cout << dump_json(report_to_json(report));
    return report.agrees ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& o, bool with_format, bool with_theorem) {
    if (!with_theorem)
        cmd->add_option("--rep", o.rep, "representation family")->required();
    cmd->add_option("--n", o.n, "number of strands")->check(CLI::Range(2, 16));
    cmd->add_option("--spec", o.spec, "specialization, e.g. t1=2,t2=3,t3=5");
    cmd->add_option("--t", o.t, "parameter(s) for t (rational or comma list)");
    cmd->add_option("--m", o.m, "parameter(s) for m (rational or comma list)");
    cmd->add_option("--seed", o.seed, "seed for randomized stages");
    if (with_format) cmd->add_option("--format", o.format, "json | latex");
    if (with_theorem)
        cmd->add_option("--theorem", o.theorem,
                        "one of T3, T4, T6, T7, T8, T9")
            ->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and irreducibility certificates for "
                 "extended Burau/Gassner representations"};
    app.require_subcommand(1);

    Options o;
    CLI::App* gen = app.add_subcommand("gen", "generator matrices of an extension");
    CLI::App* factor =
        app.add_subcommand("factor", "degree-(n-1) composition factor");
    CLI::App* tensor =
        app.add_subcommand("tensor", "tensor square of a composition factor");
    CLI::App* irred =
        app.add_subcommand("irred", "irreducibility certificate at a point");
    CLI::App* verify =
        app.add_subcommand("verify", "check a theorem and report agreement");
    for (CLI::App* cmd : {gen, factor, tensor, irred})
        add_common(cmd, o, /*with_format=*/cmd != irred, /*with_theorem=*/false);
    add_common(verify, o, /*with_format=*/false, /*with_theorem=*/true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(o);
        if (factor->parsed()) return run_factor(o);
        if (tensor->parsed()) return run_tensor(o);
        if (irred->parsed()) return run_irred(o);
        if (verify->parsed()) return run_verify(o);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const bgx::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ContextError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
