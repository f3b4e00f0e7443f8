#include "bgx/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bgx {

std::string to_canonical_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    const Context& ctx = p.context();
    std::string out;
    bool first_term = true;
    for (const auto& [exps, c] : p.terms()) {  // descending lex order
        if (!first_term) out += " + ";
        first_term = false;
        out += to_string(c);
        for (size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            out += " * " + ctx[k] + "^" + std::to_string(exps[k]);
        }
    }
    return out;
}

namespace {

bool is_number_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool seen_slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && !seen_slash && i + 1 < s.size()) {
            seen_slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

int parse_exponent(const std::string& s) {
    if (s.empty()) throw ParseError("empty exponent");
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad exponent: " + s);
    for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw ParseError("bad exponent: " + s);
    return std::stoi(s);
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text, const Context& ctx) {
    LaurentPoly out(ctx);
    std::stringstream terms(text);
    std::string term;
    bool any = false;
    while (std::getline(terms, term, '+')) {
        // Tokenize on '*' and whitespace.
        for (auto& ch : term)
            if (ch == '*') ch = ' ';
        std::stringstream ts(term);
        std::vector<std::string> tokens;
        std::string tok;
        while (ts >> tok) tokens.push_back(tok);
        if (tokens.empty()) throw ParseError("empty term in: " + text);
        any = true;

        Rational coeff(1);
        LaurentPoly::Exponents exps(ctx.size(), 0);
        bool leading = true;
        for (std::string token : tokens) {
            if (token == "-" || token == "+") {
                if (!leading)
                    throw ParseError("stray sign inside a term; write 'a + -b'");
                if (token == "-") coeff = -coeff;
                continue;
            }
            leading = false;
            if (is_number_token(token)) {
                coeff *= parse_rational(token);
                continue;
            }
            if (token[0] == '-' || token[0] == '+') {
                if (token[0] == '-') coeff = -coeff;
                token.erase(0, 1);
            }
            const auto caret = token.find('^');
            const std::string name = token.substr(0, caret);
            const int exp =
                (caret == std::string::npos) ? 1 : parse_exponent(token.substr(caret + 1));
            const auto it = std::find(ctx.begin(), ctx.end(), name);
            if (it == ctx.end())
                throw ContextError("unknown variable '" + name + "' in: " + text);
            exps[static_cast<size_t>(it - ctx.begin())] += exp;
        }
        out.add_term(exps, coeff);
    }
    if (!any) throw ParseError("empty polynomial text");
    return out;
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

Json matrix_to_json(const LMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(to_canonical_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_to_json(const RMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json rep_to_json(const Representation& rep) {
    Json doc;
    doc["schema_version"] = 1;
    doc["family"] = family_name(rep.family);
    doc["n"] = rep.n;
    doc["degree"] = rep.degree;
    doc["context"] = rep.context;
    Json gens = Json::array();
    for (const auto& [label, m] : rep.images)
        gens.push_back(Json{{"label", label.str()}, {"matrix", matrix_to_json(m)}});
    doc["generators"] = std::move(gens);
    return doc;
}

Json rep_to_json(const SpecializedRep& rep) {
    Json doc;
    doc["schema_version"] = 1;
    doc["family"] = family_name(rep.family);
    doc["n"] = rep.n;
    doc["degree"] = rep.degree;
    Json spec;
    for (const auto& [name, value] : rep.spec.assignment)
        spec[name] = to_string(value);
    doc["specialization"] = std::move(spec);
    Json gens = Json::array();
    for (const auto& [label, m] : rep.images)
        gens.push_back(Json{{"label", label.str()}, {"matrix", matrix_to_json(m)}});
    doc["generators"] = std::move(gens);
    return doc;
}

Representation rep_from_json(const Json& doc) {
    if (!doc.contains("schema_version") || doc["schema_version"] != 1)
        throw ParseError("unsupported document schema");
    Representation rep;
    rep.family = family_from_name(doc.at("family").get<std::string>());
    rep.n = doc.at("n").get<int>();
    rep.degree = doc.at("degree").get<int>();
    rep.context = doc.at("context").get<Context>();
    for (const auto& gen : doc.at("generators")) {
        const GenLabel label = GenLabel::parse(gen.at("label").get<std::string>());
        const auto& rows = gen.at("matrix");
        std::vector<std::vector<LaurentPoly>> parsed;
        for (const auto& row : rows) {
            std::vector<LaurentPoly> prow;
            for (const auto& entry : row)
                prow.push_back(parse_laurent(entry.get<std::string>(), rep.context));
            parsed.push_back(std::move(prow));
        }
        rep.images.emplace_back(label, LMatrix::from_rows(parsed));
    }
    rep.sort_images();
    return rep;
}

Json certificate_to_json(const IrredCertificate& cert) {
    Json doc;
    doc["verdict"] = verdict_name(cert.verdict);
    doc["degree"] = cert.degree;
    doc["closure_dim"] = cert.closure_dim;
    doc["saturated"] = cert.saturated;
    if (cert.witness)
        doc["witness"] = matrix_to_json(cert.witness->basis());
    else
        doc["witness"] = nullptr;
    doc["notes"] = cert.notes;
    return doc;
}

Json report_to_json(const TheoremReport& report) {
    Json doc;
    doc["schema_version"] = 1;
    doc["theorem_id"] = report.theorem_id;
    Json params;
    for (const auto& [key, value] : report.parameters) params[key] = value;
    doc["parameters"] = std::move(params);
    doc["expected"] = report.expected;
    doc["computed"] = report.computed;
    if (report.certificate)
        doc["certificate"] = certificate_to_json(*report.certificate);
    else
        doc["certificate"] = nullptr;
    doc["agrees"] = report.agrees;
    doc["notes"] = report.notes;
    return doc;
}

namespace {

// "t12" -> base "t", subscript "12"; "t" -> no subscript.
std::string latex_variable(const std::string& name) {
    size_t split = name.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1])))
        --split;
    if (split == name.size()) return name;
    return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::string latex_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    const bool neg = r < 0;
    const Rational a = neg ? Rational(-r) : r;
    return std::string(neg ? "-" : "") + "\\tfrac{" + numerator(a).str() + "}{" +
           denominator(a).str() + "}";
}

std::string latex_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    const Context& ctx = p.context();
    std::string out;
    bool first = true;
    for (const auto& [exps, c] : p.terms()) {
        std::string mono;
        for (size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += latex_variable(ctx[k]);
            if (exps[k] != 1) mono += "^{" + std::to_string(exps[k]) + "}";
        }
        std::string term;
        if (mono.empty())
            term = latex_rational(c);
        else if (c == 1)
            term = mono;
        else if (c == -1)
            term = "-" + mono;
        else
            term = latex_rational(c) + " " + mono;
        if (first)
            out = term;
        else if (!term.empty() && term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
        first = false;
    }
    return out;
}

std::string latex_label(const GenLabel& label) {
    std::ostringstream os;
    switch (label.kind) {
        case GenLabel::Kind::Eps:
            os << "\\epsilon_{" << label.i << label.j << "}";
            break;
        case GenLabel::Kind::EpsTriple:
            os << "\\epsilon_{" << label.i << label.j << label.k << "}";
            break;
        case GenLabel::Kind::Alpha:
            os << "\\alpha_{" << label.i << "}";
            break;
    }
    return os.str();
}

std::string latex_symbol(Family family) {
    switch (family) {
        case Family::IA: return "\\rho";
        case Family::GassnerExt: return "\\hat\\rho_G";
        case Family::BurauExt: return "\\hat\\rho_B";
        case Family::PhiG: return "\\hat\\varphi_G";
        case Family::PhiB: return "\\hat\\varphi_B";
        case Family::Tensor: return "\\hat\\varphi\\otimes\\hat\\varphi";
    }
    return "\\rho";
}

}  // namespace

std::string rep_to_latex(const Representation& rep) {
    std::ostringstream os;
    os << "% " << family_name(rep.family) << ", n = " << rep.n << ", degree "
       << rep.degree << "\n";
    for (const auto& [label, m] : rep.images) {
        os << "\\[ " << latex_symbol(rep.family) << "(" << latex_label(label)
           << ") = \\begin{pmatrix}\n";
        for (int r = 0; r < m.rows(); ++r) {
            os << "  ";
            for (int c = 0; c < m.cols(); ++c) {
                if (c) os << " & ";
                os << latex_poly(m.at(r, c));
            }
            os << (r + 1 < m.rows() ? " \\\\" : "") << "\n";
        }
        os << "\\end{pmatrix} \\]\n";
    }
    return os.str();
}

}  // namespace bgx
