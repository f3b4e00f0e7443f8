#include "bgx/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace bgx {

namespace {

std::string context_str(const Context& ctx) {
    std::string out = "[";
    for (size_t i = 0; i < ctx.size(); ++i) {
        if (i) out += ", ";
        out += ctx[i];
    }
    return out + "]";
}

}  // namespace

LaurentPoly LaurentPoly::constant(const Rational& c, Context ctx) {
    LaurentPoly p(std::move(ctx));
    if (c != 0) p.terms_.emplace(Exponents(p.ctx_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(const std::string& name, const Context& ctx,
                                  int exp) {
    const auto it = std::find(ctx.begin(), ctx.end(), name);
    if (it == ctx.end())
        throw ContextError("variable " + name + " not in context " +
                           context_str(ctx));
    Exponents e(ctx.size(), 0);
    e[static_cast<size_t>(it - ctx.begin())] = exp;
    return monomial(Rational(1), std::move(e), ctx);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponents exps, Context ctx) {
    if (exps.size() != ctx.size())
        throw ContextError("monomial exponent count does not match context");
    LaurentPoly p(std::move(ctx));
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& exps = terms_.begin()->first;
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant())
        throw ContextError("constant_value on a non-constant polynomial");
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exponents& exps, const Rational& c) {
    if (exps.size() != ctx_.size())
        throw ContextError("term exponent count does not match context");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::align(LaurentPoly& a, LaurentPoly& b) {
    if (a.ctx_ == b.ctx_) return;
    if (a.is_constant()) {
        a = constant(a.constant_value(), b.ctx_);
        return;
    }
    if (b.is_constant()) {
        b = constant(b.constant_value(), a.ctx_);
        return;
    }
    throw ContextError("context mismatch: " + context_str(a.ctx_) + " vs " +
                       context_str(b.ctx_));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(ctx_);
    for (const auto& [exps, c] : terms_) out.terms_.emplace(exps, -c);
    return out;
}

LaurentPoly operator+(LaurentPoly a, LaurentPoly b) {
    LaurentPoly::align(a, b);
    for (const auto& [exps, c] : b.terms_) a.add_term(exps, c);
    return a;
}

LaurentPoly operator-(LaurentPoly a, LaurentPoly b) {
    LaurentPoly::align(a, b);
    for (const auto& [exps, c] : b.terms_) a.add_term(exps, -c);
    return a;
}

LaurentPoly operator*(LaurentPoly a, LaurentPoly b) {
    LaurentPoly::align(a, b);
    LaurentPoly out(a.ctx_);
    const size_t width = a.ctx_.size();
    LaurentPoly::Exponents sum(width, 0);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t k = 0; k < width; ++k) sum[k] = ea[k] + eb[k];
            out.add_term(sum, ca * cb);
        }
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.ctx_ == b.ctx_) return a.terms_ == b.terms_;
    // Distinct contexts compare equal only through constant promotion.
    if (a.is_constant() && b.is_constant())
        return a.constant_value() == b.constant_value();
    return false;
}

LaurentPoly unit_inverse(const LaurentPoly& p) {
    if (p.terms().size() != 1)
        throw NotAUnit("unit_inverse requires exactly one term, got " +
                       std::to_string(p.terms().size()));
    const auto& [exps, c] = *p.terms().begin();
    LaurentPoly::Exponents neg(exps.size());
    for (size_t k = 0; k < exps.size(); ++k) neg[k] = -exps[k];
    return LaurentPoly::monomial(Rational(1) / c, std::move(neg), p.context());
}

Rational specialize(const LaurentPoly& p, const Specialization& s) {
    const Context& ctx = p.context();
    std::vector<Rational> values;
    values.reserve(ctx.size());
    for (const auto& name : ctx) {
        const auto it = s.assignment.find(name);
        if (it == s.assignment.end())
            throw ContextError("specialization missing variable " + name);
        if (it->second == 0)
            throw ZeroSpecialization("variable " + name + " assigned zero");
        values.push_back(it->second);
    }
    Rational acc(0);
    for (const auto& [exps, c] : p.terms()) {
        Rational term = c;
        for (size_t k = 0; k < exps.size(); ++k)
            if (exps[k] != 0) term *= rational_pow(values[k], exps[k]);
        acc += term;
    }
    return acc;
}

LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("div_exact: zero divisor");
    if (den.terms().size() == 1) return num * unit_inverse(den);
    LaurentPoly quot(num.context()), rem = num;
    if (rem.context() != den.context())
        throw ContextError("div_exact: context mismatch");
    const auto& dlead = *den.terms().begin();  // greatest term (descending order)
    const size_t width = num.context().size();
    // Each step cancels the leading term, so the remainder's leading exponent
    // strictly decreases lexicographically; a non-exact Laurent division
    // would descend forever, hence the iteration guard.
    for (int guard = 0; !rem.is_zero(); ++guard) {
        if (guard > 4096)
            throw std::invalid_argument("div_exact: divisor does not divide");
        const auto& rlead = *rem.terms().begin();
        LaurentPoly::Exponents qe(width);
        for (size_t k = 0; k < width; ++k) qe[k] = rlead.first[k] - dlead.first[k];
        const LaurentPoly q = LaurentPoly::monomial(rlead.second / dlead.second,
                                                    std::move(qe), num.context());
        quot = quot + q;
        rem = rem - q * den;
    }
    return quot;
}

LaurentPoly rename_vars(const LaurentPoly& p,
                        const std::map<std::string, std::string>& renames,
                        const Context& new_ctx) {
    const Context& old_ctx = p.context();
    std::vector<size_t> target(old_ctx.size());
    for (size_t k = 0; k < old_ctx.size(); ++k) {
        const auto rit = renames.find(old_ctx[k]);
        const std::string& name = (rit == renames.end()) ? old_ctx[k] : rit->second;
        const auto it = std::find(new_ctx.begin(), new_ctx.end(), name);
        if (it == new_ctx.end())
            throw ContextError("rename target " + name + " not in context " +
                               context_str(new_ctx));
        target[k] = static_cast<size_t>(it - new_ctx.begin());
    }
    LaurentPoly out(new_ctx);
    LaurentPoly::Exponents exps(new_ctx.size(), 0);
    for (const auto& [old_exps, c] : p.terms()) {
        std::fill(exps.begin(), exps.end(), 0);
        for (size_t k = 0; k < old_exps.size(); ++k) exps[target[k]] += old_exps[k];
        out.add_term(exps, c);
    }
    return out;
}

Specialization parse_specialization(const std::string& text) {
    Specialization s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("specialization entry missing '=': " + item);
        std::string name = item.substr(0, eq);
        name.erase(std::remove_if(name.begin(), name.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   name.end());
        if (name.empty()) throw ParseError("specialization entry missing name");
        if (!s.assignment.emplace(name, parse_rational(item.substr(eq + 1))).second)
            throw ParseError("duplicate specialization for " + name);
    }
    if (s.assignment.empty()) throw ParseError("empty specialization");
    return s;
}

}  // namespace bgx
