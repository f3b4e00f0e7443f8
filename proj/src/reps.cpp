#include "bgx/reps.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bgx {

namespace {

LaurentPoly lp_one(const Context& ctx) {
    return LaurentPoly::constant(Rational(1), ctx);
}

LMatrix lp_identity(int d, const Context& ctx) {
    LMatrix m(d, d, LaurentPoly(ctx));
    for (int i = 0; i < d; ++i) m.at(i, i) = lp_one(ctx);
    return m;
}

LaurentPoly var(const Context& ctx, int index1, int exp) {
    return LaurentPoly::variable(ctx[static_cast<size_t>(index1) - 1], ctx, exp);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

}  // namespace

std::string GenLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Eps:
            os << "eps(" << i << "," << j << ")";
            break;
        case Kind::EpsTriple:
            os << "eps(" << i << "," << j << "," << k << ")";
            break;
        case Kind::Alpha:
            os << "alpha(" << i << ")";
            break;
    }
    return os.str();
}

GenLabel GenLabel::parse(const std::string& text) {
    const auto open = text.find('('), close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw LabelMismatch("bad generator label: " + text);
    const std::string name = text.substr(0, open);
    std::vector<int> args;
    std::stringstream ss(text.substr(open + 1, close - open - 1));
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            args.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw LabelMismatch("bad generator label: " + text);
        }
    if (name == "eps" && args.size() == 2) return eps(args[0], args[1]);
    if (name == "eps" && args.size() == 3) return eps(args[0], args[1], args[2]);
    if (name == "alpha" && args.size() == 1) return alpha(args[0]);
    throw LabelMismatch("bad generator label: " + text);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::IA: return "ia";
        case Family::GassnerExt: return "gassner-ext";
        case Family::BurauExt: return "burau-ext";
        case Family::PhiG: return "phi-g";
        case Family::PhiB: return "phi-b";
        case Family::Tensor: return "tensor";
    }
    throw DomainError("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "ia") return Family::IA;
    if (name == "gassner-ext") return Family::GassnerExt;
    if (name == "burau-ext") return Family::BurauExt;
    if (name == "phi-g") return Family::PhiG;
    if (name == "phi-b") return Family::PhiB;
    if (name == "tensor") return Family::Tensor;
    throw DomainError("unknown family name: " + name);
}

void Representation::sort_images() {
    std::sort(images.begin(), images.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

const LMatrix& Representation::image(const GenLabel& label) const {
    for (const auto& [l, m] : images)
        if (l == label) return m;
    throw LabelMismatch("no image for generator " + label.str());
}

bool Representation::has(const GenLabel& label) const {
    for (const auto& [l, m] : images)
        if (l == label) return true;
    return false;
}

const RMatrix& SpecializedRep::image(const GenLabel& label) const {
    for (const auto& [l, m] : images)
        if (l == label) return m;
    throw LabelMismatch("no image for generator " + label.str());
}

std::vector<RMatrix> SpecializedRep::image_list() const {
    std::vector<RMatrix> out;
    out.reserve(images.size());
    for (const auto& [l, m] : images) out.push_back(m);
    return out;
}

Context default_context(Family family, int n) {
    switch (family) {
        case Family::BurauExt:
        case Family::PhiB:
            return {"t"};
        default: {
            Context ctx;
            for (int i = 1; i <= n; ++i) ctx.push_back("t" + std::to_string(i));
            return ctx;
        }
    }
}

namespace {

// Image of eps(i,j): identity except row i, where the diagonal entry is
// t_j^{-1} and the (i,j) entry is t_j^{-1}(t_i - 1).
LMatrix eps_image(int n, const Context& ctx, int i, int j,
                  const std::function<LaurentPoly(int, int)>& tvar) {
    LMatrix m = lp_identity(n, ctx);
    m.at(i - 1, i - 1) = tvar(j, -1);
    m.at(i - 1, j - 1) = tvar(j, -1) * (tvar(i, 1) - lp_one(ctx));
    return m;
}

}  // namespace

Representation build_rho_g(int n) {
    require(n >= 2, "build_rho_g requires n >= 2");
    Representation rep;
    rep.family = Family::GassnerExt;
    rep.n = n;
    rep.degree = n;
    rep.context = default_context(rep.family, n);
    const auto tvar = [&](int idx, int e) { return var(rep.context, idx, e); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            rep.images.emplace_back(GenLabel::eps(i, j),
                                    eps_image(n, rep.context, i, j, tvar));
        }
    rep.sort_images();
    return rep;
}

Representation build_rho_b(int n) {
    require(n >= 2, "build_rho_b requires n >= 2");
    Representation rep;
    rep.family = Family::BurauExt;
    rep.n = n;
    rep.degree = n;
    rep.context = default_context(rep.family, n);
    const auto tvar = [&](int, int e) {
        return LaurentPoly::variable("t", rep.context, e);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            rep.images.emplace_back(GenLabel::eps(i, j),
                                    eps_image(n, rep.context, i, j, tvar));
        }
    for (int i = 1; i < n; ++i) {
        LMatrix m = lp_identity(n, rep.context);
        m.at(i - 1, i - 1) = LaurentPoly(rep.context);
        m.at(i, i) = LaurentPoly(rep.context);
        m.at(i - 1, i) = lp_one(rep.context);
        m.at(i, i - 1) = lp_one(rep.context);
        rep.images.emplace_back(GenLabel::alpha(i), std::move(m));
    }
    rep.sort_images();
    return rep;
}

Representation build_ia_generators(int n) {
    require(n >= 2, "build_ia_generators requires n >= 2");
    Representation rep = build_rho_g(n);
    rep.family = Family::IA;
    const auto tvar = [&](int idx, int e) { return var(rep.context, idx, e); };
    // eps(i,j,k): identity except column i, which picks up
    // t_i t_j^{-1}(t_k^{-1} - 1) e_j + t_i t_k^{-1}(1 - t_j^{-1}) e_k.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || i == k || j == k) continue;
                LMatrix m = lp_identity(n, rep.context);
                m.at(j - 1, i - 1) =
                    tvar(i, 1) * tvar(j, -1) * (tvar(k, -1) - lp_one(rep.context));
                m.at(k - 1, i - 1) =
                    tvar(i, 1) * tvar(k, -1) * (lp_one(rep.context) - tvar(j, -1));
                rep.images.emplace_back(GenLabel::eps(i, j, k), std::move(m));
            }
    rep.sort_images();
    return rep;
}

std::vector<LaurentPoly> fixed_vector(const Representation& rep) {
    std::vector<LaurentPoly> v;
    v.reserve(rep.degree);
    switch (rep.family) {
        case Family::GassnerExt:
            for (int i = 1; i <= rep.n; ++i)
                v.push_back(var(rep.context, i, 1) - lp_one(rep.context));
            return v;
        case Family::BurauExt:
            for (int i = 0; i < rep.n; ++i) v.push_back(lp_one(rep.context));
            return v;
        default:
            throw DomainError("fixed_vector: family has no distinguished fixed vector");
    }
}

BasisChange change_of_basis(const Representation& rep) {
    const std::vector<LaurentPoly> v = fixed_vector(rep);
    const int n = rep.degree;
    BasisChange out;
    out.p = lp_identity(n, rep.context);
    for (int r = 0; r < n; ++r) out.p.at(r, n - 1) = v[r];

    out.conj.family = rep.family;
    out.conj.n = rep.n;
    out.conj.degree = n;
    out.conj.context = rep.context;

    const LaurentPoly zero(rep.context);
    for (const auto& [label, m] : rep.images) {
        // Column l of P^{-1} M P holds the new-basis coordinates of M w_l,
        // where w_l runs through e_1, ..., e_{n-1}, v. Solving P x = M w_l is
        // immediate because P is the identity with last column v: the v-
        // coefficient is y_n / v_n and the e-coefficients follow by
        // subtraction. The transpose puts those coordinates in row l, which
        // makes the last row of every rewritten image (0, ..., 0, 1).
        LMatrix conj(n, n, zero);
        for (int l = 0; l < n; ++l) {
            std::vector<LaurentPoly> y;
            if (l < n - 1)
                y = m.col(l);
            else
                y = mat_vec(m, v);
            const LaurentPoly c = div_exact(y[n - 1], v[n - 1]);
            for (int r = 0; r < n - 1; ++r) conj.at(l, r) = y[r] - c * v[r];
            conj.at(l, n - 1) = c;
        }
        for (int c = 0; c < n - 1; ++c)
            if (!conj.at(n - 1, c).is_zero())
                throw DomainError("change_of_basis: fixed vector not fixed by " +
                                  label.str());
        if (conj.at(n - 1, n - 1) != lp_one(rep.context))
            throw DomainError("change_of_basis: fixed vector not fixed by " +
                              label.str());
        out.conj.images.emplace_back(label, std::move(conj));
    }
    out.conj.sort_images();
    return out;
}

Representation composition_factor(const Representation& rep) {
    if (rep.family != Family::GassnerExt && rep.family != Family::BurauExt)
        throw DomainError("composition_factor requires the Gassner or Burau extension");
    BasisChange bc = change_of_basis(rep);
    Representation out;
    out.family = (rep.family == Family::GassnerExt) ? Family::PhiG : Family::PhiB;
    out.n = rep.n;
    out.degree = rep.degree - 1;
    out.context = rep.context;
    for (const auto& [label, m] : bc.conj.images) {
        LMatrix top(out.degree, out.degree, LaurentPoly(rep.context));
        for (int r = 0; r < out.degree; ++r)
            for (int c = 0; c < out.degree; ++c) top.at(r, c) = m.at(r, c);
        out.images.emplace_back(label, std::move(top));
    }
    out.sort_images();
    return out;
}

SpecializedRep specialize_rep(const Representation& rep, const Specialization& s) {
    SpecializedRep out;
    out.family = rep.family;
    out.n = rep.n;
    out.degree = rep.degree;
    for (const auto& name : rep.context) {
        const auto it = s.assignment.find(name);
        if (it == s.assignment.end())
            throw ContextError("specialization missing variable " + name);
        out.spec.assignment.emplace(*it);
    }
    for (const auto& [label, m] : rep.images) {
        RMatrix sm(m.rows(), m.cols());
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) sm.at(r, c) = specialize(m.at(r, c), s);
        out.images.emplace_back(label, std::move(sm));
    }
    return out;
}

Representation rename_rep_vars(const Representation& rep,
                               const std::map<std::string, std::string>& renames,
                               const Context& new_ctx) {
    Representation out;
    out.family = rep.family;
    out.n = rep.n;
    out.degree = rep.degree;
    out.context = new_ctx;
    for (const auto& [label, m] : rep.images) {
        LMatrix rm(m.rows(), m.cols(), LaurentPoly(new_ctx));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                rm.at(r, c) = rename_vars(m.at(r, c), renames, new_ctx);
        out.images.emplace_back(label, std::move(rm));
    }
    out.sort_images();
    return out;
}

Representation tensor_product(const Representation& a, const Representation& b) {
    if (a.n != b.n)
        throw DomainError("tensor_product: factors built for different n");
    std::set<GenLabel> la, lb;
    for (const auto& [l, m] : a.images) la.insert(l);
    for (const auto& [l, m] : b.images) lb.insert(l);
    if (la != lb)
        throw LabelMismatch("tensor_product: generator label sets differ");
    for (const auto& name : a.context)
        if (std::find(b.context.begin(), b.context.end(), name) != b.context.end())
            throw ContextError("tensor_product: contexts share variable " + name);

    Representation out;
    out.family = Family::Tensor;
    out.n = a.n;
    out.degree = a.degree * b.degree;
    out.context = a.context;
    out.context.insert(out.context.end(), b.context.begin(), b.context.end());
    const std::map<std::string, std::string> none;
    for (const auto& [label, ma] : a.images) {
        const LMatrix at = [&] {
            LMatrix m(ma.rows(), ma.cols(), LaurentPoly(out.context));
            for (int r = 0; r < ma.rows(); ++r)
                for (int c = 0; c < ma.cols(); ++c)
                    m.at(r, c) = rename_vars(ma.at(r, c), none, out.context);
            return m;
        }();
        const LMatrix& mb = b.image(label);
        LMatrix bt(mb.rows(), mb.cols(), LaurentPoly(out.context));
        for (int r = 0; r < mb.rows(); ++r)
            for (int c = 0; c < mb.cols(); ++c)
                bt.at(r, c) = rename_vars(mb.at(r, c), none, out.context);
        out.images.emplace_back(label, kron_first_fast(at, bt));
    }
    out.sort_images();
    return out;
}

}  // namespace bgx
