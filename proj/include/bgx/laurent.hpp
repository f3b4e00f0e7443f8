#pragma once

#include "bgx/rational.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgx {

struct ContextError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAUnit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroSpecialization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered list of variable names; every polynomial carries its context and
// stores one exponent per context entry in each term.
using Context = std::vector<std::string>;

// Assignment of a nonzero rational to each variable of a context.
struct Specialization {
    std::map<std::string, Rational> assignment;
};

Specialization parse_specialization(const std::string& text);

// Multivariate Laurent polynomial over the rationals in canonical form:
// no zero coefficients, terms keyed by dense exponent vectors and iterated
// in descending lexicographic order (the serialization order).
class LaurentPoly {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational, std::greater<Exponents>>;

    LaurentPoly() = default;  // zero over the empty context
    explicit LaurentPoly(Context ctx) : ctx_(std::move(ctx)) {}

    static LaurentPoly constant(const Rational& c, Context ctx = {});
    static LaurentPoly variable(const std::string& name, const Context& ctx,
                                int exp = 1);
    static LaurentPoly monomial(const Rational& c, Exponents exps, Context ctx);

    const Context& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Constant includes zero; such values promote into any other context.
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly b);
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly b);
    friend LaurentPoly operator*(LaurentPoly a, LaurentPoly b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    // Adds c * x^exps, cancelling against an existing term if present.
    void add_term(const Exponents& exps, const Rational& c);

  private:
    Context ctx_;
    TermMap terms_;

    // Rewrites constants into the other operand's context; throws
    // ContextError when both sides are non-constant over different contexts.
    static void align(LaurentPoly& a, LaurentPoly& b);
};

// Inverse of a single-term polynomial; throws NotAUnit otherwise.
LaurentPoly unit_inverse(const LaurentPoly& p);

// Evaluates at the given point. Throws ContextError if a context variable is
// missing from the assignment and ZeroSpecialization if any supplied value
// for a context variable is zero.
Rational specialize(const LaurentPoly& p, const Specialization& s);

// Exact quotient num/den; throws std::invalid_argument when den is zero or
// does not divide num (detected via a descent bound on the long division).
LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

// Transports p to new_ctx, sending each variable to renames.at(name) when
// present and to its own name otherwise; exponents of merged variables add.
// Every target must exist in new_ctx (ContextError otherwise).
LaurentPoly rename_vars(const LaurentPoly& p,
                        const std::map<std::string, std::string>& renames,
                        const Context& new_ctx);

}  // namespace bgx
