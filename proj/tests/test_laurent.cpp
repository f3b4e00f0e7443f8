#include "doctest.h"

#include "bgx/io.hpp"
#include "bgx/laurent.hpp"

#include <random>

using namespace bgx;

namespace {

const Context kCtx{"t1", "t2", "t3"};

LaurentPoly lp(const std::string& text) { return parse_laurent(text, kCtx); }

LaurentPoly random_poly(std::mt19937_64& rng, const Context& ctx) {
    LaurentPoly p(ctx);
    const size_t terms = rng() % 4;
    for (size_t k = 0; k < terms; ++k) {
        LaurentPoly::Exponents exps(ctx.size());
        for (auto& e : exps) e = static_cast<int>(rng() % 7) - 3;
        const long num = static_cast<long>(rng() % 11) - 5;
        const long den = 1 + static_cast<long>(rng() % 3);
        p.add_term(exps, Rational(num, den));
    }
    return p;
}

}  // namespace

TEST_CASE("cancellation: (t1 - 1) + 1 = t1") {
    const LaurentPoly t1 = LaurentPoly::variable("t1", kCtx);
    const LaurentPoly one = LaurentPoly::constant(Rational(1), kCtx);
    CHECK((t1 - one) + one == t1);
}

TEST_CASE("row identity behind the Gassner fixed vector") {
    // t2^-1 (t1 - 1) * (t2 - 1) + t2^-1 (t1 - 1) = t1 - 1
    const LaurentPoly a = lp("1 * t1^1 * t2^-1 + -1 * t2^-1");
    const LaurentPoly b = lp("1 * t2^1 + -1");
    const LaurentPoly expect = lp("1 * t1^1 + -1");
    CHECK(a * b + a == expect);
}

TEST_CASE("unit times inverse is one") {
    const LaurentPoly t1 = LaurentPoly::variable("t1", kCtx);
    CHECK(t1 * unit_inverse(t1) == LaurentPoly::constant(Rational(1), kCtx));
    CHECK(to_canonical_string(unit_inverse(t1)) == "1 * t1^-1");
}

TEST_CASE("unit_inverse of 2 t1 t2^-1 is 1/2 t1^-1 t2") {
    const LaurentPoly p = lp("2 * t1^1 * t2^-1");
    CHECK(to_canonical_string(unit_inverse(p)) == "1/2 * t1^-1 * t2^1");
    CHECK(p * unit_inverse(p) == LaurentPoly::constant(Rational(1), kCtx));
}

TEST_CASE("unit_inverse rejects non-units") {
    CHECK_THROWS_AS(unit_inverse(lp("1 * t1^1 + -1")), NotAUnit);
    CHECK_THROWS_AS(unit_inverse(LaurentPoly(kCtx)), NotAUnit);
}

TEST_CASE("specialization of the Definition-style entry") {
    const LaurentPoly entry = lp("1 * t1^1 * t2^-1 + -1 * t2^-1");  // t2^-1(t1-1)
    Specialization s;
    s.assignment = {{"t1", Rational(2)}, {"t2", Rational(3)}, {"t3", Rational(1)}};
    CHECK(specialize(entry, s) == Rational(1, 3));
    s.assignment["t1"] = 1;
    s.assignment["t2"] = 5;
    CHECK(specialize(entry, s) == Rational(0));
}

TEST_CASE("specialization errors") {
    const LaurentPoly entry = lp("1 * t1^1 * t2^-1");
    Specialization missing;
    missing.assignment = {{"t1", Rational(2)}, {"t2", Rational(3)}};
    CHECK_THROWS_AS(specialize(entry, missing), ContextError);  // t3 missing
    Specialization zero;
    zero.assignment = {{"t1", Rational(2)}, {"t2", Rational(0)}, {"t3", Rational(1)}};
    CHECK_THROWS_AS(specialize(entry, zero), ZeroSpecialization);
}

TEST_CASE("context mismatch raises unless one side is constant") {
    const Context other{"x"};
    const LaurentPoly t1 = LaurentPoly::variable("t1", kCtx);
    const LaurentPoly x = LaurentPoly::variable("x", other);
    CHECK_THROWS_AS(t1 + x, ContextError);
    // Constants promote into the other context.
    const LaurentPoly c = LaurentPoly::constant(Rational(5), other);
    CHECK(t1 + c == t1 + LaurentPoly::constant(Rational(5), kCtx));
    CHECK((LaurentPoly() + t1) == t1);
}

TEST_CASE("ring axioms on 1000 random triples") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        const LaurentPoly a = random_poly(rng, kCtx), b = random_poly(rng, kCtx),
                          c = random_poly(rng, kCtx);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937_64 rng(777);
    Specialization s;
    s.assignment = {{"t1", Rational(2, 3)}, {"t2", Rational(-5)}, {"t3", Rational(7, 2)}};
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentPoly a = random_poly(rng, kCtx), b = random_poly(rng, kCtx);
        CHECK(specialize(a + b, s) == specialize(a, s) + specialize(b, s));
        CHECK(specialize(a * b, s) == specialize(a, s) * specialize(b, s));
    }
}

TEST_CASE("serialize -> parse -> serialize is the identity") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const LaurentPoly p = random_poly(rng, kCtx);
        const std::string s = to_canonical_string(p);
        const LaurentPoly q = parse_laurent(s, kCtx);
        CHECK(q == p);
        CHECK(to_canonical_string(q) == s);
    }
}

TEST_CASE("canonical string format details") {
    CHECK(to_canonical_string(LaurentPoly(kCtx)) == "0");
    CHECK(to_canonical_string(LaurentPoly::constant(Rational(-3, 2), kCtx)) ==
          "-3/2");
    // Descending lexicographic order on exponent vectors.
    const LaurentPoly p = lp("1 * t2^-1 + 1 * t1^1 * t2^-1");
    CHECK(to_canonical_string(p) == "1 * t1^1 * t2^-1 + 1 * t2^-1");
}

TEST_CASE("lenient parsing forms") {
    CHECK(lp("t1") == LaurentPoly::variable("t1", kCtx));
    CHECK(lp("t1^2") == lp("1 * t1^2"));
    CHECK(lp("-t1") == lp("-1 * t1^1"));
    CHECK(lp("2 t1 t2^-1") == lp("2 * t1^1 * t2^-1"));
    CHECK(lp("t1 * t1") == lp("1 * t1^2"));
    CHECK(lp("3/6") == LaurentPoly::constant(Rational(1, 2), kCtx));
    CHECK_THROWS_AS(parse_laurent("x^2", kCtx), ContextError);
    CHECK_THROWS_AS(parse_laurent("", kCtx), ParseError);
    CHECK_THROWS_AS(parse_laurent("t1 - t2", kCtx), ParseError);
    CHECK_THROWS_AS(parse_laurent("t1^a", kCtx), ParseError);
}

TEST_CASE("unit_inverse round-trip on random monomials") {
    std::mt19937_64 rng(2024);
    const LaurentPoly one = LaurentPoly::constant(Rational(1), kCtx);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly::Exponents exps(kCtx.size());
        for (auto& e : exps) e = static_cast<int>(rng() % 9) - 4;
        long num = static_cast<long>(rng() % 9) - 4;
        if (num == 0) num = 1;
        const LaurentPoly p =
            LaurentPoly::monomial(Rational(num, 1 + static_cast<long>(rng() % 3)),
                                  exps, kCtx);
        CHECK(p * unit_inverse(p) == one);
    }
}

TEST_CASE("div_exact recovers the quotient") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly a = random_poly(rng, kCtx);
        LaurentPoly b = random_poly(rng, kCtx);
        if (b.is_zero()) b = LaurentPoly::variable("t1", kCtx);
        CHECK(div_exact(a * b, b) == a);
    }
}

TEST_CASE("div_exact rejects non-divisors and zero") {
    const LaurentPoly one = LaurentPoly::constant(Rational(1), kCtx);
    const LaurentPoly t1m1 = lp("1 * t1^1 + -1");
    CHECK_THROWS_AS(div_exact(one, t1m1), std::invalid_argument);
    CHECK_THROWS_AS(div_exact(one, LaurentPoly(kCtx)), std::invalid_argument);
}

TEST_CASE("rename_vars merges variables with added exponents") {
    const Context single{"t"};
    const std::map<std::string, std::string> collapse{
        {"t1", "t"}, {"t2", "t"}, {"t3", "t"}};
    CHECK(to_canonical_string(rename_vars(lp("1 * t1^1 * t2^1"), collapse, single)) ==
          "1 * t^2");
    CHECK(to_canonical_string(rename_vars(lp("1 * t1^1 * t2^-1"), collapse, single)) ==
          "1");
    CHECK_THROWS_AS(rename_vars(lp("t1"), {}, Context{"u"}), ContextError);
}

TEST_CASE("parse_specialization") {
    const Specialization s = parse_specialization("t1=2,t2=-3/4, t3 = 5");
    CHECK(s.assignment.at("t1") == Rational(2));
    CHECK(s.assignment.at("t2") == Rational(-3, 4));
    CHECK(s.assignment.at("t3") == Rational(5));
    CHECK_THROWS_AS(parse_specialization("t1"), ParseError);
    CHECK_THROWS_AS(parse_specialization("t1=2,t1=3"), ParseError);
    CHECK_THROWS_AS(parse_specialization(""), ParseError);
}
