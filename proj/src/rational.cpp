#include "bgx/rational.hpp"

#include <cctype>

namespace bgx {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// cpp_int's string constructor rejects a leading '+', so strip one here.
Integer to_integer(const std::string& s) {
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) throw ParseError("bad rational literal: " + text);
        return Rational(to_integer(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("bad rational literal: " + text);
    Integer d = to_integer(den), p = to_integer(num);
    if (d == 0) throw ParseError("zero denominator: " + text);
    if (d < 0) {
        d = -d;
        p = -p;
    }
    return Rational(p, d);
}

Rational rational_pow(const Rational& x, int e) {
    if (e == 0) return Rational(1);
    Rational base = x;
    if (e < 0) {
        if (x == 0) throw std::domain_error("0 raised to a negative power");
        base = Rational(1) / x;
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace bgx
