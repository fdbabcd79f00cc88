#include "normsurf/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace normsurf {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// cpp_int's string constructor does not take a leading '+'.
Integer parse_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    // cpp_rational's two-argument constructor rejects negative denominators,
    // so route through exact division, which normalizes sign and gcd.
    return Rational(num) / Rational(den);
}

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    const auto fail = [&]() -> Rational {
        throw ParseError("not a rational literal: \"" + original +
                         "\" (expected \"p\" or \"p/q\")");
    };

    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) return fail();
        return Rational(parse_integer(text));
    }

    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) return fail();
    if (!den.empty() && (den[0] == '+' || den[0] == '-')) return fail();

    const Integer q{std::string(den)};
    if (q == 0) {
        throw ParseError("rational literal with zero denominator: \"" +
                         original + "\"");
    }
    return make_rational(parse_integer(num), q);
}

std::string to_string(const Rational& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const Integer& value) {
    return value.str();
}

bool is_integral(const Rational& value) {
    return denominator(value) == 1;
}

Integer denominator_lcm(const RatVec& values) {
    Integer m = 1;
    for (const Rational& v : values) {
        m = boost::multiprecision::lcm(m, denominator(v));
    }
    return m;
}

} // namespace normsurf
