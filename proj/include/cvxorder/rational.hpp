#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cvxorder {

// Every scalar in the library is an exact rational; no floating point is used
// anywhere on a decision path. cpp_rational keeps values in lowest terms with
// a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with an optional leading '-' on p and a positive
// integer q. Anything else (signs on q, "1/0", whitespace, empty fields)
// throws std::invalid_argument.
inline Rational parse_rational(std::string_view text)
{
    const auto fail = [&](const char* why) -> Rational {
        throw std::invalid_argument("invalid rational '" + std::string(text) + "': " + why);
    };

    const std::size_t slash = text.find('/');
    const std::string_view num_part =
        slash == std::string_view::npos ? text : text.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    std::string_view digits = num_part;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (digits.empty())
        return fail("missing numerator digits");
    for (const char c : digits)
        if (c < '0' || c > '9')
            return fail("numerator is not an integer");

    const BigInt p{std::string(num_part)};
    if (slash == std::string_view::npos)
        return Rational(p);

    if (den_part.empty())
        return fail("missing denominator digits");
    for (const char c : den_part)
        if (c < '0' || c > '9')
            return fail("denominator is not a positive integer");
    const BigInt q{std::string(den_part)};
    if (q == 0)
        return fail("denominator is zero");
    return Rational(p, q);
}

// Lowest-term rendering, "p" when the denominator is 1 and "p/q" otherwise.
inline std::string to_string(const Rational& r)
{
    std::ostringstream out;
    out << r;
    return out.str();
}

} // namespace cvxorder
