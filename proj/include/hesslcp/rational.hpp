#ifndef HESSLCP_RATIONAL_HPP
#define HESSLCP_RATIONAL_HPP

#include <gmpxx.h>

#include <regex>
#include <string>
#include <string_view>

#include "hesslcp/error.hpp"

namespace hesslcp {

/// Exact rational number. GMP keeps every value in canonical form
/// (positive denominator, numerator and denominator coprime).
using Scalar = mpq_class;

inline int sign(const Scalar& x) { return sgn(x); }

/// Parses a rational literal: optional sign, decimal integer, optional
/// "/" followed by a positive integer. Examples: "-81", "+4", "7/3".
/// Decimal points and exponents are rejected.
inline Scalar parse_rational(std::string_view text) {
    static const std::regex literal(R"(^([+-]?)([0-9]+)(?:/([0-9]+))?$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, literal)) {
        throw ParseError("not a rational literal: '" + s + "'");
    }
    mpz_class num(m[2].str(), 10);
    if (m[1].str() == "-") num = -num;
    mpz_class den(1);
    if (m[3].matched) {
        den = mpz_class(m[3].str(), 10);
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    Scalar r(num, den);
    r.canonicalize();
    return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Scalar& x) { return x.get_str(10); }

} // namespace hesslcp

#endif // HESSLCP_RATIONAL_HPP
