#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subword {

/// Integer-coefficient polynomial literal in one variable, little-endian
/// (coeffs[k] multiplies var^k). Coefficients are reduced into a field later.
struct PolynomialLiteral {
    std::vector<std::int64_t> coeffs;

    friend bool operator==(const PolynomialLiteral&, const PolynomialLiteral&) = default;
};

/// Parses literals such as "T^2+1", "2*T^3-T", "-1" in the given variable.
/// Throws ParseError with an offset relative to the start of `text`.
PolynomialLiteral parse_polynomial(std::string_view text, char variable);

/// Canonical printing: descending degree, "+"/"-" joined, unit coefficients elided.
std::string format_polynomial(const PolynomialLiteral& poly, char variable);

}  // namespace subword
