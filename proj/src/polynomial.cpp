#include "subword/polynomial.hpp"

#include <cctype>
#include <limits>

#include "subword/error.hpp"

namespace subword {

namespace {

class PolyParser {
   public:
    PolyParser(std::string_view text, char var) : text_(text), var_(var) {}

    PolynomialLiteral parse() {
        PolynomialLiteral out;
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty polynomial");
        bool first = true;
        while (!at_end()) {
            std::int64_t sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-'");
            }
            first = false;
            auto [coeff, exp] = term();
            if (out.coeffs.size() <= exp) out.coeffs.resize(exp + 1, 0);
            out.coeffs[exp] += sign * coeff;
            skip_ws();
        }
        while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
        return out;
    }

   private:
    std::pair<std::int64_t, std::size_t> term() {
        std::int64_t coeff = 1;
        bool have_number = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_number = true;
            skip_ws();
            if (at_end() || peek() != '*') return {coeff, 0};
            ++pos_;
            skip_ws();
        }
        if (at_end() || peek() != var_) {
            throw ParseError(pos_, have_number ? std::string("expected '") + var_ + "' after '*'"
                                               : std::string("expected a number or '") + var_ + "'");
        }
        ++pos_;
        skip_ws();
        std::size_t exp = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "expected exponent");
            const auto e = number();
            if (e > 1'000'000) throw ParseError(pos_, "exponent too large");
            exp = static_cast<std::size_t>(e);
        }
        return {coeff, exp};
    }

    std::int64_t number() {
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
                throw ParseError(pos_, "integer overflow");
            v = v * 10 + (peek() - '0');
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace

PolynomialLiteral parse_polynomial(std::string_view text, char variable) {
    return PolyParser(text, variable).parse();
}

std::string format_polynomial(const PolynomialLiteral& poly, char variable) {
    std::string out;
    for (std::size_t k = poly.coeffs.size(); k-- > 0;) {
        const auto c = poly.coeffs[k];
        if (c == 0) continue;
        const auto mag = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? '-' : '+';
        }
        if (k == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        out += variable;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace subword
