#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subword/field.hpp"
#include "subword/polynomial.hpp"
#include "subword/words.hpp"

namespace subword {

/// Polynomial in T over a field, little-endian element indices, no trailing zeros.
using FieldPolynomial = std::vector<Symbol>;

/// Reduces integer coefficients into the prime subfield and trims.
FieldPolynomial to_field_polynomial(const PolynomialLiteral& literal, const FieldSpec& field);
/// -1 for the zero polynomial.
int polynomial_degree(const FieldPolynomial& poly) noexcept;

/**
 * f(T) = sum_{n >= -n0} a_n T^{-n} over a finite field.
 *
 * The principal part holds a_{-n0}, ..., a_{-1}; the tail is the infinite word
 * a_0 a_1 ... of canonical element indices. A series built from a bounded
 * computation carries a validity horizon: coefficients past it are unavailable.
 */
class LaurentSeries {
   public:
    LaurentSeries(FieldSpec field, std::vector<Symbol> principal, InfiniteWord tail,
                  std::optional<std::uint64_t> horizon = std::nullopt);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t depth() const noexcept { return principal_.size(); }
    /// principal()[i] is the coefficient of index i - depth().
    const std::vector<Symbol>& principal() const noexcept { return principal_; }
    /// Coefficient word a_0 a_1 ...; reading past the horizon throws.
    const InfiniteWord& tail() const noexcept { return tail_; }
    std::optional<std::uint64_t> horizon() const noexcept { return horizon_; }
    bool has_zero_principal() const;

   private:
    FieldSpec field_;
    std::vector<Symbol> principal_;
    InfiniteWord tail_;
    std::optional<std::uint64_t> horizon_;
};

/// p/q as polynomials in T; q != 0.
struct RationalFunction {
    FieldPolynomial numerator;
    FieldPolynomial denominator;
};

RationalFunction make_rational(const FieldPolynomial& numerator, const FieldPolynomial& denominator);

LaurentSeries ls_zero(const FieldSpec& field);
/// Series whose tail is `word`; the word's alphabet must fit in the field.
LaurentSeries ls_from_word(const InfiniteWord& word, const FieldSpec& field);
/// A polynomial in T as a series: coefficient of T^k sits at index -k.
LaurentSeries ls_from_polynomial(const FieldPolynomial& poly, const FieldSpec& field);

/// a_n; throws "below principal part" for n < -depth and "beyond validity horizon" past the horizon.
FieldElement ls_coefficient(const LaurentSeries& f, std::int64_t n);
/// Coefficients a_from .. a_to (inclusive) as indices; missing low-order terms read as zero.
std::vector<Symbol> ls_coefficients(const LaurentSeries& f, std::int64_t from, std::int64_t to);

LaurentSeries ls_add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries ls_neg(const LaurentSeries& f);
LaurentSeries ls_sub(const LaurentSeries& f, const LaurentSeries& g);
/// b(T) f(T); depth grows by deg b.
LaurentSeries ls_mul_poly(const FieldPolynomial& b, const LaurentSeries& f);
/// r(T) f(T) by multiplication with the numerator and stream long division by the denominator.
LaurentSeries ls_mul_rational(const RationalFunction& r, const LaurentSeries& f);
/// Full Cauchy product, exact for indices <= horizon.
LaurentSeries ls_cauchy_mul(const LaurentSeries& f, const LaurentSeries& g, std::uint64_t horizon);
/// Termwise product from index -min(depth f, depth g).
LaurentSeries ls_hadamard(const LaurentSeries& f, const LaurentSeries& g);
/// k-th formal derivative in T.
LaurentSeries ls_derivative(const LaurentSeries& f, std::uint32_t k = 1);
/// Lambda_r: b_i = a_{q i + r}, q the field order; needs a zero principal part.
LaurentSeries ls_cartier(const LaurentSeries& f, std::uint32_t r);
/// f(T^k); needs a zero principal part.
LaurentSeries ls_substitute_power(const LaurentSeries& f, std::uint32_t k);
/// T^{-s} f(T).
LaurentSeries ls_shift(const LaurentSeries& f, std::uint32_t s);

/// True iff coefficients agree for -max(depth) <= n <= n_max.
bool ls_equal_up_to(const LaurentSeries& f, const LaurentSeries& g, std::int64_t n_max);

/// Preperiod S >= 1 and period L >= 1 of the coefficient word of a proper rational
/// function: r_{n+L} = r_n for n >= S, both minimal.
struct ExpansionShape {
    std::uint64_t preperiod = 1;
    std::uint64_t period = 1;
};
ExpansionShape rational_expansion_shape(const RationalFunction& r, const FieldSpec& field);

}  // namespace subword
